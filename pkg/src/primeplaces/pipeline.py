"""Replay of the progression argument for the divergence of sum 1/p.

The argument, run at a finite scale: take the smooth set ``P_r`` up to N,
split it into exponent classes mod m, look for a k-term progression inside
each class, and divide any progression found by its class representative
to get k m-th powers in progression. For (m, k) = (3, 3) and (2, 4) no
such powers exist, so the scan must come back empty; (2, 3) is the control
where progressions of squares do show up.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import config
from .ap import APWitness, ap_to_power_witness, scan_partition
from .classes import ExponentClass, partition_classes
from .errors import ContradictionError

__all__ = ["Route", "Verdict", "PipelineReport", "run_pipeline"]


class Route(str, enum.Enum):
    CUBES = "cubes"
    FOUR_SQUARES = "four-squares"
    DEMO = "demo"

    @property
    def m(self) -> int:
        return 3 if self is Route.CUBES else 2

    @property
    def k(self) -> int:
        return 4 if self is Route.FOUR_SQUARES else 3

    @property
    def expects_progressions(self) -> bool:
        return self is Route.DEMO


class Verdict(str, enum.Enum):
    NONE_FOUND = "NoProgressionFound"
    FOUND = "ProgressionsFound"


@dataclass(frozen=True)
class PipelineReport:
    route: Route
    r: int
    N: int
    smooth_count: int
    possible_classes: int
    nonempty_classes: int
    densest: tuple[ExponentClass, int] | None
    witnesses: tuple[tuple[ExponentClass, APWitness, tuple[tuple[int, int], ...]], ...]

    @property
    def m(self) -> int:
        return self.route.m

    @property
    def k(self) -> int:
        return self.route.k

    @property
    def verdict(self) -> Verdict:
        return Verdict.FOUND if self.witnesses else Verdict.NONE_FOUND


def run_pipeline(route, r: int, N: int, *, threads: int = 1,
                 budget: int = config.CLASS_BUDGET) -> PipelineReport:
    """Smooth set -> classes -> progression scan -> power witnesses.

    Raises :class:`ContradictionError` (with the report attached) if the
    cube or four-square route finds a progression.
    """
    route = Route(route)
    part = partition_classes(r, N, route.m, budget=budget)
    found = scan_partition(part, route.k, threads=threads)
    witnesses = tuple(
        (cls, w, tuple(ap_to_power_witness(w, cls))) for cls, w in found
    )
    report = PipelineReport(
        route=route,
        r=r,
        N=N,
        smooth_count=part.total,
        possible_classes=route.m**r,
        nonempty_classes=len(part),
        densest=part.densest,
        witnesses=witnesses,
    )
    if witnesses and not route.expects_progressions:
        cls, w, roots = witnesses[0]
        raise ContradictionError(
            f"{route.value} route found {w.k} {route.m}-th powers in progression: "
            f"{[t for t, _ in roots]} (class {cls.label()})",
            report,
        )
    return report
