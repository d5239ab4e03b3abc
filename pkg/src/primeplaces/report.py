"""JSON / CSV rendering of results and the shipped JSON schemas.

Rationals are always written as ``"p/q"`` strings (``"3"`` when integral);
decimal output happens only through :func:`render_rational` with an
explicit digit count.
"""

from __future__ import annotations

import csv
import io
import json
import math
from fractions import Fraction
from importlib import resources

import gmpy2
import jsonschema

from .ap import APWitness
from .classes import ClassPartition, ExponentClass, PowerDecomposition
from .pipeline import PipelineReport
from .places import ApproxCertificate, EuclidWitness, Place
from .smooth import DefectBound, DensityReport
from .verifiers import VerificationReport

__all__ = [
    "render_rational",
    "to_jsonable",
    "dumps",
    "load_schema",
    "validate",
    "witness_rows",
    "to_csv",
    "SCHEMAS",
]

SCHEMAS = {
    "PipelineReport": "pipeline_report.schema.json",
    "VerificationReport": "verification_report.schema.json",
    "DensityReport": "density_report.schema.json",
    "ApproxCertificate": "approx_certificate.schema.json",
}


def render_rational(q, digits: int | None = None, rounding: str = "half-up") -> str:
    """``"p/q"``, or a decimal with ``digits`` places.

    ``rounding`` is ``"half-up"`` (on the magnitude), ``"floor"`` or
    ``"ceil"``; the directed modes keep certified bounds certified.
    """
    q = Fraction(q)
    if digits is None:
        # gmpy2 formats integers of any size; str(int) is capped in CPython
        num = str(gmpy2.mpz(q.numerator))
        return num if q.denominator == 1 else f"{num}/{gmpy2.mpz(q.denominator)}"
    if rounding == "half-up":
        n = math.floor(abs(q) * 10**digits + Fraction(1, 2))
        sign = "-" if q < 0 and n else ""
    else:
        signed = math.floor(q * 10**digits) if rounding == "floor" else math.ceil(q * 10**digits)
        n, sign = abs(signed), "-" if signed < 0 else ""
    if digits == 0:
        return f"{sign}{n}"
    whole, frac = divmod(n, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def _q(x, digits=None):
    return render_rational(x, digits)


def _place(v: Place) -> str:
    return str(v)


def _witness(w: APWitness) -> dict:
    return {"a": w.a, "d": w.d, "k": w.k}


def _certificate(c: ApproxCertificate, digits):
    return {
        "q": _q(c.q, digits),
        "items": [
            {
                "place": _place(i.place),
                "target": _q(i.target, digits),
                "epsilon": _q(i.epsilon, digits),
                "achieved": _q(i.achieved, digits),
                "ok": i.ok,
            }
            for i in c.items
        ],
        "verified": c.ok,
    }


def _euclid(w: EuclidWitness, digits):
    return {
        "primes": list(w.primes),
        "q": _q(w.q, digits),
        "local_values": [{"place": _place(v), "abs": _q(a, digits)} for v, a in w.local_values],
        "partial_product": _q(w.partial_product, digits),
        "missing_places": [{"place": _place(v), "abs": _q(a, digits)} for v, a in w.missing],
        "global_product": _q(w.global_product, digits),
    }


def _density(d: DensityReport, digits):
    return {
        "r": d.r,
        "checkpoints": [
            {
                "N": row.N,
                "count": row.count,
                "ratio": _q(row.ratio, digits),
                "lower_bound": _q(row.lower_bound, digits),
                "bound_holds": row.bound_holds,
            }
            for row in d.rows
        ],
    }


def _verification(v: VerificationReport):
    return {
        "statement": v.statement.value,
        "exponent": v.exponent,
        "bound": v.bound,
        "triples_checked": v.triples_checked,
        "counterexamples": [list(c) for c in v.counterexamples],
        "holds": v.holds,
    }


def _partition(p: ClassPartition, preview: int = 5):
    return {
        "r": p.r,
        "N": p.N,
        "m": p.m,
        "smooth_count": p.total,
        "nonempty_classes": len(p),
        "classes": [
            {
                "v": list(cls.v),
                "count": len(members),
                "representative": members[0],
                "first_members": list(members[:preview]),
            }
            for cls, members in p.classes.items()
        ],
        "densest": None if p.densest is None
        else {"v": list(p.densest[0].v), "count": p.densest[1]},
    }


def _pipeline(p: PipelineReport):
    return {
        "route": p.route.value,
        "m": p.m,
        "k": p.k,
        "r": p.r,
        "N": p.N,
        "smooth_count": p.smooth_count,
        "possible_classes": p.possible_classes,
        "nonempty_classes": p.nonempty_classes,
        "densest": None if p.densest is None
        else {"v": list(p.densest[0].v), "count": p.densest[1]},
        "witnesses": [
            {
                "v": list(cls.v),
                **_witness(w),
                "terms": w.terms(),
                "quotients": [t for t, _ in roots],
                "roots": [root for _, root in roots],
            }
            for cls, w, roots in p.witnesses
        ],
        "verdict": p.verdict.value,
    }


def to_jsonable(obj, digits: int | None = None):
    """Plain JSON-ready structure for any result object of the package."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return _q(obj, digits)
    if isinstance(obj, float):
        return "inf" if obj == float("inf") else obj
    if isinstance(obj, Place):
        return _place(obj)
    if isinstance(obj, APWitness):
        return _witness(obj)
    if isinstance(obj, ExponentClass):
        return {"m": obj.m, "v": list(obj.v)}
    if isinstance(obj, PowerDecomposition):
        return {"n": obj.n, "m": obj.m, "R": obj.R, "t": obj.t}
    if isinstance(obj, ApproxCertificate):
        return _certificate(obj, digits)
    if isinstance(obj, EuclidWitness):
        return _euclid(obj, digits)
    if isinstance(obj, DensityReport):
        return _density(obj, digits)
    if isinstance(obj, DefectBound):
        return {"r": obj.r, "N": obj.N, "defect": obj.defect, "bound": obj.bound,
                "holds": obj.holds}
    if isinstance(obj, VerificationReport):
        return _verification(obj)
    if isinstance(obj, ClassPartition):
        return _partition(obj)
    if isinstance(obj, PipelineReport):
        return _pipeline(obj)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v, digits) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x, digits) for x in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj, digits: int | None = None) -> str:
    return json.dumps(to_jsonable(obj, digits), indent=2)


def load_schema(kind: str) -> dict:
    text = resources.files("primeplaces.schemas").joinpath(SCHEMAS[kind]).read_text("utf-8")
    return json.loads(text)


def validate(kind: str, data) -> None:
    """Raise ``jsonschema.ValidationError`` unless ``data`` fits the schema."""
    jsonschema.validate(data, load_schema(kind))


def witness_rows(witnesses):
    """CSV rows ``v, a, d, k`` for ``(class, witness)`` pairs."""
    return [
        {"v": " ".join(map(str, cls.v)), "a": w.a, "d": w.d, "k": w.k}
        for cls, w in witnesses
    ]


def to_csv(rows, columns) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({c: str(row[c]).lower() if isinstance(row[c], bool) else row[c]
                         for c in columns})
    return buf.getvalue()
