"""Default resource limits.

Every bounded operation takes its limit as a keyword argument defaulting to
the value below; the CLI can override them from flags or a JSON config file.
"""

from dataclasses import dataclass, fields, replace
import json

SIEVE_LIMIT = 10**9
FACTOR_LIMIT = 10**12
DENSE_SMOOTH_LIMIT = 10**8
CLASS_BUDGET = 3**12
AP_FREE_LIMIT = 30
EXACT_RECIPROCAL_LIMIT = 10**6
AP_SET_LIMIT = 10**8


@dataclass(frozen=True)
class Limits:
    sieve_limit: int = SIEVE_LIMIT
    factor_limit: int = FACTOR_LIMIT
    dense_smooth_limit: int = DENSE_SMOOTH_LIMIT
    class_budget: int = CLASS_BUDGET
    ap_free_limit: int = AP_FREE_LIMIT
    exact_reciprocal_limit: int = EXACT_RECIPROCAL_LIMIT
    ap_set_limit: int = AP_SET_LIMIT

    @classmethod
    def from_file(cls, path):
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown limit(s) in {path}: {sorted(unknown)}")
        return replace(cls(), **{k: int(v) for k, v in data.items()})
