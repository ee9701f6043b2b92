"""Closed-form predictors for the invariants of the supported families.

Each predictor returns the strongest statement known for the requested
(family, parameters, k): an exact value, a two-sided bound, or NotCovered.
Degenerate bounds (lower equals upper) collapse to an exact value. The
conjectured_* functions extrapolate beyond the settled cases; their results
are flagged conjectural and are only ever compared against computations by
the scan harness, never asserted as oracles.

Families and parameter keys:

    path      n            path on n vertices
    cycle     n            cycle on n vertices
    wpath     m            whiskered path (one pendant per vertex)
    mwpath    m, rs        path with rs[i] pendants at vertex i+1
    wcycle    m            whiskered cycle
    mwcycle   m, r         whiskered cycle with r pendants at one vertex
    cmforest  m            whiskered forest on a tree with m vertices
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParameterError

FAMILIES = ("path", "cycle", "wpath", "mwpath", "wcycle", "mwcycle", "cmforest")

PROVEN = "proven"
CONJECTURAL = "conjectural"


def _ceil(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class PredictionResult:
    """Exact value, interval, or not-covered, with a provenance flag."""

    kind: str                      # "exact" | "interval" | "not-covered"
    status: str                    # "proven" | "conjectural" | "none"
    source: str
    value: int | bool | None = None
    lo: int | None = None
    hi: int | None = None

    def __post_init__(self):
        if self.kind not in ("exact", "interval", "not-covered"):
            raise InvalidParameterError(f"bad prediction kind {self.kind!r}")
        if self.kind == "interval" and (self.lo is None or self.hi is None
                                        or self.lo > self.hi):
            raise InvalidParameterError("interval needs lo <= hi")

    def is_covered(self) -> bool:
        return self.kind != "not-covered"

    def matches(self, computed) -> bool:
        """Whether a computed value is consistent with this prediction."""
        if self.kind == "exact":
            return computed == self.value
        if self.kind == "interval":
            return self.lo <= computed <= self.hi
        return True

    def describe(self) -> str:
        if self.kind == "exact":
            return f"= {self.value} [{self.status}: {self.source}]"
        if self.kind == "interval":
            return f"in [{self.lo}, {self.hi}] [{self.status}: {self.source}]"
        return "not covered"

    def to_json_dict(self) -> dict:
        out = {"kind": self.kind, "status": self.status, "source": self.source}
        if self.kind == "exact":
            out["value"] = self.value
        elif self.kind == "interval":
            out["lo"] = self.lo
            out["hi"] = self.hi
        return out


def exact(value, source, conjectural=False) -> PredictionResult:
    return PredictionResult("exact", CONJECTURAL if conjectural else PROVEN,
                            source, value=value)


def interval(lo, hi, source) -> PredictionResult:
    if lo == hi:
        return exact(lo, source + " (bounds coincide)")
    return PredictionResult("interval", PROVEN, source, lo=lo, hi=hi)


def not_covered(reason="no covering statement") -> PredictionResult:
    return PredictionResult("not-covered", "none", reason)


# ---------------------------------------------------------------------------
# family bookkeeping
# ---------------------------------------------------------------------------


def family_matching_number(family: str, params: dict) -> int:
    if family == "path":
        return params["n"] // 2
    if family == "cycle":
        return params["n"] // 2
    if family in ("wpath", "mwpath", "wcycle", "mwcycle", "cmforest"):
        return params["m"]
    raise InvalidParameterError(f"unknown family {family!r}")


def _check_k(family: str, params: dict, k: int) -> int:
    nu = family_matching_number(family, params)
    if not 1 <= k <= nu:
        raise InvalidParameterError(
            f"k={k} outside 1..{nu} for {family} {params}")
    return nu


# ---------------------------------------------------------------------------
# predictors
# ---------------------------------------------------------------------------


def predict_regularity(family: str, params: dict, k: int) -> PredictionResult:
    _check_k(family, params, k)
    if family == "path":
        n = params["n"]
        return exact(2 * k + (n - 2 * k) // 3, "path-power-regularity")
    if family == "cycle":
        n = params["n"]
        return exact(2 * k + (n - 2 * k) // 3, "cycle-power-regularity")
    if family in ("wpath", "mwpath"):
        m = params["m"]
        return exact(2 * k + (m - k) // 2, "whiskered-path-power-regularity")
    if family in ("wcycle", "mwcycle"):
        m = params["m"]
        if m == 3:
            return exact(2 * k, "co-chordal-linear-powers")
        if k == m:
            return exact(2 * m, "top-power-linear-resolution")
        if k == 2:
            return exact(4 + (m - 3) // 2,
                         "whiskered-cycle-second-power-regularity")
        if k == 1:
            if family == "wcycle":
                return exact(m // 2 + 1, "whiskered-cycle-regularity (cited)")
            return not_covered("multi-pendant whiskered cycle at k=1")
        return interval(2 * k + (m - k - 1) // 2, 2 * k + (m - k) // 2,
                        "whiskered-cycle-power-regularity-bounds")
    return not_covered(f"regularity of {family}")


def predict_depth(family: str, params: dict, k: int) -> PredictionResult:
    nu = _check_k(family, params, k)
    if family == "path":
        n = params["n"]
        ce = _ceil(n, 3)
        value = ce + k - 1 if k <= ce else 2 * k - 1
        return exact(value, "path-power-depth")
    if family == "cycle":
        n = params["n"]
        if k == 1:
            return exact(_ceil(n - 1, 3), "cycle-depth")
        if k == 2:
            return exact(_ceil(n, 3) + 1, "cycle-second-power-depth")
        if k == nu:
            return exact(2 * k - 1, "top-power-depth")
        if k == nu - 1 and n % 2 == 0:
            return exact(2 * k - 1, "even-cycle-near-top-depth")
        return interval(_ceil(n, 3) + k - 1, n // 2 + k - 1,
                        "cycle-power-depth-bounds")
    if family in ("wpath", "cmforest"):
        m = params["m"]
        return exact(m + k - 1, "whiskered-forest-power-depth")
    if family == "wcycle":
        m = params["m"]
        if k == 1:
            return exact(m, "whisker-graph-depth (cited)")
        if k == 2:
            return exact(3 if m == 3 else m + 1,
                         "whiskered-cycle-second-power-depth")
        if k == m:
            return exact(2 * m - 1, "top-power-depth")
        return interval(2 * k - 1, m + k - 1,
                        "whiskered-cycle-power-depth-bounds")
    if family in ("mwcycle", "mwpath"):
        m = params["m"]
        if k == m:
            return exact(2 * m - 1, "top-power-depth")
        if family == "mwpath" and all(r == 1 for r in params.get("rs", ())):
            return exact(m + k - 1, "whiskered-forest-power-depth")
        return not_covered(f"depth of {family} below the top power")
    return not_covered(f"depth of {family}")


def predict_cm(family: str, params: dict, k: int) -> PredictionResult:
    if family in ("cmforest", "wpath") or (
            family == "mwpath" and all(r == 1 for r in params.get("rs", ()))):
        return exact(True, "cm-forest-power-cohen-macaulayness")
    return not_covered(f"Cohen-Macaulayness of {family}")


def predict_linear_resolution(family: str, params: dict, k: int) -> PredictionResult:
    nu = _check_k(family, params, k)
    if k == nu:
        return exact(True, "top-power-linear-resolution")
    if family == "path":
        n = params["n"]
        return exact(n - 2 * k <= 2, "path-power-regularity")
    if family == "cycle":
        n = params["n"]
        return exact(n % 2 == 0 and k == nu - 1, "cycle-power-linear-resolutions")
    if family in ("wpath", "mwpath"):
        m = params["m"]
        return exact(m - k <= 1, "whiskered-path-power-regularity")
    if family in ("wcycle", "mwcycle"):
        m = params["m"]
        if m == 3:
            return exact(True, "co-chordal-linear-powers")
        if k == m - 1:
            return exact(True, "whiskered-cycle-power-regularity-bounds")
        if k == 2:
            return exact(m <= 4, "whiskered-cycle-second-power-regularity")
        if k == 1:
            if family == "wcycle":
                return exact(False, "whiskered-cycle-regularity (cited)")
            return not_covered("multi-pendant whiskered cycle at k=1")
        if k <= m - 3:
            return exact(False, "whiskered-cycle-regularity-lower-bound")
        return not_covered("whiskered cycle at k = m-2: bounds leave it open")
    return not_covered(f"linear resolution of {family}")


# ---------------------------------------------------------------------------
# conjectured values (scan targets only)
# ---------------------------------------------------------------------------

CONJECTURES = ("cycle-depth", "wcycle-reg", "wcycle-depth")

CONJECTURE_ALIASES = {
    "6.1": "cycle-depth",
    "6.2": "wcycle-reg",
    "6.3": "wcycle-depth",
}


def conjecture_name(ident: str) -> str:
    name = CONJECTURE_ALIASES.get(ident, ident)
    if name not in CONJECTURES:
        raise InvalidParameterError(f"unknown conjecture {ident!r}")
    return name


def conjectured_cycle_depth(n: int, k: int) -> PredictionResult:
    """Conjectured depth for cycle powers, stated for k >= 2."""
    nu = n // 2
    if not 2 <= k <= nu:
        raise InvalidParameterError(f"k={k} outside 2..{nu}")
    ce = _ceil(n, 3)
    value = ce + k - 1 if k <= ce else 2 * k - 1
    return exact(value, "conjecture:cycle-power-depth", conjectural=True)


def conjectured_wcycle_regularity(m: int, k: int) -> PredictionResult:
    """Conjectured regularity for whiskered-cycle powers below the top.

    The top power k = m is excluded: it is a principal ideal generated in
    degree 2m, so its regularity is provably 2m, one more than this
    formula extrapolates.
    """
    if not 1 <= k <= m - 1:
        raise InvalidParameterError(f"k={k} outside 1..{m - 1}")
    return exact(2 * k + (m - k - 1) // 2,
                 "conjecture:whiskered-cycle-power-regularity",
                 conjectural=True)


def conjectured_wcycle_depth(m: int, k: int) -> PredictionResult:
    if not 1 <= k <= m:
        raise InvalidParameterError(f"k={k} outside 1..{m}")
    value = m + k - 1 if k <= m // 2 else 2 * k - 1
    return exact(value, "conjecture:whiskered-cycle-power-depth",
                 conjectural=True)
