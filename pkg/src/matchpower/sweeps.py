"""Verification sweeps, conjecture scans, and their reports.

A case is (family, params, k, invariant). The engine computes the invariant
from the matching power, compares it with the closed-form prediction, and
assigns a status:

    pass                    proven exact prediction matches
    bound-ok                computed value lies in a proven interval
    fail                    a proven statement is violated
    skipped                 no covering statement for this case
    counterexample-candidate  a conjectural value disagrees

Reports serialize deterministically; per-case timings are recorded only on
request so that identical runs produce byte-identical files.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from . import formulas as fm
from . import graphs as gr
from . import homalg as ha
from . import ideals as idl
from .errors import InvalidParameterError
from .simplicial import DEFAULT_FIELD, FieldSpec

INVARIANTS = ("reg", "depth", "dim", "cm", "linres")

SCHEMA_VERSION = 1


def build_graph(family: str, params: dict) -> gr.Graph:
    if family == "path":
        return gr.path(params["n"])
    if family == "cycle":
        return gr.cycle(params["n"])
    if family == "wpath":
        return gr.whisker(gr.path(params["m"]))
    if family == "wcycle":
        return gr.whisker(gr.cycle(params["m"]))
    if family == "mwpath":
        return gr.multi_whiskered_path(params["m"], params["rs"])
    if family == "mwcycle":
        return gr.multi_whiskered_cycle(params["m"], params["r"])
    if family == "cmforest":
        tree = gr.from_edges(params["m"], [tuple(e) for e in params["tree"]])
        return gr.whisker(tree)
    raise InvalidParameterError(f"unknown family {family!r}")


def compute_invariant(family: str, params: dict, k: int, invariant: str,
                      field_char: int = DEFAULT_FIELD.characteristic,
                      route: str = "hochster", max_n: int | None = None):
    g = build_graph(family, params)
    ideal = idl.sqf_power(g, k)
    fld = FieldSpec(field_char)
    if invariant == "reg":
        return ha.regularity(ideal, fld, route, max_n)
    if invariant == "depth":
        return ha.depth_quotient(ideal, fld, route, max_n)
    if invariant == "dim":
        return ha.krull_dim_quotient(ideal)
    if invariant == "cm":
        return ha.is_cohen_macaulay(ideal, fld, route, max_n)
    if invariant == "linres":
        return ha.has_linear_resolution(ideal, fld, route, max_n)
    raise InvalidParameterError(f"unknown invariant {invariant!r}")


def predict(family: str, params: dict, k: int, invariant: str) -> fm.PredictionResult:
    if invariant == "reg":
        return fm.predict_regularity(family, params, k)
    if invariant == "depth":
        return fm.predict_depth(family, params, k)
    if invariant == "cm":
        return fm.predict_cm(family, params, k)
    if invariant == "linres":
        return fm.predict_linear_resolution(family, params, k)
    return fm.not_covered(f"no predictor for {invariant}")


@dataclass(frozen=True)
class Case:
    family: str
    params: tuple            # sorted (key, value) pairs; lists as tuples
    k: int
    invariant: str
    predicted: fm.PredictionResult

    def params_dict(self) -> dict:
        return {key: _thaw(v) for key, v in self.params}

    def key(self) -> str:
        return json.dumps([self.family, self.params_dict(), self.k,
                           self.invariant], sort_keys=True)


def _freeze(value):
    if isinstance(value, (list, tuple)):
        return tuple(_freeze(v) for v in value)
    return value


def _thaw(value):
    if isinstance(value, tuple):
        return [_thaw(v) for v in value]
    return value


def make_case(family: str, params: dict, k: int, invariant: str,
              predicted: fm.PredictionResult | None = None) -> Case:
    frozen = tuple(sorted((key, _freeze(v)) for key, v in params.items()))
    if predicted is None:
        predicted = predict(family, params, k, invariant)
    return Case(family, frozen, k, invariant, predicted)


@dataclass
class CaseResult:
    case: Case
    computed: object
    status: str
    elapsed: float | None = None

    def to_json_dict(self, timings: bool) -> dict:
        return {
            "family": self.case.family,
            "params": self.case.params_dict(),
            "k": self.case.k,
            "invariant": self.case.invariant,
            "predicted": self.case.predicted.to_json_dict(),
            "computed": self.computed,
            "status": self.status,
            "elapsed": (round(self.elapsed, 3)
                        if timings and self.elapsed is not None else None),
        }


def judge(predicted: fm.PredictionResult, computed) -> str:
    if not predicted.is_covered():
        return "skipped"
    if predicted.status == fm.CONJECTURAL:
        return "pass" if predicted.matches(computed) else "counterexample-candidate"
    if predicted.kind == "exact":
        return "pass" if predicted.matches(computed) else "fail"
    return "bound-ok" if predicted.matches(computed) else "fail"


@dataclass
class VerificationReport:
    config: dict
    results: list[CaseResult] = field(default_factory=list)

    def summary(self) -> dict:
        counts = {"pass": 0, "fail": 0, "bound-ok": 0, "skipped": 0,
                  "counterexample-candidate": 0}
        for r in self.results:
            counts[r.status] += 1
        counts["total"] = len(self.results)
        return counts

    def exit_code(self) -> int:
        s = self.summary()
        if s["fail"]:
            return 2
        if s["counterexample-candidate"]:
            return 3
        return 0

    def to_json(self) -> str:
        timings = bool(self.config.get("timings"))
        doc = {
            "schema": SCHEMA_VERSION,
            "config": self.config,
            "cases": [r.to_json_dict(timings) for r in self.results],
            "summary": self.summary(),
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        lines = ["family,params,k,invariant,predicted,computed,status"]
        for r in self.results:
            params = json.dumps(r.case.params_dict(), sort_keys=True)
            lines.append(",".join([
                r.case.family, '"' + params.replace('"', "'") + '"',
                str(r.case.k), r.case.invariant,
                '"' + r.case.predicted.describe() + '"',
                str(r.computed), r.status,
            ]))
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        w = max([len(c.case.family) for c in self.results] + [6])
        lines = []
        for r in self.results:
            params = ",".join(f"{key}={v}" for key, v in
                              sorted(r.case.params_dict().items()))
            lines.append(
                f"{r.case.family:<{w}} {params:<16} k={r.case.k:<2} "
                f"{r.case.invariant:<6} computed={r.computed!s:<5} "
                f"predicted {r.case.predicted.describe():<40} {r.status}")
        s = self.summary()
        lines.append("summary: " + "  ".join(
            f"{key}={s[key]}" for key in
            ("pass", "bound-ok", "skipped", "counterexample-candidate",
             "fail", "total")))
        return "\n".join(lines) + "\n"


def _compute_one(args):
    index, family, params, k, invariant, char, route, max_n = args
    t0 = time.perf_counter()
    value = compute_invariant(family, params, k, invariant, char, route, max_n)
    return index, value, time.perf_counter() - t0


def evaluate_cases(cases: list[Case], field: FieldSpec = DEFAULT_FIELD,
                   route: str = "hochster", max_n: int | None = None,
                   threads: int = 1, timings: bool = False,
                   checkpoint: str | None = None,
                   config_extra: dict | None = None) -> VerificationReport:
    """Compute every covered case and judge it against its prediction.

    A checkpoint file (JSONL, one completed case per line) is honored on
    resume and appended to as cases finish.
    """
    config = {"characteristic": field.characteristic, "route": route,
              "max_n": max_n, "threads": threads, "timings": timings}
    config.update(config_extra or {})
    report = VerificationReport(config)

    done: dict[str, dict] = {}
    ckpt_handle = None
    if checkpoint:
        try:
            with open(checkpoint, "r", encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if line:
                        rec = json.loads(line)
                        done[rec["key"]] = rec
        except FileNotFoundError:
            pass
        ckpt_handle = open(checkpoint, "a", encoding="utf-8")

    try:
        results: list[CaseResult | None] = [None] * len(cases)
        pending = []
        for idx, case in enumerate(cases):
            if not case.predicted.is_covered():
                results[idx] = CaseResult(case, None, "skipped", 0.0)
                continue
            rec = done.get(case.key())
            if rec is not None:
                results[idx] = CaseResult(case, rec["computed"],
                                          judge(case.predicted, rec["computed"]),
                                          rec.get("elapsed"))
                continue
            pending.append((idx, case.family, case.params_dict(), case.k,
                            case.invariant, field.characteristic, route, max_n))

        def finish(idx: int, value, elapsed: float):
            case = cases[idx]
            results[idx] = CaseResult(case, value,
                                      judge(case.predicted, value), elapsed)
            if ckpt_handle is not None:
                ckpt_handle.write(json.dumps(
                    {"key": case.key(), "computed": value,
                     "elapsed": round(elapsed, 3)}, sort_keys=True) + "\n")
                ckpt_handle.flush()

        if threads > 1 and len(pending) > 1:
            with ProcessPoolExecutor(max_workers=threads) as pool:
                for idx, value, elapsed in pool.map(_compute_one, pending):
                    finish(idx, value, elapsed)
        else:
            for args in pending:
                idx, value, elapsed = _compute_one(args)
                finish(idx, value, elapsed)

        report.results = [r for r in results if r is not None]
        return report
    finally:
        if ckpt_handle is not None:
            ckpt_handle.close()


# ---------------------------------------------------------------------------
# case generators
# ---------------------------------------------------------------------------


def _k_values(family: str, params: dict, ks) -> list[int]:
    nu = fm.family_matching_number(family, params)
    if ks is None:
        return list(range(1, nu + 1))
    return [k for k in ks if 1 <= k <= nu]


def verify_cases(family: str, invariants, *, n_range=None, m_range=None,
                 r_range=None, mult_choices=None, max_tree_vertices=None,
                 ks=None) -> list[Case]:
    """Cases for a family sweep over the given parameter ranges."""
    instances: list[dict] = []
    if family in ("path", "cycle"):
        if n_range is None:
            raise InvalidParameterError(f"{family} sweep needs an n range")
        instances = [{"n": n} for n in n_range]
    elif family in ("wpath", "wcycle"):
        if m_range is None:
            raise InvalidParameterError(f"{family} sweep needs an m range")
        instances = [{"m": m} for m in m_range]
    elif family == "mwcycle":
        if m_range is None:
            raise InvalidParameterError("mwcycle sweep needs an m range")
        rs = list(r_range) if r_range is not None else [1]
        instances = [{"m": m, "r": r} for m in m_range for r in rs]
    elif family == "mwpath":
        if m_range is None:
            raise InvalidParameterError("mwpath sweep needs an m range")
        choices = list(mult_choices) if mult_choices else [1]
        instances = [{"m": m, "rs": list(combo)}
                     for m in m_range
                     for combo in product(choices, repeat=m)]
    elif family == "cmforest":
        cap = max_tree_vertices or 5
        instances = [{"m": t.n_vertices, "tree": [list(e) for e in t.edges()]}
                     for t in gr.forests_up_to_iso(cap)]
    else:
        raise InvalidParameterError(f"unknown family {family!r}")

    cases = []
    for params in instances:
        for k in _k_values(family, params, ks):
            for inv in invariants:
                cases.append(make_case(family, params, k, inv))
    return cases


def scan_cases(conjecture: str, *, n_range=None, m_range=None) -> list[Case]:
    """Cases comparing computations against a conjectured formula."""
    name = fm.conjecture_name(conjecture)
    cases = []
    if name == "cycle-depth":
        if n_range is None:
            raise InvalidParameterError("cycle-depth scan needs an n range")
        for n in n_range:
            for k in range(2, n // 2 + 1):
                cases.append(make_case("cycle", {"n": n}, k, "depth",
                                       fm.conjectured_cycle_depth(n, k)))
    elif name == "wcycle-reg":
        if m_range is None:
            raise InvalidParameterError("wcycle-reg scan needs an m range")
        for m in m_range:
            for k in range(1, m):
                cases.append(make_case("wcycle", {"m": m}, k, "reg",
                                       fm.conjectured_wcycle_regularity(m, k)))
    elif name == "wcycle-depth":
        if m_range is None:
            raise InvalidParameterError("wcycle-depth scan needs an m range")
        for m in m_range:
            for k in range(1, m + 1):
                cases.append(make_case("wcycle", {"m": m}, k, "depth",
                                       fm.conjectured_wcycle_depth(m, k)))
    return cases
