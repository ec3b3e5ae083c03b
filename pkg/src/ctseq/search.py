"""Reproducible randomized search for first-zero bound violations.

Generates degree-d Laurent polynomials with nonzero integer coefficients
drawn uniformly from [1, source_prime - 1], reduces each mod every prime
below a cutoff, locates the first zero of ct(P**n) mod p, and flags rows
whose first zero reaches p**d.

Determinism contract: every polynomial gets its own RNG seeded from a fixed
64-bit mix of (master_seed, poly_id), so results are byte-identical across
runs and across worker counts; workers share nothing and results are merged
in (poly_id, p) order.
"""

from __future__ import annotations

import csv
import io
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from functools import partial

from . import bounds
from .bounds import decimal_str
from .automaton import (
    CapExceeded,
    Found,
    NoneExists,
    ShortestZeroOutcome,
    build_rz,
    minimize,
    shortest_zero_enum,
    shortest_zero_exact,
)
from .laurent import LaurentPoly, format_terms, from_terms
from .numtheory import primes_in_range

DEFAULT_CAP = 50000

_MASK64 = (1 << 64) - 1


def _mix_seed(master_seed: int, poly_id: int) -> int:
    """Fixed 64-bit mixer (splitmix64 finalizer on a golden-ratio stream)."""
    z = (master_seed + (poly_id + 1) * 0x9E3779B97F4A7C15) & _MASK64
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK64
    return z ^ (z >> 31)


@dataclass(frozen=True)
class GeneratedPoly:
    """Integer Laurent polynomial a_-d t^-d + ... + a_d t^d, all a_i >= 1."""

    poly_id: int
    source_prime: int
    nominal_degree: int
    int_coeffs: tuple[int, ...]  # ascending exponents -d .. d

    def __post_init__(self):
        d = self.nominal_degree
        if len(self.int_coeffs) != 2 * d + 1:
            raise ValueError("expected 2*degree+1 coefficients")
        if any(not 1 <= c < self.source_prime for c in self.int_coeffs):
            raise ValueError("coefficients must lie in [1, source_prime)")

    def terms(self) -> list[tuple[int, int]]:
        d = self.nominal_degree
        return [(e, c) for e, c in zip(range(-d, d + 1), self.int_coeffs)]

    def poly_string(self) -> str:
        return format_terms(self.terms())

    def reduce_mod(self, p: int) -> LaurentPoly:
        return from_terms(self.terms(), p)


def random_laurent(
    source_prime: int, degree: int, rng: random.Random, poly_id: int = 0
) -> GeneratedPoly:
    """Draw one coefficient per exponent in [-degree, degree], each uniform
    in [1, source_prime - 1]. source_prime = 2 makes every coefficient 1."""
    if degree < 1:
        raise ValueError("degree must be >= 1")
    coeffs = tuple(rng.randint(1, source_prime - 1) for _ in range(2 * degree + 1))
    return GeneratedPoly(
        poly_id=poly_id,
        source_prime=source_prime,
        nominal_degree=degree,
        int_coeffs=coeffs,
    )


@dataclass(frozen=True)
class SweepRow:
    """Outcome of one (polynomial, prime) cell."""

    poly_id: int
    p: int
    outcome: ShortestZeroOutcome | None
    kappa: int | None
    effective_degree: int | None  # None when the reduction is zero
    report: bounds.BoundReport | None
    runtime_ms: int
    error: str | None = None


@dataclass(frozen=True)
class ExperimentConfig:
    num_polynomials: int
    degree: int
    max_prime: int
    cap: int = DEFAULT_CAP
    master_seed: int = 0
    compute_kappa: bool = False
    parallelism: int = 1
    engine: str = "exact"  # "exact" (cap-free) or "enum" (capped scan)

    def __post_init__(self):
        if self.num_polynomials < 0:
            raise ValueError("num_polynomials must be >= 0")
        if self.degree < 1:
            raise ValueError("degree must be >= 1")
        if self.max_prime < 3:
            raise ValueError("max_prime must be >= 3")
        if self.cap < 1:
            raise ValueError("cap must be >= 1")
        if self.parallelism < 1:
            raise ValueError("parallelism must be >= 1")
        if self.engine not in ("exact", "enum"):
            raise ValueError(f"unknown engine {self.engine!r}")

    def to_json_dict(self) -> dict:
        # parallelism is an execution knob with no effect on the results,
        # so it stays out of result files (they must not depend on it)
        data = asdict(self)
        del data["parallelism"]
        return data

    @classmethod
    def from_json_dict(cls, data: dict) -> "ExperimentConfig":
        return cls(**data)


def _sweep_one(
    g: GeneratedPoly, p: int, cap: int, want_kappa: bool, engine: str
) -> SweepRow:
    t0 = time.perf_counter()
    reduced = g.reduce_mod(p)
    deg = g.nominal_degree  # classification uses the requested degree
    if reduced.is_zero:
        # ct(P**0 * 1) = 1 and every later term is 0: first zero at 1
        outcome: ShortestZeroOutcome = Found(1)
        eff_deg = None
        kap = None
        report = bounds.classify(1, p, deg, kappa=None)
    else:
        eff_deg = reduced.degree()
        rz = build_rz(reduced)
        if engine == "enum":
            outcome = shortest_zero_enum(rz.machine, cap)
        else:
            outcome = shortest_zero_exact(rz.machine)
        kap = minimize(rz.machine).num_states if want_kappa else None
        if isinstance(outcome, Found):
            report = bounds.classify(outcome.n0, p, deg, kappa=kap)
        else:
            report = bounds.base_report(p, deg, kappa=kap)
    ms = int((time.perf_counter() - t0) * 1000)
    return SweepRow(
        poly_id=g.poly_id,
        p=p,
        outcome=outcome,
        kappa=kap,
        effective_degree=eff_deg,
        report=report,
        runtime_ms=ms,
    )


def sweep(
    g: GeneratedPoly,
    primes: list[int],
    cap: int = DEFAULT_CAP,
    compute_kappa: bool = False,
    engine: str = "exact",
) -> list[SweepRow]:
    """One row per prime; a failure is captured in its row, never raised."""
    rows = []
    for p in primes:
        t0 = time.perf_counter()
        try:
            rows.append(_sweep_one(g, p, cap, compute_kappa, engine))
        except Exception as exc:  # pragma: no cover - defensive
            ms = int((time.perf_counter() - t0) * 1000)
            rows.append(
                SweepRow(
                    poly_id=g.poly_id,
                    p=p,
                    outcome=None,
                    kappa=None,
                    effective_degree=None,
                    report=None,
                    runtime_ms=ms,
                    error=f"{type(exc).__name__}: {exc}",
                )
            )
    return rows


def _sweep_task(g: GeneratedPoly, primes, cap, compute_kappa, engine):
    return sweep(g, primes, cap=cap, compute_kappa=compute_kappa, engine=engine)


ExperimentResults = list[tuple[GeneratedPoly, list[SweepRow]]]


def run_experiment(cfg: ExperimentConfig) -> ExperimentResults:
    """Generate, sweep, and merge; output depends only on the config."""
    primes = primes_in_range(2, cfg.max_prime)
    polys = []
    for i in range(cfg.num_polynomials):
        rng = random.Random(_mix_seed(cfg.master_seed, i))
        source = rng.choice(primes)
        polys.append(random_laurent(source, cfg.degree, rng, poly_id=i))
    worker = partial(
        _sweep_task,
        primes=primes,
        cap=cfg.cap,
        compute_kappa=cfg.compute_kappa,
        engine=cfg.engine,
    )
    if cfg.parallelism > 1 and len(polys) > 1:
        with ProcessPoolExecutor(max_workers=cfg.parallelism) as pool:
            all_rows = list(pool.map(worker, polys))
    else:
        all_rows = [worker(g) for g in polys]
    return list(zip(polys, all_rows))


def find_counterexamples(
    cfg: ExperimentConfig,
) -> list[tuple[GeneratedPoly, int, int]]:
    """(polynomial, prime, n0) for every row with first zero >= p**degree."""
    hits = []
    for g, rows in run_experiment(cfg):
        for row in rows:
            if row.report is not None and row.report.violates_conjecture:
                hits.append((g, row.p, row.report.n0))
    return hits


# ---------------------------- serialization ----------------------------

def outcome_label(outcome: ShortestZeroOutcome | None) -> str:
    if outcome is None:
        return "error"
    if isinstance(outcome, Found):
        return "found"
    if isinstance(outcome, NoneExists):
        return "none"
    if isinstance(outcome, CapExceeded):
        return "cap-exceeded"
    raise TypeError(f"not an outcome: {outcome!r}")


def _row_json(row: SweepRow, include_timing: bool) -> dict:
    return {
        "p": row.p,
        "outcome": outcome_label(row.outcome),
        "n0": decimal_str(row.outcome.n0) if isinstance(row.outcome, Found) else None,
        "kappa": row.kappa,
        "effective_degree": row.effective_degree,
        "report": None if row.report is None else row.report.to_json_dict(),
        "runtime_ms": row.runtime_ms if include_timing else None,
        "error": row.error,
    }


def results_to_json(
    cfg: ExperimentConfig, results: ExperimentResults, include_timing: bool = True
) -> str:
    payload = {
        "config": cfg.to_json_dict(),
        "polynomials": [
            {
                "poly_id": g.poly_id,
                "poly": g.poly_string(),
                "source_prime": g.source_prime,
                "nominal_degree": g.nominal_degree,
                "rows": [_row_json(row, include_timing) for row in rows],
            }
            for g, rows in results
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


CSV_COLUMNS = [
    "poly_id",
    "poly_string",
    "source_prime",
    "nominal_degree",
    "effective_degree",
    "p",
    "outcome",
    "n0",
    "kappa",
    "conjecture_bound",
    "violates_conjecture",
    "violates_conjecture_strict",
    "kappa_upper_ok",
    "kappa_lower_ok",
    "runtime_ms",
]


def _fmt_opt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    return str(x)


def results_to_csv(
    results: ExperimentResults, include_timing: bool = True
) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for g, rows in results:
        for row in rows:
            rep = row.report
            writer.writerow(
                [
                    g.poly_id,
                    g.poly_string(),
                    g.source_prime,
                    g.nominal_degree,
                    _fmt_opt(row.effective_degree),
                    row.p,
                    outcome_label(row.outcome),
                    decimal_str(row.outcome.n0) if isinstance(row.outcome, Found) else "",
                    _fmt_opt(row.kappa),
                    "" if rep is None else decimal_str(rep.conjecture_bound),
                    _fmt_opt(None if rep is None else rep.violates_conjecture),
                    _fmt_opt(
                        None if rep is None else rep.violates_conjecture_strict
                    ),
                    _fmt_opt(None if rep is None else rep.satisfies_kappa_upper),
                    _fmt_opt(None if rep is None else rep.satisfies_kappa_lower),
                    _fmt_opt(row.runtime_ms if include_timing else None),
                ]
            )
    return buf.getvalue()


def summarize(results: ExperimentResults) -> dict[str, int]:
    counts = {"rows": 0, "found": 0, "none": 0, "cap-exceeded": 0, "error": 0,
              "violations": 0}
    for _, rows in results:
        for row in rows:
            counts["rows"] += 1
            counts[outcome_label(row.outcome)] += 1
            if row.report is not None and row.report.violates_conjecture:
                counts["violations"] += 1
    return counts
