"""Identity suites: each one turns a family of checks into reports.

A suite computes both sides of an identity in canonical text form for a
range of sizes taken from a `RunConfig` and returns one
`VerificationReport` per (identity, parameter) pair.  ``verify_all``
concatenates every suite; an injected sequence table lets tests exercise
the failure path without touching the real tables.

Oracle rows are emitted only for grid points whose p^n fits the
enumeration budget.  Discriminant enumeration pays for a scalar
resultant per square-free polynomial, so that suite caps the degree at
6 (the full identity is polynomial in q; larger degrees add cost, not
verification power).
"""

from __future__ import annotations

import time
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from . import ffpoly, sqfree, tori
from .exact import RationalFunction, render_poly, render_rational_function
from .report import RunConfig, VerificationReport, make_report

#: largest degree used for discriminant equidistribution checks
DISC_N_CAP = 6

_INTRO_QUAD_EXCESS = (1, -3, 4, -4, 5, -7, 8, -8)
_INTRO_SUBTORI_EXCESS = (1, 1, 2, 2, 3, 3, 4, 4)


def _render(value) -> str:
    if isinstance(value, RationalFunction):
        return render_rational_function(value)
    return str(value)


def _timed(name: str, params: dict, lhs: Callable[[], object], rhs: Callable[[], object]) -> VerificationReport:
    start = time.perf_counter()
    lhs_value = lhs()
    rhs_value = rhs()
    elapsed = int((time.perf_counter() - start) * 1000)
    return make_report(name, params, _render(lhs_value), _render(rhs_value), elapsed)


@lru_cache(maxsize=None)
def _oracle_stats(n: int, p: int, discriminants: bool) -> ffpoly.SquareFreeStats:
    return ffpoly.enumerate_stats(
        n, p, budget=p**n, discriminants=discriminants
    )


def _oracle_grid(config: RunConfig, n_cap: int | None = None) -> list[tuple[int, int]]:
    top = config.n_max if n_cap is None else min(config.n_max, n_cap)
    return [
        (p, n)
        for p in config.primes
        for n in range(2, top + 1)
        if p**n <= config.enumeration_budget
    ]


# ---------------------------------------------------------------------------
# square-free polynomial suites
# ---------------------------------------------------------------------------


def factorization_reports(config: RunConfig) -> list[VerificationReport]:
    return [sqfree.factorization_identity_check(config.series_order)]


def squarefree_count_reports(config: RunConfig) -> list[VerificationReport]:
    reports = []
    for n in range(2, config.series_order + 1):
        reports.append(
            _timed(
                "squarefree-count-symbolic",
                {"n": n},
                lambda n=n: sqfree.squarefree_count(n),
                lambda n=n: sqfree.squarefree_count_formula(n),
            )
        )
    for p, n in _oracle_grid(config):
        stats = _oracle_stats(n, p, False)
        reports.append(
            _timed(
                "squarefree-count-oracle",
                {"n": n, "q": p},
                lambda n=n, p=p: sqfree.squarefree_count(n).eval(p),
                lambda s=stats: s.squarefree_count,
            )
        )
    return reports


def linear_factor_reports(config: RunConfig) -> list[VerificationReport]:
    reports = []
    for n in range(2, config.series_order + 1):
        reports.append(
            _timed(
                "linear-factors-symbolic",
                {"n": n},
                lambda n=n: sqfree.expected_linear_factors_sum(n),
                lambda n=n: sqfree.expected_linear_factors_series(n),
            )
        )
    for p, n in _oracle_grid(config):
        stats = _oracle_stats(n, p, False)
        reports.append(
            _timed(
                "linear-factors-oracle",
                {"n": n, "q": p},
                lambda n=n, p=p: sqfree.expected_linear_factors(n).eval(p),
                lambda s=stats: Fraction(s.sum_n1, s.squarefree_count),
            )
        )
    return reports


def quad_excess_reports(
    config: RunConfig,
    a_table: sqfree.SequenceTable | None = None,
    b_table: sqfree.SequenceTable | None = None,
) -> list[VerificationReport]:
    reports = []
    for n in range(2, config.series_order + 1):
        reports.append(
            _timed(
                "quad-excess-finite-n",
                {"n": n},
                lambda n=n: sqfree.quad_excess_formula(n, a_table, b_table),
                lambda n=n: sqfree.quad_excess_exact(n),
            )
        )
    reports.append(
        _timed(
            "quad-excess-limit-series",
            {"order": len(_INTRO_QUAD_EXCESS)},
            lambda: ", ".join(
                str(c)
                for c in sqfree.quad_excess_limit().inverse_q_expansion(
                    len(_INTRO_QUAD_EXCESS)
                )[1:]
            ),
            lambda: ", ".join(str(c) for c in _INTRO_QUAD_EXCESS),
        )
    )
    for p, n in _oracle_grid(config):
        stats = _oracle_stats(n, p, False)
        reports.append(
            _timed(
                "quad-excess-oracle",
                {"n": n, "q": p},
                lambda n=n, p=p: sqfree.quad_excess_exact(n).eval(p),
                lambda s=stats: Fraction(
                    s.sum_n2 - s.sum_n1_pairs, s.squarefree_count
                ),
            )
        )
    return reports


def mu_sum_reports(config: RunConfig) -> list[VerificationReport]:
    reports = []
    for n in range(2, config.series_order + 1):
        reports.append(
            _timed(
                "mu-signed-sum-symbolic",
                {"n": n},
                lambda n=n: sqfree.moebius_signed_sum(n),
                lambda: RationalFunction(0),
            )
        )
    for p, n in _oracle_grid(config):
        stats = _oracle_stats(n, p, False)
        reports.append(
            _timed(
                "mu-signed-sum-oracle",
                {"n": n, "q": p},
                lambda s=stats: s.mu_sum,
                lambda: 0,
            )
        )
    return reports


def discriminant_reports(config: RunConfig) -> list[VerificationReport]:
    reports = []
    for p, n in _oracle_grid(config, n_cap=DISC_N_CAP):
        if p == 2:
            continue
        stats = _oracle_stats(n, p, True)
        reports.append(
            _timed(
                "discriminant-balance",
                {"n": n, "q": p},
                lambda s=stats: s.disc_residue,
                lambda s=stats: s.disc_nonresidue,
            )
        )
    return reports


# ---------------------------------------------------------------------------
# maximal torus suites
# ---------------------------------------------------------------------------


def tori_count_reports(config: RunConfig) -> list[VerificationReport]:
    reports = []
    for n in range(1, config.n_max + 1):
        reports.append(
            _timed(
                "tori-total-partition",
                {"n": n},
                lambda n=n: _type_count_sum(n),
                lambda n=n: tori.total_tori_formula(n),
            )
        )
        reports.append(
            _timed(
                "tori-total-series",
                {"n": n},
                lambda n=n: tori.cycle_index_coefficient(
                    n, {i: 1 for i in range(1, n + 1)}
                ),
                lambda n=n: tori.total_tori_formula(n),
            )
        )
    return reports


def _type_count_sum(n: int) -> RationalFunction:
    acc = RationalFunction(0)
    for rec in tori.type_distribution(n):
        acc = acc + rec.count
    return acc


def tori_type_reports(
    config: RunConfig, n: int, with_evaluations: bool = True
) -> list[VerificationReport]:
    reports = []
    records = tori.type_distribution(n)
    for rec in records:
        negative = any(c < 0 for c in rec.count.num.coeffs)
        reports.append(
            _timed(
                "tori-type-polynomial",
                {
                    "n": n,
                    "type": str(rec.partition),
                    "nonnegative_coefficients": not negative,
                },
                lambda rec=rec: rec.count,
                lambda rec=rec: render_poly(rec.count.num),
            )
        )
        if with_evaluations:
            for p in config.primes:
                reports.append(
                    _timed(
                        "tori-type-count-at-q",
                        {"n": n, "q": p, "type": str(rec.partition)},
                        lambda rec=rec, p=p: rec.count.eval(p),
                        lambda rec=rec, p=p: Fraction(ffpoly_gl_order_value(n, p))
                        / (
                            rec.centralizer
                            * _torus_denominator_value(rec.partition, p)
                        ),
                    )
                )
    reports.append(
        _timed(
            "irreducible-type-match",
            {"n": n},
            lambda: tori.torus_type_count(tori.Partition((n,))),
            lambda: tori.irreducible_tori_count(n),
        )
    )
    reports.append(
        _timed(
            "tori-type-total",
            {"n": n},
            lambda: _type_count_sum(n),
            lambda: tori.total_tori_formula(n),
        )
    )
    return reports


def ffpoly_gl_order_value(n: int, p: int) -> int:
    """|GL(n,p)| computed numerically (not through the symbolic polynomial)."""
    out = 1
    pn = p**n
    for i in range(n):
        out *= pn - p**i
    return out


def _torus_denominator_value(partition: tori.Partition, p: int) -> int:
    out = 1
    for i, m in partition.multiplicities().items():
        out *= (p**i - 1) ** m
    return out


def eigenvector_reports(config: RunConfig) -> list[VerificationReport]:
    reports = []
    for n in range(1, config.n_max + 1):
        reports.append(
            _timed(
                "eigenvectors-partition",
                {"n": n},
                lambda n=n: tori.expected_eigenvectors_closed(n),
                lambda n=n: tori.expected_eigenvectors_partition(n),
            )
        )
        reports.append(
            _timed(
                "eigenvectors-series",
                {"n": n},
                lambda n=n: tori.expected_eigenvectors_closed(n),
                lambda n=n: tori.expected_eigenvectors_series(n),
            )
        )
    return reports


def subtori_excess_reports(config: RunConfig) -> list[VerificationReport]:
    reports = []
    for n in range(2, config.n_max + 1):
        reports.append(
            _timed(
                "subtori-excess-partition",
                {"n": n},
                lambda n=n: tori.tori_quad_excess_closed(n),
                lambda n=n: tori.tori_quad_excess_partition(n),
            )
        )
        reports.append(
            _timed(
                "subtori-excess-pair-moment",
                {"n": n},
                lambda n=n: tori.pair_moment_closed(n),
                lambda n=n: tori.pair_moment_partition(n),
            )
        )
        reports.append(
            _timed(
                "subtori-excess-quad-moment",
                {"n": n},
                lambda n=n: tori.quad_moment_closed(n),
                lambda n=n: tori.quad_moment_partition(n),
            )
        )
    reports.append(
        _timed(
            "subtori-excess-limit-series",
            {"order": len(_INTRO_SUBTORI_EXCESS)},
            lambda: ", ".join(
                str(c)
                for c in tori.tori_quad_excess_limit().inverse_q_expansion(
                    len(_INTRO_SUBTORI_EXCESS)
                )[1:]
            ),
            lambda: ", ".join(str(c) for c in _INTRO_SUBTORI_EXCESS),
        )
    )
    return reports


def mod2_bias_reports(config: RunConfig) -> list[VerificationReport]:
    reports = []
    for n in range(1, config.n_max + 1):
        reports.append(
            _timed(
                "mod2-bias-partition",
                {"n": n},
                lambda n=n: tori.mod2_bias_partition(n),
                lambda n=n: tori.mod2_bias_formula(n),
            )
        )
        reports.append(
            _timed(
                "mod2-bias-series",
                {"n": n},
                lambda n=n: tori.mod2_bias_series(n),
                lambda n=n: tori.mod2_bias_formula(n),
            )
        )
    return reports


def euler_reports(config: RunConfig) -> list[VerificationReport]:
    order = max(12, config.n_max)
    return [
        tori.euler_identity_check(1, order),
        tori.euler_identity_check(2, order),
    ]


def cayley_reports(config: RunConfig) -> list[VerificationReport]:
    reports = []
    one = RationalFunction(1)
    for n in range(1, config.n_max + 1):
        reports.append(
            _timed(
                "type-probability-sum",
                {"n": n},
                lambda n=n: _probability_sum(n),
                lambda: one,
            )
        )
    return reports


def _probability_sum(n: int) -> RationalFunction:
    acc = RationalFunction(0)
    for rec in tori.type_distribution(n):
        acc = acc + rec.probability
    return acc


def verify_all(
    config: RunConfig,
    a_table: sqfree.SequenceTable | None = None,
    b_table: sqfree.SequenceTable | None = None,
) -> list[VerificationReport]:
    """Every identity suite at the configured sizes."""
    reports: list[VerificationReport] = []
    reports += factorization_reports(config)
    reports += squarefree_count_reports(config)
    reports += linear_factor_reports(config)
    reports += quad_excess_reports(config, a_table, b_table)
    reports += mu_sum_reports(config)
    reports += discriminant_reports(config)
    reports += tori_count_reports(config)
    for n in range(1, config.n_max + 1):
        reports += tori_type_reports(config, n, with_evaluations=False)
    reports += eigenvector_reports(config)
    reports += subtori_excess_reports(config)
    reports += mod2_bias_reports(config)
    reports += euler_reports(config)
    reports += cayley_reports(config)
    return reports
