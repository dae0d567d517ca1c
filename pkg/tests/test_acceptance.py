"""Acceptance suite: one criterion per test, one printed verdict per
criterion. Run with `pytest -s tests/test_acceptance.py` to see the
PASS/FAIL lines; every comparison is exact integer arithmetic."""

from __future__ import annotations

import math
import random
import time

from tevdeg import (
    Status,
    TargetSpec,
    certify_target,
    check_complete_intersection,
    make_problem,
    tev_p1_binomial,
    tev_p1_schubert,
    tqft_vtev,
    very_free_search,
    vtev,
)
from tevdeg.arith import binom, legendre_valuation, padic_valuation
from tevdeg.errors import TevError, WellPosednessError


class _criterion:
    """Prints exactly one PASS/FAIL line for the enclosed checks."""

    def __init__(self, number: int, label: str):
        self.number = number
        self.label = label

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        verdict = "FAIL" if exc_type else "PASS"
        print(f"{verdict} criterion {self.number}: {self.label}")
        return False


def test_criterion_1_ring_agrees_with_closed_form():
    with _criterion(1, "quantum ring evaluation equals (r+1)^g on the grid"):
        t0 = time.perf_counter()
        cases = 0
        for r in range(1, 6):
            target = TargetSpec.projective_space(r)
            for g in range(0, 9):
                for d in range(1, 41):
                    try:
                        problem = make_problem(target, g, d)
                    except WellPosednessError:
                        continue
                    assert tqft_vtev(r, g, d, problem.n) == (r + 1) ** g, (r, g, d)
                    cases += 1
        elapsed = time.perf_counter() - t0
        assert cases == 799
        assert elapsed < 60.0, f"grid took {elapsed:.1f}s"


def test_criterion_2_line_formulas_agree():
    with _criterion(2, "binomial and Schubert line counts agree"):
        t0 = time.perf_counter()
        for g in range(0, 13):
            for d in range(1, 14):
                if 2 * d - 2 - g < 0:
                    continue
                a = tev_p1_binomial(g, d)
                b = tev_p1_schubert(g, d)
                assert a == b, (g, d, a, b)
                assert (a == 2 ** g) == (d >= g + 1), (g, d, a)
        assert tev_p1_binomial(3, 4) == 8
        assert tev_p1_binomial(2, 2) == 1
        assert tev_p1_binomial(3, 3) == 4
        elapsed = time.perf_counter() - t0
        assert elapsed < 10.0, f"grid took {elapsed:.1f}s"


def test_criterion_3_cubic_sevenfold_spot_value():
    with _criterion(3, "degree-3 hypersurface in P^8 at (g, d) = (1, 7)"):
        problem = make_problem(TargetSpec.hypersurface(3, 7), 1, 7)
        assert problem.n == 6
        result = vtev(problem)
        assert result.value == 10368
        assert result.value == math.factorial(2) ** 6 * 6 ** 1 * 3 ** 3
        remultiplied = 1
        for base, exp in result.factorization:
            remultiplied *= base ** exp
        assert remultiplied == result.value


def test_criterion_4_quadric_consecutive_degree_pairing():
    with _criterion(4, "quadric counts at d and d+1 sum to (2r)^g"):
        for r in range(3, 9):
            target = TargetSpec.quadric(r)
            delta = 1 if r % 2 else 2
            for g in range(0, 7):
                for d in range(1, 13):
                    try:
                        low = make_problem(target, g, d)
                        high = make_problem(target, g, d + 1)
                    except WellPosednessError:
                        continue
                    numerator = (2 * r) ** g + (-1) ** d * (2 * delta) ** g
                    assert numerator % 2 == 0, (r, g, d)
                    total = vtev(low).value + vtev(high).value
                    assert total == (2 * r) ** g, (r, g, d, total)
        spot = make_problem(TargetSpec.quadric(3), 1, 2)
        assert vtev(spot).value == 4
        spot = make_problem(TargetSpec.quadric(3), 1, 3)
        assert vtev(spot).value == 2


def test_criterion_5_grading_violations_vanish():
    with _criterion(5, "ring evaluation vanishes off the dimension constraint"):
        rng = random.Random(5)
        seen = 0
        while seen < 100:
            r = rng.randint(1, 4)
            g = rng.randint(0, 6)
            d = rng.randint(0, 10)
            n = rng.randint(0, 14)
            if d * (r + 1) == r * (n + g - 1):
                continue
            assert tqft_vtev(r, g, d, n) == 0, (r, g, d, n)
            seen += 1


def test_criterion_6_very_free_search_procedure():
    with _criterion(6, "very-free search on three worked hypersurfaces"):
        t0 = time.perf_counter()

        report = very_free_search(3, 8, 5)
        assert (report.n, report.d) == (8, 8)
        assert report.vtev_valuation == 0
        assert report.conclusion is True

        report = very_free_search(3, 5, 7)
        assert report.conclusion is False
        bound = report.conditions[0]
        assert bound.description == "r > (e+2)(e-2)"
        assert not bound.holds
        assert report.conditions[1].holds
        assert report.vtev_valuation == 0

        report = very_free_search(4, 13, 5)
        assert (report.n, report.d) == (12, 13)
        assert report.conclusion is True

        elapsed = time.perf_counter() - t0
        assert elapsed < 1.0, f"searches took {elapsed:.2f}s"


def test_criterion_7_line_certifier_consistency():
    with _criterion(7, "line certificates match the two-formula comparison"):
        line = TargetSpec.projective_space(1)
        for g in range(0, 11):
            for d in range(1, 13):
                cert = certify_target(line, g, d)
                enumerative = cert.status is Status.ENUMERATIVE
                threshold = d >= g + 1
                try:
                    coincide = (
                        tev_p1_binomial(g, d)
                        == tev_p1_schubert(g, d)
                        == 2 ** g
                    )
                except TevError:
                    coincide = False
                assert enumerative == threshold == coincide, (g, d, cert.status)


def test_criterion_8_complete_intersection_bound_equivalence():
    with _criterion(8, "excess control matches r > (e+1)(e-2) exactly"):
        for e in range(3, 11):
            for r in range(1, 201):
                s = r + 2 - e
                outcome = check_complete_intersection(s, s, r, [e])
                assert outcome == (r > (e + 1) * (e - 2)), (e, r)


def test_criterion_9_arithmetic_kernel_properties():
    with _criterion(9, "Pascal, Legendre digit-sum, valuation additivity"):
        rng = random.Random(9)
        for _ in range(10_000):
            n = rng.randint(1, 300)
            k = rng.randint(-3, n + 3)
            assert binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k)

        primes = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 97, 101)
        for _ in range(10_000):
            m = rng.randint(0, 1_000_000)
            p = rng.choice(primes)
            digit_sum = sum(_digits(m, p))
            assert legendre_valuation(m, p) * (p - 1) == m - digit_sum

        for _ in range(10_000):
            p = rng.choice(primes)
            a = p ** rng.randint(0, 6) * _coprime(rng, p)
            b = p ** rng.randint(0, 6) * _coprime(rng, p)
            assert padic_valuation(a * b, p) == (
                padic_valuation(a, p) + padic_valuation(b, p)
            )


def _digits(m: int, p: int) -> list[int]:
    digits = []
    while m:
        digits.append(m % p)
        m //= p
    return digits or [0]


def _coprime(rng: random.Random, p: int) -> int:
    while True:
        u = rng.randint(1, 10_000)
        if u % p:
            return rng.choice((u, -u))
