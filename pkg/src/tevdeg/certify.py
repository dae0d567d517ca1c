"""Enumerativity certification and very-free-curve existence.

A virtual count is *enumerative* when it equals the honest set-theoretic
count of maps; the certifier classifies each well-posed problem into

    Enumerative               equality is guaranteed at this (g, d)
    AsymptoticallyEnumerative equality holds for all large d at this
                              genus; no explicit bound is certified,
                              and the status is never upgraded to
                              Enumerative at a specific d
    NotEnumerative            the counts provably differ
    Unknown                   no implemented criterion applies
    NotWellPosed              the triple fails well-posedness

Every certificate records the numeric inequalities it checked, with
both sides evaluated, plus a short tag naming the criterion used.

The thresholds implemented:

    line (r = 1)      enumerative iff d >= g + 1; below that the
                      closed form and 2^g are attached, and they differ
    P^r, r >= 2       enumerative for d >= r(g + 1); at the minimal
                      classical degree d = r + gr/(r+1) with g > 0 the
                      virtual count exceeds the geometric one
    hypersurface      enumerative for g = 0 when r > (e+2)(e-2);
    (e >= 3)          asymptotically enumerative for g >= 1 when
                      r > (e+1)(e-2)
    quadric and       asymptotically enumerative at every fixed genus
    homogeneous
    custom            asymptotically enumerative when the boundary
                      condition s + t >= r + 1 holds together with
                      excess control (s > r, or the complete
                      intersection inequality I > (r - s) * sum(e_i))

The very-free search certifies, for a degree-e hypersurface over an
algebraically closed field of characteristic p > e with e >= 3 and
r > (e+2)(e-2), that a general hypersurface carries a very free
rational curve, by exhibiting a genus-0 count not divisible by p.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .arith import is_prime, legendre_valuation, padic_valuation
from .closed_forms import vtev
from .errors import (
    HypothesisViolation,
    NoSolution,
    NonFano,
    TevError,
    WellPosednessError,
)
from .schubert import tev_p1_binomial
from .targets import TargetKind, TargetSpec, TevProblem, make_problem

__all__ = [
    "Certificate",
    "Check",
    "Status",
    "VeryFreeReport",
    "certify",
    "certify_target",
    "check_complete_intersection",
    "check_condition_ii",
    "check_star2_prime0_hypersurface",
    "transversality_threshold",
    "very_free_search",
]


class Status(Enum):
    ENUMERATIVE = "Enumerative"
    ASYMPTOTICALLY_ENUMERATIVE = "AsymptoticallyEnumerative"
    NOT_ENUMERATIVE = "NotEnumerative"
    UNKNOWN = "Unknown"
    NOT_WELL_POSED = "NotWellPosed"


_RELATIONS = {
    "==": lambda a, b: a == b,
    "!=": lambda a, b: a != b,
    ">=": lambda a, b: a >= b,
    ">": lambda a, b: a > b,
    "<=": lambda a, b: a <= b,
    "<": lambda a, b: a < b,
}


@dataclass(frozen=True)
class Check:
    """One evaluated inequality: description, both sides, verdict."""

    description: str
    left: int
    relation: str
    right: int
    holds: bool

    def recompute(self) -> bool:
        """Re-evaluate the relation; must agree with `holds`."""
        return _RELATIONS[self.relation](self.left, self.right)


def _check(description: str, left: int, relation: str, right: int) -> Check:
    return Check(description, left, relation, right, _RELATIONS[relation](left, right))


@dataclass(frozen=True)
class Certificate:
    """Outcome of certification with its supporting arithmetic.

    `geometric_value` is only ever attached for the line, the one
    target with an implemented geometric formula. An Enumerative
    status requires every listed check to hold.
    """

    status: Status
    cited_result: str
    checks: tuple[Check, ...]
    vtev_value: int | None = None
    geometric_value: int | None = None


@dataclass(frozen=True)
class VeryFreeReport:
    """Very-free existence evidence for a hypersurface in char p."""

    e: int
    r: int
    p: int
    n: int
    d: int
    vtev_valuation: int
    conditions: tuple[Check, ...]
    conclusion: bool


CITE_P1_THRESHOLD = "line threshold: enumerative iff d >= g+1"
CITE_PR_THRESHOLD = "projective-space threshold: enumerative for d >= r(g+1)"
CITE_PR_CASTELNUOVO = (
    "minimal classical degree d = r + gr/(r+1): virtual exceeds geometric count"
)
CITE_HOMOGENEOUS = "homogeneous targets: asymptotically enumerative at fixed genus"
CITE_HYP_GENUS0 = "genus-0 hypersurface criterion: r > (e+2)(e-2)"
CITE_HYP_ASYMPTOTIC = "hypersurface asymptotic criterion: r > (e+1)(e-2)"
CITE_GENERAL_ASYMPTOTIC = (
    "excess control plus boundary condition s + t >= r + 1"
)
CITE_VERY_FREE = (
    "very free rational curves from a p-indivisible genus-0 count"
)
CITE_NONE = "no applicable criterion"


def transversality_threshold(g: int) -> int:
    """Dimension bound 2g above which generic one-point evaluations
    of the relevant moduli become flat and birationally transverse."""
    if g < 0:
        raise ValueError(f"genus must be >= 0, got {g}")
    return 2 * g


def check_condition_ii(s: int, t: int, r: int) -> bool:
    """Boundary-node condition s + t >= r + 1.

    s and t are the minimal anticanonical pairings over curve classes
    with surjective one- and two-point evaluation maps; s >= t >= 1.
    """
    if not s >= t >= 1:
        raise ValueError(f"need s >= t >= 1, got s={s}, t={t}")
    if r < 1:
        raise ValueError(f"need r >= 1, got {r}")
    return s + t >= r + 1


def check_complete_intersection(index: int, s: int, r: int, degrees) -> bool:
    """Excess-control inequality I > (r - s) * sum(e_i) for a complete
    intersection of the given degrees in projective space.

    Accepts any integers for index and s so the inequality can be
    probed across whole parameter grids, including degenerate corners.
    """
    degrees = tuple(degrees)
    if any(e_i < 1 for e_i in degrees):
        raise ValueError(f"degrees must be >= 1, got {degrees}")
    return index > (r - s) * sum(degrees)


def check_star2_prime0_hypersurface(e: int, r: int) -> bool:
    """Genus-0 criterion r > (e+2)(e-2) for degree-e hypersurfaces."""
    if e < 3:
        raise ValueError(f"criterion needs e >= 3, got {e}")
    return r > (e + 2) * (e - 2)


def _try_vtev(problem: TevProblem) -> int | None:
    try:
        return vtev(problem).value
    except TevError:
        return None


def certify(problem: TevProblem) -> Certificate:
    """Certify enumerativity of the virtual count for a well-posed problem."""
    kind = problem.target.kind
    if kind is TargetKind.PROJECTIVE_SPACE:
        if problem.target.r == 1:
            return _certify_line(problem)
        return _certify_projective(problem)
    if kind is TargetKind.HYPERSURFACE:
        return _certify_hypersurface(problem)
    if kind in (TargetKind.QUADRIC, TargetKind.HOMOGENEOUS):
        return _certify_homogeneous(problem)
    return _certify_custom(problem)


def certify_target(target: TargetSpec, g: int, d: int) -> Certificate:
    """Like `certify`, but folds well-posedness failures into the status."""
    try:
        problem = make_problem(target, g, d)
    except WellPosednessError as exc:
        return Certificate(
            status=Status.NOT_WELL_POSED,
            cited_result=f"not well-posed: {exc.kind}",
            checks=(),
        )
    return certify(problem)


def _certify_line(problem: TevProblem) -> Certificate:
    g, d = problem.g, problem.d
    threshold = _check("d >= g + 1", d, ">=", g + 1)
    virtual = 2 ** g
    if 2 * d - 2 - g >= 0:
        geometric = tev_p1_binomial(g, d)
        status = Status.ENUMERATIVE if threshold.holds else Status.NOT_ENUMERATIVE
        return Certificate(
            status=status,
            cited_result=CITE_P1_THRESHOLD,
            checks=(threshold,),
            vtev_value=virtual,
            geometric_value=geometric,
        )
    # Well-posed, but below the domain where the geometric formula is
    # quoted; nothing is certified either way.
    domain = _check("2d - 2 - g >= 0", 2 * d - 2 - g, ">=", 0)
    return Certificate(
        status=Status.UNKNOWN,
        cited_result=CITE_NONE,
        checks=(threshold, domain),
        vtev_value=virtual,
    )


def _certify_projective(problem: TevProblem) -> Certificate:
    r, g, d = problem.target.r, problem.g, problem.d
    threshold = _check("d >= r(g + 1)", d, ">=", r * (g + 1))
    virtual = _try_vtev(problem)
    if threshold.holds:
        return Certificate(
            status=Status.ENUMERATIVE,
            cited_result=CITE_PR_THRESHOLD,
            checks=(threshold,),
            vtev_value=virtual,
        )
    if g > 0 and (g * r) % (r + 1) == 0 and d == r + g * r // (r + 1):
        minimal = _check(
            "d == r + gr/(r+1)", d, "==", r + g * r // (r + 1)
        )
        return Certificate(
            status=Status.NOT_ENUMERATIVE,
            cited_result=CITE_PR_CASTELNUOVO,
            checks=(threshold, minimal),
            vtev_value=virtual,
        )
    return Certificate(
        status=Status.UNKNOWN,
        cited_result=CITE_NONE,
        checks=(threshold,),
        vtev_value=virtual,
    )


def _certify_hypersurface(problem: TevProblem) -> Certificate:
    e, r, g = problem.target.e, problem.target.r, problem.g
    virtual = _try_vtev(problem)
    if g == 0:
        bound = _check("r > (e+2)(e-2)", r, ">", (e + 2) * (e - 2))
        if bound.holds:
            return Certificate(
                status=Status.ENUMERATIVE,
                cited_result=CITE_HYP_GENUS0,
                checks=(bound,),
                vtev_value=virtual,
            )
        return Certificate(
            status=Status.UNKNOWN,
            cited_result=CITE_NONE,
            checks=(bound,),
            vtev_value=virtual,
        )
    bound = _check("r > (e+1)(e-2)", r, ">", (e + 1) * (e - 2))
    if bound.holds:
        return Certificate(
            status=Status.ASYMPTOTICALLY_ENUMERATIVE,
            cited_result=CITE_HYP_ASYMPTOTIC,
            checks=(bound,),
            vtev_value=virtual,
        )
    return Certificate(
        status=Status.UNKNOWN,
        cited_result=CITE_NONE,
        checks=(bound,),
        vtev_value=virtual,
    )


def _certify_homogeneous(problem: TevProblem) -> Certificate:
    return Certificate(
        status=Status.ASYMPTOTICALLY_ENUMERATIVE,
        cited_result=CITE_HOMOGENEOUS,
        checks=(),
        vtev_value=_try_vtev(problem),
    )


def _certify_custom(problem: TevProblem) -> Certificate:
    target = problem.target
    s, t, r = target.s_bound, target.t_bound, target.r
    if s is None or t is None:
        return Certificate(
            status=Status.UNKNOWN,
            cited_result=CITE_NONE,
            checks=(),
        )
    boundary = _check("s + t >= r + 1", s + t, ">=", r + 1)
    excess = _check("s > r", s, ">", r)
    checks = [boundary, excess]
    controlled = excess.holds
    if not controlled and target.ci_degrees:
        ci = _check(
            "I > (r - s) * sum(degrees)",
            target.index,
            ">",
            (r - s) * sum(target.ci_degrees),
        )
        checks.append(ci)
        controlled = ci.holds
    if boundary.holds and controlled:
        return Certificate(
            status=Status.ASYMPTOTICALLY_ENUMERATIVE,
            cited_result=CITE_GENERAL_ASYMPTOTIC,
            checks=tuple(checks),
        )
    return Certificate(
        status=Status.UNKNOWN,
        cited_result=CITE_NONE,
        checks=tuple(checks),
    )


def very_free_search(e: int, r: int, p: int, n_limit: int | None = None) -> VeryFreeReport:
    """Find the smallest usable marking count and test p-divisibility.

    Searches for the minimal n >= 3 with (n-1) * r divisible by
    r + 2 - e and resulting degree d = (n-1) * r / (r+2-e) >= 3, then
    computes the p-adic valuation of the genus-0 count

        ((e-1)!)^n * e^((d-n)e + 1)

    from its factorization (the integer itself is never factored).
    The conclusion is True when r > (e+2)(e-2), p > e, and the
    valuation is 0; a True conclusion certifies a very free rational
    curve on a general degree-e hypersurface in characteristic p.

    The search bound defaults to n <= 10 * (r + 2 - e).
    """
    if e < 3:
        raise HypothesisViolation(f"very-free search needs e >= 3, got {e}")
    if r < 1:
        raise ValueError(f"need r >= 1, got {r}")
    step = r + 2 - e
    if step <= 0:
        raise NonFano(
            f"degree {e} hypersurface of dimension {r} is not Fano"
        )
    if not is_prime(p):
        raise HypothesisViolation(f"characteristic must be prime, got {p}")
    limit = 10 * step if n_limit is None else n_limit
    solution = None
    for n in range(3, limit + 1):
        if (n - 1) * r % step:
            continue
        d = (n - 1) * r // step
        if d >= 3:
            solution = (n, d)
            break
    if solution is None:
        raise NoSolution(
            f"no marking count n in [3, {limit}] works for (e, r) = ({e}, {r})"
        )
    n, d = solution
    valuation = n * legendre_valuation(e - 1, p)
    valuation += ((d - n) * e + 1) * padic_valuation(e, p)
    conditions = (
        _check("r > (e+2)(e-2)", r, ">", (e + 2) * (e - 2)),
        _check("p > e", p, ">", e),
    )
    conclusion = all(c.holds for c in conditions) and valuation == 0
    return VeryFreeReport(
        e=e,
        r=r,
        p=p,
        n=n,
        d=d,
        vtev_valuation=valuation,
        conditions=conditions,
        conclusion=conclusion,
    )
