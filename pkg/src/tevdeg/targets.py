"""Fano targets of Picard rank one and well-posedness of point counts.

A target is described by the handful of integers every degree formula
consumes: the dimension r, the hypersurface degree e where meaningful,
the index I (anticanonical pairing with the generator curve class),
and the minimal-pairing bounds s and t when known or asserted. Curve
classes are a single integer d, the degree against the ample generator.

For genus g and degree d the marking count is forced by dimensions:

    n = 1 - g + d * I / r

A triple is well-posed when n is a nonnegative integer and (g, n) is
in the stable range 2g - 2 + n > 0. `make_problem` is the only door
into `TevProblem`, so a constructed problem is always well-posed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import (
    InvalidTarget,
    NegativeN,
    NonFano,
    NonIntegerN,
    UnstableRange,
)

__all__ = [
    "TargetKind",
    "TargetSpec",
    "TevProblem",
    "c1_pairing",
    "make_problem",
    "marking_count",
]


class TargetKind(Enum):
    PROJECTIVE_SPACE = "projective-space"
    HYPERSURFACE = "hypersurface"
    QUADRIC = "quadric"
    HOMOGENEOUS = "homogeneous"
    CUSTOM = "custom"


@dataclass(frozen=True)
class TargetSpec:
    """A Picard-rank-1 Fano target.

    `index` is the pairing of c1 with the generator curve class, so it
    must be positive. `s_bound` and `t_bound` are the minimal c1
    pairings over curve classes with surjective one-point (resp.
    two-point) evaluation; for homogeneous and custom targets they are
    recorded as asserted by the caller, never derived.
    """

    kind: TargetKind
    r: int
    e: int
    index: int
    s_bound: int | None = None
    t_bound: int | None = None
    ci_degrees: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.r < 1:
            raise InvalidTarget(f"dimension must be >= 1, got r={self.r}")
        if self.e < 1:
            raise InvalidTarget(f"degree must be >= 1, got e={self.e}")
        if self.index <= 0:
            raise NonFano(
                f"anticanonical degree {self.index} is not positive; "
                "the target is not Fano"
            )
        for name, bound in (("s", self.s_bound), ("t", self.t_bound)):
            if bound is not None and bound < 1:
                raise InvalidTarget(f"{name} bound must be >= 1, got {bound}")
        if (
            self.s_bound is not None
            and self.t_bound is not None
            and self.s_bound < self.t_bound
        ):
            raise InvalidTarget("s bound cannot be smaller than t bound")
        if self.ci_degrees is not None:
            object.__setattr__(self, "ci_degrees", tuple(self.ci_degrees))
            if any(e_i < 1 for e_i in self.ci_degrees):
                raise InvalidTarget("complete intersection degrees must be >= 1")

    @classmethod
    def projective_space(cls, r: int) -> "TargetSpec":
        """P^r; lines realize both minimal pairings, so s = t = r + 1."""
        if r < 1:
            raise InvalidTarget(f"projective space needs r >= 1, got {r}")
        return cls(
            TargetKind.PROJECTIVE_SPACE,
            r=r,
            e=1,
            index=r + 1,
            s_bound=r + 1,
            t_bound=r + 1,
        )

    @classmethod
    def hypersurface(cls, e: int, r: int, s_bound: int | None = None) -> "TargetSpec":
        """Smooth degree-e hypersurface of dimension r in P^{r+1}.

        Degree 1 is a hyperplane and normalizes to projective space;
        degree 2 normalizes to the quadric kind, which has its own
        closed form. The index is r + 2 - e, which is also t; the
        default s bound is the conservative choice s = t.
        """
        if e < 1:
            raise InvalidTarget(f"hypersurface degree must be >= 1, got {e}")
        if e == 1:
            return cls.projective_space(r)
        if e == 2:
            return cls.quadric(r)
        if r < 1:
            raise InvalidTarget(f"hypersurface needs r >= 1, got {r}")
        index = r + 2 - e
        if index <= 0:
            raise NonFano(
                f"degree {e} hypersurface of dimension {r} has "
                f"anticanonical degree {index} <= 0"
            )
        t_bound = index
        if s_bound is None:
            s_bound = t_bound
        if s_bound < t_bound:
            raise InvalidTarget("s bound cannot be smaller than t bound")
        return cls(
            TargetKind.HYPERSURFACE,
            r=r,
            e=e,
            index=index,
            s_bound=s_bound,
            t_bound=t_bound,
        )

    @classmethod
    def quadric(cls, r: int) -> "TargetSpec":
        """Smooth quadric of dimension r >= 3 (Picard rank 1, index r)."""
        if r < 3:
            raise InvalidTarget(
                f"quadric targets need dimension >= 3, got {r}"
            )
        return cls(
            TargetKind.QUADRIC, r=r, e=2, index=r, s_bound=r, t_bound=r
        )

    @classmethod
    def homogeneous(
        cls,
        r: int,
        index: int,
        s_bound: int | None = None,
        t_bound: int | None = None,
    ) -> "TargetSpec":
        """Homogeneous space of Picard rank 1 with the given invariants."""
        return cls(
            TargetKind.HOMOGENEOUS,
            r=r,
            e=1,
            index=index,
            s_bound=s_bound,
            t_bound=t_bound,
        )

    @classmethod
    def custom(
        cls,
        r: int,
        index: int,
        s_bound: int | None = None,
        t_bound: int | None = None,
        ci_degrees: tuple[int, ...] | None = None,
    ) -> "TargetSpec":
        """Arbitrary rank-1 Fano target described by asserted invariants.

        `ci_degrees` lists hypersurface degrees when the target is a
        complete intersection in projective space; the certifier can
        then use the excess-control inequality.
        """
        return cls(
            TargetKind.CUSTOM,
            r=r,
            e=1,
            index=index,
            s_bound=s_bound,
            t_bound=t_bound,
            ci_degrees=ci_degrees,
        )

    def describe(self) -> str:
        """Short human-readable name."""
        if self.kind is TargetKind.PROJECTIVE_SPACE:
            return f"P^{self.r}"
        if self.kind is TargetKind.HYPERSURFACE:
            return f"degree-{self.e} hypersurface in P^{self.r + 1}"
        if self.kind is TargetKind.QUADRIC:
            return f"quadric of dimension {self.r}"
        if self.kind is TargetKind.HOMOGENEOUS:
            return f"homogeneous space, dim {self.r}, index {self.index}"
        return f"custom target, dim {self.r}, index {self.index}"


@dataclass(frozen=True)
class TevProblem:
    """A well-posed counting problem: target, genus, degree, markings.

    The stored n always satisfies the dimension constraint
    d * index = r * (n + g - 1).
    """

    target: TargetSpec
    g: int
    d: int
    n: int

    def __post_init__(self) -> None:
        lhs = self.d * self.target.index
        rhs = self.target.r * (self.n + self.g - 1)
        if lhs != rhs:
            raise ValueError(
                f"dimension constraint violated: d*I = {lhs} but "
                f"r*(n+g-1) = {rhs}"
            )


def c1_pairing(target: TargetSpec, d: int) -> int:
    """Pairing of c1 of the target with a degree-d curve class."""
    if d < 1:
        raise ValueError(f"curve degree must be >= 1, got {d}")
    return d * target.index


def marking_count(target: TargetSpec, g: int, d: int) -> Fraction:
    """The forced marking count 1 - g + d*I/r, as an exact rational.

    Integrality is not enforced here; `make_problem` does that.
    """
    if g < 0:
        raise ValueError(f"genus must be >= 0, got {g}")
    return 1 - g + Fraction(c1_pairing(target, d), target.r)


def make_problem(target: TargetSpec, g: int, d: int) -> TevProblem:
    """Validate well-posedness and build the problem instance.

    Raises NonIntegerN, NegativeN, or UnstableRange when the triple is
    not well-posed (NonFano cannot survive TargetSpec construction but
    is re-checked defensively).
    """
    if target.index <= 0:
        raise NonFano(f"target has anticanonical degree {target.index} <= 0")
    n = marking_count(target, g, d)
    if n.denominator != 1:
        raise NonIntegerN(
            f"marking count 1 - g + d*I/r = {n} is not an integer "
            f"(g={g}, d={d}, I={target.index}, r={target.r})"
        )
    n_int = int(n)
    if n_int < 0:
        raise NegativeN(f"marking count {n_int} is negative (g={g}, d={d})")
    if 2 * g - 2 + n_int <= 0:
        raise UnstableRange(
            f"(g, n) = ({g}, {n_int}) lies outside the stable range "
            "2g - 2 + n > 0"
        )
    return TevProblem(target=target, g=g, d=d, n=n_int)
