"""Schubert calculus on Gr(2, m) and geometric degrees of the line.

Schubert classes sigma_(a,b) are indexed by partitions in the
2 x (m-2) box, m-2 >= a >= b >= 0. Multiplication by a special class
sigma_a follows the two-row Pieri rule: sigma_a * sigma_(x,y) is the
sum of sigma_(x',y') over x' + y' = x + y + a with the interlacing
x' >= x >= y' >= y and x' <= m - 2. Integration reads off the
multiplicity of the top class sigma_(m-2,m-2).

The count of degree-d maps from a general genus-g curve to the line
through the forced number of general points has two expressions:

    tev_p1_schubert  - the Grassmannian integral over Gr(2, d+1) of
                       sigma_1^g * sum of sigma_a * sigma_b over all
                       ordered pairs a + b = 2d - 2 - g;
    tev_p1_binomial  - the closed form 2^g minus binomial corrections
                       controlled by l = d - g - 1.

Under the vanishing convention binom(n, k) = 0 outside 0 <= k <= n,
every correction term dies exactly when l >= 0, so the closed form
collapses to 2^g if and only if d >= g + 1. The two routes are
independent and cross-checked over a grid in the test suite.

Both routes reject 2d - 2 - g < 0 (DegreeUnderflow): no claim is made
for that range, even though such triples can be well-posed.
"""

from __future__ import annotations

from .arith import binom
from .errors import DegreeUnderflow, SpecialClassOutOfBox

__all__ = [
    "SchubertCombo",
    "integral",
    "pieri_special",
    "tev_p1_binomial",
    "tev_p1_schubert",
]


class SchubertCombo:
    """Integer combination of Schubert classes on Gr(2, m).

    `terms` maps partitions (a, b) to nonzero multiplicities; zero
    multiplicities are never stored. Treated as immutable.
    """

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms=None):
        if m < 2:
            raise ValueError(f"Gr(2, m) needs m >= 2, got {m}")
        self.m = m
        box = m - 2
        clean: dict[tuple[int, int], int] = {}
        for (a, b), mult in (terms or {}).items():
            if not box >= a >= b >= 0:
                raise ValueError(
                    f"partition ({a}, {b}) outside the 2 x {box} box"
                )
            if mult:
                clean[(a, b)] = int(mult)
        self.terms = clean

    @classmethod
    def zero(cls, m: int) -> "SchubertCombo":
        return cls(m)

    @classmethod
    def sigma(cls, m: int, a: int, b: int = 0) -> "SchubertCombo":
        """The basis class sigma_(a,b)."""
        return cls(m, {(a, b): 1})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SchubertCombo)
            and self.m == other.m
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.m, frozenset(self.terms.items())))

    def _require_same_space(self, other: "SchubertCombo") -> None:
        if self.m != other.m:
            raise ValueError(
                f"cannot combine classes on Gr(2, {self.m}) and Gr(2, {other.m})"
            )

    def __add__(self, other: "SchubertCombo") -> "SchubertCombo":
        if not isinstance(other, SchubertCombo):
            return NotImplemented
        self._require_same_space(other)
        out = dict(self.terms)
        for key, mult in other.terms.items():
            out[key] = out.get(key, 0) + mult
        return SchubertCombo(self.m, out)

    def __sub__(self, other: "SchubertCombo") -> "SchubertCombo":
        if not isinstance(other, SchubertCombo):
            return NotImplemented
        return self + (-1) * other

    def __rmul__(self, scalar: int) -> "SchubertCombo":
        if not isinstance(scalar, int):
            return NotImplemented
        return SchubertCombo(
            self.m, {key: scalar * mult for key, mult in self.terms.items()}
        )

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int | None:
        """Common codimension a + b of all terms, None if mixed or zero."""
        degrees = {a + b for (a, b) in self.terms}
        if len(degrees) != 1:
            return None
        return degrees.pop()

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, b) in sorted(self.terms):
            mult = self.terms[(a, b)]
            body = f"s[{a},{b}]"
            if mult == 1:
                parts.append(body)
            elif mult == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{mult}*{body}")
        return " + ".join(parts)


def pieri_special(c: SchubertCombo, a: int) -> SchubertCombo:
    """Multiply by the special class sigma_a via the two-row Pieri rule.

    Partitions leaving the box are dropped, which is exactly the
    truncation the finite Grassmannian imposes.
    """
    box = c.m - 2
    if a < 0 or a > box:
        raise SpecialClassOutOfBox(
            f"sigma_{a} is not a class on Gr(2, {c.m})"
        )
    out: dict[tuple[int, int], int] = {}
    for (x, y), mult in c.terms.items():
        # interlacing x' >= x >= y' >= y with x' + y' = x + y + a
        lo = max(y, x + y + a - box)
        hi = min(x, y + a)
        for yp in range(lo, hi + 1):
            key = (x + y + a - yp, yp)
            out[key] = out.get(key, 0) + mult
    return SchubertCombo(c.m, out)


def integral(c: SchubertCombo) -> int:
    """Multiplicity of the top class sigma_(m-2, m-2)."""
    box = c.m - 2
    return c.terms.get((box, box), 0)


def tev_p1_schubert(g: int, d: int) -> int:
    """Degree count for the line as an integral over Gr(2, d+1).

    Integrates sigma_1^g times the sum of sigma_a * sigma_b over all
    ordered pairs a + b = 2d - 2 - g, truncated to the box.
    """
    _check_line_domain(g, d)
    m = d + 1
    box = m - 2
    total = SchubertCombo.zero(m)
    weight = 2 * d - 2 - g
    for a in range(max(0, weight - box), min(weight, box) + 1):
        total = total + pieri_special(SchubertCombo.sigma(m, a), weight - a)
    for _ in range(g):
        total = pieri_special(total, 1)
    return integral(total)


def tev_p1_binomial(g: int, d: int) -> int:
    """Closed form for the degree count of the line.

    With l = d - g - 1:

        2^g - 2 * sum_{i=0}^{-l-2} binom(g, i)
            + (-l - 2) * binom(g, -l - 1) + l * binom(g, -l)

    where out-of-range binomials vanish. Equals 2^g iff d >= g + 1.
    """
    _check_line_domain(g, d)
    l = d - g - 1
    correction = -2 * sum(binom(g, i) for i in range(0, -l - 1))
    correction += (-l - 2) * binom(g, -l - 1)
    correction += l * binom(g, -l)
    return 2 ** g + correction


def _check_line_domain(g: int, d: int) -> None:
    if g < 0:
        raise ValueError(f"genus must be >= 0, got {g}")
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    if 2 * d - 2 - g < 0:
        raise DegreeUnderflow(
            f"2d - 2 - g = {2 * d - 2 - g} is negative for (g, d) = ({g}, {d})"
        )
