"""Exception taxonomy for the Tevelev degree library.

The CLI maps these onto structured error records and process exit
codes: target-description problems exit 2, well-posedness failures
exit 3, and formula-domain or hypothesis failures exit 4.
"""

from __future__ import annotations

__all__ = [
    "TevError",
    "TargetParseError",
    "InvalidTarget",
    "WellPosednessError",
    "NonFano",
    "NonIntegerN",
    "NegativeN",
    "UnstableRange",
    "WrongTargetKind",
    "HypothesisViolation",
    "NegativeExponent",
    "NoKnownFormula",
    "MismatchedRank",
    "SpecialClassOutOfBox",
    "DegreeUnderflow",
    "NoSolution",
]


class TevError(Exception):
    """Base class for every domain error raised by this package."""

    @property
    def kind(self) -> str:
        """Stable machine-readable tag (the class name)."""
        return type(self).__name__


class TargetParseError(TevError):
    """The target description string does not match the grammar."""


class InvalidTarget(TevError):
    """A well-formed description that names an unsupported target."""


class WellPosednessError(TevError):
    """The (target, genus, degree) triple admits no well-posed count."""


class NonFano(WellPosednessError):
    """The anticanonical degree of the target is not positive."""


class NonIntegerN(WellPosednessError):
    """The derived marking count is not an integer."""


class NegativeN(WellPosednessError):
    """The derived marking count is negative."""


class UnstableRange(WellPosednessError):
    """2g - 2 + n <= 0, outside the stable range."""


class WrongTargetKind(TevError):
    """A formula was applied to a target kind it does not cover."""


class HypothesisViolation(TevError):
    """An explicit hypothesis of the requested computation fails."""


class NegativeExponent(TevError):
    """The hypersurface product formula would need a negative exponent."""


class NoKnownFormula(TevError):
    """No closed form is implemented for this target kind."""


class MismatchedRank(TevError):
    """Quantum ring elements live over different projective spaces."""


class SpecialClassOutOfBox(TevError):
    """A special Schubert class index exceeds the ambient box."""


class DegreeUnderflow(TevError):
    """The requested Schubert-side degree 2d - 2 - g is negative."""


class NoSolution(TevError):
    """A bounded search was exhausted without finding a solution."""
