"""Exception hierarchy shared by all degmult modules."""


class DegmultError(Exception):
    """Base class for all errors raised by this package."""


class InvalidDiagonal(DegmultError):
    """A degree-matrix main-diagonal entry is not strictly positive."""


class NotMonotone(DegmultError):
    """Degree-matrix entries violate the monotone ordering b_i >= a_i, b_i >= a_{i+1}."""


class CenterTooSmall(DegmultError):
    """The center entry d of a symmetric degree matrix is smaller than a_1."""


class NotArtinian(DegmultError):
    """A monomial staircase lacks a pure power of x or of y."""


class DivisionError(DegmultError):
    """(1-s)^c does not divide the K-polynomial: table and codimension are inconsistent."""


class DivisibilityError(DegmultError):
    """p! does not divide the product of pure shifts: no such pure resolution exists."""


class NotPure(DegmultError):
    """An operation requiring a pure resolution was given a non-pure table."""


class InternalMismatch(DegmultError):
    """Two expressions that are provably equal disagreed; signals an implementation bug."""


class CharacterizationViolated(DegmultError):
    """Sharpness flags and purity disagree; would falsify the sharpness characterization."""


class UnknownTarget(DegmultError):
    """Hunt was asked for a target it does not know."""


class ParseError(DegmultError):
    """Malformed JSON document or command-line value."""
