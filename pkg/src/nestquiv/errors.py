"""Exception types shared across the package.

Every error raised by a public operation is one of these, so callers can
distinguish bad input (shape, domain) from genuine mathematical failure
(singularity, broken relations) without string matching.
"""


class NestquivError(Exception):
    """Base class for all package errors."""


class ShapeMismatch(NestquivError):
    """Matrix dimensions incompatible with the requested operation."""


class Singular(NestquivError):
    """A square matrix required to be invertible is not."""


class NotCommuting(NestquivError):
    """A pair of endomorphisms required to commute does not."""


class ConeViolation(NestquivError):
    """Stability parameter outside the required open cone."""


class NotWellDefined(NestquivError):
    """An induced map does not exist (subspace not preserved)."""


class NotFixedForm(NestquivError):
    """Input is not in torus-fixed form (some column has > 1 nonzero entry)."""


class IrregularPencil(NestquivError):
    """Every sampled chart gives a singular pencil combination."""


class SingularAnu(NestquivError):
    """The pencil combination at the requested chart is singular."""


class RelationsViolated(NestquivError):
    """Quiver relations fail where the operation needs them."""


class NotCostable(NestquivError):
    """ADHM datum is not costable (closure of the covector is too small)."""


class NotIntertwining(NestquivError):
    """A map fails to intertwine the structures it should relate."""


class NotInjective(NestquivError):
    """A map required to be injective has a kernel."""


class NotAnIdeal(NestquivError):
    """A span of polynomials is not closed under multiplication."""


class IllConditioned(NestquivError):
    """Floating-point clustering is ambiguous at the requested tolerance."""


class BadPair(NestquivError):
    """A nested ideal pair violates containment or colength bookkeeping."""


class ChartUnavailable(NestquivError):
    """No sampled chart is regular for the requested object."""


class NotStable(NestquivError):
    """Operation requires a stable representation."""


class ExcludedLocus(NestquivError):
    """Point coordinates lie on the excluded locus of the surface."""


class DomainError(NestquivError):
    """Input outside the supported domain (e.g. nested pair with c' = 0)."""
