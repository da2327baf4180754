"""Exception types shared across the package."""


class GeometryError(Exception):
    """Base class for all geometric/numerical errors raised by this package."""


class NotASubspaceBasis(GeometryError):
    """Matrix columns do not span a subspace of the expected dimension."""


class NotIsotropic(GeometryError):
    """Subspace is not isotropic for the symplectic form."""


class NotTransverse(GeometryError):
    """Two subspaces fail to be transverse."""


class NotPositiveDefinite(GeometryError):
    """A matrix required to be positive definite is not."""


class DegenerateRestriction(GeometryError):
    """Restricted bilinear form has (numerically) zero eigenvalues."""


class DegenerateDifference(GeometryError):
    """Difference of chart matrices is singular."""


class NonPositiveLine(GeometryError):
    """Line is not positive for the relevant bilinear form."""


class NotInInterval(GeometryError):
    """Lagrangian does not lie in the required interval."""


class InvalidSchottkyData(GeometryError):
    """Schottky input data fails its defining conditions."""


class UnsupportedFlavor(GeometryError):
    """Operation requires the disjoint-closures flavor."""


class ContractionViolation(GeometryError):
    """Observed contraction ratio is not below one."""


class InvalidDomainData(GeometryError):
    """Halfspace values are inconsistent with pairwise disjointness."""


class CapacityError(GeometryError):
    """Requested enumeration exceeds the configured word budget."""


class SpecError(Exception):
    """Spec/scene file cannot be parsed or fails validation."""
