"""Exception types shared across the package."""


class OrderViolation(Exception):
    """sigma**3 or alpha**2 is not the identity (or the arrays are not permutations)."""


class NotTransitive(Exception):
    """<sigma, alpha> does not act transitively on the edge set."""


class ResourceBound(Exception):
    """Requested computation exceeds the supported exhaustive-search range."""


class DegenerateSubstitution(Exception):
    """A substitution emptied or disconnected the dessin."""


class DomainError(Exception):
    """Argument outside the mathematical domain of the operation."""


class OutOfRange(Exception):
    """Record outside the K3 range (genus > 0 or torsion-free index > 24)."""


class IncompleteCatalog(Exception):
    """A torsion-free class is missing some of its expansion records."""


class ParseError(Exception):
    """Malformed catalog line."""


class ValidationError(Exception):
    """Record fields violate a structural invariant."""
