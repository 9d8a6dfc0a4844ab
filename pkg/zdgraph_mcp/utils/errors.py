"""Custom exception classes for the zero-divisor graph lab"""


class ZeroDivisorGraphError(Exception):
    """Base exception for the zero-divisor graph lab"""
    pass


class ConfigurationError(ZeroDivisorGraphError):
    """Raised when configuration is invalid or missing"""
    pass


class SyntaxParseError(ZeroDivisorGraphError):
    """Raised when set, model, function or psi text cannot be parsed"""
    pass


class InvalidSetError(ZeroDivisorGraphError):
    """Raised when a set description is malformed"""
    pass


class NotASubsetError(ZeroDivisorGraphError):
    """Raised when a set is not contained in the ground set"""
    pass


class WitnessError(ZeroDivisorGraphError):
    """Raised when a witness cannot be produced because its precondition fails"""
    pass


class InvalidModelError(ZeroDivisorGraphError):
    """Raised when a space model violates its invariants"""
    pass


class EmptyGraphError(ZeroDivisorGraphError):
    """Raised when the zero-divisor graph of a model has no vertices"""
    pass


class NotAVertexError(ZeroDivisorGraphError):
    """Raised when a vertex class is requested for a non-vertex support"""
    pass


class FlavorMismatchError(ZeroDivisorGraphError):
    """Raised when vertex classes from different models or flavors are combined"""
    pass


class RingMembershipError(ZeroDivisorGraphError):
    """Raised when a function is not an element of the model's ring"""
    pass


class UnsupportedModelError(ZeroDivisorGraphError):
    """Raised when an operation is not available for the given model"""
    pass


class CapExceededError(ZeroDivisorGraphError):
    """Raised when a blow-up would exceed its vertex cap"""
    pass


class RegimeMismatchError(ZeroDivisorGraphError):
    """Raised when atom detection finds a graph inconsistent with the claimed regime"""
    pass


class ReconstructionError(ZeroDivisorGraphError):
    """Raised when a ring isomorphism cannot be reconstructed from a graph isomorphism"""
    pass


class DegenerateModelError(ReconstructionError):
    """Raised when a reconstruction input has an empty graph"""
    pass
