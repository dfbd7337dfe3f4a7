"""Exception types shared across the toolkit.

Every error raised on a contract violation derives from TtdfError so callers
can catch the whole family at an API boundary (the CLI maps them to exit 1).
"""


class TtdfError(Exception):
    """Base class for all toolkit errors."""


class DuplicateNode(TtdfError):
    """Two interpolation nodes (or share identities) coincide."""


class BoundViolation(TtdfError):
    """A cleared Lagrange coefficient broke its integrality or size bound."""


class ModulusMismatch(TtdfError):
    """Mixed moduli in a single modular computation."""


class BadThreshold(TtdfError):
    """Threshold t outside 2 <= t <= n, or n too large for the modulus."""


class ZeroIdentity(TtdfError):
    """Identity 0 requested; 0 is reserved for the secret itself."""


class WrongCount(TtdfError):
    """A share list has the wrong length for the configured threshold."""


class IdentityOutOfRange(TtdfError):
    """Identity outside the scheme's identity space."""


class TargetCollision(TtdfError):
    """Derivation target collides with an existing interpolation node."""


class OutTooWide(TtdfError):
    """Requested hash output is wider than its input."""


class LengthMismatch(TtdfError):
    """A bit string or vector has the wrong length."""


class InsufficientEntropy(TtdfError):
    """Not enough residual entropy to extract the requested width."""


class ParamsMismatch(TtdfError):
    """Group elements from different groups were combined."""


class NotInGroup(TtdfError):
    """Deserialized value failed the subgroup membership check."""


class NotInImage(TtdfError):
    """Combination input is not a valid image of the function."""


class InconsistentParams(TtdfError):
    """Parameter set fails one of its defining inequalities."""


class ScaleMismatch(TtdfError):
    """A scaled share was passed where a unit-scale share is required."""


class RevokedKey(TtdfError):
    """A revoked key attempted decryption."""


class ReservedIdentity(TtdfError):
    """Identity is reserved for revocation padding and cannot be issued."""


class DeserializeError(TtdfError):
    """Malformed serialized artifact."""


class BindFailure(TtdfError):
    """Share server could not bind its listen address."""


class InsufficientShares(TtdfError):
    """Fewer than t usable decryption shares were collected."""
