"""Exception types shared across the package.

Every error raised by library code derives from CoglError so callers (and the
CLI) can separate domain failures from programming mistakes. Scalar-argument
domain violations (an interpolation parameter outside [0, 1], an empty weight
list) raise plain ValueError instead: those are caller bugs, not data states.
"""


class CoglError(Exception):
    """Base class for all domain errors raised by this package."""


class DimensionMismatch(CoglError):
    """Vector or matrix dimensions disagree with each other or with the spec."""


class DegenerateWeights(CoglError):
    """Sum of squared weights is at or below beta_min; the combination carries
    no sample information and the correction transform is undefined."""


class RankDeficient(CoglError):
    """Input latents are linearly dependent; no full-rank basis exists."""


class NotInSubspace(CoglError):
    """A vector claimed to lie in the spanned subspace fails the residual
    tolerance; project it first."""


class DegenerateCentroid(CoglError):
    """A centroid baseline hit an undefined case: constant mean vector for the
    standardized form, zero norm or dimension < 3 for the mode-norm form."""


class SpecConfigError(CoglError):
    """A distribution config failed validation; message carries the field path."""


class LatentFileError(CoglError):
    """Base class for latent-file parsing and writing failures."""


class BadMagic(LatentFileError):
    """File does not start with the expected magic bytes."""


class BadVersion(LatentFileError):
    """Unsupported format version."""


class BadDtype(LatentFileError):
    """Dtype byte is not one of the supported encodings."""


class PayloadSizeMismatch(LatentFileError):
    """Payload length does not equal count * dim * itemsize."""
