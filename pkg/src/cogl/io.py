"""Latent container format and distribution config parsing.

The container is a 28-byte little-endian header followed by a raw payload:

    offset  size  field
    0       4     magic "COGL"
    4       2     version, u16 = 1
    6       1     dtype, u8: 1 = float64 LE, 2 = float32 LE
    7       1     flags, u8 = 0
    8       4     reserved, zeros on write, ignored on read
    12      8     dim, u64
    20      8     count, u64
    28      -     payload: count*dim values, latent-major, components ascending

No compression, no checksum. Round-trips at dtype 1 are bit-exact; dtype 2
stores the nearest-even float32 rounding and widens back to float64 on read.

Distribution configs are JSON objects {"dim": int, "mean": number | array,
"cov": {"isotropic": number} | {"diagonal": array}}; validation failures name
the offending field path. Only isotropic and diagonal covariances exist here;
a full matrix is rejected at parse time.
"""

import json
import struct

import numpy as np

from .core import GaussianSpec, as_latent
from .errors import (
    BadDtype,
    BadMagic,
    BadVersion,
    DimensionMismatch,
    LatentFileError,
    PayloadSizeMismatch,
    SpecConfigError,
)

MAGIC = b"COGL"
VERSION = 1
DTYPE_F64 = 1
DTYPE_F32 = 2

_HEADER = struct.Struct("<4sHBB4sQQ")
HEADER_SIZE = _HEADER.size  # 28

_NUMPY_DTYPES = {DTYPE_F64: np.dtype("<f8"), DTYPE_F32: np.dtype("<f4")}


def write_latents(path, latents, dtype: int = DTYPE_F64) -> None:
    """Write latents (uniform dimension) to path at the given dtype code."""
    if dtype not in _NUMPY_DTYPES:
        raise ValueError(f"dtype code must be 1 (float64) or 2 (float32), got {dtype!r}")
    if len(latents) == 0:
        raise ValueError("refusing to write an empty latent file")
    xs = [as_latent(x) for x in latents]
    dim = xs[0].shape[0]
    for x in xs[1:]:
        if x.shape[0] != dim:
            raise DimensionMismatch(f"latent lengths differ: {x.shape[0]} vs {dim}")
    payload = np.stack(xs).astype(_NUMPY_DTYPES[dtype]).tobytes()
    header = _HEADER.pack(MAGIC, VERSION, dtype, 0, b"\x00" * 4, dim, len(xs))
    with open(path, "wb") as f:
        f.write(header)
        f.write(payload)


def read_latents(path) -> list:
    """Read a latent file; returns float64 vectors regardless of stored dtype."""
    with open(path, "rb") as f:
        data = f.read()
    if len(data) < HEADER_SIZE:
        raise LatentFileError(f"file is {len(data)} bytes, shorter than the {HEADER_SIZE}-byte header")
    magic, version, dtype, flags, _reserved, dim, count = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise BadMagic(f"bad magic {magic!r}, expected {MAGIC!r}")
    if version != VERSION:
        raise BadVersion(f"unsupported version {version}, expected {VERSION}")
    if dtype not in _NUMPY_DTYPES:
        raise BadDtype(f"unsupported dtype code {dtype}, expected 1 (float64) or 2 (float32)")
    if flags != 0:
        raise LatentFileError(f"unsupported flags byte {flags:#04x}, expected 0")
    if count > 0 and dim == 0:
        raise LatentFileError("dim is 0 but count is nonzero")
    np_dtype = _NUMPY_DTYPES[dtype]
    expected = count * dim * np_dtype.itemsize  # python ints, no overflow
    actual = len(data) - HEADER_SIZE
    if actual != expected:
        raise PayloadSizeMismatch(
            f"payload is {actual} bytes, header implies {expected} (count={count}, dim={dim}, "
            f"itemsize={np_dtype.itemsize})"
        )
    if count == 0:
        return []
    flat = np.frombuffer(data, dtype=np_dtype, offset=HEADER_SIZE)
    arr = flat.reshape(count, dim).astype(np.float64)
    return [np.ascontiguousarray(row) for row in arr]


def _expect_number(value, path: str, positive: bool = False) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SpecConfigError(f"{path}: must be a number, got {type(value).__name__}")
    v = float(value)
    if not np.isfinite(v):
        raise SpecConfigError(f"{path}: must be finite, got {v}")
    if positive and not v > 0.0:
        raise SpecConfigError(f"{path}: must be positive, got {v}")
    return v


def _expect_number_array(value, path: str, length: int, positive: bool = False) -> np.ndarray:
    if not isinstance(value, list):
        raise SpecConfigError(f"{path}: must be an array of numbers, got {type(value).__name__}")
    if len(value) != length:
        raise SpecConfigError(f"{path}: length {len(value)} does not match dim {length}")
    return np.array([_expect_number(v, f"{path}[{i}]", positive=positive)
                     for i, v in enumerate(value)])


def parse_spec_config(obj) -> GaussianSpec:
    """Validate a decoded config object into a GaussianSpec."""
    if not isinstance(obj, dict):
        raise SpecConfigError(f"config root: must be an object, got {type(obj).__name__}")
    unknown = set(obj) - {"dim", "mean", "cov"}
    if unknown:
        raise SpecConfigError(f"config root: unknown field(s) {sorted(unknown)}")
    for field in ("dim", "mean", "cov"):
        if field not in obj:
            raise SpecConfigError(f"{field}: missing required field")

    dim = obj["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int):
        raise SpecConfigError(f"dim: must be an integer, got {type(dim).__name__}")
    if dim < 1:
        raise SpecConfigError(f"dim: must be >= 1, got {dim}")

    mean = obj["mean"]
    if isinstance(mean, list):
        mean = _expect_number_array(mean, "mean", dim)
    else:
        mean = _expect_number(mean, "mean")

    cov = obj["cov"]
    if not isinstance(cov, dict):
        raise SpecConfigError(
            f"cov: must be an object with exactly one of 'isotropic' or 'diagonal', "
            f"got {type(cov).__name__}"
        )
    keys = set(cov)
    if keys == {"isotropic"}:
        cov_value = _expect_number(cov["isotropic"], "cov.isotropic", positive=True)
    elif keys == {"diagonal"}:
        cov_value = _expect_number_array(cov["diagonal"], "cov.diagonal", dim, positive=True)
    else:
        raise SpecConfigError(
            f"cov: must have exactly one of 'isotropic' or 'diagonal', got {sorted(keys)}"
        )

    return GaussianSpec(dim=dim, mean=mean, cov=cov_value)


def load_spec_config(path) -> GaussianSpec:
    """Parse a JSON config file into a GaussianSpec."""
    try:
        with open(path, "r", encoding="utf-8") as f:
            obj = json.load(f)
    except json.JSONDecodeError as e:
        raise SpecConfigError(f"{path}: not valid JSON ({e})") from None
    return parse_spec_config(obj)
