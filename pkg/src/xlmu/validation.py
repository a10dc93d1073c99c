"""Input validation helpers shared across the package."""

from __future__ import annotations

import numpy as np


def check_positive(name, value, strict=True):
    """Raise ValueError unless ``value`` is a positive (or nonnegative) finite scalar."""
    value = float(value)
    if not np.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value}")
    if strict and value <= 0:
        raise ValueError(f"{name} must be > 0, got {value}")
    if not strict and value < 0:
        raise ValueError(f"{name} must be >= 0, got {value}")
    return value


def check_int(name, value, minimum=None):
    value = int(value)
    if minimum is not None and value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return value


def check_rng(rng):
    """Accept a numpy Generator or a seed, return a Generator."""
    if isinstance(rng, np.random.Generator):
        return rng
    if isinstance(rng, (int, np.integer, np.random.SeedSequence)):
        return np.random.default_rng(rng)
    raise TypeError(f"expected numpy Generator or integer seed, got {type(rng).__name__}")


def check_complex_array(name, arr, shape=None, ndim=None):
    """Coerce to a complex ndarray and check shape/ndim/finiteness."""
    arr = np.asarray(arr)
    if not np.iscomplexobj(arr):
        arr = arr.astype(np.complex128)
    if ndim is not None and arr.ndim != ndim:
        raise ValueError(f"{name} must have ndim={ndim}, got {arr.ndim}")
    if shape is not None and arr.shape != tuple(shape):
        raise ValueError(f"{name} must have shape {tuple(shape)}, got {arr.shape}")
    if not np.all(np.isfinite(arr.view(np.float64) if arr.dtype == np.complex128 else np.abs(arr))):
        raise ValueError(f"{name} contains non-finite entries")
    return arr


def check_index_set(name, indices, n):
    """Validate a 1-based antenna index set against array size ``n``."""
    idx = np.asarray(sorted(indices), dtype=np.int64)
    if idx.size == 0:
        raise ValueError(f"{name} must be non-empty")
    if idx.min() < 1 or idx.max() > n:
        raise ValueError(f"{name} has out-of-range indices (valid range 1..{n})")
    if np.unique(idx).size != idx.size:
        raise ValueError(f"{name} has duplicate indices")
    return idx
