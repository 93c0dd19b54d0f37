"""Error-free transforms and compensated reductions."""

import math

import numpy as np


def two_sum(a, b):
    """Knuth's TwoSum: returns (s, e) with s = fl(a + b) and a + b = s + e exactly."""
    s = a + b
    bb = s - a
    e = (a - (s - bb)) + (b - bb)
    return s, e


def csum(values, axis=-1):
    """Compensated sum along ``axis``.

    Pairwise reduction where every addition goes through ``two_sum``; the
    rounding errors are accumulated separately and added back at the end.
    Works for real and complex arrays (complex TwoSum is exact per component).
    """
    x = np.moveaxis(np.asarray(values), axis, -1)
    if x.shape[-1] == 0:
        return np.zeros(x.shape[:-1], dtype=x.dtype if x.dtype.kind == "c" else float)
    err = np.zeros(x.shape[:-1], dtype=x.dtype)
    while x.shape[-1] > 1:
        n = x.shape[-1]
        if n % 2:
            pad = np.zeros(x.shape[:-1] + (1,), dtype=x.dtype)
            x = np.concatenate([x, pad], axis=-1)
        s, e = two_sum(x[..., 0::2], x[..., 1::2])
        err = err + np.sum(e, axis=-1)
        x = s
    return x[..., 0] + err


def fsum_complex(values):
    """Correctly rounded sum of a 1-D iterable of complex numbers."""
    vals = list(values)
    return complex(math.fsum(v.real for v in vals), math.fsum(v.imag for v in vals))
