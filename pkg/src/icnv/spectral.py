"""Fourier transforms and per-frequency channel algebra.

Conventions: the forward transform is unnormalized,
``X_k = sum_n x_n exp(-2i pi k n / M)``, and the inverse carries the 1/M
factor, matching numpy.  Signal spectra are complex arrays of shape
``(C, M)`` or ``(C, Mh, Mw)``; kernel spectra carry a channel matrix per
frequency, ``(C_out, C_in, M)`` or ``(C_out, C_in, Mh, Mw)``.

Single-precision inputs stay in single precision throughout (float32 in,
complex64 out, and back).
"""

from __future__ import annotations

import numpy as np

from .errors import NotRealError, ShapeError, SingularFrequencyError

# Imaginary-residue tolerances for the inverse transform, by complex dtype.
_REAL_TOL = {np.dtype(np.complex64): 1e-3, np.dtype(np.complex128): 1e-8}


def dft_forward(x) -> np.ndarray:
    """DFT along the last axis."""
    x = np.asarray(x)
    if x.shape[-1] < 2:
        raise ShapeError("transform needs a period of at least 2")
    return np.fft.fft(x, axis=-1)


def dft_inverse(spectrum, tol=None) -> np.ndarray:
    """Inverse DFT along the last axis, checked to be real.

    Raises NotRealError when the imaginary residue exceeds
    ``tol * max(1, max|result|)``; tol defaults by precision.
    """
    spectrum = np.asarray(spectrum)
    z = np.fft.ifft(spectrum, axis=-1)
    return _check_real(z, tol)


def dft2_forward(x) -> np.ndarray:
    """DFT over the last two axes (1D transform per axis, order immaterial)."""
    x = np.asarray(x)
    if x.ndim < 2 or min(x.shape[-2:]) < 2:
        raise ShapeError("2D transform needs two axes of length >= 2")
    return np.fft.fft2(x, axes=(-2, -1))


def dft2_inverse(spectrum, tol=None) -> np.ndarray:
    """Inverse 2D DFT over the last two axes, checked to be real."""
    z = np.fft.ifft2(np.asarray(spectrum), axes=(-2, -1))
    return _check_real(z, tol)


def _check_real(z, tol):
    if tol is None:
        tol = _REAL_TOL.get(z.dtype, 1e-8)
    residue = float(np.max(np.abs(z.imag))) if z.size else 0.0
    scale = max(1.0, float(np.max(np.abs(z.real)))) if z.size else 1.0
    if residue > tol * scale:
        raise NotRealError(
            f"imaginary residue {residue:.3e} exceeds {tol:.1e} * {scale:.3e}"
        )
    return np.ascontiguousarray(z.real)


def spectrum_multiply(kernel_spectrum, signal_spectrum) -> np.ndarray:
    """Per-frequency matrix-vector product over channels, Y(k) = W(k) X(k)."""
    w = np.asarray(kernel_spectrum)
    x = np.asarray(signal_spectrum)
    if w.ndim != x.ndim + 1 or w.ndim not in (3, 4):
        raise ShapeError(
            f"expected kernel (C_out, C_in, *freq) with signal (C_in, *freq); "
            f"got {w.shape} and {x.shape}"
        )
    if w.shape[1] != x.shape[0] or w.shape[2:] != x.shape[1:]:
        raise ShapeError(f"kernel {w.shape} does not match signal {x.shape}")
    sub = "oik,ik->ok" if w.ndim == 3 else "oikl,ikl->okl"
    return np.einsum(sub, w, x)


def singular_value_ratios(kernel_spectrum) -> np.ndarray:
    """Per-frequency sigma_min/sigma_max of the channel matrices.

    Returns shape ``kernel_spectrum.shape[2:]``; an all-zero matrix
    (structural zero) reports ratio 0.
    """
    w = np.asarray(kernel_spectrum)
    if w.ndim not in (3, 4):
        raise ShapeError(f"expected (C_out, C_in, *freq), got {w.shape}")
    mats = np.moveaxis(w, (0, 1), (-2, -1))
    s = np.linalg.svd(mats, compute_uv=False)  # sorted descending
    smax = s[..., 0]
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(smax > 0, s[..., -1] / np.where(smax > 0, smax, 1), 0.0)
    return ratio


def as_skip_mask(skip, freq_shape) -> np.ndarray:
    """Normalize a skip specification to a boolean mask over frequencies.

    1D: an iterable of indices or a length-M boolean mask.  2D: either a
    boolean (Mh, Mw) mask or a pair of per-axis index sets, interpreted as
    the union of the axis-aligned frequency lines.
    """
    mask = np.zeros(freq_shape, dtype=bool)
    if skip is None:
        return mask
    if isinstance(skip, np.ndarray) and skip.dtype == bool:
        if skip.shape != freq_shape:
            raise ShapeError(f"skip mask {skip.shape} != frequency grid {freq_shape}")
        return skip
    if len(freq_shape) == 1:
        mask[list(skip)] = True
        return mask
    sets = tuple(skip)
    if len(sets) != 2:
        raise ShapeError("2D skip must be a pair of per-axis frequency sets")
    mask[list(sets[0]), :] = True
    mask[:, list(sets[1])] = True
    return mask


def spectrum_matrix_inverse(kernel_spectrum, skip=None, tol_sing: float = 1e-10):
    """Invert each per-frequency channel matrix outside the skip set.

    Skipped frequencies get a zero matrix (the caller knows the matching
    signal coefficients vanish).  A non-skip frequency whose singular-value
    ratio falls below ``tol_sing`` raises SingularFrequencyError.
    """
    w = np.asarray(kernel_spectrum)
    if w.ndim not in (3, 4):
        raise ShapeError(f"expected (C_out, C_in, *freq), got {w.shape}")
    if w.shape[0] != w.shape[1]:
        raise ShapeError(
            f"per-frequency matrices must be square, got {w.shape[0]}x{w.shape[1]}"
        )
    freq_shape = w.shape[2:]
    mask = as_skip_mask(skip, freq_shape)
    ratio = singular_value_ratios(w)
    bad = ~mask & (ratio < tol_sing)
    if np.any(bad):
        idx = tuple(int(i) for i in np.argwhere(bad)[0])
        freq = idx[0] if len(idx) == 1 else idx
        raise SingularFrequencyError(freq, float(ratio[idx]), tol_sing)
    mats = np.moveaxis(w, (0, 1), (-2, -1))
    out = np.zeros_like(mats)
    keep = ~mask
    out[keep] = np.linalg.inv(mats[keep])
    return np.moveaxis(out, (-2, -1), (0, 1))
