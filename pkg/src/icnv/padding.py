"""Symmetric and anti-symmetric boundary extensions of finite signals.

A base signal ``x`` of length ``N`` is extended to one full period ``p`` of
length ``M`` whose first ``N`` entries are the base samples (canonical
phase).  Five extension modes are supported::

    HS  [x0 .. x_{N-1}, x_{N-1} .. x0]            M = 2N    p[n] =  p[-1-n]
    WS  [x0 .. x_{N-1}, x_{N-2} .. x1]            M = 2N-2  p[n] =  p[-n]
    HA  [x0 .. x_{N-1}, -x_{N-1} .. -x0]          M = 2N    p[n] = -p[-1-n]
    WA  [x0 .. x_{N-1}, 0, -x_{N-1} .. -x0, 0]    M = 2N+2  p[N+j] = -p[N-j]
    ZS  [x0 .. x_{N-1}, e, x_{N-1} .. x0, o]      M = 2N+2  p[N+j] =  p[N-j]

(indices mod M).  ZS places the two extra samples ``e = -2*sum(x[0::2])``
and ``o = -2*sum(x[1::2])`` so the full period has zero sum and zero
alternating sum, i.e. its DFT vanishes at frequencies 0 and M/2.  ZS
requires an even base length, and every mode requires N >= 2.

All functions operate on the last axis (last two axes for the 2D variants),
so multi-channel ``(C, N)`` or ``(C, H, W)`` arrays pad channel-wise.
"""

from __future__ import annotations

import enum

import numpy as np

from .errors import OddLengthError, ShapeError


class PadMode(enum.Enum):
    """The five boundary-extension modes."""

    HS = "hs"
    WS = "ws"
    HA = "ha"
    WA = "wa"
    ZS = "zs"

    def __str__(self):
        return self.value

    @classmethod
    def coerce(cls, value) -> "PadMode":
        """Accept a PadMode or its lowercase token ("hs", ..., "zs")."""
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ShapeError(f"unknown padding mode {value!r}") from None


def parse_mode_token(token) -> tuple[PadMode, ...]:
    """Parse "ws" into (WS,) and "wa,ws" into (WA, WS)."""
    parts = str(token).split(",")
    if len(parts) not in (1, 2):
        raise ShapeError(f"mode token {token!r} must name one or two axes")
    return tuple(PadMode.coerce(p.strip()) for p in parts)


def padded_length(mode, n: int) -> int:
    """Full period length M for a base of length n under the given mode."""
    mode = PadMode.coerce(mode)
    n = int(n)
    if n < 2:
        raise ShapeError(f"base length must be at least 2, got {n}")
    if mode is PadMode.ZS and n % 2:
        raise OddLengthError(f"zs padding needs an even base length, got {n}")
    if mode in (PadMode.HS, PadMode.HA):
        return 2 * n
    if mode is PadMode.WS:
        return 2 * n - 2
    return 2 * n + 2  # WA, ZS


def base_length(mode, m: int) -> int:
    """Base length N recovered from a period length M (inverse of padded_length)."""
    mode = PadMode.coerce(mode)
    m = int(m)
    if m % 2:
        raise ShapeError(f"padded period must be even, got {m}")
    if mode in (PadMode.HS, PadMode.HA):
        n = m // 2
    elif mode is PadMode.WS:
        n = m // 2 + 1
    else:
        n = m // 2 - 1
    if n < 2:
        raise ShapeError(f"period {m} is too short for mode {mode}")
    if mode is PadMode.ZS and n % 2:
        raise OddLengthError(f"period {m} implies an odd zs base length {n}")
    return n


def pad_1d(x, mode) -> np.ndarray:
    """Extend the last axis of ``x`` to one full period in the given mode."""
    mode = PadMode.coerce(mode)
    x = np.asarray(x)
    n = x.shape[-1]
    padded_length(mode, n)  # validates n
    rev = x[..., ::-1]
    if mode is PadMode.HS:
        return np.concatenate([x, rev], axis=-1)
    if mode is PadMode.WS:
        return np.concatenate([x, x[..., -2:0:-1]], axis=-1)
    if mode is PadMode.HA:
        return np.concatenate([x, -rev], axis=-1)
    zero = np.zeros_like(x[..., :1])
    if mode is PadMode.WA:
        return np.concatenate([x, zero, -rev, zero], axis=-1)
    e_even = -2.0 * x[..., 0::2].sum(axis=-1, keepdims=True)
    e_odd = -2.0 * x[..., 1::2].sum(axis=-1, keepdims=True)
    return np.concatenate([x, e_even, rev, e_odd], axis=-1)


def unpad_1d(p, mode) -> np.ndarray:
    """Extract the base window (indices 0..N-1) from a full period."""
    mode = PadMode.coerce(mode)
    p = np.asarray(p)
    return p[..., : base_length(mode, p.shape[-1])]


def verify_mode(p, mode, base_len=None, tol: float = 0.0) -> bool:
    """Check that a full period conforms to a mode's canonical layout.

    Reconstructs the period from its base window and compares:
    true iff ``max|p - pad_1d(p[..., :N], mode)| <= tol``.
    """
    mode = PadMode.coerce(mode)
    p = np.asarray(p)
    m = p.shape[-1]
    try:
        n = base_length(mode, m)
    except (ShapeError, OddLengthError):
        return False
    if base_len is not None and int(base_len) != n:
        raise ShapeError(
            f"period {m} in mode {mode} implies base length {n}, not {base_len}"
        )
    return bool(np.max(np.abs(p - pad_1d(p[..., :n], mode))) <= tol)


def prior_zero_frequencies(mode, m: int) -> frozenset[int]:
    """Frequencies in {0, M/2} where every mode-conforming period's DFT vanishes."""
    mode = PadMode.coerce(mode)
    m = int(m)
    if m % 2:
        raise ShapeError(f"padded period must be even, got {m}")
    if mode is PadMode.WS:
        return frozenset()
    if mode is PadMode.HS:
        return frozenset({m // 2})
    if mode is PadMode.HA:
        return frozenset({0})
    return frozenset({0, m // 2})  # WA, ZS


def _pad_axis(x, mode, axis):
    x = np.moveaxis(np.asarray(x), axis, -1)
    return np.moveaxis(pad_1d(x, mode), -1, axis)


def pad_2d(x, mode_h, mode_w) -> np.ndarray:
    """Pad the last two axes; equals per-axis pad_1d in either axis order."""
    return _pad_axis(_pad_axis(x, mode_h, -2), mode_w, -1)


def unpad_2d(p, mode_h, mode_w) -> np.ndarray:
    """Extract the 2D base window from a padded 2D period."""
    p = np.asarray(p)
    nh = base_length(mode_h, p.shape[-2])
    nw = base_length(mode_w, p.shape[-1])
    return p[..., :nh, :nw]
