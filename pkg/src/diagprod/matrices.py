"""Dense complex matrix primitives.

Diagonal products, unitary/special-unitary/special-orthogonal predicates,
the skew-Hermitian generator basis, guaranteed-unitary matrix exponentials,
and seeded Haar sampling of U(n), SU(n) and SO(n).
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "derive_seed",
    "diag_product",
    "is_unitary",
    "is_special_unitary",
    "is_special_orthogonal",
    "generator_x",
    "generator_y",
    "exp_skew_hermitian",
    "haar_unitary",
    "haar_special_unitary",
    "haar_special_orthogonal",
]

_MASK64 = (1 << 64) - 1
_GOLDEN64 = 0x9E3779B97F4A7C15


def derive_seed(seed: int, index: int) -> int:
    """Mix a base seed with a stream index into a fresh 64-bit seed.

    SplitMix64 finalizer.  The map is pure, so substreams may be drawn in any
    order (or concurrently) and still coincide with a serial run.
    """
    x = (int(seed) + (int(index) + 1) * _GOLDEN64) & _MASK64
    x ^= x >> 30
    x = (x * 0xBF58476D1CE4E5B9) & _MASK64
    x ^= x >> 27
    x = (x * 0x94D049BB133111EB) & _MASK64
    return (x ^ (x >> 31)) & _MASK64


def _square(m) -> np.ndarray:
    a = np.asarray(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return a


def _check_tol(tol: float) -> float:
    tol = float(tol)
    if not tol > 0.0:
        raise ValueError("tolerance must be positive")
    return tol


def diag_product(m) -> complex:
    """Product of the diagonal entries of a square matrix."""
    return complex(np.prod(np.diagonal(_square(m))))


def is_unitary(m, tol: float = 1e-10) -> bool:
    """True iff the max-entry norm of  m†m - I  is at most ``tol``."""
    _check_tol(tol)
    a = _square(m).astype(np.complex128, copy=False)
    gram = a.conj().T @ a
    gram[np.diag_indices_from(gram)] -= 1.0
    return bool(np.abs(gram).max() <= tol)


def is_special_unitary(m, tol: float = 1e-10) -> bool:
    """Unitary with determinant 1 within ``tol`` (LU-based determinant)."""
    _check_tol(tol)
    a = _square(m).astype(np.complex128, copy=False)
    if not is_unitary(a, tol):
        return False
    return bool(abs(np.linalg.det(a) - 1.0) <= tol)


def is_special_orthogonal(m, tol: float = 1e-10) -> bool:
    """Real (all imaginary parts within ``tol``) and special unitary."""
    _check_tol(tol)
    a = _square(m)
    if np.abs(np.asarray(a).imag).max() > tol:
        return False
    return is_special_unitary(a, tol)


def _check_pair(n: int, j: int, k: int) -> None:
    if n < 2:
        raise ValueError("generators need n >= 2")
    if not (1 <= j < k <= n):
        raise ValueError(f"indices must satisfy 1 <= j < k <= n, got j={j}, k={k}, n={n}")


def generator_x(n: int, j: int, k: int) -> np.ndarray:
    """Real rotation generator: entry (j,k) is -1 and (k,j) is +1 (1-based)."""
    _check_pair(n, j, k)
    m = np.zeros((n, n), np.complex128)
    m[j - 1, k - 1] = -1.0
    m[k - 1, j - 1] = 1.0
    return m


def generator_y(n: int, j: int, k: int) -> np.ndarray:
    """Imaginary mixing generator: entries (j,k) and (k,j) are both i (1-based)."""
    _check_pair(n, j, k)
    m = np.zeros((n, n), np.complex128)
    m[j - 1, k - 1] = 1.0j
    m[k - 1, j - 1] = 1.0j
    return m


def exp_skew_hermitian(a, tol: float = 1e-10) -> np.ndarray:
    """Matrix exponential of a skew-Hermitian matrix.

    Diagonalizes the Hermitian matrix iA and exponentiates its eigenvalues, so
    the result is unitary up to roundoff.  Rejects input whose max-entry
    deviation from skew-Hermiticity exceeds ``tol``.
    """
    _check_tol(tol)
    m = _square(a).astype(np.complex128, copy=False)
    if np.abs(m + m.conj().T).max() > tol:
        raise ValueError("matrix is not skew-Hermitian within tolerance")
    w, v = np.linalg.eigh(1j * m)
    return (v * np.exp(-1j * w)) @ v.conj().T


def _rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(int(seed) & _MASK64)


def _haar_unitary_batch(n: int, seed: int, count: int, start: int = 0) -> np.ndarray:
    """Stack of ``count`` Haar unitaries; slice ``i`` is seeded by
    ``derive_seed(seed, start + i)`` and equals ``haar_unitary(n, that_seed)``."""
    g = np.empty((count, n, n), np.complex128)
    for i in range(count):
        rng = _rng(derive_seed(seed, start + i))
        g[i] = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    g /= np.sqrt(2.0)
    q, r = np.linalg.qr(g)
    d = np.diagonal(r, axis1=-2, axis2=-1)
    mod = np.abs(d)
    phase = np.where(mod > 0.0, d / np.where(mod > 0.0, mod, 1.0), 1.0)
    return q * phase[:, None, :]


def _haar_special_unitary_batch(n: int, seed: int, count: int, start: int = 0) -> np.ndarray:
    u = _haar_unitary_batch(n, seed, count, start)
    det = np.linalg.det(u)
    u[:, :, 0] /= det[:, None]
    return u


def _haar_special_orthogonal_batch(n: int, seed: int, count: int, start: int = 0) -> np.ndarray:
    g = np.empty((count, n, n), np.float64)
    for i in range(count):
        rng = _rng(derive_seed(seed, start + i))
        g[i] = rng.standard_normal((n, n))
    q, r = np.linalg.qr(g)
    d = np.diagonal(r, axis1=-2, axis2=-1)
    sign = np.where(d < 0.0, -1.0, 1.0)
    q = q * sign[:, None, :]
    det = np.linalg.det(q)
    q[det < 0.0, :, 0] *= -1.0
    return q


def haar_unitary(n: int, seed: int = 0) -> np.ndarray:
    """Haar-distributed U(n) sample: QR of a complex Ginibre matrix with the
    R-diagonal phase normalization.  Deterministic in ``seed``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    # one generator, two draws, matching the batched path exactly
    rng = _rng(seed)
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    g /= np.sqrt(2.0)
    q, r = np.linalg.qr(g)
    d = np.diagonal(r)
    mod = np.abs(d)
    phase = np.where(mod > 0.0, d / np.where(mod > 0.0, mod, 1.0), 1.0)
    return q * phase[None, :]


def haar_special_unitary(n: int, seed: int = 0) -> np.ndarray:
    """Haar SU(n) sample: Haar unitary with column 1 divided by the
    determinant's phase."""
    u = haar_unitary(n, seed)
    u[:, 0] /= np.linalg.det(u)
    return u


def haar_special_orthogonal(n: int, seed: int = 0) -> np.ndarray:
    """Haar SO(n) sample: QR of a real Gaussian matrix with sign
    normalization, column 1 flipped if the determinant is -1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = _rng(seed)
    g = rng.standard_normal((n, n))
    q, r = np.linalg.qr(g)
    d = np.diagonal(r)
    sign = np.where(d < 0.0, -1.0, 1.0)
    q = q * sign[None, :]
    if np.linalg.det(q) < 0.0:
        q[:, 0] *= -1.0
    return q
