"""Signless Laplacian matrices, spectral radii, quotient matrices, and the
threshold functions of the perfect-matching condition.

Matrices are plain numpy arrays.  A partition of matrix indices is an ordered
sequence of disjoint, nonempty index collections covering 0..order-1.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import InputError, NumericalError
from .graph import Graph

DEFAULT_TOL = 1e-10

_MAX_SQUARINGS = 60
_POLISH_ITERATIONS = 200


def signless_laplacian(G: Graph) -> np.ndarray:
    """Degree-diagonal plus adjacency matrix of G (symmetric, nonnegative)."""
    n = G.n
    Q = np.zeros((n, n))
    for v in range(n):
        nbrs = G.neighbors(v)
        Q[v, nbrs] = 1.0
        Q[v, v] = len(nbrs)
    return Q


def _validate_nonnegative_square(M: np.ndarray) -> np.ndarray:
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise InputError(f"expected a square matrix, got shape {M.shape}")
    if M.shape[0] == 0:
        raise InputError("matrix order must be at least 1")
    if not np.all(np.isfinite(M)):
        raise InputError("matrix entries must be finite")
    if M.min() < 0:
        raise InputError("matrix entries must be nonnegative")
    return M


def spectral_radius(M: np.ndarray, tol: float = DEFAULT_TOL) -> float:
    """Largest eigenvalue of a nonnegative square matrix.

    Power method with a fixed positive start vector, accelerated by repeated
    squaring of the iteration matrix; the result is certified by the residual
    ||Mx - lam*x||_inf <= tol * max(1, lam).  If certification fails the full
    dense eigensolver is used instead.
    """
    if tol <= 0:
        raise InputError("tolerance must be positive")
    M = _validate_nonnegative_square(M)
    n = M.shape[0]
    if n == 1:
        return float(M[0, 0])
    scale = float(M.max())
    if scale == 0.0:
        return 0.0

    P = M / scale
    prev = None
    for _ in range(_MAX_SQUARINGS):
        P = P @ P
        top = float(np.abs(P).max())
        if top == 0.0 or not math.isfinite(top):
            break
        P = P / top
        if prev is not None and float(np.abs(P - prev).max()) <= 1e-15:
            break
        prev = P

    # positive start vector cannot be orthogonal to the Perron direction
    start = np.ones(n) + np.linspace(0.0, 1e-8, n)
    x = P @ start
    norm = float(np.linalg.norm(x))
    x = start / float(np.linalg.norm(start)) if norm == 0.0 else x / norm

    lam = 0.0
    for _ in range(_POLISH_ITERATIONS):
        y = M @ x
        lam = float(x @ y)
        if float(np.abs(y - lam * x).max()) <= tol * max(1.0, abs(lam)):
            return lam
        ny = float(np.linalg.norm(y))
        if ny == 0.0:
            return 0.0
        x = y / ny

    # certification failed (tiny spectral gap or an oscillating direction)
    if float(np.abs(M - M.T).max()) <= 1e-12 * max(1.0, scale):
        return float(np.linalg.eigvalsh(M)[-1])
    return float(np.linalg.eigvals(M).real.max())


def q1(G: Graph, tol: float = DEFAULT_TOL) -> float:
    """Signless Laplacian spectral radius of G."""
    return spectral_radius(signless_laplacian(G), tol)


def check_partition(classes: Sequence[Sequence[int]], order: int) -> list[list[int]]:
    """Validate that `classes` partitions 0..order-1; returns them as lists."""
    seen: set[int] = set()
    out = []
    for cls in classes:
        members = list(cls)
        if not members:
            raise InputError("partition classes must be nonempty")
        for idx in members:
            if not (isinstance(idx, (int, np.integer)) and 0 <= idx < order):
                raise InputError(f"index {idx!r} outside 0..{order - 1}")
            if idx in seen:
                raise InputError(f"index {idx} appears in two classes")
            seen.add(idx)
        out.append(members)
    if len(seen) != order:
        raise InputError("partition does not cover all indices")
    return out


def _indicator(classes: list[list[int]], order: int) -> np.ndarray:
    Z = np.zeros((order, len(classes)))
    for j, members in enumerate(classes):
        Z[members, j] = 1.0
    return Z


def quotient_matrix(M: np.ndarray, partition: Sequence[Sequence[int]]) -> np.ndarray:
    """Matrix of average block row sums of M under the partition."""
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise InputError(f"expected a square matrix, got shape {M.shape}")
    classes = check_partition(partition, M.shape[0])
    Z = _indicator(classes, M.shape[0])
    sizes = Z.sum(axis=0)
    return (Z.T @ M @ Z) / sizes[:, None]


def is_equitable(
    M: np.ndarray, partition: Sequence[Sequence[int]], tol: float = 1e-9
) -> bool:
    """True iff every block of M has constant row sums under the partition.

    Integer-valued matrices are compared exactly; otherwise within `tol`.
    """
    M = np.asarray(M, dtype=float)
    classes = check_partition(partition, M.shape[0])
    Z = _indicator(classes, M.shape[0])
    block_row_sums = M @ Z  # row v, column c: sum of M[v, u] over u in class c
    exact = bool(np.all(M == np.rint(M)))
    for members in classes:
        spread = np.ptp(block_row_sums[members], axis=0)
        if exact:
            if np.any(spread != 0.0):
                return False
        elif np.any(spread > tol):
            return False
    return True


def _polyval(coeffs: np.ndarray, x: float) -> float:
    acc = 0.0
    for c in coeffs:
        acc = acc * x + c
    return acc


def largest_real_root(coefficients: Sequence[float], tol: float = 1e-12) -> float:
    """Largest real root of a polynomial (coefficients highest degree first).

    Located via the companion matrix, then polished with Newton steps.
    """
    coeffs = np.asarray(coefficients, dtype=float).ravel()
    nz = np.flatnonzero(coeffs)
    if nz.size == 0:
        raise InputError("the zero polynomial has no well-defined roots")
    coeffs = coeffs[nz[0]:]
    if coeffs.size == 1:
        raise NumericalError("a nonzero constant has no real root")
    if coeffs.size == 2:
        return float(-coeffs[1] / coeffs[0])

    deriv = coeffs[:-1] * np.arange(len(coeffs) - 1, 0, -1)
    candidates = sorted(np.roots(coeffs), key=lambda z: z.real, reverse=True)
    for z in candidates:
        if abs(z.imag) > 1e-6 * max(1.0, abs(z)):
            continue
        x = float(z.real)
        for _ in range(100):
            fx = _polyval(coeffs, x)
            dfx = _polyval(deriv, x)
            if dfx == 0.0:
                break
            step = fx / dfx
            x -= step
            if abs(step) <= tol * max(1.0, abs(x)):
                break
        if abs(x - z.real) > 0.05 * max(1.0, abs(z.real)):
            x = float(z.real)  # Newton wandered off; keep the companion root
        return x
    raise NumericalError("no real root found")


def _matching_threshold_cubic(n: int) -> list[float]:
    return [1.0, -(3 * n - 7), n * (2 * n - 7), -2 * (n * n - 7 * n + 12)]


def _require_even_order(n, minimum: int = 4) -> int:
    if not isinstance(n, (int, np.integer)):
        raise InputError(f"order must be an integer, got {n!r}")
    n = int(n)
    if n < minimum or n % 2:
        raise InputError(f"order must be an even integer >= {minimum}, got {n}")
    return n


@lru_cache(maxsize=None)
def r_of_n(n: int) -> float:
    """Largest root of x^3 - (3n-7)x^2 + n(2n-7)x - 2(n^2-7n+12)."""
    n = _require_even_order(n)
    return largest_real_root(_matching_threshold_cubic(n))


def closed_form_r(n: int) -> float:
    """The same largest root, evaluated in closed form via complex cube roots.

    The cubic has three real roots, so the radical form necessarily passes
    through complex arithmetic (casus irreducibilis); the imaginary parts must
    cancel to within 1e-6 or a NumericalError is raised.
    """
    n = _require_even_order(n)
    half_q_scale = 9 * n * n - 63 * n + 38  # 27x the depressed cubic's q
    neg_p_scale = 3 * n * n - 21 * n + 49  # -3x the depressed cubic's p
    disc = half_q_scale * half_q_scale - 4 * neg_p_scale**3  # exact integer
    if disc % 27:
        raise NumericalError("discriminant lost integrality")
    disc //= 27
    w = complex(-half_q_scale) + 3.0 * math.sqrt(3.0) * cmath.sqrt(complex(disc))
    croot = w ** (1.0 / 3.0)  # principal branch
    value = (
        n
        + 2.0 ** (2.0 / 3.0) * croot / 6.0
        + 2.0 ** (1.0 / 3.0) * neg_p_scale / (3.0 * croot)
        - 7.0 / 3.0
    )
    if abs(value.imag) > 1e-6:
        raise NumericalError(
            f"imaginary residue {value.imag:.3e} exceeds 1e-6 at n={n}"
        )
    return float(value.real)


@lru_cache(maxsize=None)
def q1_threshold(n: int) -> float:
    """Spectral-radius threshold above which a perfect matching is guaranteed."""
    n = _require_even_order(n)
    if n == 6:
        return 4.0 + 2.0 * math.sqrt(3.0)
    if n == 8:
        return 6.0 + 2.0 * math.sqrt(6.0)
    return r_of_n(n)


@lru_cache(maxsize=None)
def edge_threshold(n: int) -> int:
    """Edge-count threshold above which a perfect matching is guaranteed."""
    n = _require_even_order(n)
    if n == 6:
        return 9
    if n == 8:
        return 18
    return (n * n - 5 * n + 10) // 2
