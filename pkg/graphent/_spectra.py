# ----------------------------------------------------------------------------
# Copyright (c) 2026, the graphent development team.
#
# Distributed under the terms of the Modified BSD License.
#
# The full license is in the file LICENSE, distributed with this software.
# ----------------------------------------------------------------------------

import logging
import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

import numpy as np
from scipy.linalg import LinAlgWarning, lu_factor

from ._errors import (AlphaNonPositiveError, MatrixError,
                      NegativeEigenvalueError, NoConvergenceError,
                      NonSkewError, NonSymmetricError, NumericalError,
                      ParameterError)

logger = logging.getLogger(__name__)

STRUCTURE_TOLERANCE = 1e-12
CONVERGENCE_TOLERANCE = 1e-12
MAX_SWEEPS = 100
# eigenvalues of PSD-by-construction matrices below this are an error,
# between it and zero they are rounding and get clamped
CLAMP_THRESHOLD = -1e-10
# relative to the Frobenius norm; below the solver's absolute accuracy
ZERO_SNAP = 1e-11


class Structure(Enum):
    GENERAL = 'general'
    SYMMETRIC = 'symmetric'
    SKEW = 'skew'


class SpectrumKind(Enum):
    EIGENVALUES = 'eigenvalues'
    SINGULAR_VALUES = 'singular-values'
    ABSOLUTE_EIGENVALUES = 'absolute-eigenvalues'


@dataclass(frozen=True)
class DenseMatrix:
    """Real row-major matrix with an optional exact symmetry flag.

    Symmetric and skew inputs are accepted within ``STRUCTURE_TOLERANCE`` and
    then made exactly (skew-)symmetric.
    """
    entries: np.ndarray
    structure: Structure = Structure.GENERAL

    def __post_init__(self):
        a = np.array(self.entries, dtype=float)
        if a.ndim != 2:
            raise MatrixError(f"Expected a 2-D matrix, got shape {a.shape}.")
        if not np.all(np.isfinite(a)):
            raise MatrixError("Matrix entries must be finite.")
        if self.structure is Structure.SYMMETRIC:
            _check_structure(a, a.T, NonSymmetricError, 'symmetric')
            a = (a + a.T) / 2.0
        elif self.structure is Structure.SKEW:
            _check_structure(a, -a.T, NonSkewError, 'skew-symmetric')
            a = (a - a.T) / 2.0
        a.setflags(write=False)
        object.__setattr__(self, 'entries', a)

    @classmethod
    def symmetric(cls, entries) -> 'DenseMatrix':
        return cls(entries, Structure.SYMMETRIC)

    @classmethod
    def skew(cls, entries) -> 'DenseMatrix':
        return cls(entries, Structure.SKEW)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def trace(self) -> float:
        return float(np.trace(self.entries))

    @property
    def frobenius(self) -> float:
        return float(np.linalg.norm(self.entries))


def _check_structure(a, mirror, error, name):
    if a.shape[0] != a.shape[1]:
        raise error(f"A {name} matrix must be square, got shape {a.shape}.")
    gap = float(np.max(np.abs(a - mirror))) if a.size else 0.0
    if gap > STRUCTURE_TOLERANCE:
        raise error(f"Matrix is not {name}: max deviation {gap:.3g}.")


@dataclass(frozen=True)
class Spectrum:
    values: np.ndarray
    kind: SpectrumKind = SpectrumKind.EIGENVALUES
    source: str = ''

    def __post_init__(self):
        values = np.sort(np.asarray(self.values, dtype=float))[::-1].copy()
        if (self.kind is not SpectrumKind.EIGENVALUES
                and values.size and values[-1] < 0):
            raise NumericalError(
                f"{self.kind.value} must be non-negative, got {values[-1]}.")
        values.setflags(write=False)
        object.__setattr__(self, 'values', values)

    def __len__(self):
        return len(self.values)

    @property
    def absolute(self) -> np.ndarray:
        return np.abs(self.values)

    @property
    def energy(self) -> float:
        return float(np.sum(np.abs(self.values)))


# cyclic Jacobi ---------------------------------------------------------------

def _jacobi(stack: np.ndarray) -> np.ndarray:
    """Eigenvalues of a stack of symmetric matrices, shape (B, n, n) -> (B, n).

    Every matrix in the stack gets the same cyclic sweep; the stack is done
    when each off-diagonal Frobenius norm is below CONVERGENCE_TOLERANCE times
    that matrix's Frobenius norm.
    """
    a = np.array(stack, dtype=float)
    batch, n, _ = a.shape
    offmask = ~np.eye(n, dtype=bool)
    scale = np.sqrt(np.sum(a * a, axis=(1, 2)))
    threshold = CONVERGENCE_TOLERANCE * scale
    for sweep in range(MAX_SWEEPS + 1):
        off = np.sqrt(np.sum(np.where(offmask, a, 0.0) ** 2, axis=(1, 2)))
        if np.all((off < threshold) | (off == 0.0)):
            logger.debug("jacobi: %d matrices of order %d in %d sweeps",
                         batch, n, sweep)
            values = np.diagonal(a, axis1=1, axis2=2).copy()
            values[np.abs(values) <= ZERO_SNAP * scale[:, None]] = 0.0
            return values
        if sweep == MAX_SWEEPS:
            raise NoConvergenceError(
                f"Jacobi sweep cap of {MAX_SWEEPS} hit; off-diagonal norm "
                f"{float(np.max(off)):.3g}.")
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[:, p, q]
                active = apq != 0.0
                if not active.any():
                    continue
                with np.errstate(divide='ignore', invalid='ignore'):
                    theta = np.where(
                        active, (a[:, q, q] - a[:, p, p]) / (2.0 * apq), 0.0)
                t = (np.where(theta >= 0.0, 1.0, -1.0)
                     / (np.abs(theta) + np.hypot(theta, 1.0)))
                t = np.where(active, t, 0.0)
                c = (1.0 / np.sqrt(t * t + 1.0))[:, None]
                s = t[:, None] * c
                col_p = a[:, :, p].copy()
                col_q = a[:, :, q].copy()
                a[:, :, p] = c * col_p - s * col_q
                a[:, :, q] = s * col_p + c * col_q
                row_p = a[:, p, :].copy()
                row_q = a[:, q, :].copy()
                a[:, p, :] = c * row_p - s * row_q
                a[:, q, :] = s * row_p + c * row_q
                a[active, p, q] = 0.0
                a[active, q, p] = 0.0


def _entries(m) -> np.ndarray:
    if isinstance(m, DenseMatrix):
        return m.entries
    return np.asarray(m, dtype=float)


def _symmetric_entries(m) -> np.ndarray:
    if isinstance(m, DenseMatrix) and m.structure is Structure.SYMMETRIC:
        return m.entries
    return DenseMatrix.symmetric(_entries(m)).entries


def _descending(values: np.ndarray) -> np.ndarray:
    return -np.sort(-values, axis=-1)


def symmetric_eigenvalues(m: Union[DenseMatrix, np.ndarray],
                          source: str = '') -> Spectrum:
    a = _symmetric_entries(m)
    return Spectrum(_jacobi(a[None])[0], SpectrumKind.EIGENVALUES, source)


def batch_symmetric_eigenvalues(stack: np.ndarray) -> np.ndarray:
    """Descending eigenvalues for a (B, n, n) stack of symmetric matrices."""
    stack = np.asarray(stack, dtype=float)
    if stack.ndim != 3 or stack.shape[1] != stack.shape[2]:
        raise MatrixError(f"Expected a (B, n, n) stack, got {stack.shape}.")
    gap = np.max(np.abs(stack - stack.transpose(0, 2, 1)), initial=0.0)
    if gap > STRUCTURE_TOLERANCE:
        raise NonSymmetricError(
            f"Stack is not symmetric: max deviation {gap:.3g}.")
    stack = (stack + stack.transpose(0, 2, 1)) / 2.0
    return _descending(_jacobi(stack))


def _clamp(values: np.ndarray) -> np.ndarray:
    if values.size and values.min() < CLAMP_THRESHOLD:
        raise NegativeEigenvalueError(
            f"Gram eigenvalue {values.min():.3g} is below the clamp "
            f"threshold {CLAMP_THRESHOLD}.")
    return np.maximum(values, 0.0)


def _gram(stack: np.ndarray) -> np.ndarray:
    # the smaller of M.M^T and M^T.M; both carry the same non-zero spectrum
    rows, cols = stack.shape[-2:]
    if rows <= cols:
        gram = stack @ stack.transpose(0, 2, 1)
    else:
        gram = stack.transpose(0, 2, 1) @ stack
    return (gram + gram.transpose(0, 2, 1)) / 2.0


def _pad(values: np.ndarray, pad_to: int) -> np.ndarray:
    width = values.shape[-1]
    if pad_to < width:
        raise ParameterError(
            f"pad_to={pad_to} is smaller than the {width} computed values.")
    pad = [(0, 0)] * (values.ndim - 1) + [(0, pad_to - width)]
    return np.pad(values, pad)


def batch_singular_values(stack: np.ndarray,
                          pad_to: Optional[int] = None) -> np.ndarray:
    stack = np.asarray(stack, dtype=float)
    if stack.ndim != 3:
        raise MatrixError(f"Expected a (B, r, c) stack, got {stack.shape}.")
    pad_to = stack.shape[1] if pad_to is None else pad_to
    values = np.sqrt(_clamp(_jacobi(_gram(stack))))
    return _descending(_pad(values, pad_to))


def singular_values(m: Union[DenseMatrix, np.ndarray],
                    pad_to: Optional[int] = None,
                    source: str = '') -> Spectrum:
    a = _entries(m)
    if a.ndim != 2:
        raise MatrixError(f"Expected a 2-D matrix, got shape {a.shape}.")
    if a.size == 0:
        values = np.zeros(pad_to if pad_to is not None else a.shape[0])
    else:
        values = batch_singular_values(a[None], pad_to)[0]
    return Spectrum(values, SpectrumKind.SINGULAR_VALUES, source)


def skew_absolute_eigenvalues(m: Union[DenseMatrix, np.ndarray],
                              source: str = '') -> Spectrum:
    """|lambda_i| of a real skew-symmetric matrix, read off as its singular
    values (the square roots of the spectrum of -m^2 = m^T m)."""
    if isinstance(m, DenseMatrix) and m.structure is Structure.SKEW:
        a = m.entries
    else:
        a = DenseMatrix.skew(_entries(m)).entries
    values = batch_singular_values(a[None], a.shape[0])[0]
    return Spectrum(values, SpectrumKind.ABSOLUTE_EIGENVALUES, source)


def spectral_moment(s: Spectrum, alpha: float) -> float:
    if alpha <= 0:
        raise AlphaNonPositiveError(
            f"Spectral moments need alpha > 0, got {alpha}.")
    magnitudes = s.absolute
    return float(np.sum(magnitudes[magnitudes > 0] ** alpha))


def determinant(m: Union[DenseMatrix, np.ndarray]) -> float:
    """LU with partial pivoting; singular matrices come back as (near) 0."""
    a = _entries(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise MatrixError(f"Determinant needs a square matrix, got {a.shape}.")
    if a.shape[0] == 0:
        return 1.0
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', LinAlgWarning)
        lu, piv = lu_factor(a, check_finite=True)
    swaps = np.count_nonzero(piv != np.arange(piv.size))
    return float((-1.0) ** swaps * np.prod(np.diag(lu)))
