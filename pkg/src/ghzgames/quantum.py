"""GHZ operators, shared eigenbases, product bases, expansions and sampling.

Party 1 is the leftmost (most significant) tensor factor throughout, so the
three-party context operators come out as the familiar 8x8 antidiagonal
matrices. Product-basis vectors are stored with their first nonzero component
real and positive, which keeps expansion coefficients phase-comparable.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .linalg import EPS, is_unit

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

_SQRT2 = math.sqrt(2.0)

Z_PLUS = np.array([1, 0], dtype=complex)
Z_MINUS = np.array([0, 1], dtype=complex)
X_PLUS = np.array([1, 1], dtype=complex) / _SQRT2
X_MINUS = np.array([1, -1], dtype=complex) / _SQRT2
Y_PLUS = np.array([1, 1j], dtype=complex) / _SQRT2
Y_MINUS = np.array([1, -1j], dtype=complex) / _SQRT2

_LOCAL_EIGENVECTORS = {
    ("x", 1): X_PLUS,
    ("x", -1): X_MINUS,
    ("y", 1): Y_PLUS,
    ("y", -1): Y_MINUS,
}

# Three-party measurement contexts in canonical column order, and the
# two-party contexts of the two-prisoner variant.
GHZ_CONTEXTS = ("yyx", "yxy", "xyy", "xxx")
TWO_PARTY_CONTEXTS = ("xx", "xy", "yx", "yy")

# Eigenvalue signature of each shared-basis state under the four contexts
# (rows follow ghz_basis order, columns follow GHZ_CONTEXTS). Every row
# multiplies to -1, which is exactly what no noncontextual assignment can do.
GHZ_SIGN_ROWS = (
    (-1, -1, -1, +1),
    (+1, +1, +1, -1),
    (-1, +1, +1, +1),
    (+1, -1, -1, -1),
    (+1, -1, +1, +1),
    (-1, +1, -1, -1),
    (+1, +1, -1, +1),
    (-1, -1, +1, -1),
)


def pauli(theta: float, phi: float) -> np.ndarray:
    """Spin matrix along the (theta, phi) direction in spherical coordinates.

    ``pauli(pi/2, 0)`` is sigma_x, ``pauli(pi/2, pi/2)`` sigma_y and
    ``pauli(0, 0)`` sigma_z. The result is Hermitian and squares to the
    identity for every direction.
    """
    return np.array(
        [
            [math.cos(theta), np.exp(-1j * phi) * math.sin(theta)],
            [np.exp(1j * phi) * math.sin(theta), -math.cos(theta)],
        ],
        dtype=complex,
    )


def _validate_context(label: str, lengths=(2, 3)) -> str:
    if len(label) not in lengths or any(ch not in "xy" for ch in label):
        raise ValueError(f"invalid measurement context {label!r}")
    return label


def swap_observables(label: str) -> str:
    """Exchange the roles of the two dichotomic observables in a context label."""
    return _validate_context(label).translate(str.maketrans("xy", "yx"))


def context_operator(label: str) -> np.ndarray:
    """Tensor product of sigma_x/sigma_y factors, one per letter of ``label``."""
    _validate_context(label)
    op = SIGMA_X if label[0] == "x" else SIGMA_Y
    for ch in label[1:]:
        op = np.kron(op, SIGMA_X if ch == "x" else SIGMA_Y)
    return op


def lagrange_projectors(op, tol: float = EPS) -> tuple[np.ndarray, np.ndarray]:
    """Spectral projectors ``(I + op)/2`` and ``(I - op)/2`` of an involution."""
    op = np.asarray(op, dtype=complex)
    eye = np.eye(op.shape[0])
    if op.ndim != 2 or op.shape[0] != op.shape[1] or np.abs(op @ op - eye).max() > tol:
        raise ValueError("operator is not involutory")
    return (eye + op) / 2, (eye - op) / 2


@dataclass(frozen=True, eq=False)
class GhzBasis:
    """Eight joint eigenvectors of the four commuting context operators.

    ``vectors[i]`` is the i-th basis state; rows are ordered so that row i
    carries the signature ``GHZ_SIGN_ROWS[i]``. The ``permuted`` variant
    replaces the leading 1 of each vector by the imaginary unit; it
    diagonalizes the letter-swapped operators instead.
    """

    variant: str
    vectors: np.ndarray

    def context_operators(self) -> tuple[np.ndarray, ...]:
        """The four operators this basis diagonalizes, in column order."""
        if self.variant == "standard":
            return tuple(context_operator(c) for c in GHZ_CONTEXTS)
        return tuple(context_operator(swap_observables(c)) for c in GHZ_CONTEXTS)


def ghz_basis(variant: str = "standard") -> GhzBasis:
    if variant not in ("standard", "permuted"):
        raise ValueError(f"unknown basis variant {variant!r}")
    # Each state lives in one of the pair subspaces (0,7), (1,6), (2,5), (3,4).
    # Rotating the leading component to i exchanges the +/- partners of the
    # middle two pairs, so the permuted enumeration flips those signs to keep
    # row i on signature GHZ_SIGN_ROWS[i].
    if variant == "permuted":
        lead, pair_signs = 1j, ((1, -1), (-1, 1), (-1, 1), (1, -1))
    else:
        lead, pair_signs = 1.0, ((1, -1),) * 4
    rows = []
    for (a, b), signs in zip(((0, 7), (1, 6), (2, 5), (3, 4)), pair_signs):
        for s in signs:
            v = np.zeros(8, dtype=complex)
            v[a] = lead / _SQRT2
            v[b] = s / _SQRT2
            rows.append(v)
    return GhzBasis(variant=variant, vectors=np.array(rows))


@dataclass(frozen=True, eq=False)
class SignTable:
    """8x4 array of eigenvalue signs; rows follow the basis, columns GHZ_CONTEXTS."""

    entries: np.ndarray
    contexts: tuple[str, ...] = GHZ_CONTEXTS

    def row(self, i: int) -> tuple[int, ...]:
        return tuple(int(s) for s in self.entries[i])


def sign_table(basis: GhzBasis) -> SignTable:
    """Eigenvalue sign of every basis state under every context operator.

    The sign is read off at the largest-modulus component of the state and the
    full eigenvalue equation is then checked entrywise.
    """
    ops = basis.context_operators()
    entries = np.zeros((len(basis.vectors), len(ops)), dtype=int)
    for i, v in enumerate(basis.vectors):
        k = int(np.argmax(np.abs(v)))
        for j, op in enumerate(ops):
            w = op @ v
            s = w[k] / v[k]
            if abs(s.imag) > EPS or abs(abs(s.real) - 1) > EPS or np.abs(w - s * v).max() > EPS:
                raise ValueError(f"vector {i} is not an eigenvector of context {j}")
            entries[i, j] = 1 if s.real > 0 else -1
    return SignTable(entries=entries)


@dataclass(frozen=True, eq=False)
class ProductBasis:
    """All tensor products of single-particle eigenvectors for one context."""

    context: str
    outcome_signs: tuple[tuple[int, ...], ...]
    vectors: np.ndarray = field(repr=False)


def product_basis(context: str) -> ProductBasis:
    _validate_context(context)
    signs = tuple(itertools.product((1, -1), repeat=len(context)))
    rows = []
    for outcome in signs:
        v = _LOCAL_EIGENVECTORS[(context[0], outcome[0])]
        for ch, s in zip(context[1:], outcome[1:]):
            v = np.kron(v, _LOCAL_EIGENVECTORS[(ch, s)])
        rows.append(v)
    return ProductBasis(context=context, outcome_signs=signs, vectors=np.array(rows))


def expand(state, basis: ProductBasis) -> list[tuple[tuple[int, ...], complex]]:
    """Coefficients of ``state`` on the basis vectors, paired with outcomes."""
    state = np.asarray(state, dtype=complex)
    if state.shape != (basis.vectors.shape[1],):
        raise ValueError(f"dimension mismatch: state {state.shape} vs basis dim {basis.vectors.shape[1]}")
    coeffs = basis.vectors.conj() @ state
    return [(signs, complex(c)) for signs, c in zip(basis.outcome_signs, coeffs)]


def born_probabilities(state, basis: ProductBasis) -> list[tuple[tuple[int, ...], float]]:
    """Outcome probabilities ``|<outcome|state>|^2``; requires a unit state."""
    state = np.asarray(state, dtype=complex)
    if not is_unit(state, tol=1e-6):
        raise ValueError("state is not normalized")
    return [(signs, abs(c) ** 2) for signs, c in expand(state, basis)]


def sample_outcome(state, basis: ProductBasis, rng: np.random.Generator) -> tuple[int, ...]:
    """Draw one outcome tuple from the Born distribution; deterministic per seed."""
    probs = np.array([p for _, p in born_probabilities(state, basis)])
    idx = int(rng.choice(len(probs), p=probs / probs.sum()))
    return basis.outcome_signs[idx]


def maximal_operator(basis: GhzBasis, lambdas=(1, 2, 3, 4, 5, 6, 7, 8)) -> np.ndarray:
    """Nondegenerate operator with the basis states as eigenvectors.

    Every context operator is a function of this operator: summing the rank-one
    projectors weighted by a sign row of the table reproduces it exactly.
    """
    lam = [complex(x) for x in lambdas]
    if len(lam) != len(basis.vectors) or len(set(lam)) != len(lam):
        raise ValueError("eigenvalues must be pairwise distinct, one per basis state")
    return (basis.vectors.T * np.array(lam)) @ basis.vectors.conj()


def signed_projector_sum(basis: GhzBasis, signs) -> np.ndarray:
    """Sum of the basis projectors weighted by ``signs`` (one per state)."""
    s = np.asarray(signs, dtype=complex)
    if s.shape != (len(basis.vectors),):
        raise ValueError("need one sign per basis state")
    return (basis.vectors.T * s) @ basis.vectors.conj()


def ghz_superposition(alphas) -> np.ndarray:
    """Closed-form state with the given eight amplitudes on the shared basis.

    Matches the entrywise sum of ``alphas[i] * ghz_basis().vectors[i]``; unit
    amplitude vectors give unit states.
    """
    a = np.asarray(alphas, dtype=complex)
    if a.shape != (8,):
        raise ValueError("need exactly eight amplitudes")
    return (
        np.array(
            [
                a[0] + a[1],
                a[2] + a[3],
                a[4] + a[5],
                a[6] + a[7],
                a[6] - a[7],
                a[4] - a[5],
                a[2] - a[3],
                a[0] - a[1],
            ]
        )
        / _SQRT2
    )


def outcome_entropy(values) -> float:
    """Shannon entropy (bits) of the product of three independent uniform draws.

    For outcomes valued in {0, 1} the triple product is 1 with probability 1/8,
    giving roughly 0.54 bits; for {-1, +1} it is a fair coin, giving exactly 1.
    """
    values = tuple(values)
    if not values:
        raise ValueError("value set must be nonempty")
    counts = Counter(a * b * c for a, b, c in itertools.product(values, repeat=3))
    total = len(values) ** 3
    return -sum((n / total) * math.log2(n / total) for n in counts.values())
