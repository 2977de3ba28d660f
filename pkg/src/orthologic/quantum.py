"""Question lattices from finite-dimensional quantum systems.

A set of projectors is closed under orthogonal complement, subspace
intersection, and span; the resulting finite family ordered by subspace
inclusion is an orthomodular lattice.  Projective (Luders) updates give
probabilities for time-ordered answer sequences, from which the order and
the complement can be reconstructed purely from the probability oracle.

Matrices are plain complex ndarrays.  All rank and equality decisions use
singular values against the tolerance carried by the lattice (1e-9 by
default); dimensions up to 8 stay well-conditioned at that scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .analysis import require_orthomodular
from .errors import (
    BadDensityMatrix,
    BadProjector,
    ClosureTooLarge,
    DimensionMismatch,
    NoComplement,
    NotOrthomodular,
    NotUnique,
)
from .lattice import Lattice, lattice_from_leq
from .states import LatticeState

__all__ = [
    "DEFAULT_TOL",
    "InquirySequence",
    "ProjectorLattice",
    "basis_projector",
    "born_state",
    "detectability",
    "infer_complement",
    "infer_order",
    "isolated_check",
    "ket_projector",
    "matrix_from_json",
    "matrix_to_json",
    "maximally_mixed",
    "projector_lattice",
    "qubit_z_lattice",
    "qubit_zx_lattice",
    "qutrit_commuting_lattice",
    "random_density_matrix",
    "sequence_probability",
    "standard_projector",
    "validate_density_matrix",
    "validate_projector",
    "x_minus",
    "x_plus",
    "z0",
    "z1",
]

DEFAULT_TOL = 1e-9
_SNAP_DENOMINATOR = 10**12


# ---------------------------------------------------------------------------
# matrices


def validate_projector(matrix, *, dim: int | None = None, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Return ``matrix`` as a complex array after checking it projects.

    Hermiticity and idempotence within ``tol`` are verified; together they
    already pin the eigenvalues to {0, 1} at the same scale.
    """
    p = np.asarray(matrix, dtype=complex)
    if p.ndim != 2 or p.shape[0] != p.shape[1]:
        raise BadProjector(f"projector must be square, got shape {p.shape}")
    if dim is not None and p.shape[0] != dim:
        raise DimensionMismatch(f"expected dimension {dim}, got {p.shape[0]}")
    if np.linalg.norm(p - p.conj().T) > tol:
        raise BadProjector("matrix is not hermitian within tolerance")
    if np.linalg.norm(p @ p - p) > tol:
        raise BadProjector("matrix is not idempotent within tolerance")
    return p


def validate_density_matrix(matrix, *, dim: int | None = None, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Check hermitian, positive semidefinite, unit trace within ``tol``."""
    rho = np.asarray(matrix, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise BadDensityMatrix(f"density matrix must be square, got shape {rho.shape}")
    if dim is not None and rho.shape[0] != dim:
        raise DimensionMismatch(f"expected dimension {dim}, got {rho.shape[0]}")
    if np.linalg.norm(rho - rho.conj().T) > tol:
        raise BadDensityMatrix("density matrix is not hermitian within tolerance")
    if np.linalg.eigvalsh(rho).min() < -tol:
        raise BadDensityMatrix("density matrix is not positive semidefinite")
    if abs(np.trace(rho).real - 1.0) > tol:
        raise BadDensityMatrix("density matrix trace differs from 1")
    return rho


def ket_projector(amplitudes) -> np.ndarray:
    """Rank-1 projector onto the (normalized) state vector ``amplitudes``."""
    v = np.asarray(amplitudes, dtype=complex)
    norm = np.linalg.norm(v)
    if norm == 0:
        raise BadProjector("cannot project onto the zero vector")
    v = v / norm
    return np.outer(v, v.conj())


def basis_projector(dim: int, k: int) -> np.ndarray:
    """Projector onto the k-th computational basis vector of dimension ``dim``."""
    v = np.zeros(dim)
    v[k] = 1.0
    return ket_projector(v)


def z0() -> np.ndarray:
    return basis_projector(2, 0)


def z1() -> np.ndarray:
    return basis_projector(2, 1)


def x_plus() -> np.ndarray:
    return ket_projector([1.0, 1.0])


def x_minus() -> np.ndarray:
    return ket_projector([1.0, -1.0])


_STANDARD = {"Z0": z0, "Z1": z1, "X+": x_plus, "X-": x_minus}


def standard_projector(name: str) -> np.ndarray:
    """Named qubit projector: one of Z0, Z1, X+, X-."""
    try:
        return _STANDARD[name]()
    except KeyError:
        raise BadProjector(
            f"unknown standard projector {name!r}; available: {', '.join(_STANDARD)}"
        ) from None


def maximally_mixed(dim: int) -> np.ndarray:
    return np.eye(dim, dtype=complex) / dim


def random_density_matrix(dim: int, generator: np.random.Generator) -> np.ndarray:
    """Full-rank random density matrix (Ginibre construction)."""
    a = generator.normal(size=(dim, dim)) + 1j * generator.normal(size=(dim, dim))
    rho = a @ a.conj().T
    return rho / np.trace(rho).real


def matrix_from_json(data) -> np.ndarray:
    """Nested lists with entries either numbers or [re, im] pairs."""

    def entry(x):
        if isinstance(x, (int, float)):
            return complex(x)
        if isinstance(x, (list, tuple)) and len(x) == 2:
            return complex(float(x[0]), float(x[1]))
        raise ValueError(f"matrix entry must be a number or [re, im], got {x!r}")

    return np.array([[entry(x) for x in row] for row in data], dtype=complex)


def matrix_to_json(matrix) -> list:
    m = np.asarray(matrix, dtype=complex)
    return [[[float(x.real), float(x.imag)] for x in row] for row in m]


# ---------------------------------------------------------------------------
# projector closure


def _span(mats: list[np.ndarray], tol: float) -> np.ndarray:
    stacked = np.hstack(mats)
    u, s, _ = np.linalg.svd(stacked, full_matrices=False)
    rank = int(np.sum(s > tol))
    basis = u[:, :rank]
    p = basis @ basis.conj().T
    return (p + p.conj().T) / 2


@dataclass(frozen=True, eq=False)
class ProjectorLattice:
    """A finite orthomodular lattice whose elements carry projectors.

    The embedded :class:`Lattice` order is subspace inclusion, the
    orthocomplement is ``I - P``, meets are intersections and joins spans.
    """

    lattice: Lattice
    projectors: tuple[np.ndarray, ...]
    dim: int
    tol: float

    @property
    def n(self) -> int:
        return self.lattice.n

    def index(self, name: str) -> int:
        return self.lattice.index(name)

    def projector(self, i: int) -> np.ndarray:
        return self.projectors[i]


def projector_lattice(
    generators,
    *,
    tol: float = DEFAULT_TOL,
    names=None,
    max_elements: int = 64,
) -> ProjectorLattice:
    """Close a projector set under complement, intersection, and span.

    Parameters
    ----------
    generators : iterable of matrices
        Projectors of one common dimension.
    tol : float
        Tolerance for rank decisions, matching, and the subspace order.
    names : optional list of str
        Labels for the generators; derived elements are auto-named, with
        complements of labeled elements named ``~label``.
    max_elements : int
        Cap on the closure size, enforced with :class:`ClosureTooLarge`.

    Returns
    -------
    ProjectorLattice
        The closure, sorted by (rank, discovery order), with the bounds
        named ``0`` and ``1``.  The embedded lattice is verified to be
        orthomodular before returning.
    """
    mats = [validate_projector(g, tol=tol) for g in generators]
    if not mats:
        raise BadProjector("need at least one generator")
    dim = mats[0].shape[0]
    for m in mats:
        if m.shape[0] != dim:
            raise DimensionMismatch("generators have mixed dimensions")
    if names is not None and len(names) != len(mats):
        raise ValueError("names must match generators one to one")

    eye = np.eye(dim, dtype=complex)
    elems: list[np.ndarray] = []
    labels: list[str | None] = []

    def find(p: np.ndarray) -> int | None:
        for i, q in enumerate(elems):
            if np.linalg.norm(p - q) <= tol:
                return i
        return None

    def add(p: np.ndarray, label: str | None = None) -> int:
        p = (p + p.conj().T) / 2
        i = find(p)
        if i is None:
            if len(elems) >= max_elements:
                raise ClosureTooLarge(
                    f"projector closure exceeds {max_elements} elements"
                )
            elems.append(p)
            labels.append(label)
            return len(elems) - 1
        if labels[i] is None and label is not None:
            labels[i] = label
        return i

    add(np.zeros((dim, dim), dtype=complex), "0")
    add(eye, "1")
    for k, m in enumerate(mats):
        add(m, None if names is None else str(names[k]))

    while True:
        before = len(elems)
        for i in range(before):
            j = add(eye - elems[i])
            if labels[j] is None and labels[i] is not None:
                labels[j] = "~" + labels[i]
        for i in range(before):
            for j in range(i + 1, before):
                add(_span([elems[i], elems[j]], tol))
                # intersection by De Morgan: complement the span of complements
                add(eye - _span([eye - elems[i], eye - elems[j]], tol))
        if len(elems) == before:
            break

    ranks = [int(round(np.trace(p).real)) for p in elems]
    order = sorted(range(len(elems)), key=lambda i: (ranks[i], i))
    elems = [elems[i] for i in order]
    labels = [labels[i] for i in order]

    n = len(elems)
    leq = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(n):
            leq[i, j] = np.linalg.norm(elems[j] @ elems[i] - elems[i]) <= tol
    ortho = np.empty(n, dtype=np.int64)
    for i in range(n):
        j = find(eye - elems[i])
        assert j is not None  # the set is complement-closed
        ortho[i] = j

    final_names: list[str] = []
    seen: set[str] = set()
    for i, label in enumerate(labels):
        name = label if label is not None else f"s{i}"
        while name in seen:
            name += "'"
        seen.add(name)
        final_names.append(name)

    lat = lattice_from_leq(final_names, leq, ortho)
    try:
        require_orthomodular(lat)
    except NotOrthomodular as exc:
        raise NotOrthomodular(
            f"projector closure is not orthomodular ({exc}); tolerance too loose?"
        ) from exc
    return ProjectorLattice(
        lattice=lat, projectors=tuple(elems), dim=dim, tol=tol
    )


def qubit_zx_lattice(tol: float = DEFAULT_TOL) -> ProjectorLattice:
    """Closure of both qubit bases Z and X: six elements, MO2-shaped."""
    return projector_lattice(
        [z0(), z1(), x_plus(), x_minus()],
        names=["Z0", "Z1", "X+", "X-"],
        tol=tol,
    )


def qubit_z_lattice(tol: float = DEFAULT_TOL) -> ProjectorLattice:
    """Closure of one qubit basis vector: the four-element Boolean block."""
    return projector_lattice([z0()], names=["Z0"], tol=tol)


def qutrit_commuting_lattice(tol: float = DEFAULT_TOL) -> ProjectorLattice:
    """Two commuting rank-1 generators in dimension 3: an eight-element Boolean cube."""
    return projector_lattice(
        [basis_projector(3, 0), basis_projector(3, 1)], names=["E1", "E2"], tol=tol
    )


# ---------------------------------------------------------------------------
# sequences and probabilities


def _as_answer(answer) -> bool:
    if isinstance(answer, bool):
        return answer
    if answer in (0, 1):
        return bool(answer)
    if isinstance(answer, str) and answer.lower() in ("t", "f"):
        return answer.lower() == "t"
    raise ValueError(f"answer must be t/f or boolean, got {answer!r}")


@dataclass(frozen=True)
class InquirySequence:
    """Time-ordered (element, answer) pairs; list position is the time stamp."""

    steps: tuple[tuple[int, bool], ...]

    @classmethod
    def of(cls, *steps) -> "InquirySequence":
        return cls(tuple((int(e), _as_answer(a)) for e, a in steps))

    @classmethod
    def from_names(cls, pl: ProjectorLattice, pairs) -> "InquirySequence":
        return cls.of(*((pl.index(name), answer) for name, answer in pairs))

    def __len__(self) -> int:
        return len(self.steps)


def _steps_of(sequence) -> tuple[tuple[int, bool], ...]:
    if isinstance(sequence, InquirySequence):
        return sequence.steps
    return InquirySequence.of(*sequence).steps


def born_state(pl: ProjectorLattice, rho) -> LatticeState:
    """Lattice state mu(element) = trace(rho P_element).

    Traces are clamped to [0, 1] and snapped to nearby rationals so the
    result interoperates with the exact state axioms; checks on snapped
    values should still allow the lattice tolerance.
    """
    rho = validate_density_matrix(rho, dim=pl.dim, tol=pl.tol)
    values = []
    for p in pl.projectors:
        v = float(np.trace(rho @ p).real)
        v = min(1.0, max(0.0, v))
        values.append(Fraction(v).limit_denominator(_SNAP_DENOMINATOR))
    return LatticeState(tuple(values))


def sequence_probability(pl: ProjectorLattice, rho, sequence) -> float:
    """Probability of a full answer sequence under chained Luders updates.

    Each step sandwiches the unnormalized state with P (answer true) or
    I - P (answer false); the final trace is the joint probability.  No
    intermediate renormalization takes place.
    """
    rho = validate_density_matrix(rho, dim=pl.dim, tol=pl.tol)
    eye = np.eye(pl.dim, dtype=complex)
    sigma = rho
    for element, answer in _steps_of(sequence):
        p = pl.projectors[element]
        e = p if answer else eye - p
        sigma = e @ sigma @ e
    prob = float(np.trace(sigma).real)
    return min(1.0, max(0.0, prob))


def isolated_check(
    pl: ProjectorLattice, rho, probe: int, intermediate: int | None = None
) -> float:
    """Probability that two probe inquiries agree, marginalizing the middle one."""
    answers = (True, False)
    total = 0.0
    if intermediate is None:
        for a in answers:
            total += sequence_probability(pl, rho, [(probe, a), (probe, a)])
    else:
        for a in answers:
            for b in answers:
                total += sequence_probability(
                    pl, rho, [(probe, a), (intermediate, b), (probe, a)]
                )
    return min(1.0, total)


def detectability(pl: ProjectorLattice, probe: int, alpha: int) -> float:
    """Disturbance of an ``alpha`` inquiry as seen by repeated probes.

    Evaluated at the maximally mixed preparation; positive exactly when the
    two projectors fail to commute.
    """
    agreement = isolated_check(pl, maximally_mixed(pl.dim), probe, alpha)
    return max(0.0, 1.0 - agreement)


# ---------------------------------------------------------------------------
# reconstruction from the probability oracle


def _conditional(pl: ProjectorLattice, rho, condition, question) -> float:
    """P(question | condition); conditioning on a null event yields 1."""
    den = sequence_probability(pl, rho, condition)
    if den <= pl.tol:
        return 1.0
    num = sequence_probability(pl, rho, list(condition) + [question])
    return num / den


def infer_order(pl: ProjectorLattice) -> np.ndarray:
    """Reconstruct the order from probabilities alone.

    ``a <= b`` iff answering ``a`` true makes a subsequent ``b`` certain and
    the sandwich a, b, a preserves the first answer with certainty, both at
    the maximally mixed preparation.  Must reproduce subspace inclusion.
    """
    mm = maximally_mixed(pl.dim)
    n = pl.n
    out = np.zeros((n, n), dtype=bool)
    for a in range(n):
        for b in range(n):
            implied = abs(_conditional(pl, mm, [(a, True)], (b, True)) - 1.0) <= pl.tol
            stable = abs(isolated_check(pl, mm, a, b) - 1.0) <= pl.tol
            out[a, b] = implied and stable
    return out


def infer_complement(pl: ProjectorLattice, a: int) -> int:
    """The unique element answering opposite to ``a`` with certainty, both ways."""
    mm = maximally_mixed(pl.dim)
    matches = []
    for b in range(pl.n):
        flipped = abs(_conditional(pl, mm, [(a, True)], (b, False)) - 1.0) <= pl.tol
        restored = abs(_conditional(pl, mm, [(a, False)], (b, True)) - 1.0) <= pl.tol
        if flipped and restored:
            matches.append(b)
    if not matches:
        raise NoComplement(f"no element complements {pl.lattice.names[a]!r}")
    if len(matches) > 1:
        names = [pl.lattice.names[b] for b in matches]
        raise NotUnique(f"multiple complements for {pl.lattice.names[a]!r}: {names}")
    return matches[0]
