"""Holomorphic totally geodesic embeddings of the ball into matrix domains.

Three building blocks are provided, each landing in a symmetric-matrix
block suitable for a diagonal direct sum:

* standard: the ball placed in the first row of a type I matrix (or a
  type III corner for one-dimensional sources),
* connecting: Z in I_{p,q} placed as off-diagonal blocks of a symmetric
  (p+q) x (p+q) matrix,
* exterior power: the degree-m wedge representation of the ball, landing
  in I_{r,s} with (r, s) the signature of the induced pairing, or in the
  symmetric model III_r in the balanced case r = s.

A factor is one such composite block; an embedding is a diagonal direct
sum of factors under a genus budget, with unused diagonal slack padded by
zeros.  All embeddings fix the origin, are verified linear in the source
coordinates, and carry each interior point to an interior point.

Exterior-power construction, in coordinates: the source point z spans the
negative line through ``v = sum_i e_i z_i + e_{p+1}``; the positive
complement V+ is spanned by ``b_i = e_i + conj(z_i) e_{p+1}``.  A basis of
the negative subspace of the degree-m power is built by wedging m-1
vectors of V+ with v, expanded over the wedge basis, split into the
positive coefficient block X and negative block Y, and column-normalized
to X Y^{-1}.  In the balanced symmetric case the positive rows are first
re-expressed through the semi-linear conjugation, which makes the
normalized matrix symmetric.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .domains import (
    BallPoint,
    DomainKind,
    DomainPoint,
    membership,
    type_i_shape,
    type_iii_shape,
)
from .errors import (
    BudgetExceeded,
    DegreeOutOfRange,
    DimensionMismatch,
    MembershipViolation,
    NonlinearityDetected,
    NormalizationSingular,
    SingularSystem,
    SpecMismatch,
)
from .exterior import (
    balanced_symmetric,
    complement,
    conjugation_unit,
    multi_indices,
    signature,
    wedge_basis,
)
from .linalg import DEFAULT_TOLERANCE, Tolerance, max_abs, solve_right

__all__ = [
    "BuiltEmbedding",
    "EmbeddingSpec",
    "FactorKind",
    "FactorSpec",
    "LINEARIZATION_PROBE",
    "block_layout",
    "connecting_embed",
    "corner_embed_iii",
    "direct_sum_embed",
    "embed_in_type_i",
    "enumerate_specs",
    "exterior_power_embed",
    "factor_block",
    "factor_catalog",
    "linearize",
    "unvec_sym",
    "vec_sym",
]

# Probe radius for linearization columns: well inside every domain.
LINEARIZATION_PROBE = 0.25


class FactorKind(str, enum.Enum):
    STANDARD_I = "standard_I"
    STANDARD_III = "standard_III"
    CONNECTING_LAMBDA = "connecting_lambda"
    LAMBDA_III = "lambda_III"


@dataclass(frozen=True, order=True)
class FactorSpec:
    """One diagonal factor of an embedding into a symmetric-matrix domain.

    ``p`` is the source ball dimension and ``m`` the wedge degree.  The
    derived signature (r, s) fixes the block size: a connecting factor
    costs r + s diagonal entries, the balanced symmetric factor costs r,
    the standard factors cost p + 1 and 1 respectively.
    """

    kind: FactorKind
    p: int
    m: int

    def __post_init__(self) -> None:
        if self.p < 1:
            raise DimensionMismatch(f"source dimension must be positive, got {self.p}")
        if not 1 <= self.m <= self.p:
            raise DegreeOutOfRange(f"degree m={self.m} outside 1..{self.p}")
        if self.kind is FactorKind.LAMBDA_III and not balanced_symmetric(self.p, self.m):
            raise DegreeOutOfRange(
                f"symmetric wedge factor needs p = 1 mod 4 and m = (p+1)/2, got p={self.p}, m={self.m}"
            )
        if self.kind is FactorKind.STANDARD_I and self.m != 1:
            raise DegreeOutOfRange("standard type I factors use the degree-1 representation")
        if self.kind is FactorKind.STANDARD_III and (self.p != 1 or self.m != 1):
            raise DegreeOutOfRange("standard type III factors exist only for one-dimensional sources")

    @property
    def signature(self) -> tuple[int, int]:
        return signature(self.p, self.m)

    @property
    def block_size(self) -> int:
        r, s = self.signature
        if self.kind is FactorKind.CONNECTING_LAMBDA:
            return r + s
        if self.kind is FactorKind.LAMBDA_III:
            return r
        if self.kind is FactorKind.STANDARD_I:
            return self.p + 1
        return 1

    @property
    def cost(self) -> int:
        """Diagonal entries of the target the factor occupies."""
        return self.block_size


@dataclass(frozen=True)
class EmbeddingSpec:
    """A validated direct-sum decomposition of an embedding B^N -> III_g.

    Factors are canonicalized (sorted by kind then degree) so equal
    multisets compare equal and serialized output is stable.  The sum of
    factor costs must fit in ``target_g``; slack is padded with zeros.
    """

    source_dim: int
    factors: tuple[FactorSpec, ...]
    target_g: int

    def __post_init__(self) -> None:
        factors = tuple(sorted(self.factors, key=lambda f: (f.kind.value, f.m)))
        if not factors:
            raise SpecMismatch("embedding needs at least one factor")
        object.__setattr__(self, "factors", factors)
        if self.source_dim < 1:
            raise DimensionMismatch(f"source dimension must be positive, got {self.source_dim}")
        for f in factors:
            if f.p != self.source_dim:
                raise SpecMismatch(
                    f"factor {f.kind.value} has source dimension {f.p}, spec has {self.source_dim}"
                )
        if self.cost > self.target_g:
            raise BudgetExceeded(
                f"factor costs total {self.cost} but the genus budget is {self.target_g}"
            )

    @property
    def cost(self) -> int:
        return sum(f.cost for f in self.factors)


@lru_cache(maxsize=None)
def block_layout(spec: EmbeddingSpec) -> tuple[tuple[FactorSpec, int, int], ...]:
    """Diagonal (start, stop) ranges of each factor block in the target."""
    layout = []
    offset = 0
    for f in spec.factors:
        layout.append((f, offset, offset + f.block_size))
        offset += f.block_size
    return tuple(layout)


def _require_interior_ball(z: BallPoint, tol: Tolerance, what: str) -> None:
    if z.norm >= 1.0 - tol.psd_margin:
        raise MembershipViolation(f"{what} has norm {z.norm:.6f}, too close to the sphere")


def embed_in_type_i(z: BallPoint, p: int, q: int, tol: Tolerance = DEFAULT_TOLERANCE) -> DomainPoint:
    """Standard embedding of the ball along the first row of a p x q matrix."""
    if z.n > q:
        raise DimensionMismatch(f"ball dimension {z.n} exceeds column count {q}")
    _require_interior_ball(z, tol, "standard embedding input")
    out = np.zeros((p, q), dtype=np.complex128)
    out[0, : z.n] = z.coords
    return DomainPoint(type_i_shape(p, q), out)


def _connecting_matrix(z: np.ndarray) -> np.ndarray:
    p, q = z.shape
    out = np.zeros((p + q, p + q), dtype=np.complex128)
    out[:q, q:] = z.T
    out[q:, :q] = z
    return out


def corner_embed_iii(z: DomainPoint, l: int, tol: Tolerance = DEFAULT_TOLERANCE) -> DomainPoint:
    """Standard embedding of a type III point into the upper-left corner."""
    if z.shape.kind is not DomainKind.TYPE_III:
        raise DimensionMismatch(f"corner embedding expects a type III point, got {z.shape.kind.value}")
    k = z.shape.p
    if not k < l:
        raise DimensionMismatch(f"corner embedding needs k < l, got k={k}, l={l}")
    if not membership(z, tol):
        raise MembershipViolation("corner embedding input must be interior")
    out = np.zeros((l, l), dtype=np.complex128)
    out[:k, :k] = z.z
    return DomainPoint(type_iii_shape(l), out)


def connecting_embed(z: DomainPoint, tol: Tolerance = DEFAULT_TOLERANCE) -> DomainPoint:
    """Connect I_{p,q} to the symmetric domain of size p + q.

    Places Z and its transpose as off-diagonal blocks:

        Z  |->  [[0_qq, Z^t], [Z, 0_pp]]

    which is symmetric and has the same nonzero singular values as Z, so
    distances to the origin are preserved.
    """
    if z.shape.kind is not DomainKind.TYPE_I:
        raise DimensionMismatch(f"connecting embedding expects a type I point, got {z.shape.kind.value}")
    if not membership(z, tol):
        raise MembershipViolation("connecting embedding input must be interior")
    return DomainPoint(type_iii_shape(z.shape.rows + z.shape.cols), _connecting_matrix(z.z))


@lru_cache(maxsize=None)
def _symmetric_reindex(p: int, m: int) -> tuple[np.ndarray, np.ndarray]:
    """Row permutation and unit divisors converting wedge rows to the
    conjugation basis of the balanced symmetric model."""
    basis = wedge_basis(p, m)
    perm = np.empty(len(basis.negatives), dtype=np.intp)
    units = np.empty(len(basis.negatives), dtype=np.complex128)
    positive_index = {M: i for i, M in enumerate(basis.positives)}
    for i, neg in enumerate(basis.negatives):
        perm[i] = positive_index[complement(neg, p)]
        units[i] = conjugation_unit(neg, p)
    return perm, units


@lru_cache(maxsize=None)
def _wedge_plan(p: int, m: int) -> tuple[np.ndarray, np.ndarray]:
    """Index plan for the wedge expansion: 0-based positive-basis columns
    per degree-(m-1) subset, and basis-ordered row subsets for minors."""
    subsets = multi_indices(p, m - 1) if m > 1 else ((),)
    sub_idx = np.array([[i - 1 for i in sub] for sub in subsets], dtype=np.intp).reshape(
        len(subsets), m - 1
    )
    basis = wedge_basis(p, m)
    rows = np.array([[i - 1 for i in M] for M in basis.ordered], dtype=np.intp)
    return sub_idx, rows


def exterior_power_embed(
    z: BallPoint, m: int, symmetric: bool = False, tol: Tolerance = DEFAULT_TOLERANCE
) -> DomainPoint:
    """Degree-m wedge-power embedding of a ball point.

    Returns an interior point of I_{r,s} with (r, s) = (C(p, m),
    C(p, m-1)), or of the symmetric model III_r when ``symmetric`` is set
    (balanced case only).  Fixes the origin and is linear in z.
    """
    p = z.n
    if not 1 <= m <= p:
        raise DegreeOutOfRange(f"degree m={m} outside 1..{p}")
    if symmetric and not balanced_symmetric(p, m):
        raise DegreeOutOfRange(
            f"symmetric model needs p = 1 mod 4 and m = (p+1)/2, got p={p}, m={m}"
        )
    _require_interior_ball(z, tol, "wedge embedding input")
    r, s = signature(p, m)

    v = np.concatenate([z.coords, [1.0 + 0.0j]])
    plus = np.zeros((p + 1, p), dtype=np.complex128)
    plus[:p, :p] = np.eye(p)
    plus[p, :] = np.conj(z.coords)

    # One column stack per degree-(m-1) subset of the positive basis,
    # wedged with v; coefficients are the m x m minors over basis rows.
    sub_idx, rows = _wedge_plan(p, m)
    stacks = np.empty((s, p + 1, m), dtype=np.complex128)
    if m > 1:
        stacks[:, :, : m - 1] = plus[:, sub_idx].transpose(1, 0, 2)
    stacks[:, :, m - 1] = v
    coeffs = np.linalg.det(stacks[:, rows, :]).T

    x_block = coeffs[:r, :]
    y_block = coeffs[r:, :]
    if symmetric:
        perm, units = _symmetric_reindex(p, m)
        x_block = x_block[perm, :] / units[:, np.newaxis]
    try:
        normalized = solve_right(x_block, y_block, tol)
    except SingularSystem as exc:
        raise NormalizationSingular(f"negative block not invertible: {exc}") from exc
    if symmetric:
        return DomainPoint(type_iii_shape(r), normalized)
    return DomainPoint(type_i_shape(r, s), normalized)


def factor_block(factor: FactorSpec, z: BallPoint, tol: Tolerance = DEFAULT_TOLERANCE) -> np.ndarray:
    """Symmetric matrix block a factor contributes to the diagonal sum.

    The inner compositions skip redundant membership re-checks: wedge and
    first-row images of interior ball points are interior by construction
    and the image membership is verified by the harness separately.
    """
    if z.n != factor.p:
        raise SpecMismatch(f"factor expects a {factor.p}-dimensional ball point, got {z.n}")
    if factor.kind is FactorKind.LAMBDA_III:
        return exterior_power_embed(z, factor.m, symmetric=True, tol=tol).z
    if factor.kind is FactorKind.CONNECTING_LAMBDA:
        return _connecting_matrix(exterior_power_embed(z, factor.m, tol=tol).z)
    if factor.kind is FactorKind.STANDARD_I:
        return _connecting_matrix(embed_in_type_i(z, 1, factor.p, tol).z)
    # One-dimensional source placed directly as a symmetric 1x1 corner.
    return np.asarray(z.coords, dtype=np.complex128).reshape(1, 1)


def direct_sum_embed(spec: EmbeddingSpec, z: BallPoint, tol: Tolerance = DEFAULT_TOLERANCE) -> DomainPoint:
    """Evaluate the embedding: factor blocks on the diagonal, zero padding."""
    if z.n != spec.source_dim:
        raise SpecMismatch(f"spec expects ball dimension {spec.source_dim}, got {z.n}")
    _require_interior_ball(z, tol, "embedding input")
    g = spec.target_g
    out = np.zeros((g, g), dtype=np.complex128)
    for factor, start, stop in block_layout(spec):
        out[start:stop, start:stop] = factor_block(factor, z, tol)
    return DomainPoint(type_iii_shape(g), out)


def vec_sym(matrix: np.ndarray) -> np.ndarray:
    """Flatten a symmetric g x g matrix to its g(g+1)/2 upper-triangle
    coordinates, row major."""
    matrix = np.asarray(matrix, dtype=np.complex128)
    g = matrix.shape[0]
    rows, cols = np.triu_indices(g)
    return matrix[rows, cols]


def unvec_sym(vector: np.ndarray, g: int) -> np.ndarray:
    """Inverse of :func:`vec_sym`."""
    vector = np.asarray(vector, dtype=np.complex128).reshape(-1)
    if vector.size != g * (g + 1) // 2:
        raise DimensionMismatch(f"expected {g * (g + 1) // 2} coordinates, got {vector.size}")
    out = np.zeros((g, g), dtype=np.complex128)
    rows, cols = np.triu_indices(g)
    out[rows, cols] = vector
    out[cols, rows] = vector
    return out


@dataclass(frozen=True)
class BuiltEmbedding:
    """Executable linear form of an embedding.

    ``matrix`` maps source coordinates to the flattened symmetric target
    coordinates; ``blocks`` records each factor's diagonal range.
    """

    spec: EmbeddingSpec
    matrix: np.ndarray
    blocks: tuple[tuple[FactorSpec, int, int], ...] = field(repr=False)

    def apply(self, z: BallPoint) -> DomainPoint:
        image = unvec_sym(self.matrix @ z.coords, self.spec.target_g)
        return DomainPoint(type_iii_shape(self.spec.target_g), image)


def _check_linearity(
    spec: EmbeddingSpec,
    matrix: np.ndarray,
    tol: Tolerance,
    check_points: int,
    seed: int,
) -> None:
    rng = np.random.Generator(np.random.Philox(key=np.array([seed, 0x11E4], dtype=np.uint64)))
    n = spec.source_dim
    worst = 0.0
    worst_z = None
    for _ in range(check_points):
        direction = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        direction /= np.linalg.norm(direction)
        point = BallPoint(direction * (0.95 * rng.random()))
        expected = direct_sum_embed(spec, point, tol).z
        residual = max_abs(expected - unvec_sym(matrix @ point.coords, spec.target_g))
        if residual > worst:
            worst, worst_z = residual, point
    if worst > tol.eq_tol:
        raise NonlinearityDetected(
            f"embedding deviates from its linearization by {worst:.3e} > {tol.eq_tol:.3e} "
            f"at z={np.array2string(worst_z.coords, precision=6)}"
        )


def linearize(
    spec: EmbeddingSpec,
    tol: Tolerance = DEFAULT_TOLERANCE,
    check_points: int = 50,
    seed: int = 0,
) -> BuiltEmbedding:
    """Assemble the coordinate matrix of an embedding and verify linearity.

    Columns are probed at radius ``LINEARIZATION_PROBE`` along each source
    axis; the result is then compared against the direct evaluation on
    ``check_points`` seeded interior points, raising
    :class:`NonlinearityDetected` on disagreement beyond ``eq_tol``.
    """
    n = spec.source_dim
    columns = []
    for k in range(n):
        probe = np.zeros(n, dtype=np.complex128)
        probe[k] = LINEARIZATION_PROBE
        image = direct_sum_embed(spec, BallPoint(probe), tol)
        columns.append(vec_sym(image.z) / LINEARIZATION_PROBE)
    matrix = np.column_stack(columns)
    _check_linearity(spec, matrix, tol, check_points, seed)
    matrix.setflags(write=False)
    return BuiltEmbedding(spec, matrix, block_layout(spec))


def factor_catalog(source_dim: int) -> tuple[FactorSpec, ...]:
    """All admissible factor kinds for a given source dimension."""
    if source_dim < 1:
        raise DimensionMismatch(f"source dimension must be positive, got {source_dim}")
    factors = [FactorSpec(FactorKind.CONNECTING_LAMBDA, source_dim, m) for m in range(1, source_dim + 1)]
    if source_dim % 4 == 1:
        factors.append(FactorSpec(FactorKind.LAMBDA_III, source_dim, (source_dim + 1) // 2))
    factors.append(FactorSpec(FactorKind.STANDARD_I, source_dim, 1))
    if source_dim == 1:
        factors.append(FactorSpec(FactorKind.STANDARD_III, 1, 1))
    return tuple(sorted(factors, key=lambda f: (f.kind.value, f.m)))


def enumerate_specs(source_dim: int, g_max: int) -> tuple[tuple[EmbeddingSpec, ...], int]:
    """All factor multisets within the genus budget, plus the minimal genus.

    Specs are deduplicated up to factor reordering (multisets are
    generated directly) and each carries ``target_g`` equal to its exact
    cost.  ``minimal_g`` is the smallest cost over all nonempty multisets,
    reported even when the budget admits none.
    """
    if source_dim < 1 or g_max < 1:
        raise DimensionMismatch("source dimension and budget must be positive")
    catalog = factor_catalog(source_dim)
    minimal_g = min(f.cost for f in catalog)
    specs: list[EmbeddingSpec] = []

    def extend(start: int, chosen: list[FactorSpec], budget: int) -> None:
        for i in range(start, len(catalog)):
            f = catalog[i]
            if f.cost > budget:
                continue
            chosen.append(f)
            specs.append(EmbeddingSpec(source_dim, tuple(chosen), sum(c.cost for c in chosen)))
            extend(i, chosen, budget - f.cost)
            chosen.pop()

    extend(0, [], g_max)
    specs.sort(key=lambda s: (s.cost, tuple((f.kind.value, f.m) for f in s.factors)))
    return tuple(specs), minimal_g
