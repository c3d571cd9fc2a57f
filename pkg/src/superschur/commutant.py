"""Exact linear algebra over Q for spaces and algebras of tensor operators.

Operators are flattened row-major into vectors of length D^2 and kept in a
reduced row-echelon row space, so membership, dimension, and subspace
equality are all exact.  Algebra closure multiplies the current basis by the
original generators until the row space stops growing; centralizers come
from the exact kernel of the stacked commutator system.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import CapExceeded, DimensionError
from .supermatrix import SuperDim, SuperMatrix
from .tableaux import dimension_table
from .tensor import TensorOperator, transposition_operator, derivation_operator

DEFAULT_CAP = 64


def check_cap(m: int, n: int, r: int, cap: int | None) -> int:
    side = (m + n) ** r
    limit = DEFAULT_CAP if cap is None else cap
    if side > limit:
        raise CapExceeded(
            f"word space has dimension {side} > cap {limit}; raise the cap to proceed"
        )
    return side


def flatten(op: TensorOperator) -> list[Fraction]:
    if op.grassmann_n is not None:
        raise DimensionError("row spaces hold rational operators only")
    return [e for row in op.matrix for e in row]


def unflatten(dim: SuperDim, r: int, vec) -> TensorOperator:
    side = dim.size ** r
    rows = [vec[i * side : (i + 1) * side] for i in range(side)]
    return TensorOperator(dim, r, rows)


class RowSpace:
    """A subspace of Q^width kept in reduced row-echelon form."""

    def __init__(self, width: int):
        self.width = width
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _reduce(self, vec) -> list[Fraction]:
        v = [Fraction(e) for e in vec]
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c:
                v = [a - c * b for a, b in zip(v, row)]
        return v

    def contains(self, vec) -> bool:
        return not any(self._reduce(vec))

    def add(self, vec) -> bool:
        """Insert a vector; returns True when the space grew."""
        if len(vec) != self.width:
            raise DimensionError("vector width mismatch")
        v = self._reduce(vec)
        pivot = next((i for i, e in enumerate(v) if e), None)
        if pivot is None:
            return False
        inv = 1 / v[pivot]
        v = [e * inv for e in v]
        # keep earlier rows reduced against the new pivot
        for k, row in enumerate(self.rows):
            c = row[pivot]
            if c:
                self.rows[k] = [a - c * b for a, b in zip(row, v)]
        at = next((k for k, p in enumerate(self.pivots) if p > pivot), len(self.pivots))
        self.rows.insert(at, v)
        self.pivots.insert(at, pivot)
        return True

    def equals(self, other: "RowSpace") -> bool:
        if self.width != other.width or self.dim != other.dim:
            return False
        return all(other.contains(row) for row in self.rows)


class OperatorSpace:
    """A rational span of tensor operators with exact membership tests."""

    def __init__(self, dim: SuperDim, r: int):
        self.dim = dim
        self.r = r
        side = dim.size ** r
        self.space = RowSpace(side * side)
        self.operators: list[TensorOperator] = []

    @property
    def dimension(self) -> int:
        return self.space.dim

    def add(self, op: TensorOperator) -> bool:
        if op.dim != self.dim or op.r != self.r:
            raise DimensionError("operator lives on a different space")
        if self.space.add(flatten(op)):
            self.operators.append(op)
            return True
        return False

    def contains(self, op: TensorOperator) -> bool:
        return self.space.contains(flatten(op))

    def equals(self, other: "OperatorSpace") -> bool:
        return (
            self.dim == other.dim
            and self.r == other.r
            and self.space.equals(other.space)
        )


def span(dim: SuperDim, r: int, ops) -> OperatorSpace:
    out = OperatorSpace(dim, r)
    for op in ops:
        out.add(op)
    return out


def algebra_generated(dim: SuperDim, r: int, generators) -> OperatorSpace:
    """The unital associative algebra generated by the given operators.

    Closure multiplies the current independent set by the original
    generators only: every product word grows one letter at a time on the
    right, so this reaches the full algebra.
    """
    gens = list(generators)
    result = span(dim, r, [TensorOperator.identity(dim, r)] + gens)
    frontier = list(result.operators)
    while frontier:
        fresh = []
        for left in frontier:
            for g in gens:
                candidate = left * g
                if result.add(candidate):
                    fresh.append(candidate)
        frontier = fresh
    return result


def kernel_basis(rows: list[list[Fraction]], width: int) -> list[list[Fraction]]:
    """Exact kernel of the linear system given by ``rows`` (over Q)."""
    space = RowSpace(width)
    for row in rows:
        space.add(row)
    pivot_set = set(space.pivots)
    free_cols = [c for c in range(width) if c not in pivot_set]
    basis = []
    for f in free_cols:
        vec = [Fraction(0)] * width
        vec[f] = Fraction(1)
        for row, p in zip(space.rows, space.pivots):
            vec[p] = -row[f]
        basis.append(vec)
    return basis


def centralizer(dim: SuperDim, r: int, generators) -> OperatorSpace:
    """All operators commuting with every one of the given operators.

    The centralizer of an algebra equals the centralizer of any set that
    generates it, so callers may pass either a full basis or just the
    generators.
    """
    side = dim.size ** r
    gens = [g for g in generators]
    rows: list[list[Fraction]] = []
    for g in gens:
        s = g.matrix
        for i in range(side):
            for j in range(side):
                row = [Fraction(0)] * (side * side)
                for k in range(side):
                    if s[i][k]:
                        row[k * side + j] += s[i][k]
                    if s[k][j]:
                        row[i * side + k] -= s[k][j]
                if any(row):
                    rows.append(row)
    out = OperatorSpace(dim, r)
    for vec in kernel_basis(rows, side * side):
        out.add(unflatten(dim, r, vec))
    return out


# --- reports -----------------------------------------------------------------


def symmetric_group_generators(dim: SuperDim, r: int) -> list[TensorOperator]:
    return [transposition_operator(dim, r, i, i + 1) for i in range(1, r)]


def derivation_generators(dim: SuperDim, r: int) -> list[TensorOperator]:
    out = []
    for i in range(1, dim.size + 1):
        for j in range(1, dim.size + 1):
            out.append(derivation_operator(SuperMatrix.elementary(dim, i, j), r))
    return out


def double_centralizer_report(m: int, n: int, r: int, cap: int | None = None) -> dict:
    """Check that the signed symmetric-group algebra and the derivation
    algebra centralize each other, and that the tableaux counts match the
    two dimensions and the total word count."""
    check_cap(m, n, r, cap)
    dim = SuperDim(m, n)
    perm_gens = symmetric_group_generators(dim, r)
    der_gens = derivation_generators(dim, r)
    perm_algebra = algebra_generated(dim, r, perm_gens)
    der_algebra = algebra_generated(dim, r, der_gens)
    cent_perm = centralizer(dim, r, perm_gens)
    cent_der = centralizer(dim, r, der_gens)
    double_ok = cent_perm.equals(der_algebra) and cent_der.equals(perm_algebra)

    table = dimension_table(m, n, r)
    sum_syt_sq = sum(row["syt"] ** 2 for row in table if row["admissible"])
    sum_ssyt_sq = sum(row["ssyt"] ** 2 for row in table)
    mult_sum = sum(row["syt"] * row["ssyt"] for row in table)
    side = dim.size ** r
    dims_ok = perm_algebra.dimension == sum_syt_sq and der_algebra.dimension == sum_ssyt_sq

    return {
        "m": m,
        "n": n,
        "r": r,
        "dim_tau": perm_algebra.dimension,
        "dim_theta": der_algebra.dimension,
        "double_centralizer": bool(double_ok and dims_ok),
        "multiplicity_identity": mult_sum == side,
        "per_shape": [
            {"shape": row["shape"], "syt": row["syt"], "ssyt": row["ssyt"]}
            for row in table
        ],
    }


def _classical_even_part_ok(m: int, n: int, r: int) -> bool:
    """The diagonal-block group points and diagonal-block derivations
    generate the same rational algebra (the classical unsigned statement)."""
    from .supermatrix import dilation, transvection
    from .tensor import diagonal_operator

    dim = SuperDim(m, n)
    group_ops = []
    blocks = [(1, m), (m + 1, m + n)]
    for lo, hi in blocks:
        for i in range(lo, hi + 1):
            group_ops.append(diagonal_operator(dilation(dim, i, 2), r))
            for j in range(lo, hi + 1):
                if i != j:
                    group_ops.append(diagonal_operator(transvection(dim, i, j, 1), r))
    der_ops = []
    for lo, hi in blocks:
        for i in range(lo, hi + 1):
            for j in range(lo, hi + 1):
                der_ops.append(
                    derivation_operator(SuperMatrix.elementary(dim, i, j), r)
                )
    lhs = algebra_generated(dim, r, group_ops)
    rhs = algebra_generated(dim, r, der_ops)
    return lhs.equals(rhs)


def rho_theta_equality_report(
    m: int, n: int, r: int, grassmann_n: int = 4, cap: int | None = None
) -> dict:
    """Check the linkage between the diagonal group action and the
    derivation action on one-parameter generators.

    Odd generators: diagonal(I + alpha e_ij) = identity + point-derivation
    for alpha in {x1, x2}.  Even off-diagonal generators: same identity for
    the nilpotent alpha = x1 x2.  The even part proper is covered by the
    classical algebra equality on rational points.
    """
    from .grassmann import GrassmannElement
    from .supermatrix import transvection
    from .tensor import diagonal_operator, point_derivation_operator

    check_cap(m, n, r, cap)
    if grassmann_n < 2:
        raise DimensionError("need at least two Grassmann generators")
    dim = SuperDim(m, n)
    N = grassmann_n
    ident = TensorOperator.identity(dim, r, N)
    odd_alphas = [GrassmannElement.generator(N, 1), GrassmannElement.generator(N, 2)]
    even_alpha = GrassmannElement.monomial(N, (1, 2))

    odd_ok = True
    even_ok = True
    for i in range(1, dim.size + 1):
        for j in range(1, dim.size + 1):
            if i == j:
                continue
            elem = SuperMatrix.elementary(dim, i, j)
            if (dim.parity(i) + dim.parity(j)) % 2 == 1:
                for alpha in odd_alphas:
                    lhs = diagonal_operator(transvection(dim, i, j, alpha, N), r)
                    rhs = ident + point_derivation_operator(elem, alpha, r)
                    if lhs != rhs:
                        odd_ok = False
            else:
                lhs = diagonal_operator(transvection(dim, i, j, even_alpha, N), r)
                rhs = ident + point_derivation_operator(elem, even_alpha, r)
                if lhs != rhs:
                    even_ok = False

    classical_ok = _classical_even_part_ok(m, n, r)
    return {
        "m": m,
        "n": n,
        "r": r,
        "grassmann_n": N,
        "odd_generator_identity": odd_ok,
        "even_nilpotent_identity": even_ok,
        "classical_even_part": classical_ok,
        "pass": odd_ok and even_ok and classical_ok,
    }
