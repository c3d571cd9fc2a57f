"""Signed actions on r-fold tensor powers of a graded vector space.

Basis words are r-tuples of 1-based letters, listed lexicographically; an
operator is a dense square matrix whose column k holds the image of the k-th
basis word, and composition is the ordinary matrix product.

Three actions live here:

* place permutations: position k of ``word . sigma`` holds letter
  ``word[sigma(k)]``; the sign for a transposition of positions i < j is
  -1 when both letters are odd, times an extra -1 for every odd letter
  strictly between them when the two swapped letters differ in parity
  (moving an odd letter across odd letters costs a sign).  With that rule
  any two transposition decompositions of a permutation give the same
  operator.
* derivations: a homogeneous square matrix x acts in each position, the
  term at position k carrying (-1)^{p(x) * (odd letters strictly before k)}.
* the diagonal group action: a GL point g acts in every position at once;
  expanding the product puts each matrix entry past the new letters to its
  right, so the entry chosen at position k carries
  (-1)^{p(entry) * (odd new letters strictly after k)}.  This is the unique
  sign bookkeeping for which the action is multiplicative under ordinary
  left-to-right matrix products; the test suite holds it to that.

Permutations are tuples in one-line notation (1-based images).  Products
compose left to right on places: ``compose(s, p)(k) = p(s(k))``, and
``operator(s) @ operator(p) == operator(compose(s, p))``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import DimensionError, ParityError
from .grassmann import GrassmannElement, as_element
from .supermatrix import SuperDim, SuperMatrix, block_parity

Word = tuple[int, ...]
Perm = tuple[int, ...]


# --- words -----------------------------------------------------------------


def basis_words(dim: SuperDim, r: int) -> list[Word]:
    if r < 1:
        raise DimensionError("tensor degree must be at least 1")
    return list(itertools.product(range(1, dim.size + 1), repeat=r))


def word_index(dim: SuperDim, word: Word) -> int:
    idx = 0
    for letter in word:
        if not 1 <= letter <= dim.size:
            raise DimensionError(f"letter {letter} not in 1..{dim.size}")
        idx = idx * dim.size + (letter - 1)
    return idx


def word_odd_count(dim: SuperDim, word: Word) -> int:
    return sum(dim.parity(letter) for letter in word)


def swap_letters(dim: SuperDim, word: Word, i: int, j: int) -> tuple[int, Word]:
    """Signed swap of positions i < j (1-based): returns (sign, new word)."""
    r = len(word)
    if not 1 <= i < j <= r:
        raise DimensionError(f"need 1 <= i < j <= {r}")
    pi = dim.parity(word[i - 1])
    pj = dim.parity(word[j - 1])
    between = sum(dim.parity(word[k]) for k in range(i, j - 1))
    exponent = pi * pj + (pi + pj) * between
    swapped = list(word)
    swapped[i - 1], swapped[j - 1] = swapped[j - 1], swapped[i - 1]
    return (-1 if exponent & 1 else 1), tuple(swapped)


# --- permutations (one-line notation, 1-based) -------------------------------


def identity_perm(r: int) -> Perm:
    return tuple(range(1, r + 1))


def compose(first: Perm, then: Perm) -> Perm:
    """Left-to-right composition on places: result(k) = then(first(k))."""
    if len(first) != len(then):
        raise DimensionError("permutations act on different numbers of places")
    return tuple(then[f - 1] for f in first)


def transposition_perm(r: int, i: int, j: int) -> Perm:
    perm = list(range(1, r + 1))
    perm[i - 1], perm[j - 1] = j, i
    return tuple(perm)


def all_perms(r: int):
    return (tuple(p) for p in itertools.permutations(range(1, r + 1)))


def adjacent_decomposition(sigma: Perm) -> list[tuple[int, int]]:
    """Adjacent transpositions whose operators compose (left to right) to sigma.

    Bubble sort on the one-line form: each recorded swap (i, i+1) multiplies
    the running permutation on the right, so the recorded sequence satisfies
    compose(t_1, t_2, ..., t_k) == sigma.
    """
    arr = list(sigma)
    swaps: list[tuple[int, int]] = []
    changed = True
    while changed:
        changed = False
        for i in range(len(arr) - 1):
            if arr[i] > arr[i + 1]:
                arr[i], arr[i + 1] = arr[i + 1], arr[i]
                swaps.append((i + 1, i + 2))
                changed = True
    return swaps


def cycle_decomposition(sigma: Perm) -> list[tuple[int, int]]:
    """General transpositions composing (left to right) to sigma.

    Each cycle (c1 c2 ... cl) contributes (c_{l-1}, c_l), ..., (c1, c2) in
    that order.
    """
    r = len(sigma)
    seen = [False] * r
    out: list[tuple[int, int]] = []
    for start in range(1, r + 1):
        if seen[start - 1]:
            continue
        cycle = [start]
        seen[start - 1] = True
        nxt = sigma[start - 1]
        while nxt != start:
            cycle.append(nxt)
            seen[nxt - 1] = True
            nxt = sigma[nxt - 1]
        for a, b in zip(cycle[-2::-1], cycle[:0:-1]):
            out.append((min(a, b), max(a, b)))
    return out


def _check_decomposition(sigma: Perm, pairs) -> None:
    acc = identity_perm(len(sigma))
    for i, j in pairs:
        acc = compose(acc, transposition_perm(len(sigma), i, j))
    if acc != sigma:
        raise AssertionError(f"decomposition {pairs} does not rebuild {sigma}")


# --- operators ---------------------------------------------------------------


class TensorOperator:
    """Dense endomorphism of the r-fold tensor power, over Q or Lambda_N."""

    __slots__ = ("dim", "r", "grassmann_n", "matrix")

    def __init__(self, dim: SuperDim, r: int, matrix, grassmann_n: int | None = None):
        side = dim.size ** r
        if len(matrix) != side or any(len(row) != side for row in matrix):
            raise DimensionError(f"operator matrix must be {side}x{side}")
        if grassmann_n is None:
            rows = tuple(tuple(Fraction(e) for e in row) for row in matrix)
        else:
            rows = tuple(
                tuple(as_element(e, grassmann_n) for e in row) for row in matrix
            )
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "grassmann_n", grassmann_n)
        object.__setattr__(self, "matrix", rows)

    def __setattr__(self, name, value):
        raise AttributeError("TensorOperator is immutable")

    @property
    def side(self) -> int:
        return self.dim.size ** self.r

    @property
    def zero_element(self):
        if self.grassmann_n is None:
            return Fraction(0)
        return GrassmannElement.zero(self.grassmann_n)

    @classmethod
    def identity(
        cls, dim: SuperDim, r: int, grassmann_n: int | None = None
    ) -> "TensorOperator":
        side = dim.size ** r
        return cls(
            dim,
            r,
            [[1 if i == j else 0 for j in range(side)] for i in range(side)],
            grassmann_n,
        )

    @classmethod
    def zero(
        cls, dim: SuperDim, r: int, grassmann_n: int | None = None
    ) -> "TensorOperator":
        side = dim.size ** r
        return cls(dim, r, [[0] * side for _ in range(side)], grassmann_n)

    @classmethod
    def from_columns(cls, dim, r, columns, grassmann_n=None) -> "TensorOperator":
        side = dim.size ** r
        rows = [[columns[j][i] for j in range(side)] for i in range(side)]
        return cls(dim, r, rows, grassmann_n)

    def lift(self, grassmann_n: int) -> "TensorOperator":
        if self.grassmann_n is not None:
            if self.grassmann_n != grassmann_n:
                raise DimensionError("operator already lives over a different ring")
            return self
        return TensorOperator(self.dim, self.r, self.matrix, grassmann_n)

    def _check_compatible(self, other: "TensorOperator"):
        if (
            self.dim != other.dim
            or self.r != other.r
            or self.grassmann_n != other.grassmann_n
        ):
            raise DimensionError("operators live on different spaces")

    def __mul__(self, other):
        if not isinstance(other, TensorOperator):
            return NotImplemented
        self._check_compatible(other)
        side = self.side
        zero = self.zero_element
        a, b = self.matrix, other.matrix
        rows = []
        for i in range(side):
            arow = a[i]
            out = []
            for j in range(side):
                acc = zero
                for k in range(side):
                    e = arow[k]
                    if e:
                        acc = acc + e * b[k][j]
                out.append(acc)
            rows.append(out)
        return TensorOperator(self.dim, self.r, rows, self.grassmann_n)

    def __add__(self, other):
        if not isinstance(other, TensorOperator):
            return NotImplemented
        self._check_compatible(other)
        rows = [
            [x + y for x, y in zip(r1, r2)]
            for r1, r2 in zip(self.matrix, other.matrix)
        ]
        return TensorOperator(self.dim, self.r, rows, self.grassmann_n)

    def __sub__(self, other):
        if not isinstance(other, TensorOperator):
            return NotImplemented
        self._check_compatible(other)
        rows = [
            [x - y for x, y in zip(r1, r2)]
            for r1, r2 in zip(self.matrix, other.matrix)
        ]
        return TensorOperator(self.dim, self.r, rows, self.grassmann_n)

    def scale(self, value) -> "TensorOperator":
        factor = Fraction(value)
        rows = [[e * factor for e in row] for row in self.matrix]
        return TensorOperator(self.dim, self.r, rows, self.grassmann_n)

    def __eq__(self, other):
        if not isinstance(other, TensorOperator):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.r == other.r
            and self.grassmann_n == other.grassmann_n
            and self.matrix == other.matrix
        )

    def __hash__(self):
        return hash((self.dim, self.r, self.grassmann_n, self.matrix))

    def __repr__(self):
        ring = "Q" if self.grassmann_n is None else f"Lambda_{self.grassmann_n}"
        return f"TensorOperator(({self.dim.m}|{self.dim.n})^r={self.r} over {ring})"

    def apply_word(self, word: Word) -> list:
        """The image column of a basis word, as a dense coefficient list."""
        return [row[word_index(self.dim, word)] for row in self.matrix]


# --- the symmetric group action ----------------------------------------------


def transposition_operator(dim: SuperDim, r: int, i: int, j: int) -> TensorOperator:
    """The signed operator swapping tensor positions i < j."""
    words = basis_words(dim, r)
    side = len(words)
    rows = [[Fraction(0)] * side for _ in range(side)]
    for col, word in enumerate(words):
        sign, image = swap_letters(dim, word, i, j)
        rows[word_index(dim, image)][col] = Fraction(sign)
    return TensorOperator(dim, r, rows)


def operator_from_transpositions(dim: SuperDim, r: int, pairs) -> TensorOperator:
    acc = TensorOperator.identity(dim, r)
    for i, j in pairs:
        acc = acc * transposition_operator(dim, r, i, j)
    return acc


def permutation_operator(dim: SuperDim, r: int, sigma: Perm) -> TensorOperator:
    """The signed place-permutation operator for sigma (one-line, 1-based)."""
    if len(sigma) != r or sorted(sigma) != list(range(1, r + 1)):
        raise DimensionError(f"{sigma!r} is not a permutation of 1..{r}")
    pairs = adjacent_decomposition(sigma)
    _check_decomposition(sigma, pairs)
    return operator_from_transpositions(dim, r, pairs)


# --- the derivation action ----------------------------------------------------


def derivation_operator(
    x: SuperMatrix, r: int, odd_count: str = "exclusive"
) -> TensorOperator:
    """Derivation action of a homogeneous rational matrix on degree-r words.

    The term acting at position k carries (-1)^{p(x) * o(k)} where o(k)
    counts odd letters strictly before position k ("exclusive").  The
    "inclusive" variant (counting position k as well) exists only so the
    test suite can demonstrate that it breaks the bracket homomorphism.
    """
    if x.grassmann_n is not None:
        raise DimensionError("derivation action takes a rational matrix")
    parity = block_parity(x)
    if parity is None:
        raise ParityError("derivation action needs a homogeneous matrix")
    if odd_count not in ("exclusive", "inclusive"):
        raise ValueError("odd_count must be 'exclusive' or 'inclusive'")
    dim = x.dim
    words = basis_words(dim, r)
    side = len(words)
    rows = [[Fraction(0)] * side for _ in range(side)]
    for col, word in enumerate(words):
        before = 0
        for pos in range(r):
            letter = word[pos]
            here = dim.parity(letter)
            o = before + (here if odd_count == "inclusive" else 0)
            sign = -1 if (parity * o) & 1 else 1
            for target in range(1, dim.size + 1):
                coeff = x.entries[target - 1][letter - 1]
                if coeff:
                    image = word[:pos] + (target,) + word[pos + 1 :]
                    rows[word_index(dim, image)][col] += sign * coeff
            before += here
    return TensorOperator(dim, r, rows)


def point_derivation_operator(
    x: SuperMatrix, alpha: GrassmannElement, r: int
) -> TensorOperator:
    """Derivation action of the point alpha (x) x, over alpha's algebra.

    Requires p(alpha) == p(x).  The coefficient pulled out at position k
    moves right past the unchanged letters after k, so the term carries
    (-1)^{p(alpha) * (odd letters strictly after k)} alpha.  With this rule
    ``diagonal_operator(I + alpha e_ij, r) == identity + this`` holds exactly
    whenever alpha^2 = 0 (odd alpha, or even nilpotent alpha).
    """
    if x.grassmann_n is not None:
        raise DimensionError("the matrix factor must be rational")
    parity = block_parity(x)
    if parity is None:
        raise ParityError("point derivation needs a homogeneous matrix")
    ap = alpha.parity()
    if ap is None or (not alpha.is_zero() and ap != parity):
        raise ParityError("coefficient parity must match the matrix parity")
    n = alpha.num_generators
    dim = x.dim
    words = basis_words(dim, r)
    side = len(words)
    zero = GrassmannElement.zero(n)
    rows = [[zero] * side for _ in range(side)]
    odd_suffix = lambda word, pos: sum(dim.parity(word[k]) for k in range(pos + 1, r))
    for col, word in enumerate(words):
        for pos in range(r):
            letter = word[pos]
            sign = -1 if (ap * odd_suffix(word, pos)) & 1 else 1
            for target in range(1, dim.size + 1):
                coeff = x.entries[target - 1][letter - 1]
                if coeff:
                    image = word[:pos] + (target,) + word[pos + 1 :]
                    idx = word_index(dim, image)
                    rows[idx][col] = rows[idx][col] + alpha * (sign * coeff)
    return TensorOperator(dim, r, rows, n)


# --- the diagonal group action -------------------------------------------------


def diagonal_operator(g: SuperMatrix, r: int) -> TensorOperator:
    """The group element g acting in every tensor position at once.

    Entry signs: expanding g(word_1) (x) ... (x) g(word_r) left to right, the
    matrix entry chosen at position k is moved past the new letters in
    positions k+1..r, picking up (-1)^{p(entry) * sum of their parities}.
    Entry parity is the block parity p(row) + p(col), which is the actual
    parity of every entry of an even point.
    """
    if not g.is_gl_point():
        raise ParityError("diagonal action is defined on GL points")
    dim = g.dim
    words = basis_words(dim, r)
    side = len(words)
    zero = g.zero_element
    rows = [[zero] * side for _ in range(side)]
    parities = [dim.parity(a) for a in range(1, dim.size + 1)]
    for col, word in enumerate(words):
        for targets in itertools.product(range(1, dim.size + 1), repeat=r):
            product = None
            for k in range(r):
                entry = g.entries[targets[k] - 1][word[k] - 1]
                if not entry:
                    product = None
                    break
                product = entry if product is None else product * entry
            if product is None:
                continue
            exponent = 0
            suffix_odd = 0
            for k in range(r - 1, -1, -1):
                entry_parity = (parities[targets[k] - 1] + parities[word[k] - 1]) % 2
                exponent += entry_parity * suffix_odd
                suffix_odd += parities[targets[k] - 1]
            if exponent & 1:
                product = -product
            idx = word_index(dim, targets)
            rows[idx][col] = rows[idx][col] + product
    return TensorOperator(dim, r, rows, g.grassmann_n)
