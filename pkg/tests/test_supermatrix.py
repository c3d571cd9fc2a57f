"""Supermatrices over Q and Grassmann algebras: arithmetic, Berezinian, LDU."""

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superschur import (
    DimensionError,
    FormatError,
    GrassmannElement,
    NotInvertible,
    ParityError,
    SuperDim,
    SuperMatrix,
    berezinian,
    block_parity,
    dilation,
    even_det,
    even_matrix_inverse,
    gl_point,
    ldu_factor,
    random_gl_point,
    rational_elementary_factors,
    realize_elementary_factors,
    superbracket,
    supertrace,
    transvection,
)

D11 = SuperDim(1, 1)
D21 = SuperDim(2, 1)


def perm_det(rows):
    """Reference determinant: signed permutation expansion.

    Valid whenever the entries commute with each other, which holds for
    rationals and for even Grassmann elements.
    """
    size = len(rows)
    total = None
    for perm in itertools.permutations(range(size)):
        inversions = sum(
            1 for a in range(size) for b in range(a + 1, size) if perm[a] > perm[b]
        )
        term = Fraction(-1 if inversions % 2 else 1)
        for i in range(size):
            term = term * rows[i][perm[i]]
        total = term if total is None else total + term
    return total


def even_entries(num_generators=3):
    masks = [m for m in range(1 << num_generators) if bin(m).count("1") % 2 == 0]
    coeffs = st.integers(min_value=-3, max_value=3).map(Fraction)
    return st.dictionaries(st.sampled_from(masks), coeffs, max_size=3).map(
        lambda terms: GrassmannElement(num_generators, terms)
    )


def grassmann_pair():
    x1 = GrassmannElement.generator(2, 1)
    x2 = GrassmannElement.generator(2, 2)
    one = GrassmannElement.scalar(2, 1)
    return one, x1, x2


def test_parity_of_positions():
    assert [D21.parity(i) for i in (1, 2, 3)] == [0, 0, 1]
    with pytest.raises(DimensionError):
        D21.parity(4)


def test_supertrace_signs():
    mat = SuperMatrix(D11, [[3, 5], [7, 2]])
    assert supertrace(mat) == 1
    assert supertrace(SuperMatrix.identity(D21)) == 2 - 1


def test_berezinian_worked_example():
    one, x1, x2 = grassmann_pair()
    mat = SuperMatrix(D11, [[one, x1], [x2, one]], 2)
    assert berezinian(mat) == one - x1 * x2


def test_berezinian_needs_gl_point():
    mat = SuperMatrix(D11, [[0, 0], [0, 1]])
    with pytest.raises(NotInvertible):
        berezinian(mat)


def test_transvections_compose_additively():
    one, x1, x2 = grassmann_pair()
    left = transvection(D11, 1, 2, x1, 2)
    right = transvection(D11, 1, 2, x2, 2)
    prod = left * right
    assert prod.entries[0][1] == x1 + x2
    assert prod.entries[0][0] == one


def test_transvection_parity_enforced():
    one, x1, x2 = grassmann_pair()
    with pytest.raises(ParityError):
        transvection(D11, 1, 2, one, 2)
    with pytest.raises(ParityError):
        transvection(D21, 1, 2, x1, 2)
    with pytest.raises(ParityError):
        transvection(D11, 1, 2, 1)


def test_dilation_needs_invertible_even_value():
    _, x1, x2 = grassmann_pair()
    with pytest.raises(ParityError):
        dilation(D11, 1, x1, 2)
    with pytest.raises(NotInvertible):
        dilation(D11, 1, x1 * x2, 2)
    with pytest.raises(NotInvertible):
        dilation(D11, 1, 0)


def test_ldu_worked_example():
    one, x1, x2 = grassmann_pair()
    zero = GrassmannElement.zero(2)
    mat = SuperMatrix(D11, [[one, x1], [x2, one]], 2)
    upper, blockdiag, lower = ldu_factor(mat)
    assert upper == SuperMatrix(D11, [[one, x1], [zero, one]], 2)
    assert blockdiag == SuperMatrix(D11, [[one - x1 * x2, zero], [zero, one]], 2)
    assert lower == SuperMatrix(D11, [[one, zero], [x2, one]], 2)
    assert upper * blockdiag * lower == mat


def test_ldu_of_identity():
    ident = SuperMatrix.identity(D21, 2)
    assert ldu_factor(ident) == (ident, ident, ident)


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=1, max_value=3), st.data())
def test_even_det_paths_agree_with_expansion(size, data):
    rows = [
        [data.draw(even_entries()) for _ in range(size)] for _ in range(size)
    ]
    reference = perm_det(rows)
    assert even_det(rows, method="cofactor") == reference
    assert even_det(rows, method="eliminate") == reference


@given(
    st.lists(
        st.lists(st.integers(min_value=-5, max_value=5).map(Fraction), min_size=3, max_size=3),
        min_size=3,
        max_size=3,
    )
)
def test_even_det_rational(rows):
    assert even_det(rows) == perm_det(rows)


def test_even_matrix_inverse_round_trip():
    one, x1, x2 = grassmann_pair()
    zero = GrassmannElement.zero(2)
    rows = [[one + x1 * x2, x1 * x2], [zero, one - x1 * x2]]
    inv = even_matrix_inverse(rows, zero, one)
    prod = [
        [sum((rows[i][k] * inv[k][j] for k in range(2)), zero) for j in range(2)]
        for i in range(2)
    ]
    assert prod == [[one, zero], [zero, one]]


def test_superbracket_of_odd_pair():
    e12 = SuperMatrix.elementary(D11, 1, 2)
    e21 = SuperMatrix.elementary(D11, 2, 1)
    expect = SuperMatrix(D11, [[1, 0], [0, 1]])
    assert superbracket(e12, e21) == expect
    assert superbracket(e12, e12) == SuperMatrix.zero(D11)
    assert block_parity(e12) == 1
    assert block_parity(SuperMatrix.elementary(D11, 1, 1)) == 0


def test_superbracket_rejects_mixed_parity():
    mixed = SuperMatrix(D11, [[1, 1], [0, 0]])
    assert block_parity(mixed) is None
    with pytest.raises(ParityError):
        superbracket(mixed, mixed)


def test_supertrace_twisted_commutativity():
    elems = [
        (i, j, SuperMatrix.elementary(D11, i, j))
        for i in (1, 2)
        for j in (1, 2)
    ]
    for (i, j, x), (k, l, y) in itertools.product(elems, repeat=2):
        px = (D11.parity(i) + D11.parity(j)) % 2
        py = (D11.parity(k) + D11.parity(l)) % 2
        sign = -1 if (px * py) % 2 else 1
        assert supertrace(x * y) == sign * supertrace(y * x)
        assert supertrace(superbracket(x, y)) == 0


def test_point_commutator_matches_scaled_bracket():
    one, x1, x2 = grassmann_pair()
    e12 = SuperMatrix.elementary(D11, 1, 2)
    e21 = SuperMatrix.elementary(D11, 2, 1)
    a_v = gl_point(x1, e12)
    b_w = gl_point(x2, e21)
    lhs = a_v * b_w - b_w * a_v
    # odd coefficients, odd matrices: the interchange sign is -1
    rhs = gl_point(x1 * x2, superbracket(e12, e21)).scale(-1)
    assert lhs == rhs


def test_gl_point_parity_mismatch():
    one, x1, _ = grassmann_pair()
    e12 = SuperMatrix.elementary(D11, 1, 2)
    e11 = SuperMatrix.elementary(D11, 1, 1)
    with pytest.raises(ParityError):
        gl_point(one, e12)
    with pytest.raises(ParityError):
        gl_point(x1, e11)


def test_random_gl_point_deterministic():
    a = random_gl_point(random.Random(7), D21, 4)
    b = random_gl_point(random.Random(7), D21, 4)
    assert a == b
    assert a.is_gl_point()


def test_ldu_reconstructs_random_points():
    rng = random.Random(11)
    for _ in range(10):
        g = random_gl_point(rng, D21, 4)
        upper, blockdiag, lower = ldu_factor(g)
        assert upper * blockdiag * lower == g


@settings(max_examples=30)
@given(
    st.lists(
        st.lists(st.integers(min_value=-4, max_value=4).map(Fraction), min_size=2, max_size=2),
        min_size=2,
        max_size=2,
    )
)
def test_elementary_factors_rebuild_block(rows):
    if perm_det(rows) == 0:
        with pytest.raises(NotInvertible):
            rational_elementary_factors(rows)
        return
    ops = rational_elementary_factors(rows)
    dim = SuperDim(2, 0)
    built = realize_elementary_factors(dim, 0, ops)
    assert [list(r) for r in built.entries] == rows


def test_elementary_factors_handle_swap_pivot():
    rows = [[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]]
    ops = rational_elementary_factors(rows)
    built = realize_elementary_factors(SuperDim(2, 0), 0, ops)
    assert [list(r) for r in built.entries] == rows


def test_json_round_trip_both_rings():
    one, x1, x2 = grassmann_pair()
    mat = SuperMatrix(D11, [[one, x1], [x2, one - x1 * x2]], 2)
    assert SuperMatrix.from_json(mat.to_json()) == mat
    rational = SuperMatrix(D21, [[1, 2, 0], [0, 1, 0], [0, 0, Fraction(1, 3)]])
    assert SuperMatrix.from_json(rational.to_json()) == rational


@pytest.mark.parametrize(
    "payload",
    [
        {"m": 1, "n": 1, "ring": "Q"},
        {"m": 1, "n": 1, "ring": "Q", "entries": [["1"]]},
        {"m": 1, "n": 1, "ring": "Q", "entries": [["1", "x"], ["0", "1"]]},
        {"m": 1, "n": 1, "ring": "grassmann", "entries": [["1", "0"], ["0", "1"]]},
        {"m": 0, "n": 0, "ring": "Q", "entries": []},
        {"m": 1, "n": 1, "ring": "other", "entries": [["1", "0"], ["0", "1"]]},
        [],
    ],
)
def test_json_rejects_malformed(payload):
    with pytest.raises(FormatError):
        SuperMatrix.from_json(payload)


def test_even_point_classification():
    one, x1, x2 = grassmann_pair()
    good = SuperMatrix(D11, [[one, x1], [x2, one]], 2)
    assert good.is_even_point() and good.is_gl_point()
    bad = SuperMatrix(D11, [[x1, x1], [x2, one]], 2)
    assert not bad.is_even_point()
    singular = SuperMatrix(D11, [[x1 * x2, x1], [x2, one]], 2)
    assert singular.is_even_point() and not singular.is_gl_point()
