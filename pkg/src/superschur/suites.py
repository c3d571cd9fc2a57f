"""Named verification suites behind the command line's verify subcommand.

Each suite returns a list of check records: plain dicts with at least
"check" and "pass" keys plus enough context to reproduce the run.  Every
comparison is exact; sampled checks take an explicit seed and report it.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .commutant import (
    check_cap,
    double_centralizer_report,
    rho_theta_equality_report,
)
from .grassmann import GrassmannElement
from .supermatrix import (
    SuperDim,
    SuperMatrix,
    berezinian,
    block_parity,
    dilation,
    gl_point,
    ldu_factor,
    random_gl_point,
    rational_elementary_factors,
    realize_elementary_factors,
    superbracket,
    supertrace,
    transvection,
)
from .tensor import (
    TensorOperator,
    adjacent_decomposition,
    all_perms,
    compose,
    cycle_decomposition,
    derivation_operator,
    diagonal_operator,
    operator_from_transpositions,
    transposition_operator,
)

SUITE_NAMES = ("bracket", "actions", "schurweyl", "group")


def _elementary_pairs(dim: SuperDim):
    for i in range(1, dim.size + 1):
        for j in range(1, dim.size + 1):
            yield i, j, SuperMatrix.elementary(dim, i, j)


def _record(name: str, ok: bool, **extra) -> dict:
    out = {"check": name, "pass": bool(ok)}
    out.update(extra)
    return out


# --- bracket -----------------------------------------------------------------


def suite_bracket(m: int, n: int) -> list[dict]:
    """Exact identities of the rational bracket and the supertrace.

    Elementary matrices span each homogeneous component, so exhausting
    elementary tuples settles every multilinear identity checked here.
    """
    dim = SuperDim(m, n)
    elems = list(_elementary_pairs(dim))
    checks = []

    bad = []
    for (i, j, x), (k, l, y) in itertools.product(elems, repeat=2):
        px = dim.parity(i) ^ dim.parity(j)
        py = dim.parity(k) ^ dim.parity(l)
        sign = -1 if (px * py) % 2 == 0 else 1
        if superbracket(x, y) != superbracket(y, x).scale(sign):
            bad.append([i, j, k, l])
    checks.append(
        _record("bracket_antisymmetry", not bad, m=m, n=n, failures=bad[:3])
    )

    bad = []
    for (i, j, x), (k, l, y), (s, t, z) in itertools.product(elems, repeat=3):
        px = dim.parity(i) ^ dim.parity(j)
        py = dim.parity(k) ^ dim.parity(l)
        lhs = superbracket(x, superbracket(y, z))
        rhs = superbracket(superbracket(x, y), z)
        nested = superbracket(y, superbracket(x, z))
        if (px * py) % 2:
            rhs = rhs - nested
        else:
            rhs = rhs + nested
        if lhs != rhs:
            bad.append([i, j, k, l, s, t])
    checks.append(_record("bracket_jacobi", not bad, m=m, n=n, failures=bad[:3]))

    bad_sym = []
    bad_str = []
    for (i, j, x), (k, l, y) in itertools.product(elems, repeat=2):
        px = dim.parity(i) ^ dim.parity(j)
        py = dim.parity(k) ^ dim.parity(l)
        sign = -1 if (px * py) % 2 else 1
        if supertrace(x * y) != sign * supertrace(y * x):
            bad_sym.append([i, j, k, l])
        if supertrace(superbracket(x, y)) != 0:
            bad_str.append([i, j, k, l])
    checks.append(
        _record("supertrace_twisted_symmetry", not bad_sym, m=m, n=n, failures=bad_sym[:3])
    )
    checks.append(
        _record("supertrace_kills_brackets", not bad_str, m=m, n=n, failures=bad_str[:3])
    )

    # ordinary commutators of Lambda_2 points against the even-rules bracket
    N = 2
    one = GrassmannElement.scalar(N, 1)
    x1 = GrassmannElement.generator(N, 1)
    x2 = GrassmannElement.generator(N, 2)
    coeffs = {0: [one, x1 * x2, one + x1 * x2], 1: [x1, x2, x1 + x2]}
    bad = []
    for (i, j, v), (k, l, w) in itertools.product(elems, repeat=2):
        pv = dim.parity(i) ^ dim.parity(j)
        pw = dim.parity(k) ^ dim.parity(l)
        bracket = superbracket(v, w)
        for a in coeffs[pv]:
            for b in coeffs[pw]:
                left = gl_point(a, v) * gl_point(b, w) - gl_point(b, w) * gl_point(a, v)
                right = gl_point(a * b, bracket)
                if (pw * pv) % 2:
                    right = right.scale(-1)
                if left != right:
                    bad.append([i, j, k, l, repr(a), repr(b)])
    checks.append(
        _record("even_rules_consistency", not bad, m=m, n=n, grassmann_n=N, failures=bad[:3])
    )
    return checks


# --- actions -----------------------------------------------------------------


def suite_actions(m: int, n: int, r: int, seed: int = 0, cap: int | None = None) -> list[dict]:
    """The symmetric-group and derivation actions on degree-r words."""
    check_cap(m, n, r, cap)
    dim = SuperDim(m, n)
    checks = []

    perms = list(all_perms(r))
    operators = {}
    bad = []
    for sigma in perms:
        via_adjacent = operator_from_transpositions(dim, r, adjacent_decomposition(sigma))
        via_cycles = operator_from_transpositions(dim, r, cycle_decomposition(sigma))
        if via_adjacent != via_cycles:
            bad.append(list(sigma))
        operators[sigma] = via_adjacent
    checks.append(
        _record("tau_decomposition_independence", not bad, m=m, n=n, r=r, failures=bad[:3])
    )

    bad = []
    sampled = None
    if len(perms) <= 24:
        pairs = itertools.product(perms, repeat=2)
    else:
        rng = random.Random(seed)
        sampled = 100
        pairs = ((rng.choice(perms), rng.choice(perms)) for _ in range(sampled))
    for sigma, pi in pairs:
        if operators[sigma] * operators[pi] != operators[compose(sigma, pi)]:
            bad.append([list(sigma), list(pi)])
    extra = {"seed": seed, "sampled_pairs": sampled} if sampled else {}
    checks.append(
        _record("tau_right_action", not bad, m=m, n=n, r=r, failures=bad[:3], **extra)
    )

    elems = list(_elementary_pairs(dim))
    thetas = {(i, j): derivation_operator(x, r) for i, j, x in elems}
    bad = []
    for (i, j, x), (k, l, y) in itertools.product(elems, repeat=2):
        px = dim.parity(i) ^ dim.parity(j)
        py = dim.parity(k) ^ dim.parity(l)
        lhs = derivation_operator(superbracket(x, y), r)
        rhs = thetas[(i, j)] * thetas[(k, l)]
        second = thetas[(k, l)] * thetas[(i, j)]
        rhs = rhs + second if (px * py) % 2 else rhs - second
        if lhs != rhs:
            bad.append([i, j, k, l])
    checks.append(
        _record("theta_bracket_homomorphism", not bad, m=m, n=n, r=r, failures=bad[:3])
    )

    if m == 0 or n == 0:
        checks.append(
            _record(
                "theta_inclusive_sign_fails",
                True,
                m=m,
                n=n,
                r=r,
                skipped=True,
                note="no odd elementary matrices, both sign conventions coincide",
            )
        )
    else:
        witness = None
        incl = {(i, j): derivation_operator(x, r, odd_count="inclusive") for i, j, x in elems}
        for (i, j, x), (k, l, y) in itertools.product(elems, repeat=2):
            px = dim.parity(i) ^ dim.parity(j)
            py = dim.parity(k) ^ dim.parity(l)
            lhs = derivation_operator(superbracket(x, y), r, odd_count="inclusive")
            rhs = incl[(i, j)] * incl[(k, l)]
            second = incl[(k, l)] * incl[(i, j)]
            rhs = rhs + second if (px * py) % 2 else rhs - second
            if lhs != rhs:
                witness = [i, j, k, l]
                break
        checks.append(
            _record(
                "theta_inclusive_sign_fails",
                witness is not None,
                m=m,
                n=n,
                r=r,
                witness=witness,
            )
        )

    bad = []
    for pos in range(1, r):
        tau = transposition_operator(dim, r, pos, pos + 1)
        for (i, j, x) in elems:
            th = thetas[(i, j)]
            if tau * th != th * tau:
                bad.append([pos, i, j])
    checks.append(
        _record("tau_theta_commute", not bad, m=m, n=n, r=r, failures=bad[:3])
    )
    return checks


# --- schurweyl ---------------------------------------------------------------


def suite_schurweyl(m: int, n: int, r: int, cap: int | None = None) -> list[dict]:
    """Mutual centralizers and the tableaux dimension bookkeeping."""
    report = double_centralizer_report(m, n, r, cap=cap)
    first = {"check": "double_centralizer", "pass": report["double_centralizer"]}
    first.update(report)
    second = _record(
        "multiplicity_identity",
        report["multiplicity_identity"],
        m=m,
        n=n,
        r=r,
        total=(m + n) ** r,
    )
    return [first, second]


# --- group -------------------------------------------------------------------


def _even_invertibles(N: int):
    soul = GrassmannElement.monomial(N, (1, 2))
    return [
        GrassmannElement.scalar(N, 2),
        GrassmannElement.scalar(N, 1) + soul,
        GrassmannElement.scalar(N, Fraction(-3, 2)) + soul,
    ]


def suite_group(
    m: int,
    n: int,
    r: int,
    grassmann_n: int = 4,
    seed: int = 0,
    trials: int = 5,
    cap: int | None = None,
) -> list[dict]:
    """Group-level checks: Berezinian, factorizations, and the diagonal action."""
    check_cap(m, n, r, cap)
    if grassmann_n < 2:
        raise ValueError("the group suite needs at least two Grassmann generators")
    dim = SuperDim(m, n)
    N = grassmann_n
    checks = []

    report = rho_theta_equality_report(m, n, r, grassmann_n=N, cap=cap)
    first = {"check": "one_parameter_linkage", "pass": report["pass"]}
    first.update(report)
    checks.append(first)

    ident = SuperMatrix.identity(dim, N)
    checks.append(
        _record(
            "rho_identity",
            diagonal_operator(ident, r) == TensorOperator.identity(dim, r, N),
            m=m,
            n=n,
            r=r,
            grassmann_n=N,
        )
    )

    rng = random.Random(seed)
    points = [
        (random_gl_point(rng, dim, N), random_gl_point(rng, dim, N))
        for _ in range(trials)
    ]

    bad = []
    for t, (g, h) in enumerate(points):
        if diagonal_operator(g, r) * diagonal_operator(h, r) != diagonal_operator(g * h, r):
            bad.append(t)
    checks.append(
        _record(
            "rho_homomorphism",
            not bad,
            m=m,
            n=n,
            r=r,
            grassmann_n=N,
            seed=seed,
            trials=trials,
            failures=bad[:3],
        )
    )

    one = GrassmannElement.scalar(N, 1)
    checks.append(
        _record(
            "berezinian_identity",
            berezinian(ident) == one and berezinian(SuperMatrix.identity(dim)) == 1,
            m=m,
            n=n,
            grassmann_n=N,
        )
    )

    odd_values = [GrassmannElement.generator(N, 1), GrassmannElement.generator(N, 2)]
    even_values = [GrassmannElement.scalar(N, 3), GrassmannElement.monomial(N, (1, 2))]
    bad = []
    for i in range(1, dim.size + 1):
        for j in range(1, dim.size + 1):
            if i == j:
                continue
            slot = (dim.parity(i) + dim.parity(j)) % 2
            for value in odd_values if slot else even_values:
                if berezinian(transvection(dim, i, j, value, N)) != one:
                    bad.append([i, j, repr(value)])
    for i in range(1, dim.size + 1):
        for value in _even_invertibles(N):
            got = berezinian(dilation(dim, i, value, N))
            want = value if i <= m else value.inverse()
            if got != want:
                bad.append([i, i, repr(value)])
    checks.append(
        _record("berezinian_one_parameter", not bad, m=m, n=n, grassmann_n=N, failures=bad[:3])
    )

    bad = []
    bad_str = []
    for t, (g, h) in enumerate(points):
        if berezinian(g * h) != berezinian(g) * berezinian(h):
            bad.append(t)
        if supertrace(g * h) != supertrace(h * g):
            bad_str.append(t)
    checks.append(
        _record(
            "berezinian_multiplicative",
            not bad,
            m=m,
            n=n,
            grassmann_n=N,
            seed=seed,
            trials=trials,
            failures=bad[:3],
        )
    )
    checks.append(
        _record(
            "supertrace_even_symmetry",
            not bad_str,
            m=m,
            n=n,
            grassmann_n=N,
            seed=seed,
            trials=trials,
            failures=bad_str[:3],
        )
    )

    bad = []
    idu = ldu_factor(ident)
    if idu != (ident, ident, ident):
        bad.append("identity")
    for t, (g, _) in enumerate(points):
        upper, blockdiag, lower = ldu_factor(g)
        if upper * blockdiag * lower != g:
            bad.append(t)
    checks.append(
        _record(
            "ldu_reconstruction",
            not bad,
            m=m,
            n=n,
            grassmann_n=N,
            seed=seed,
            trials=trials,
            failures=bad[:3],
        )
    )

    bad = []
    for t, (g, _) in enumerate(points):
        body = g.body_matrix()
        target = SuperMatrix(dim, body)
        ops = rational_elementary_factors([row[:m] for row in body[:m]])
        built = realize_elementary_factors(dim, 0, ops)
        ops = rational_elementary_factors([row[m:] for row in body[m:]])
        built = built * realize_elementary_factors(dim, m, ops)
        if built != target:
            bad.append(t)
    checks.append(
        _record(
            "one_parameter_generation",
            not bad,
            m=m,
            n=n,
            seed=seed,
            trials=trials,
            failures=bad[:3],
        )
    )
    return checks


def run_suite(
    name: str,
    m: int,
    n: int,
    r: int,
    grassmann_n: int = 4,
    seed: int = 0,
    cap: int | None = None,
    trials: int = 5,
) -> list[dict]:
    if name == "bracket":
        return suite_bracket(m, n)
    if name == "actions":
        return suite_actions(m, n, r, seed=seed, cap=cap)
    if name == "schurweyl":
        return suite_schurweyl(m, n, r, cap=cap)
    if name == "group":
        return suite_group(m, n, r, grassmann_n=grassmann_n, seed=seed, trials=trials, cap=cap)
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
