"""Cross-checks of the exact engines against independent implementations.

sympy serves as the test-side oracle only; the library never imports it.
"""

from fractions import Fraction

import sympy

from eqbounds.poly import Classification, MonomialOrder, Polynomial, buchberger
from eqbounds.polysys import full_pool, greedy_saturate, to_polynomials
from eqbounds.rng import SplitMix64, derive_seed
from eqbounds.solve import solve_zero_dim

SEED = 424242


def to_sympy(p: Polynomial, symbols):
    expr = 0
    for mono, coeff in p.terms.items():
        term = sympy.Rational(coeff.numerator, coeff.denominator)
        for i, e in enumerate(mono):
            if e:
                term *= symbols[i] ** e
        expr += term
    return expr


def from_sympy(expr, symbols, order):
    poly = sympy.Poly(expr, *symbols)
    terms = {}
    for mono, coeff in poly.terms():
        terms[tuple(int(e) for e in mono)] = Fraction(int(coeff.p), int(coeff.q))
    return Polynomial(terms, len(symbols), order)


def random_generators(rng, nvars, order, count):
    gens = []
    for _ in range(count):
        i, j, k = (rng.randint(0, nvars - 1) for _ in range(3))
        xi, xj, xk = (Polynomial.variable(t, nvars, order) for t in (i, j, k))
        gens.append(xi + xj - xk if rng.randint(0, 1) else xi * xj - xk)
    if rng.randint(0, 1):
        gens.append(
            Polynomial.variable(rng.randint(0, nvars - 1), nvars, order)
            - Polynomial.constant(1, nvars, order)
        )
    return gens


def test_lex_basis_matches_sympy():
    checked = 0
    trial = 0
    while checked < 30 and trial < 120:
        rng = SplitMix64(derive_seed(SEED, trial))
        trial += 1
        nvars = rng.randint(2, 3)
        order = MonomialOrder.lex(nvars)
        gens = random_generators(rng, nvars, order, rng.randint(2, 4))
        mine = buchberger(gens, order)
        symbols = sympy.symbols(f"y1:{nvars + 1}")
        theirs = sympy.groebner(
            [to_sympy(g, symbols) for g in gens], *symbols, order="lex"
        )
        if mine.contains_one:
            assert list(theirs.exprs) == [1]
            checked += 1
            continue
        expected = sorted(
            (from_sympy(e, symbols, order).monic() for e in theirs.exprs),
            key=lambda p: order.key(p.lead_monomial()),
        )
        assert list(mine.generators) == expected
        checked += 1
    assert checked == 30


def test_solutions_match_sympy_on_saturated_systems():
    pool = full_pool(3, "full_En")
    compared = 0
    trial = 0
    while compared < 12 and trial < 60:
        rng = SplitMix64(derive_seed(SEED, 1000 + trial))
        trial += 1
        outcome = greedy_saturate(pool, rng)
        if outcome.classification is not Classification.ZERO_DIMENSIONAL:
            continue
        polys = to_polynomials(outcome.system)
        if not polys:
            continue
        symbols = sympy.symbols("z1:4")
        try:
            expected = sympy.solve_poly_system(
                [to_sympy(g, symbols) for g in polys], *symbols
            )
        except NotImplementedError:
            continue
        mine = solve_zero_dim(polys)
        expected_points = [
            tuple(complex(sympy.nsimplify(c).evalf(20)) for c in sol) for sol in expected
        ]
        deduped = {
            tuple((round(z.real, 6), round(z.imag, 6)) for z in pt)
            for pt in expected_points
        }
        assert len(mine) == len(deduped)
        for sol in mine:
            best = min(
                expected_points,
                key=lambda pt: max(abs(a - b) for a, b in zip(pt, sol.entries)),
            )
            assert max(abs(a - b) for a, b in zip(best, sol.entries)) < 1e-6
        compared += 1
    assert compared == 12


def test_greedy_saturation_error_free_at_n4_n5():
    # wide sweep: no solver errors recorded, every zero-dim trial solved
    for n, trials in ((4, 120), (5, 40)):
        pool = full_pool(n, "with_units_fixed_x1")
        for t in range(trials):
            outcome = greedy_saturate(pool, SplitMix64(derive_seed(SEED, n * 10000 + t)))
            assert outcome.errors == ()
            if outcome.classification is Classification.ZERO_DIMENSIONAL:
                assert outcome.solutions, f"zero-dim trial {t} produced no points"
