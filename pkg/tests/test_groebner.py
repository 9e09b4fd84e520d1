import random

import pytest

from combalg.field import GF, QQ
from combalg.groebner import (
    buchberger,
    check_weight_certificate,
    find_weight_vector,
    homogenize_ideal,
    homogenize_w,
    initial_ideal,
    is_groebner_basis,
    normal_form,
    s_polynomial,
    specialize,
)
from combalg.orders import MonomialOrder
from combalg.parse import parse_polynomial
from combalg.poly import Polynomial, PolynomialRing, RingMismatch, divides, minimalize, monomials_of_degree
from combalg.segre import minors, segre_ring

from conftest import EXPECTED_SEVEN, monos
from oracles import hilbert_by_linear_algebra, random_ideal, sympy_reduced_basis


def _p(text, ring):
    return parse_polynomial(text, ring)


def test_normal_form_examples(ctx12):
    P, o = ctx12.P, ctx12.order
    basis = [_p(t, P) for t in ("X00*X11", "X00*X12", "X01*X12")]
    f = _p("X01^3", P)
    assert normal_form(f, basis, o) == f
    assert normal_form(f, [f], o).is_zero()
    M = minors(ctx12)
    assert normal_form(s_polynomial(M[0], M[1], o), M, o).is_zero()


def test_normal_form_remainder_is_reduced(ctx12):
    P, o = ctx12.P, ctx12.order
    M = minors(ctx12)
    leads = [max(m.monomials(), key=o.key) for m in M]
    f = _p("X00^2*X11*X12 + 3*X01*X10*X12 - X02", P)
    r = normal_form(f, M, o)
    assert all(not divides(l, e) for e in r.monomials() for l in leads)


def test_s_polynomial_examples(ctx12):
    P, o = ctx12.P, ctx12.order
    f = _p("X00*X11 - X01*X10", P)
    h = _p("X00*X12 - X02*X10", P)
    assert s_polynomial(f, h, o) == _p("X02*X10*X11 - X01*X10*X12", P)
    assert s_polynomial(_p("X00", P), _p("X11", P), o).is_zero()
    assert s_polynomial(f, f, o).is_zero()
    with pytest.raises(ValueError):
        s_polynomial(f, P.zero(), o)


def test_buchberger_single(B, g):
    o = MonomialOrder.lex(B)
    gb = buchberger([g.scale(5)], o)
    assert list(gb) == [g]


def test_minors_are_a_reduced_basis(ctx12):
    o = ctx12.order
    M = minors(ctx12)
    assert set(buchberger(M, o)) == set(M)
    assert is_groebner_basis(M, o).holds


def test_ex_main_initial_ideal_column_major(ex_main):
    ctx, gens = ex_main
    assert len(gens) == 7
    gb = buchberger(gens, ctx.order)
    assert set(gb.leading_monomials()) == monos(ctx.P, EXPECTED_SEVEN)
    assert set(initial_ideal(gens, ctx.order)) == monos(ctx.P, EXPECTED_SEVEN)


def test_elliptic_initial(B, g):
    assert initial_ideal([g], MonomialOrder.lex(B)) == [(1, 1, 1)]
    assert initial_ideal([], MonomialOrder.lex(B)) == []


def test_is_groebner_basis_failure_witness():
    R = PolynomialRing(("x", "y"))
    o = MonomialOrder.lex(R)
    res = is_groebner_basis([_p("x^2 - y", R), _p("x*y - 1", R)], o)
    assert not res.holds
    assert not res.remainder.is_zero()
    assert is_groebner_basis([], o).holds


def test_coprime_criterion_never_changes_verdict():
    rng = random.Random(5)
    for _ in range(40):
        ring, gens = random_ideal(rng)
        o = MonomialOrder.lex(ring)
        gb = list(buchberger(gens, o))
        for cand in (gens, gb, gb + gens):
            assert is_groebner_basis(cand, o).holds == is_groebner_basis(cand, o, use_coprime=False).holds


def _reduced_invariants(gb):
    o = gb.order
    leads = gb.leading_monomials()
    for i, p in enumerate(gb):
        assert p.coefficient(leads[i]) == 1
        for j, l in enumerate(leads):
            if i != j:
                assert not divides(l, leads[i])
                assert all(not divides(l, e) for e in p.monomials())
    assert is_groebner_basis(list(gb), o).holds


@pytest.mark.parametrize("seed", range(50))
def test_buchberger_matches_sympy_and_is_permutation_invariant(seed):
    rng = random.Random(f"gb/{seed}")
    ring, gens = random_ideal(rng)
    perm = list(range(ring.nvars))
    rng.shuffle(perm)
    o = MonomialOrder(ring, tuple(perm))
    gb = buchberger(gens, o)
    _reduced_invariants(gb)
    shuffled = list(gens)
    rng.shuffle(shuffled)
    assert buchberger(shuffled[::-1], o).polynomials == gb.polynomials
    theirs = {frozenset(d.items()) for d in sympy_reduced_basis(gens, ring, o)}
    ours = {frozenset(p.items()) for p in gb}
    assert ours == theirs


def test_buchberger_over_fp():
    R = PolynomialRing(("x", "y"), GF(3))
    o = MonomialOrder.lex(R)
    # x^2 + 2 = x^2 - 1 in F_3; x*y - y
    gb = buchberger([_p("x^2 + 2", R), _p("x*y - y", R)], o)
    for p in gb:
        assert normal_form(p, list(gb), o).is_zero()
    assert is_groebner_basis(list(gb), o).holds


@pytest.mark.parametrize("seed", range(25))
def test_membership_soundness(seed):
    rng = random.Random(f"member/{seed}")
    ring, gens = random_ideal(rng)
    o = MonomialOrder.lex(ring)
    gb = list(buchberger(gens, o))
    gen = rng.choice(gens)
    f = Polynomial(ring, {tuple(rng.randint(0, 2) for _ in range(ring.nvars)): rng.randint(1, 4)})
    h = Polynomial(ring, {tuple(rng.randint(0, 3) for _ in range(ring.nvars)): rng.randint(-4, 4)
                          for _ in range(3)})
    assert normal_form(f * gen + h, gb, o) == normal_form(h, gb, o)
    assert normal_form(f * gen, gb, o).is_zero()


def _standard_count(ini, n, d):
    return sum(1 for m in monomials_of_degree(n, d) if not any(divides(l, m) for l in ini))


def _nf_rank(gb, order, ring, d):
    from combalg.homology import rank_exact

    basis = monomials_of_degree(ring.nvars, d)
    index = {m: i for i, m in enumerate(basis)}
    rows = []
    for m in basis:
        r = normal_form(ring.monomial(m), list(gb), order)
        row = [0] * len(basis)
        for e, c in r.items():
            row[index[e]] = c
        rows.append(row)
    return rank_exact(rows, QQ)


@pytest.mark.parametrize("seed", range(20))
def test_hilbert_consistency(seed):
    rng = random.Random(f"hilbert/{seed}")
    ring, gens = random_ideal(rng, homogeneous=True)
    o = MonomialOrder.lex(ring)
    gb = buchberger(gens, o)
    ini = initial_ideal(gens, o)
    for d in range(7):
        std = _standard_count(ini, ring.nvars, d)
        assert std == _nf_rank(gb, o, ring, d)
        assert std == hilbert_by_linear_algebra(gens, ring, d)


# -- weights and homogenization -----------------------------------------------


def test_weight_certificate_elliptic(B, g):
    gb = buchberger([g], MonomialOrder.lex(B))
    assert check_weight_certificate(gb, (1, 0, 0))
    assert not check_weight_certificate(gb, (0, 0, 0))
    w = find_weight_vector(gb)
    assert check_weight_certificate(gb, w)


def test_weight_monomial_ideal(ctx12):
    P = ctx12.P
    gb = buchberger([_p("X00*X11", P), _p("X01", P)], ctx12.order)
    assert check_weight_certificate(gb, (0,) * 6)
    assert check_weight_certificate(gb, find_weight_vector(gb))


def test_weight_rejects_unreduced(B, g):
    from combalg.groebner import GroebnerBasis

    with pytest.raises(ValueError):
        find_weight_vector(GroebnerBasis(MonomialOrder.lex(B), (g,), reduced=False))


@pytest.mark.parametrize("seed", range(30))
def test_weight_certificate_gives_same_initial_ideal(seed):
    rng = random.Random(f"weight/{seed}")
    ring, gens = random_ideal(rng)
    perm = list(range(ring.nvars))
    rng.shuffle(perm)
    o = MonomialOrder(ring, tuple(perm))
    gb = buchberger(gens, o)
    w = find_weight_vector(gb)
    assert all(isinstance(x, int) and x >= 0 for x in w)
    assert check_weight_certificate(gb, w)
    assert set(initial_ideal(gens, o.with_weights(w))) == set(initial_ideal(gens, o))


def test_weight_fallback_path(ex_main):
    ctx, gens = ex_main
    gb = buchberger(gens, ctx.order)
    w = find_weight_vector(gb, cap=0)
    assert check_weight_certificate(gb, w)


def test_homogenize_examples(B, g):
    R = PolynomialRing(("X", "Y"))
    h = homogenize_w(_p("X - Y", R), (2, 1))
    assert h.ring.variables == ("X", "Y", "Z")
    assert h == _p("X - Y*Z", h.ring)
    assert homogenize_w(_p("X^2 - Y^4", R), (2, 1)) == _p("X^2 - Y^4", h.ring)
    hg = homogenize_w(g, (1, 0, 0))
    assert hg == _p("Z0*Z1*Z2 + Z1^3*Z + Z2^3*Z", hg.ring)
    assert specialize(hg, "Z", 0) == _p("Z0*Z1*Z2", B)
    assert hg.is_homogeneous(hg.ring.weights)
    with pytest.raises(ValueError):
        homogenize_w(B.zero(), (1, 0, 0))


def test_specialize():
    R = PolynomialRing(("X", "Y", "Z"))
    f = _p("X - Y*Z", R)
    S = PolynomialRing(("X", "Y"))
    assert specialize(f, "Z", 0) == _p("X", S)
    assert specialize(f, "Z", 1) == _p("X - Y", S)
    with pytest.raises(KeyError):
        specialize(f, "W", 0)


@pytest.mark.parametrize("seed", range(20))
def test_homogenize_roundtrip(seed):
    rng = random.Random(f"hom/{seed}")
    ring, gens = random_ideal(rng)
    w = tuple(rng.randint(0, 4) for _ in range(ring.nvars))
    for f in gens:
        h = homogenize_w(f, w)
        assert specialize(h, "Z", 1) == f
        assert h.is_homogeneous(h.ring.weights)


def test_homogenized_ex_main_specializes_to_initial_ideal(ex_main):
    ctx, gens = ex_main
    gb = buchberger(gens, ctx.order)
    w = find_weight_vector(gb)
    special = [specialize(h, "Z", 0) for h in homogenize_ideal(gb, w)]
    assert all(p.is_monomial() for p in special)
    assert set(minimalize(p.monomials()[0] for p in special)) == monos(ctx.P, EXPECTED_SEVEN)


def test_ring_mismatch_errors(B, g, ctx12):
    with pytest.raises(RingMismatch):
        normal_form(g, [g], ctx12.order)
    with pytest.raises(RingMismatch):
        buchberger([g], ctx12.order)
