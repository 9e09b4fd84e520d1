"""Segre products of two standard graded polynomial rings.

For A = k[Y_0..Y_a] and B = k[Z_0..Z_b] the target ring is
P = k[X_ij].  The default order on P is the row-major lex order
X_00 > X_01 > ... > X_0b > X_10 > ... > X_ab; ``major="column"`` selects
X_00 > X_10 > ... > X_a0 > X_01 > ... > X_ab instead.

For monomial ideals both orders give the same initial ideal.  When the
B-side ideal is not monomial use the column-major order (row-major for a
non-monomial A side); otherwise the predicted families can be wrong, e.g.
the Segre ideal of (Z0 Z1 Z2 + Z1^3 + Z2^3) under row-major has the
non-square-free leading monomial X01^2 X11.
"""

from dataclasses import dataclass, field as dc_field
from itertools import combinations, combinations_with_replacement

from combalg.groebner import initial_ideal, is_groebner_basis
from combalg.field import QQ
from combalg.orders import MonomialOrder
from combalg.poly import (
    Polynomial,
    PolynomialRing,
    RingMismatch,
    is_squarefree,
    minimalize,
    monomials_of_degree,
)


@dataclass(frozen=True)
class SegreContext:
    a: int
    b: int
    field: object = QQ
    major: str = "row"
    A: PolynomialRing = dc_field(init=False)
    B: PolynomialRing = dc_field(init=False)
    P: PolynomialRing = dc_field(init=False)

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError("a and b must be natural numbers")
        if self.major not in ("row", "column"):
            raise ValueError("major must be 'row' or 'column'")
        sep = "" if max(self.a, self.b) < 10 else "_"
        object.__setattr__(self, "A", PolynomialRing(tuple(f"Y{i}" for i in range(self.a + 1)), self.field))
        object.__setattr__(self, "B", PolynomialRing(tuple(f"Z{j}" for j in range(self.b + 1)), self.field))
        names = tuple(f"X{i}{sep}{j}" for i in range(self.a + 1) for j in range(self.b + 1))
        object.__setattr__(self, "P", PolynomialRing(names, self.field))

    @property
    def order_a(self):
        return MonomialOrder.lex(self.A)

    @property
    def order_b(self):
        return MonomialOrder.lex(self.B)

    @property
    def order(self):
        if self.major == "row":
            return MonomialOrder.lex(self.P)
        perm = [self.x(i, j) for j in range(self.b + 1) for i in range(self.a + 1)]
        return MonomialOrder(self.P, tuple(perm))

    def x(self, i, j):
        """Index of X_ij in P."""
        return i * (self.b + 1) + j

    def x_monomial(self, pairs):
        e = [0] * self.P.nvars
        for i, j in pairs:
            e[self.x(i, j)] += 1
        return tuple(e)


def segre_ring(a, b, field=QQ, major="row"):
    return SegreContext(a, b, field, major)


def minors(ctx):
    """The 2-minors X_ij X_hk - X_ik X_hj, i < h, j < k."""
    P = ctx.P
    out = []
    for i, h in combinations(range(ctx.a + 1), 2):
        for j, k in combinations(range(ctx.b + 1), 2):
            out.append(P.monomial(ctx.x_monomial([(i, j), (h, k)]))
                       - P.monomial(ctx.x_monomial([(i, k), (h, j)])))
    return out


def _indices(e):
    # variable indices with multiplicity, weakly increasing
    out = []
    for i, x in enumerate(e):
        out.extend([i] * x)
    return out


def pullback_term(ctx, alpha, beta):
    """X-monomial for Y^alpha Z^beta of bidegree (d, d): pair sorted rows with sorted columns."""
    rows, cols = _indices(alpha), _indices(beta)
    if len(rows) != len(cols):
        raise ValueError("term is not of bidegree (d, d)")
    return ctx.x_monomial(zip(rows, cols))


def _pullback(ctx, terms):
    P = ctx.P
    f = P.field
    out = {}
    for (alpha, beta), c in terms:
        e = pullback_term(ctx, alpha, beta)
        s = f.add(out.get(e, f.zero), c)
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return Polynomial._raw(P, out)


def _homogeneous_degree(g, ring):
    if g.ring != ring:
        raise RingMismatch("generator from the wrong ring")
    if g.is_zero():
        raise ValueError("zero generator")
    if not g.is_homogeneous():
        raise ValueError(f"non-homogeneous generator {g}")
    return g.total_degree()


def segre_ideal_generators(ctx, I_gens, J_gens):
    """Generators of the Segre ideal: 2-minors followed by pullbacks of u*m and m*v."""
    out = minors(ctx)
    for u in I_gens:
        d = _homogeneous_degree(u, ctx.A)
        for m in monomials_of_degree(ctx.B.nvars, d):
            out.append(_pullback(ctx, [((alpha, m), c) for alpha, c in u.items()]))
    for v in J_gens:
        d = _homogeneous_degree(v, ctx.B)
        for m in monomials_of_degree(ctx.A.nvars, d):
            out.append(_pullback(ctx, [((m, beta), c) for beta, c in v.items()]))
    return out


def _as_exponents(m, ring):
    if isinstance(m, Polynomial):
        if m.ring != ring or not m.is_monomial():
            raise ValueError(f"{m} is not a monomial of {ring.variables}")
        return m.monomials()[0]
    m = tuple(m)
    if len(m) != ring.nvars:
        raise RingMismatch("exponent vector length does not match ring")
    return m


def _decreasing(top, length):
    # weakly decreasing sequences top >= s_0 >= ... >= s_{length-1} >= 0
    for combo in combinations_with_replacement(range(top, -1, -1), length):
        yield combo


def family_rows(ctx, U):
    """u(X_{0,i_0}, ..., X_{a,i_a}) over b >= i_0 >= ... >= i_a >= 0."""
    out = []
    for u in U:
        u = _as_exponents(u, ctx.A)
        if not is_squarefree(u):
            raise ValueError("family generators must be square-free")
        for seq in _decreasing(ctx.b, ctx.a + 1):
            out.append(ctx.x_monomial((t, seq[t]) for t in range(ctx.a + 1) if u[t]))
    return out


def family_columns(ctx, V):
    """v(X_{j_0,0}, ..., X_{j_b,b}) over a >= j_0 >= ... >= j_b >= 0."""
    out = []
    for v in V:
        v = _as_exponents(v, ctx.B)
        if not is_squarefree(v):
            raise ValueError("family generators must be square-free")
        for seq in _decreasing(ctx.a, ctx.b + 1):
            out.append(ctx.x_monomial((seq[t], t) for t in range(ctx.b + 1) if v[t]))
    return out


def family_minor_leads(ctx):
    out = []
    for i, h in combinations(range(ctx.a + 1), 2):
        for j, k in combinations(range(ctx.b + 1), 2):
            out.append(ctx.x_monomial([(i, j), (h, k)]))
    return out


def segre_initial_generators(ctx, U, V):
    """Square-free generators of in_<(I#J) predicted from those of in(I), in(J)."""
    mons = family_rows(ctx, U) + family_columns(ctx, V) + family_minor_leads(ctx)
    return sorted(minimalize(mons), key=ctx.order.key, reverse=True)


def proof_generators(ctx, U, V):
    """Families (i)-(iii): the monomials of (i), (ii) and the 2-minors themselves."""
    P = ctx.P
    mons = sorted(set(family_rows(ctx, U) + family_columns(ctx, V)), key=ctx.order.key, reverse=True)
    return [P.monomial(m) for m in mons] + minors(ctx)


@dataclass(frozen=True)
class SegreReport:
    predicted: tuple
    computed: tuple
    holds: bool
    groebner_holds: bool
    squarefree: bool

    @property
    def passed(self):
        return self.holds and self.groebner_holds and self.squarefree


def verify_segre_proposition(ctx, U, V):
    A, B = ctx.A, ctx.B
    U = [_as_exponents(u, A) for u in U]
    V = [_as_exponents(v, B) for v in V]
    I_gens = [A.monomial(u) for u in U]
    J_gens = [B.monomial(v) for v in V]
    gens = segre_ideal_generators(ctx, I_gens, J_gens)
    computed = initial_ideal(gens, ctx.order)
    predicted = segre_initial_generators(ctx, U, V)
    check = is_groebner_basis(proof_generators(ctx, U, V), ctx.order)
    return SegreReport(
        predicted=tuple(predicted),
        computed=tuple(computed),
        holds=set(predicted) == set(computed),
        groebner_holds=check.holds,
        squarefree=all(is_squarefree(m) for m in predicted),
    )
