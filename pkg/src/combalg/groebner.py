"""Division, S-polynomials, Buchberger's algorithm and weight certificates.

Hot loops work on raw ``{exponent: coefficient}`` dicts; the public
functions accept and return :class:`~combalg.poly.Polynomial`.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from combalg.orders import MonomialOrder
from combalg.poly import (
    Ideal,
    Polynomial,
    PolynomialRing,
    RingMismatch,
    coprime,
    divides,
    minimalize,
    mono_div,
    mono_lcm,
    mono_mul,
)


class WeightSolverError(ArithmeticError):
    pass


def _check_ring(order, polys):
    for p in polys:
        if p.ring != order.ring:
            raise RingMismatch("polynomial does not belong to the order's ring")


def _lead(terms, key):
    m = max(terms, key=key)
    return m, terms[m]


def _sub_multiple(p, field, factor, shift, g):
    """p -= factor * x^shift * g, in place."""
    for e, a in g.items():
        e2 = mono_mul(e, shift)
        s = field.sub(p.get(e2, field.zero), field.mul(factor, a))
        if s:
            p[e2] = s
        else:
            p.pop(e2, None)


def _reduce(terms, divisors, key, field):
    """Full reduction of ``terms`` by ``divisors`` = [(lead_mono, lead_coef, terms)].

    The order-largest reducible monomial is always reduced first; divisors are
    tried in list order.
    """
    p = dict(terms)
    r = {}
    while p:
        m, c = _lead(p, key)
        for lm, lc, g in divisors:
            if divides(lm, m):
                _sub_multiple(p, field, field.div(c, lc), mono_div(m, lm), g)
                break
        else:
            r[m] = c
            del p[m]
    return r


def _monic(terms, key, field):
    _, lc = _lead(terms, key)
    inv = field.inv(lc)
    return {e: field.mul(inv, c) for e, c in terms.items()}


def _spoly(f, g, key, field):
    lf, cf = _lead(f, key)
    lg, cg = _lead(g, key)
    L = mono_lcm(lf, lg)
    out = {}
    _sub_multiple(out, field, field.inv(cf), mono_div(L, lf), f)
    _sub_multiple(out, field, field.neg(field.inv(cg)), mono_div(L, lg), g)
    # out now holds -(L/lf)/cf * f + (L/lg)/cg * g; flip the sign
    return {e: field.neg(c) for e, c in out.items()}


def normal_form(f, basis, order):
    _check_ring(order, [f, *basis])
    key, field = order.key, order.ring.field
    divisors = []
    for b in basis:
        if b.is_zero():
            raise ValueError("zero polynomial in divisor list")
        t = b._terms
        lm, lc = _lead(t, key)
        divisors.append((lm, lc, t))
    return Polynomial._raw(f.ring, _reduce(f._terms, divisors, key, field))


def s_polynomial(f, g, order):
    _check_ring(order, [f, g])
    if f.is_zero() or g.is_zero():
        raise ValueError("S-polynomial of a zero polynomial")
    return Polynomial._raw(f.ring, _spoly(f._terms, g._terms, order.key, order.ring.field))


@dataclass(frozen=True)
class GroebnerBasis:
    order: MonomialOrder
    polynomials: tuple
    reduced: bool = True

    @property
    def ring(self):
        return self.order.ring

    def leading_monomials(self):
        key = self.order.key
        return [max(p.monomials(), key=key) for p in self.polynomials]

    def __iter__(self):
        return iter(self.polynomials)

    def __len__(self):
        return len(self.polynomials)


def _buchberger_raw(gens, key, field):
    """Unreduced Groebner basis of raw term dicts (normal selection strategy)."""
    basis = []  # (lead_mono, lead_coef, terms)
    pairs = set()

    def add(t):
        t = _monic(t, key, field)
        lm = max(t, key=key)
        j = len(basis)
        basis.append((lm, field.one, t))
        for i in range(j):
            pairs.add((i, j))

    for g in gens:
        r = _reduce(g, basis, key, field)
        if r:
            add(r)
    while pairs:
        def rank(ij):
            L = mono_lcm(basis[ij[0]][0], basis[ij[1]][0])
            return (sum(L), key(L), ij)

        ij = min(pairs, key=rank)
        pairs.discard(ij)
        (li, _, fi), (lj, _, fj) = basis[ij[0]], basis[ij[1]]
        if coprime(li, lj):
            continue
        if len(fi) == 1 and len(fj) == 1:
            continue
        r = _reduce(_spoly(fi, fj, key, field), basis, key, field)
        if r:
            add(r)
    return [t for _, _, t in basis]


def _interreduce(polys, key, field):
    """Reduced basis from any Groebner basis (raw dicts, monic)."""
    polys = [_monic(t, key, field) for t in polys if t]
    leads = [max(t, key=key) for t in polys]
    keep = []
    for i, (lm, t) in enumerate(zip(leads, polys)):
        redundant = False
        for j, lj in enumerate(leads):
            if j == i or not divides(lj, lm):
                continue
            # equal leads: keep the first occurrence only
            if lj != lm or j < i:
                redundant = True
                break
        if not redundant:
            keep.append(t)
    out = []
    for i, t in enumerate(keep):
        others = []
        for j, s in enumerate(keep):
            if j != i:
                others.append((max(s, key=key), field.one, s))
        lm = max(t, key=key)
        tail = {e: c for e, c in t.items() if e != lm}
        r = _reduce(tail, others, key, field)
        r[lm] = field.one
        out.append(r)
    out.sort(key=lambda t: key(max(t, key=key)), reverse=True)
    return out


def buchberger(ideal, order):
    """The reduced Groebner basis of ``ideal`` under ``order``."""
    if isinstance(ideal, Ideal):
        gens = list(ideal.generators)
    else:
        gens = [g for g in ideal if not g.is_zero()]
    _check_ring(order, gens)
    key, field = order.key, order.ring.field
    raw = _buchberger_raw([g._terms for g in gens], key, field)
    red = _interreduce(raw, key, field)
    return GroebnerBasis(order, tuple(Polynomial._raw(order.ring, t) for t in red), True)


def initial_ideal(ideal, order):
    """Minimal monomial generators of in_<(ideal), largest first."""
    gb = buchberger(ideal, order)
    return sorted(minimalize(gb.leading_monomials()), key=order.key, reverse=True)


@dataclass(frozen=True)
class GroebnerCheck:
    holds: bool
    pair: tuple = None
    remainder: Polynomial = None


def is_groebner_basis(gens, order, use_coprime=True):
    gens = list(gens)
    _check_ring(order, gens)
    if any(g.is_zero() for g in gens):
        raise ValueError("zero polynomial in candidate basis")
    key, field = order.key, order.ring.field
    divisors = []
    for g in gens:
        lm, lc = _lead(g._terms, key)
        divisors.append((lm, lc, g._terms))
    for j in range(len(gens)):
        for i in range(j):
            li, lj = divisors[i][0], divisors[j][0]
            if use_coprime and coprime(li, lj):
                continue
            r = _reduce(_spoly(divisors[i][2], divisors[j][2], key, field), divisors, key, field)
            if r:
                return GroebnerCheck(False, (i, j), Polynomial._raw(order.ring, r))
    return GroebnerCheck(True)


# -- weight certificates ----------------------------------------------------


def _weight_constraints(basis):
    key = basis.order.key
    rows = set()
    for p in basis.polynomials:
        lm = max(p.monomials(), key=key)
        for e in p.monomials():
            if e != lm:
                rows.add(tuple(a - b for a, b in zip(lm, e)))
    return sorted(rows)


def check_weight_certificate(basis, w):
    """True iff under ``w`` every leading monomial strictly outweighs its tail."""
    key = basis.order.key
    for p in basis.polynomials:
        lm = max(p.monomials(), key=key)
        top = sum(a * b for a, b in zip(w, lm))
        for e in p.monomials():
            if e != lm and sum(a * b for a, b in zip(w, e)) >= top:
                return False
    return True


def _normalize_row(coeffs, bound):
    # scale so the first nonzero coefficient has absolute value 1
    for c in coeffs:
        if c:
            s = abs(c)
            return tuple(x / s for x in coeffs), bound / s
    return coeffs, bound


def _fourier_motzkin(rows, n, cap):
    """Find rational w with row.w >= 1 for every row and w >= 0, or None.

    Returns None when the constraint count exceeds ``cap``.
    """
    cons = set()
    for r in rows:
        cons.add(_normalize_row(tuple(Fraction(x) for x in r), Fraction(1)))
    for i in range(n):
        unit = [Fraction(0)] * n
        unit[i] = Fraction(1)
        cons.add((tuple(unit), Fraction(0)))
    stages = []
    for k in reversed(range(n)):
        lower, upper, rest = [], [], set()
        for a, b in cons:
            if a[k] > 0:
                lower.append((a, b))
            elif a[k] < 0:
                upper.append((a, b))
            else:
                rest.add((a, b))
        stages.append((k, lower, upper))
        for ap, bp in lower:
            for aq, bq in upper:
                s, t = -aq[k], ap[k]
                a = tuple(s * x + t * y for x, y in zip(ap, aq))
                rest.add(_normalize_row(a, s * bp + t * bq))
        for a, b in rest:
            if not any(a) and b > 0:
                raise WeightSolverError("weight constraints are infeasible")
        cons = {(a, b) for a, b in rest if any(a)}
        if len(cons) > cap:
            return None
    w = [Fraction(0)] * n
    for k, lower, upper in reversed(stages):
        def bound(a, b):
            # a[k]*w_k + sum_{j != k} a[j]*w_j >= b
            return (b - sum(a[j] * w[j] for j in range(n) if j != k)) / a[k]

        lo = max((bound(a, b) for a, b in lower), default=Fraction(0))
        hi = min((bound(a, b) for a, b in upper), default=None)
        if hi is not None and lo > hi:
            raise WeightSolverError("back substitution failed")
        w[k] = lo
    return w


def _lex_power_weights(basis, rows):
    # w_{perm[k]} = D^(n-1-k) dominates any bounded exponent difference
    order = basis.order
    n = order.ring.nvars
    D = max((abs(x) for r in rows for x in r), default=0) + 1
    lexw = [0] * n
    for k, i in enumerate(order.permutation):
        lexw[i] = D ** (n - 1 - k)
    if order.weights is None:
        return lexw
    K = max((abs(sum(a * b for a, b in zip(r, lexw))) for r in rows), default=0) + 1
    return [K * a + b for a, b in zip(order.weights, lexw)]


def find_weight_vector(basis, cap=20000):
    """A natural weight vector w with in_w(g) = in_<(g) for every basis member."""
    if not basis.reduced:
        raise ValueError("weight certificates are computed from a reduced basis")
    n = basis.ring.nvars
    rows = _weight_constraints(basis)
    w = _fourier_motzkin(rows, n, cap)
    if w is None:
        w = _lex_power_weights(basis, rows)
    else:
        den = lcm(*(x.denominator for x in w)) if w else 1
        w = [int(x * den) for x in w]
    w = tuple(w)
    if not check_weight_certificate(basis, w):
        raise WeightSolverError("weight certificate failed verification")
    return w


# -- homogenization ---------------------------------------------------------


def homogenize_w(f, w, var_name=None):
    """Homogenize f for the grading deg(x_i) = w_i using a fresh weight-1 variable.

    Returns the homogenized polynomial in the extended ring.
    """
    if f.is_zero():
        raise ValueError("cannot homogenize the zero polynomial")
    w = tuple(w)
    ring = f.ring
    if len(w) != ring.nvars:
        raise RingMismatch("weight vector length does not match ring")
    name = var_name or ring.fresh_name("Z")
    ext = PolynomialRing(ring.variables + (name,), ring.field, w + (1,))
    degs = {e: sum(a * b for a, b in zip(w, e)) for e in f.monomials()}
    top = max(degs.values())
    return Polynomial._raw(ext, {e + (top - degs[e],): c for e, c in f.items()})


def homogenize_ideal(basis, w, var_name=None):
    """hom_w of the ideal generated by a Groebner basis: homogenize each member."""
    name = var_name or basis.ring.fresh_name("Z")
    return [homogenize_w(p, w, name) for p in basis.polynomials]


def specialize(f, var, value):
    """Substitute 0 or 1 for ``var``; the result lives in the ring without it."""
    if value not in (0, 1):
        raise ValueError("specialization value must be 0 or 1")
    ring = f.ring
    i = ring.index(var)
    target = ring.without(var)
    field = ring.field
    out = {}
    for e, c in f.items():
        if value == 0 and e[i]:
            continue
        e2 = e[:i] + e[i + 1:]
        s = field.add(out.get(e2, field.zero), c)
        if s:
            out[e2] = s
        else:
            out.pop(e2, None)
    return Polynomial._raw(target, out)
