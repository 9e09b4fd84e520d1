"""Polynomial rings, polynomials and ideals with exact coefficients.

Monomials are exponent tuples, one entry per ring variable.  A polynomial is
an immutable mapping from exponent tuples to nonzero field scalars.
"""

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import combinations_with_replacement

from combalg.field import QQ, Field

MAX_EXPONENT = 2**63 - 1

_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class RingMismatch(ValueError):
    pass


class ExponentOverflow(OverflowError):
    pass


# -- monomial helpers -------------------------------------------------------


def mono_mul(a, b):
    e = tuple(x + y for x, y in zip(a, b))
    if e and max(e) > MAX_EXPONENT:
        raise ExponentOverflow("exponent exceeds machine width")
    return e


def mono_div(a, b):
    """Quotient a/b; caller guarantees b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def coprime(a, b):
    return all(not (x and y) for x, y in zip(a, b))


def is_squarefree(e):
    return all(x <= 1 for x in e)


def degree(e):
    return sum(e)


def support(e):
    return frozenset(i for i, x in enumerate(e) if x)


def minimalize(monomials):
    """Drop duplicates and every monomial divisible by another one in the list."""
    uniq = sorted(set(monomials), key=lambda e: (sum(e), e))
    kept = []
    for m in uniq:
        if not any(divides(k, m) for k in kept):
            kept.append(m)
    return kept


def monomials_of_degree(nvars, d):
    """All exponent vectors of total degree d in nvars variables."""
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


# -- rings ------------------------------------------------------------------


@dataclass(frozen=True)
class PolynomialRing:
    variables: tuple
    field: Field = QQ
    # grading annotation only; rings differing in weights compare equal
    weights: tuple = dc_field(default=None, compare=False)

    def __post_init__(self):
        names = tuple(self.variables)
        object.__setattr__(self, "variables", names)
        for v in names:
            if not isinstance(v, str) or not _NAME.match(v):
                raise ValueError(f"bad variable name {v!r}")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        if self.weights is not None:
            w = tuple(int(x) for x in self.weights)
            if len(w) != len(names):
                raise ValueError("weight vector needs one entry per variable")
            if any(x < 0 for x in w):
                raise ValueError("weights must be natural numbers")
            object.__setattr__(self, "weights", w)

    @property
    def nvars(self):
        return len(self.variables)

    def index(self, name):
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.monomial((0,) * self.nvars)

    def monomial(self, exps, coeff=1):
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise RingMismatch("exponent vector length does not match ring")
        return Polynomial(self, {exps: self.field(coeff)})

    def var(self, name):
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return self.monomial(e)

    def gens(self):
        return [self.var(v) for v in self.variables]

    def extend(self, name, weight=1):
        """Ring with one extra trailing variable."""
        weights = None
        if self.weights is not None:
            weights = self.weights + (weight,)
        return PolynomialRing(self.variables + (name,), self.field, weights)

    def without(self, name):
        i = self.index(name)
        weights = None
        if self.weights is not None:
            weights = self.weights[:i] + self.weights[i + 1:]
        return PolynomialRing(self.variables[:i] + self.variables[i + 1:], self.field, weights)

    def fresh_name(self, base="Z"):
        name, k = base, 0
        while name in self.variables:
            k += 1
            name = f"{base}_{k}"
        return name

    def monomial_text(self, e):
        parts = []
        for v, x in zip(self.variables, e):
            if x == 1:
                parts.append(v)
            elif x > 1:
                parts.append(f"{v}^{x}")
        return "*".join(parts) if parts else "1"


# -- polynomials ------------------------------------------------------------


class Polynomial:
    """Immutable sparse polynomial over ``ring``."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring, terms):
        field = ring.field
        clean = {}
        n = ring.nvars
        for e, c in terms.items():
            e = tuple(e)
            if len(e) != n:
                raise RingMismatch("exponent vector length does not match ring")
            if any((not isinstance(x, int)) or x < 0 for x in e):
                raise ValueError(f"bad exponent vector {e!r}")
            if e and max(e) > MAX_EXPONENT:
                raise ExponentOverflow("exponent exceeds machine width")
            c = field(c)
            if c:
                clean[e] = c
        self.ring = ring
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring, terms):
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        p.ring = ring
        p._terms = terms
        p._hash = None
        return p

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self):
        return list(self._terms)

    def coefficient(self, e):
        return self._terms.get(tuple(e), self.ring.field.zero)

    def is_zero(self):
        return not self._terms

    def is_monomial(self):
        return len(self._terms) == 1

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def _check(self, other):
        if not isinstance(other, Polynomial):
            return self.ring.monomial((0,) * self.ring.nvars, other)
        if other.ring != self.ring:
            raise RingMismatch("polynomials live in different rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        f = self.ring.field
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = f.add(out.get(e, f.zero), c)
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        f = self.ring.field
        return Polynomial._raw(self.ring, {e: f.neg(c) for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._check(other)
        f = self.ring.field
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = mono_mul(e1, e2)
                s = f.add(out.get(e, f.zero), f.mul(c1, c2))
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Polynomial._raw(self.ring, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a natural number")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c):
        f = self.ring.field
        c = f(c)
        if not c:
            return self.ring.zero()
        return Polynomial._raw(self.ring, {e: f.mul(c, x) for e, x in self._terms.items()})

    def mul_term(self, e, c):
        """Multiply by the single term c*x^e."""
        f = self.ring.field
        if not c:
            return self.ring.zero()
        return Polynomial._raw(
            self.ring, {mono_mul(e, m): f.mul(c, x) for m, x in self._terms.items()}
        )

    def total_degree(self):
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self, weights=None):
        if weights is None:
            degs = {sum(e) for e in self._terms}
        else:
            degs = {sum(w * x for w, x in zip(weights, e)) for e in self._terms}
        return len(degs) <= 1

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == self._check(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        from combalg.parse import format_polynomial

        return f"Polynomial({format_polynomial(self)!r})"

    def __str__(self):
        from combalg.parse import format_polynomial

        return format_polynomial(self)


@dataclass(frozen=True)
class Ideal:
    ring: PolynomialRing
    generators: tuple

    def __post_init__(self):
        gens = tuple(g for g in self.generators if not g.is_zero())
        for g in gens:
            if g.ring != self.ring:
                raise RingMismatch("ideal generator from a different ring")
        object.__setattr__(self, "generators", gens)


# -- monomial subalgebras ---------------------------------------------------


@dataclass(frozen=True)
class Membership:
    member: bool
    # multiplicity of each generator in the certificate, or None
    certificate: tuple = None
    nodes: int = 0

    def verify(self, target, gens):
        if not self.member:
            return False
        total = [0] * len(target)
        for g, k in zip(gens, self.certificate):
            for i, x in enumerate(g):
                total[i] += k * x
        return tuple(total) == tuple(target)


def monomial_subalgebra_membership(target, gens):
    """Decide whether the monomial ``target`` lies in k[gens].

    Depth-first search over generator multisets; each generator has positive
    total degree so the recursion depth is bounded by ``degree(target)``.
    """
    target = tuple(target)
    gens = [tuple(g) for g in gens]
    for g in gens:
        if len(g) != len(target):
            raise RingMismatch("monomials of different lengths")
        if not any(g):
            raise ValueError("generator with all-zero exponent vector")
    dead = set()
    counts = [0] * len(gens)
    nodes = 0

    def search(rest, start):
        nonlocal nodes
        nodes += 1
        if not any(rest):
            return True
        if (rest, start) in dead:
            return False
        for k in range(start, len(gens)):
            g = gens[k]
            if divides(g, rest):
                counts[k] += 1
                if search(mono_div(rest, g), k):
                    return True
                counts[k] -= 1
        dead.add((rest, start))
        return False

    if search(target, 0):
        return Membership(True, tuple(counts), nodes)
    return Membership(False, None, nodes)
