"""Monomial orders: lex under a variable permutation, and weight orders
broken by lex.

An order is represented by a sort key on exponent tuples; comparing keys
compares monomials.
"""

from dataclasses import dataclass
from enum import Enum

from combalg.poly import PolynomialRing, RingMismatch


class Cmp(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class MonomialOrder:
    ring: PolynomialRing
    # indices of the variables from largest to smallest
    permutation: tuple
    weights: tuple = None

    def __post_init__(self):
        perm = tuple(self.permutation)
        if sorted(perm) != list(range(self.ring.nvars)):
            raise ValueError("order permutation is not a bijection on the ring's variables")
        object.__setattr__(self, "permutation", perm)
        if self.weights is not None:
            w = tuple(int(x) for x in self.weights)
            if len(w) != self.ring.nvars or any(x < 0 for x in w):
                raise ValueError("weight vector must have one natural number per variable")
            object.__setattr__(self, "weights", w)

    @classmethod
    def lex(cls, ring, variables=None):
        """Lex order; ``variables`` lists names from largest to smallest."""
        if variables is None:
            return cls(ring, tuple(range(ring.nvars)))
        return cls(ring, tuple(ring.index(v) for v in variables))

    @classmethod
    def weight(cls, ring, weights, variables=None):
        base = cls.lex(ring, variables)
        return cls(ring, base.permutation, tuple(weights))

    @property
    def kind(self):
        return "lex" if self.weights is None else "weight"

    def with_weights(self, weights):
        return MonomialOrder(self.ring, self.permutation, tuple(weights))

    def key(self, e):
        perm = self.permutation
        if self.weights is None:
            return tuple(e[i] for i in perm)
        w = sum(a * b for a, b in zip(self.weights, e))
        return (w,) + tuple(e[i] for i in perm)

    def describe(self):
        names = ">".join(self.ring.variables[i] for i in self.permutation)
        if self.weights is None:
            return f"lex {names}"
        return f"weight {','.join(map(str, self.weights))} lex {names}"


def compare(order, m1, m2):
    m1, m2 = tuple(m1), tuple(m2)
    n = order.ring.nvars
    if len(m1) != n or len(m2) != n:
        raise RingMismatch("monomial does not belong to the order's ring")
    k1, k2 = order.key(m1), order.key(m2)
    if k1 < k2:
        return Cmp.LESS
    if k1 > k2:
        return Cmp.GREATER
    return Cmp.EQUAL


def leading_term(order, f):
    """Order-maximal monomial of ``f`` together with its coefficient."""
    if f.ring != order.ring:
        raise RingMismatch("polynomial does not belong to the order's ring")
    if f.is_zero():
        raise ValueError("zero polynomial has no leading term")
    m = max(f.monomials(), key=order.key)
    return m, f.coefficient(m)


def sort_monomials(order, monomials, descending=True):
    return sorted(monomials, key=order.key, reverse=descending)
