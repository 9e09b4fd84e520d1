"""Monomial subalgebras k[gens] of a polynomial ring: Veronese-type slices,
quotients by sums of face primes, and lattice ranks."""

from dataclasses import dataclass

from combalg.field import QQ
from combalg.homology import rank_exact
from combalg.poly import monomial_subalgebra_membership, monomials_of_degree


@dataclass(frozen=True)
class MonomialSubalgebra:
    ring: object
    generators: tuple

    def __post_init__(self):
        gens = tuple(tuple(g) for g in self.generators)
        if len(set(gens)) != len(gens):
            raise ValueError("generators must be pairwise distinct")
        for g in gens:
            if len(g) != self.ring.nvars:
                raise ValueError("generator length does not match ring")
            if not any(g):
                raise ValueError("generators must have positive degree")
        object.__setattr__(self, "generators", gens)

    def __len__(self):
        return len(self.generators)

    def contains(self, monomial):
        return monomial_subalgebra_membership(monomial, self.generators)

    def dim(self):
        return lattice_rank(self.generators)


def ideal_power_slice(ring, variables, d):
    """k[J_d] for J generated by ``variables``: degree-d monomials divisible by one of them."""
    if not variables:
        raise ValueError("need at least one variable")
    if d < 1:
        raise ValueError("degree must be positive")
    idx = [ring.index(v) for v in variables]
    gens = [e for e in monomials_of_degree(ring.nvars, d) if any(e[i] for i in idx)]
    gens.sort(reverse=True)
    return MonomialSubalgebra(ring, tuple(gens))


def lattice_rank(vectors):
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        return 0
    if len({len(v) for v in vectors}) != 1:
        raise ValueError("vectors of different lengths")
    return rank_exact(vectors, QQ)


def surviving_generators(R, killed):
    idx = [R.ring.index(v) for v in killed]
    return [g for g in R.generators if not any(g[i] for i in idx)]


def face_prime_quotient_dim(R, killed):
    """dim R / sum_{x in killed} (x) ∩ R, as a lattice rank."""
    return lattice_rank(surviving_generators(R, killed))


def prime_sum_height(R, killed):
    return R.dim() - face_prime_quotient_dim(R, killed)
