"""Reduced simplicial homology over Q or F_p, and depth of Stanley-Reisner
rings by Hochster's formula.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from combalg.field import QQ
from combalg.simplicial import ComplexError


def _require_nonvoid(delta):
    if delta.is_void():
        raise ComplexError("the void complex has no chain complex")


@dataclass(frozen=True)
class ChainBoundary:
    field: object
    # faces[i + 1] lists the i-dimensional faces, faces[0] == [∅]
    faces: tuple
    # matrices[i] is the boundary from i-faces to (i-1)-faces, rows x columns,
    # for i = 0 .. dim; matrices[0] is the augmentation
    matrices: tuple

    def boundary(self, i):
        return self.matrices[i]

    def dim_chains(self, i):
        return len(self.faces[i + 1])


def boundary_matrices(delta, field=QQ):
    _require_nonvoid(delta)
    faces_by_dim = [[frozenset()]]
    for k in range(delta.dim + 1):
        faces_by_dim.append(delta.faces(k))
    mats = []
    for i in range(delta.dim + 1):
        rows = faces_by_dim[i]
        cols = faces_by_dim[i + 1]
        row_index = {f: r for r, f in enumerate(rows)}
        M = [[field.zero] * len(cols) for _ in rows]
        for c, face in enumerate(cols):
            ordered = delta.sorted_face(face)
            for k in range(len(ordered)):
                sub = frozenset(ordered[:k] + ordered[k + 1:])
                M[row_index[sub]][c] = field(1 if k % 2 == 0 else -1)
        mats.append(M)
    return ChainBoundary(field, tuple(tuple(f) for f in faces_by_dim), tuple(mats))


def _rank_integer(rows):
    """Fraction-free (Bareiss) elimination on an integer matrix."""
    M = [list(r) for r in rows if any(r)]
    if not M:
        return 0
    ncols = len(M[0])
    rank = 0
    prev = 1
    for c in range(ncols):
        # pivot of least nonzero magnitude keeps the entries small
        piv = None
        for r in range(rank, len(M)):
            if M[r][c] and (piv is None or abs(M[r][c]) < abs(M[piv][c])):
                piv = r
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        p = M[rank][c]
        for r in range(rank + 1, len(M)):
            a = M[r][c]
            row, prow = M[r], M[rank]
            for k in range(c, ncols):
                row[k] = (p * row[k] - a * prow[k]) // prev
        prev = p
        rank += 1
        if rank == len(M):
            break
    return rank


def _rank_mod_p(rows, p):
    M = [[x % p for x in r] for r in rows]
    M = [r for r in M if any(r)]
    if not M:
        return 0
    ncols = len(M[0])
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(M)) if M[r][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = pow(M[rank][c], -1, p)
        prow = [x * inv % p for x in M[rank]]
        M[rank] = prow
        for r in range(len(M)):
            if r != rank and M[r][c]:
                a = M[r][c]
                M[r] = [(x - a * y) % p for x, y in zip(M[r], prow)]
        rank += 1
        if rank == len(M):
            break
    return rank


def rank_exact(M, field=QQ):
    """Exact rank of a matrix given as a list of rows."""
    rows = [list(r) for r in M]
    if not rows or not rows[0]:
        return 0
    if field.characteristic == 0:
        ints = []
        for r in rows:
            r = [Fraction(x) for x in r]
            d = lcm(*(x.denominator for x in r))
            ints.append([int(x * d) for x in r])
        return _rank_integer(ints)
    return _rank_mod_p(rows, field.characteristic)


@dataclass(frozen=True)
class BettiVector:
    field: object
    # values[k] = dim H~_{k-1}
    values: tuple

    def __getitem__(self, i):
        """dim H~_i for i >= -1 (zero beyond the stored range)."""
        if i < -1:
            raise IndexError("reduced homology starts in degree -1")
        k = i + 1
        return self.values[k] if k < len(self.values) else 0

    def euler(self):
        return sum(b if k % 2 else -b for k, b in enumerate(self.values))

    def as_dict(self):
        return {str(k - 1): b for k, b in enumerate(self.values)}

    def nonzero_degrees(self):
        return [k - 1 for k, b in enumerate(self.values) if b]

    def _trimmed(self):
        v = list(self.values)
        while v and v[-1] == 0:
            v.pop()
        return tuple(v)

    def __eq__(self, other):
        # vectors differing only by trailing zeros describe the same homology
        if isinstance(other, BettiVector):
            other = other.values
        other = list(other)
        while other and other[-1] == 0:
            other.pop()
        return self._trimmed() == tuple(other)

    def __hash__(self):
        return hash(self._trimmed())


def reduced_betti(delta, field=QQ):
    """(dim H~_{-1}, dim H~_0, ..., dim H~_{dim Δ}) over ``field``."""
    cb = boundary_matrices(delta, field)
    d = delta.dim
    ranks = [rank_exact(cb.matrices[i], field) for i in range(d + 1)]
    values = []
    for i in range(-1, d + 1):
        n_i = cb.dim_chains(i)
        r_out = ranks[i] if i >= 0 else 0
        r_in = ranks[i + 1] if i + 1 <= d else 0
        values.append(n_i - r_out - r_in)
    return BettiVector(field, tuple(values))


def hochster_contributions(delta, field=QQ):
    """(σ, j, j + |σ| + 1) for each face σ and each j with H~_j(lk σ) ≠ 0."""
    _require_nonvoid(delta)
    out = []
    for sigma in delta.faces():
        b = reduced_betti(delta.link(sigma), field)
        for j in b.nonzero_degrees():
            out.append((sigma, j, j + len(sigma) + 1))
    return out


def depth_sr(delta, field=QQ):
    """depth k[Δ] via Hochster's formula for local cohomology."""
    return min(value for _, _, value in hochster_contributions(delta, field))


def is_cohen_macaulay(delta, field=QQ):
    return depth_sr(delta, field) == delta.dim + 1


def reisner_criterion(delta, field=QQ):
    """Every link lk σ (σ = ∅ included) has H~_j = 0 for j < dim lk σ."""
    _require_nonvoid(delta)
    for sigma in delta.faces():
        lk = delta.link(sigma)
        b = reduced_betti(lk, field)
        if any(b[j] for j in range(-1, lk.dim)):
            return False
    return True
