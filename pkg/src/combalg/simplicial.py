"""Simplicial complexes stored by their facets, Stanley-Reisner duality,
nerves and Lyubeznik complexes of square-free monomial ideals.
"""

import json
import warnings
from dataclasses import dataclass
from itertools import combinations

from combalg.poly import Polynomial, RingMismatch, is_squarefree, minimalize, support


class ComplexError(ValueError):
    pass


def _maximal(sets):
    sets = sorted(set(sets), key=len, reverse=True)
    kept = []
    for s in sets:
        if not any(s <= k for k in kept):
            kept.append(s)
    return kept


class SimplicialComplex:
    """A finite simplicial complex given by vertex labels and facets.

    ``SimplicialComplex(vertices, [])`` is the void complex (no faces at all);
    ``SimplicialComplex(vertices, [[]])`` is the empty complex {∅}.
    """

    __slots__ = ("vertices", "facets", "_pos")

    def __init__(self, vertices, facets):
        vertices = tuple(vertices)
        if len(set(vertices)) != len(vertices):
            raise ComplexError("duplicate vertex labels")
        pos = {v: i for i, v in enumerate(vertices)}
        fs = []
        for F in facets:
            F = frozenset(F)
            if not F <= pos.keys():
                raise ComplexError(f"facet {sorted(map(str, F))} uses unknown vertices")
            fs.append(F)
        if len(set(fs)) != len(fs):
            raise ComplexError("repeated facet")
        for F in fs:
            for G in fs:
                if F < G:
                    raise ComplexError("a facet is contained in another facet")
        self.vertices = vertices
        self._pos = pos
        self.facets = tuple(sorted(fs, key=self.face_key))

    @classmethod
    def from_faces(cls, vertices, faces):
        """Complex generated by ``faces`` (non-maximal ones are dropped)."""
        return cls(vertices, _maximal(frozenset(f) for f in faces))

    @classmethod
    def simplex(cls, vertices):
        return cls(vertices, [vertices])

    def face_key(self, face):
        return tuple(sorted(self._pos[v] for v in face))

    def sorted_face(self, face):
        return tuple(sorted(face, key=self._pos.__getitem__))

    def is_void(self):
        return not self.facets

    def is_empty_complex(self):
        return self.facets == (frozenset(),)

    @property
    def dim(self):
        if self.is_void():
            raise ComplexError("the void complex has no dimension")
        return max(len(F) for F in self.facets) - 1

    def krull_dim(self):
        """dim k[Δ] = dim Δ + 1."""
        return self.dim + 1

    def is_face(self, face):
        face = frozenset(face)
        return any(face <= F for F in self.facets)

    def faces(self, k=None):
        """Faces (optionally only those of dimension k), in canonical order."""
        out = set()
        for F in self.facets:
            sizes = range(len(F) + 1) if k is None else [k + 1]
            for s in sizes:
                if 0 <= s <= len(F):
                    out.update(frozenset(c) for c in combinations(F, s))
        return sorted(out, key=lambda f: (len(f), self.face_key(f)))

    def f_vector(self):
        """(f_{-1}, f_0, ..., f_dim)."""
        if self.is_void():
            return ()
        counts = [0] * (self.dim + 2)
        for f in self.faces():
            counts[len(f)] += 1
        return tuple(counts)

    def reduced_euler_characteristic(self):
        return sum(c if i % 2 else -c for i, c in enumerate(self.f_vector()))

    def used_vertices(self):
        used = frozenset().union(*self.facets) if self.facets else frozenset()
        return tuple(v for v in self.vertices if v in used)

    def link(self, sigma):
        sigma = frozenset(sigma)
        if not self.is_face(sigma):
            raise ComplexError("link of a non-face")
        fs = [F - sigma for F in self.facets if sigma <= F]
        used = frozenset().union(*fs)
        return SimplicialComplex([v for v in self.vertices if v in used], fs)

    def skeleton(self, k):
        return SimplicialComplex.from_faces(self.vertices, self.faces(k) or [frozenset()])

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.vertices == other.vertices and set(self.facets) == set(other.facets)

    def same_faces(self, other):
        """Equality of face sets, ignoring the vertex lists."""
        return set(self.facets) == set(other.facets)

    def __hash__(self):
        return hash((self.vertices, frozenset(self.facets)))

    def __repr__(self):
        fs = [list(self.sorted_face(F)) for F in self.facets]
        return f"SimplicialComplex(vertices={list(self.vertices)!r}, facets={fs!r})"

    # -- JSON ------------------------------------------------------------

    def to_dict(self):
        return {
            "vertices": [str(v) for v in self.vertices],
            "facets": [[str(v) for v in self.sorted_face(F)] for F in self.facets],
        }

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data):
        try:
            vertices = [str(v) for v in data["vertices"]]
            facets = [frozenset(str(v) for v in F) for F in data["facets"]]
        except (KeyError, TypeError) as exc:
            raise ComplexError(f"malformed complex object: {exc}") from None
        maximal = _maximal(facets)
        if len(maximal) != len(facets):
            warnings.warn("non-maximal facets dropped on load", stacklevel=2)
        return cls(vertices, maximal)

    @classmethod
    def from_json(cls, text):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ComplexError(f"invalid JSON: {exc}") from None
        return cls.from_dict(data)


# -- Stanley-Reisner duality ------------------------------------------------


def _exps(m, ring):
    if isinstance(m, Polynomial):
        if m.ring != ring or not m.is_monomial():
            raise ValueError(f"{m} is not a monomial")
        return m.monomials()[0]
    m = tuple(m)
    if len(m) != ring.nvars:
        raise RingMismatch("exponent vector length does not match ring")
    return m


def from_stanley_reisner(gens, ring):
    """Complex on the ring's variables whose faces avoid every generator's support."""
    supports = []
    for g in gens:
        e = _exps(g, ring)
        if not is_squarefree(e):
            raise ValueError("Stanley-Reisner generators must be square-free")
        supports.append(support(e))
    names = ring.variables
    if any(not s for s in supports):
        return SimplicialComplex(names, [])
    n = len(names)
    # grow faces level by level; a set is a face iff it contains no support
    level = [frozenset()]
    faces = [frozenset()]
    while level:
        nxt = set()
        for f in level:
            top = max(f, default=-1)
            for i in range(top + 1, n):
                g = f | {i}
                if not any(s <= g for s in supports):
                    nxt.add(g)
        level = list(nxt)
        faces.extend(level)
    return SimplicialComplex.from_faces(names, [{names[i] for i in f} for f in faces])


def to_stanley_reisner(delta, ring):
    """Minimal non-faces of ``delta`` as square-free exponent vectors."""
    if set(delta.vertices) != set(ring.variables):
        raise ComplexError("vertex labels do not match the ring variables")
    idx = {v: ring.index(v) for v in delta.vertices}
    n = ring.nvars
    out = []
    if delta.is_void():
        return [(0,) * n]
    for v in ring.variables:
        if not delta.is_face({v}):
            e = [0] * n
            e[idx[v]] = 1
            out.append(tuple(e))
    # higher minimal non-faces only use genuine vertices
    verts = delta.used_vertices()
    for s in range(2, len(verts) + 1):
        for c in combinations(verts, s):
            if delta.is_face(c):
                continue
            if all(delta.is_face(c[:k] + c[k + 1:]) for k in range(s)):
                e = [0] * n
                for v in c:
                    e[idx[v]] = 1
                out.append(tuple(e))
    return sorted(out, reverse=True)


@dataclass(frozen=True)
class MonomialPrime:
    variables: frozenset

    @property
    def height(self):
        return len(self.variables)

    def __str__(self):
        return "(" + ", ".join(sorted(self.variables)) + ")" if self.variables else "(0)"


def minimal_primes_sr(delta):
    """One prime per facet: the ideal of the variables outside it."""
    if delta.is_void():
        raise ComplexError("the void complex has no minimal primes")
    verts = frozenset(delta.vertices)
    return [MonomialPrime(verts - F) for F in delta.facets]


def nerve(cover):
    """Nerve of a cover; vertex i is the i-th member, labelled by i."""
    cover = [frozenset(c) for c in cover]
    if any(not c for c in cover):
        raise ComplexError("empty cover member")
    points = frozenset().union(*cover) if cover else frozenset()
    stars = [frozenset(i for i, c in enumerate(cover) if p in c) for p in points]
    return SimplicialComplex.from_faces(range(len(cover)), stars or [frozenset()])


def lyubeznik_complex_of_primes(primes, variables):
    """Faces are prime subsets whose sum misses some variable."""
    variables = list(variables)
    cands = [frozenset(i for i, p in enumerate(primes) if v not in p.variables) for v in variables]
    cands = [c for c in cands if c]
    return SimplicialComplex.from_faces(range(len(primes)), cands or [frozenset()])


def lyubeznik_complex_sr(gens, ring):
    delta = from_stanley_reisner(gens, ring)
    return lyubeznik_complex_of_primes(minimal_primes_sr(delta), ring.variables)


def heights_of_sums(primes, ring=None):
    """Height of each sum of primes, keyed by the frozenset of prime indices."""
    if ring is not None:
        names = set(ring.variables)
        for p in primes:
            if not p.variables <= names:
                raise RingMismatch("prime uses variables outside the ring")
    table = {}
    for s in range(1, len(primes) + 1):
        for c in combinations(range(len(primes)), s):
            table[frozenset(c)] = len(frozenset().union(*(primes[i].variables for i in c)))
    return table


@dataclass(frozen=True)
class ProblemVerdict:
    holds: bool
    failures: tuple = ()


def check_height_pattern(count, heights):
    """Three primes, pairwise sums of height 2, total sum of height 4."""
    failures = []
    if count != 3:
        failures.append(f"expected 3 minimal primes, found {count}")
    else:
        for pair in combinations(range(3), 2):
            h = heights[frozenset(pair)]
            if h != 2:
                failures.append(f"height of p{pair[0] + 1}+p{pair[1] + 1} is {h}, not 2")
        h = heights[frozenset(range(3))]
        if h != 4:
            failures.append(f"height of p1+p2+p3 is {h}, not 4")
    return ProblemVerdict(not failures, tuple(failures))


def lyubeznik_problem_check(primes, ring=None):
    primes = list(primes)
    heights = heights_of_sums(primes, ring) if len(primes) == 3 else {}
    return check_height_pattern(len(primes), heights)


def final_problem_check(delta, primes, variables):
    """L(primes) = delta under vertex i -> delta.vertices[i], and each face of
    size k has a prime sum of height k."""
    primes = list(primes)
    failures = []
    if len(primes) != len(delta.vertices):
        failures.append("number of primes differs from the number of vertices")
        return ProblemVerdict(False, tuple(failures))
    L = lyubeznik_complex_of_primes(primes, variables)
    relabel = SimplicialComplex(
        delta.vertices, [{delta.vertices[i] for i in F} for F in L.facets]
    )
    if not relabel.same_faces(delta):
        failures.append("Lyubeznik complex differs from the given complex")
    for face in delta.faces():
        if not face:
            continue
        idx = [delta.vertices.index(v) for v in face]
        h = len(frozenset().union(*(primes[i].variables for i in idx)))
        if h != len(face):
            failures.append(f"face {sorted(map(str, face))} has sum height {h}")
    return ProblemVerdict(not failures, tuple(failures))
