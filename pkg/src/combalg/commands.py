"""Report-producing commands behind the CLI, including the two end-to-end
reproduction pipelines (the Segre counterexample and the Veronese slice).
"""

import json
import random
from dataclasses import dataclass, field as dc_field
from importlib import resources

from combalg.field import QQ
from combalg.groebner import (
    buchberger,
    check_weight_certificate,
    find_weight_vector,
    homogenize_ideal,
    initial_ideal,
    specialize,
)
from combalg.homology import depth_sr, is_cohen_macaulay, reduced_betti
from combalg.parse import format_polynomial, parse_polynomial
from combalg.poly import PolynomialRing, minimalize
from combalg.segre import segre_ideal_generators, segre_ring, verify_segre_proposition
from combalg.simplicial import (
    SimplicialComplex,
    check_height_pattern,
    from_stanley_reisner,
    lyubeznik_complex_sr,
    nerve,
    to_stanley_reisner,
)
from combalg.toric import face_prime_quotient_dim, ideal_power_slice


def _normalize(obj):
    return json.loads(json.dumps(obj))


@dataclass
class Report:
    command: str
    inputs: dict = dc_field(default_factory=dict)
    verdict: str = "info"
    payload: dict = dc_field(default_factory=dict)
    seed: int = None

    def __post_init__(self):
        if self.verdict not in ("pass", "fail", "info"):
            raise ValueError(f"bad verdict {self.verdict!r}")
        self.inputs = _normalize(self.inputs)
        self.payload = _normalize(self.payload)

    @property
    def exit_code(self):
        return 1 if self.verdict == "fail" else 0

    def to_dict(self):
        return {
            "command": self.command,
            "inputs": self.inputs,
            "verdict": self.verdict,
            "payload": self.payload,
            "seed": self.seed,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)

    @classmethod
    def from_json(cls, text):
        d = json.loads(text)
        return cls(d["command"], d["inputs"], d["verdict"], d["payload"], d["seed"])

    def to_text(self):
        lines = [f"{self.command}: {self.verdict.upper()}"]
        if self.seed is not None:
            lines.append(f"  seed: {self.seed}")
        for k, v in self.inputs.items():
            lines.append(f"  input {k}: {v}")
        steps = self.payload.get("steps")
        for k, v in self.payload.items():
            if k == "steps":
                continue
            lines.append(f"  {k}: {json.dumps(v, ensure_ascii=False)}")
        for s in steps or []:
            mark = "ok " if s["ok"] else "FAIL"
            lines.append(f"  [{mark}] step {s['step']}: {s['name']}")
            if not s["ok"]:
                lines.append(f"         witness: {json.dumps(s.get('witness'), ensure_ascii=False)}")
        return "\n".join(lines)


def load_builtin(name):
    return resources.files("combalg").joinpath("data", name).read_text(encoding="utf-8")


class _Steps:
    def __init__(self):
        self.steps = []

    def record(self, name, ok, detail=None, witness=None):
        entry = {"step": len(self.steps) + 1, "name": name, "ok": bool(ok), "detail": detail}
        if not ok:
            entry["witness"] = witness
        self.steps.append(entry)
        return ok

    @property
    def failed(self):
        return next((s for s in self.steps if not s["ok"]), None)


def _mono_texts(ring, monos):
    return [ring.monomial_text(m) for m in monos]


def _face_texts(delta):
    return [list(map(str, delta.sorted_face(F))) for F in delta.facets]


EX_MAIN_G = "Z0*Z1*Z2 + Z1^3 + Z2^3"
EX_MAIN_INITIAL = [
    "X10*X11*X12", "X10*X11*X02", "X10*X01*X02", "X00*X01*X02", "X00*X11", "X00*X12", "X01*X12",
]
EX_MAIN_FACETS = [
    ["X00", "X01", "X10"], ["X00", "X02", "X10"], ["X01", "X02", "X11"],
    ["X01", "X10", "X11"], ["X02", "X10", "X12"], ["X02", "X11", "X12"],
]


def cmd_verify_ex_main(field=QQ, tamper=False):
    """Reproduce the Segre counterexample end to end.

    ``tamper`` replaces the first cubic generator by its two non-leading
    terms; used as a negative control.
    """
    steps = _Steps()
    payload = {}
    # column-major order: the B side (g) is the non-monomial one
    ctx = segre_ring(1, 2, QQ, major="column")
    P = ctx.P
    g = parse_polynomial(EX_MAIN_G, ctx.B)
    gens = segre_ideal_generators(ctx, [], [g])
    if tamper:
        gens[3] = parse_polynomial("X01^3 + X02^3", P)
    expected = {parse_polynomial(t, P).monomials()[0] for t in EX_MAIN_INITIAL}

    def finish():
        payload["steps"] = steps.steps
        bad = steps.failed
        inputs = {"g": EX_MAIN_G, "field": field.tag(), "order": ctx.order.describe()}
        if tamper:
            inputs["tamper"] = True
        if bad:
            payload["failed_step"] = bad["step"]
        return Report("verify ex-main", inputs, "fail" if bad else "pass", payload)

    ok = len(gens) == 7
    steps.record("Segre ideal generators: 3 minors and 4 pulled-back cubics", ok,
                 [format_polynomial(p) for p in gens], witness={"count": len(gens)})
    if not ok:
        return finish()

    gb = buchberger(gens, ctx.order)
    steps.record("reduced Groebner basis", True, [format_polynomial(p, ctx.order) for p in gb])

    ini = initial_ideal(gens, ctx.order)
    got = set(ini)
    ok = got == expected
    steps.record("initial ideal equals the seven square-free monomials", ok, _mono_texts(P, ini),
                 witness={"missing": _mono_texts(P, sorted(expected - got)),
                          "unexpected": _mono_texts(P, sorted(got - expected))})
    if not ok:
        return finish()

    delta = from_stanley_reisner(ini, P)
    want = SimplicialComplex(P.variables, EX_MAIN_FACETS)
    ok = delta == want
    steps.record("Stanley-Reisner complex has the six triangles", ok, _face_texts(delta),
                 witness={"facets": _face_texts(delta)})
    if not ok:
        return finish()

    betti = reduced_betti(delta, field)
    ok = betti[1] == 1 and betti[0] == 0
    steps.record("reduced homology H~0 = 0, H~1 = 1", ok, betti.as_dict(), witness=betti.as_dict())
    if not ok:
        return finish()

    depth = depth_sr(delta, field)
    cm = is_cohen_macaulay(delta, field)
    ok = depth == 2 and delta.krull_dim() == 3 and not cm
    steps.record("depth 2 < dim 3: not Cohen-Macaulay", ok,
                 {"depth": depth, "dim": delta.krull_dim(), "cohen_macaulay": cm},
                 witness={"depth": depth, "dim": delta.krull_dim()})
    if not ok:
        return finish()

    w = find_weight_vector(gb)
    hom = homogenize_ideal(gb, w)
    zname = hom[0].ring.variables[-1]
    special = [specialize(h, zname, 0) for h in hom]
    mons = [p.monomials()[0] for p in special if p.is_monomial()]
    sr = set(to_stanley_reisner(delta, P))
    ok = (check_weight_certificate(gb, w) and len(mons) == len(special)
          and set(minimalize(mons)) == sr)
    steps.record("weight certificate; Z = 0 in the homogenized basis gives I_Delta", ok,
                 {"weight": list(w),
                  "homogenized": [format_polynomial(h) for h in hom],
                  "at_Z_0": [format_polynomial(p) for p in special]},
                 witness={"weight": list(w), "at_Z_0": [format_polynomial(p) for p in special]})
    if not ok:
        return finish()

    L = lyubeznik_complex_sr(ini, P)
    N = nerve(delta.facets)
    lb = reduced_betti(L, field)
    ok = L.same_faces(N) and lb[1] == 1 and lb[0] == 0
    steps.record("Lyubeznik complex = nerve of the facets, H~1 = 1", ok,
                 {"facets": _face_texts(L), "betti": lb.as_dict()},
                 witness={"facets": _face_texts(L), "betti": lb.as_dict()})

    # the row-major order written next to the construction gives a different,
    # non-square-free initial ideal; recorded for the reader
    row = segre_ring(1, 2, QQ)
    row_ini = initial_ideal(segre_ideal_generators(row, [], [parse_polynomial(EX_MAIN_G, row.B)]), row.order)
    payload["row_major_initial_ideal"] = _mono_texts(row.P, row_ini)
    return finish()


def _random_squarefree(rng, n, k):
    out = []
    for _ in range(rng.randint(0, k)):
        size = rng.randint(1, n)
        chosen = set(rng.sample(range(n), size))
        out.append(tuple(1 if i in chosen else 0 for i in range(n)))
    return minimalize(out)


def segre_trial(root_seed, t, max_a, max_b):
    rng = random.Random(f"{root_seed}/{t}")
    a, b = rng.randint(0, max_a), rng.randint(0, max_b)
    return a, b, _random_squarefree(rng, a + 1, 3), _random_squarefree(rng, b + 1, 3)


def cmd_verify_segre(seed=42, trials=25, max_a=2, max_b=2, force_empty=False):
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if not (0 <= max_a <= 3 and 0 <= max_b <= 3):
        raise ValueError("max_a and max_b must lie in 0..3")
    rows = []
    failures = 0
    for t in range(trials):
        a, b, U, V = segre_trial(seed, t, max_a, max_b)
        if force_empty:
            U, V = [], []
        ctx = segre_ring(a, b)
        rep = verify_segre_proposition(ctx, U, V)
        row = {
            "trial": t, "a": a, "b": b,
            "U": _mono_texts(ctx.A, U), "V": _mono_texts(ctx.B, V),
            "initial_ideal_matches": rep.holds,
            "families_form_groebner_basis": rep.groebner_holds,
            "squarefree": rep.squarefree,
        }
        if not rep.passed:
            failures += 1
            row["predicted"] = _mono_texts(ctx.P, rep.predicted)
            row["computed"] = _mono_texts(ctx.P, rep.computed)
        rows.append(row)
    payload = {"trials": rows, "passed": trials - failures, "total": trials}
    inputs = {"trials": trials, "max_a": max_a, "max_b": max_b}
    if force_empty:
        inputs["force_empty"] = True
    return Report("verify segre", inputs, "fail" if failures else "pass", payload, seed)


def cmd_quasi_check():
    steps = _Steps()
    S = PolynomialRing(("X", "Y", "Z", "W"))
    R = ideal_power_slice(S, ["X", "Y", "Z"], 3)
    steps.record("k[J_3] has 19 generators", len(R) == 19, len(R), witness=len(R))

    def mono(t):
        return parse_polynomial(t, S).monomials()[0]

    xyz = mono("X*Y*Z")
    members = {}
    all_in = True
    for t in ("X*Y*Z", "X*Y*Z*W^3", "X*Y*Z*W^6"):
        m = mono(t)
        res = R.contains(m)
        ideal_ok = all(a >= b for a, b in zip(m, xyz))
        cert = None
        if res.member:
            cert = {S.monomial_text(g): k for g, k in zip(R.generators, res.certificate) if k}
        members[t] = {"member": res.member, "certificate": cert, "divisible_by_XYZ": ideal_ok}
        all_in = all_in and res.member and res.verify(m, R.generators) and ideal_ok
    steps.record("XYZ, XYZW^3, XYZW^6 lie in R and in (XYZ)", all_in, members, witness=members)

    w3 = R.contains(mono("W^3"))
    steps.record("W^3 is not in R (negative control)", not w3.member, {"member": w3.member},
                 witness={"member": w3.member})

    dim = R.dim()
    steps.record("dim R = 4", dim == 4, dim, witness=dim)

    names = ["X", "Y", "Z"]
    heights = {}
    for i in range(3):
        for j in range(i + 1, 3):
            heights[frozenset((i, j))] = dim - face_prime_quotient_dim(R, [names[i], names[j]])
        heights[frozenset((i,))] = dim - face_prime_quotient_dim(R, [names[i]])
    heights[frozenset(range(3))] = dim - face_prime_quotient_dim(R, names)
    table = {"+".join(f"p{i + 1}" for i in sorted(k)): v for k, v in
             sorted(heights.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))}
    pair_ok = all(heights[frozenset(p)] == 2 for p in [(0, 1), (0, 2), (1, 2)])
    steps.record("height(p_i + p_j) = 2 for all pairs", pair_ok, table, witness=table)
    steps.record("height(p1 + p2 + p3) = 4", heights[frozenset(range(3))] == 4,
                 heights[frozenset(range(3))], witness=table)
    verdict = check_height_pattern(3, heights)
    steps.record("height pattern of Lyubeznik's problem holds", verdict.holds,
                 {"holds": verdict.holds}, witness=list(verdict.failures))
    payload = {"steps": steps.steps}
    bad = steps.failed
    if bad:
        payload["failed_step"] = bad["step"]
    return Report("quasi-check", {"ring": "k[X,Y,Z,W]", "J": "(X,Y,Z)", "d": 3},
                  "fail" if bad else "pass", payload)


# -- generic commands -------------------------------------------------------


def _betti_payload(delta, field):
    return reduced_betti(delta, field).as_dict()


def cmd_homology(delta, field=QQ):
    b = reduced_betti(delta, field)
    return Report("homology", {"field": field.tag()}, "info",
                  {"betti": b.as_dict(), "euler": b.euler(), "complex": delta.to_dict()})


def cmd_depth(delta, field=QQ):
    d = depth_sr(delta, field)
    return Report("depth", {"field": field.tag()}, "info",
                  {"depth": d, "dim": delta.krull_dim(), "cohen_macaulay": d == delta.krull_dim()})


def cmd_nerve(delta, field=QQ):
    N = nerve(delta.facets)
    return Report("nerve", {"field": field.tag()}, "info",
                  {"nerve": N.to_dict(), "cover": _face_texts(delta),
                   "betti_complex": _betti_payload(delta, field),
                   "betti_nerve": _betti_payload(N, field)})


def cmd_lyubeznik(gens, ring, field=QQ):
    L = lyubeznik_complex_sr(gens, ring)
    delta = from_stanley_reisner(gens, ring)
    primes = [sorted(set(ring.variables) - F) for F in delta.facets]
    return Report("lyubeznik", {"field": field.tag(), "ideal": _mono_texts(ring, gens)}, "info",
                  {"minimal_primes": primes, "complex": L.to_dict(),
                   "betti": _betti_payload(L, field)})


def cmd_groebner(ring, order, gens):
    gb = buchberger(gens, order)
    return Report("groebner", {"order": order.describe()}, "info",
                  {"basis": [format_polynomial(p, order) for p in gb]})


def cmd_initial(ring, order, gens):
    ini = initial_ideal(gens, order)
    return Report("initial", {"order": order.describe()}, "info",
                  {"initial_ideal": _mono_texts(ring, ini),
                   "squarefree": all(max(m, default=0) <= 1 for m in ini)})


def cmd_weight(ring, order, gens):
    gb = buchberger(gens, order)
    w = find_weight_vector(gb)
    return Report("weight", {"order": order.describe()}, "info",
                  {"weight": list(w), "verified": check_weight_certificate(gb, w)})


def cmd_homogenize(ring, order, gens):
    gb = buchberger(gens, order)
    w = find_weight_vector(gb)
    hom = homogenize_ideal(gb, w)
    z = hom[0].ring.variables[-1] if hom else ring.fresh_name("Z")
    return Report("homogenize", {"order": order.describe()}, "info",
                  {"weight": list(w), "variable": z,
                   "homogenized": [format_polynomial(h) for h in hom],
                   "at_Z_0": [format_polynomial(specialize(h, z, 0)) for h in hom],
                   "at_Z_1": [format_polynomial(specialize(h, z, 1)) for h in hom]})
