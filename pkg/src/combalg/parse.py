"""Text surface: polynomial expressions and ideal files.

Expression grammar (whitespace ignored, no parentheses)::

    poly  := ["+"|"-"] term (("+"|"-") term)*
    term  := coeff ["*" powers] | powers
    coeff := INT | INT "/" INT
    powers:= power ("*" power)*
    power := VAR | VAR "^" INT

Ideal file::

    ring X Y Z over Q            # or: over Fp=32003
    order lex X>Y>Z              # or: order weight 1,0,0 lex X>Y>Z
    gen X*Y - Z^2
"""

import re
from fractions import Fraction

from combalg.field import FieldError, parse_field
from combalg.orders import MonomialOrder
from combalg.poly import MAX_EXPONENT, ExponentOverflow, Polynomial, PolynomialRing


class ParseError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*/^]))")


def _tokenize(text):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos:].strip()[:1]!r} at offset {pos}")
        pos = m.end()
        kind = m.lastgroup
        out.append((kind, m.group(kind)))
    return out


def parse_polynomial(text, ring):
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty expression")
    field = ring.field
    n = ring.nvars
    acc = {}
    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else (None, None)

    while True:
        sign = 1
        kind, val = peek()
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
        elif acc or i > 0:
            raise ParseError(f"expected '+' or '-' near token {i}")
        num, den = 1, 1
        exps = [0] * n
        saw_any = False
        kind, val = peek()
        if kind == "int":
            num = int(val)
            i += 1
            saw_any = True
            if peek() == ("op", "/"):
                i += 1
                kind, val = peek()
                if kind != "int":
                    raise ParseError("expected integer denominator after '/'")
                den = int(val)
                if den == 0:
                    raise ParseError("zero denominator")
                i += 1
            if peek() == ("op", "*"):
                i += 1
                if peek()[0] != "var":
                    raise ParseError("expected variable after '*'")
        while peek()[0] == "var":
            name = peek()[1]
            try:
                idx = ring.index(name)
            except KeyError:
                raise ParseError(f"unknown variable {name!r}") from None
            i += 1
            k = 1
            if peek() == ("op", "^"):
                i += 1
                kind, val = peek()
                if kind != "int":
                    raise ParseError("expected integer exponent after '^'")
                k = int(val)
                i += 1
            exps[idx] += k
            if exps[idx] > MAX_EXPONENT:
                raise ExponentOverflow("exponent exceeds machine width")
            saw_any = True
            if peek() == ("op", "*"):
                i += 1
                if peek()[0] != "var":
                    raise ParseError("expected variable after '*'")
            else:
                break
        if not saw_any:
            raise ParseError(f"expected a term near token {i}")
        try:
            c = field.from_ratio(sign * num, den)
        except FieldError as exc:
            raise ParseError(str(exc)) from None
        e = tuple(exps)
        s = field.add(acc.get(e, field.zero), c)
        if s:
            acc[e] = s
        else:
            acc.pop(e, None)
        if i == len(tokens):
            break
        kind, val = peek()
        if not (kind == "op" and val in "+-"):
            raise ParseError(f"unexpected token {val!r}")
    return Polynomial._raw(ring, acc)


def format_polynomial(f, order=None):
    """Canonical text of ``f``: terms largest first (lex in ring order by default)."""
    if f.is_zero():
        return "0"
    if order is None:
        order = MonomialOrder.lex(f.ring)
    field = f.ring.field
    pieces = []
    for e in sorted(f.monomials(), key=order.key, reverse=True):
        c = Fraction(field.to_text(f.coefficient(e)))
        neg = c < 0
        c = abs(c)
        mono = f.ring.monomial_text(e)
        if mono == "1":
            body = str(c)
        elif c == 1:
            body = mono
        else:
            body = f"{c}*{mono}"
        pieces.append(("-" if neg else "+", body))
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


# -- ideal files ------------------------------------------------------------


def _parse_order(ring, words):
    if not words:
        raise ParseError("empty order line")
    if words[0] == "lex" and len(words) == 2:
        names = words[1].split(">")
        return MonomialOrder.lex(ring, names)
    if words[0] == "weight" and len(words) == 4 and words[2] == "lex":
        try:
            w = [int(x) for x in words[1].split(",")]
        except ValueError:
            raise ParseError(f"bad weight vector {words[1]!r}") from None
        return MonomialOrder.weight(ring, w, words[3].split(">"))
    raise ParseError("order line must be 'order lex A>B>..' or 'order weight w1,w2,.. lex A>B>..'")


def parse_ideal_file(text):
    """Return ``(ring, order, generators)`` from ideal file text."""
    ring = order = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        try:
            if head == "ring":
                words = rest.split()
                if len(words) < 3 or words[-2] != "over":
                    raise ParseError("ring line must be 'ring v1 v2 .. over Q|Fp=<p>'")
                ring = PolynomialRing(tuple(words[:-2]), parse_field(words[-1]))
            elif head == "order":
                if ring is None:
                    raise ParseError("order line before ring line")
                order = _parse_order(ring, re.sub(r"\s*>\s*", ">", rest).split())
            elif head == "gen":
                if ring is None:
                    raise ParseError("gen line before ring line")
                gens.append(parse_polynomial(rest, ring))
            else:
                raise ParseError(f"unknown directive {head!r}")
        except (ParseError, FieldError, KeyError, ValueError) as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    if ring is None:
        raise ParseError("missing ring line")
    if order is None:
        order = MonomialOrder.lex(ring)
    return ring, order, gens


def format_ideal_file(ring, order, gens):
    lines = [f"ring {' '.join(ring.variables)} over {ring.field.tag()}", f"order {order.describe()}"]
    lines += [f"gen {format_polynomial(g)}" for g in gens]
    return "\n".join(lines) + "\n"
