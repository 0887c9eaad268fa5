"""The extended nilHecke algebra of type B in PBW form.

Elements are sums of terms ``x^a * w^mask * D_w`` with rational
coefficients, stored as ``(xexp, omask, window) -> Fraction``.  The
ground truth for the multiplication is the faithful action on the
extended polynomial ring: a divided difference is pushed through a
polynomial with the operator form of the twisted Leibniz rule,

    D_i * g  =  D_i(g)  +  s_i(g) * D_i,

and pure D-words compose by the reduced-product law (zero when lengths
fail to add).
"""

from __future__ import annotations

import itertools
import random
import re
from fractions import Fraction

from .demazure import demazure, demazure_w
from .extpoly import OMEGA, ExtPoly, parse_term, random_poly
from .report import SuiteReport
from .weylb import (
    SignedPerm,
    act_gen,
    compose,
    enumerate_group,
    from_word,
    identity,
    is_reduced,
    length,
    some_reduced_word,
)

__all__ = [
    "NHElement",
    "nh_mul",
    "nh_act",
    "parse_nh",
    "render_nh",
    "verify_presentation",
]


class NHElement:
    """A PBW-normal-form element; treat instances as immutable."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = terms if terms is not None else {}

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, nvars):
        return cls(nvars, {})

    @classmethod
    def one(cls, nvars):
        return cls.from_poly(ExtPoly.one(nvars))

    @classmethod
    def from_poly(cls, f):
        if f.family != OMEGA:
            raise ValueError("nilHecke elements carry the w family")
        e = identity(f.nvars).window
        return cls(f.nvars, {(xe, m, e): c for (xe, m), c in f.terms.items()})

    @classmethod
    def dee(cls, w):
        """The basis operator D_w of a group element."""
        n = w.n
        e0 = (0,) * n
        return cls(n, {(e0, (), w.window): Fraction(1)})

    @classmethod
    def dee_word(cls, word, n):
        """D along a generator word: D_w for reduced words, else zero."""
        if is_reduced(word, n):
            return cls.dee(from_word(word, n))
        return cls.zero(n)

    @classmethod
    def x(cls, i, n):
        return cls.from_poly(ExtPoly.x(i, n))

    @classmethod
    def omega(cls, i, n):
        return cls.from_poly(ExtPoly.odd(i, n))

    # -- structure ------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def poly_part(self, window):
        """The ExtPoly coefficient of D_w for the given window."""
        t = {
            (e, m): c
            for (e, m, win), c in self.terms.items()
            if win == tuple(window)
        }
        return ExtPoly(self.nvars, OMEGA, t)

    def windows(self):
        return sorted({win for (_, _, win) in self.terms})

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("rank mismatch")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = NHElement.from_poly(ExtPoly.const(self.nvars, other))
        if not isinstance(other, NHElement):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k)
            if v is None:
                out[k] = c
            else:
                v = v + c
                if v:
                    out[k] = v
                else:
                    del out[k]
        return NHElement(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return NHElement(self.nvars, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = NHElement.from_poly(ExtPoly.const(self.nvars, other))
        if not isinstance(other, NHElement):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return NHElement.zero(self.nvars)
            return NHElement(self.nvars, {k: v * c for k, v in self.terms.items()})
        if isinstance(other, NHElement):
            return nh_mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = NHElement.from_poly(ExtPoly.const(self.nvars, other))
        if not isinstance(other, NHElement):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        return f"NHElement({self.nvars}, {render_nh(self)!r})"

    def __str__(self):
        return render_nh(self)

    def xdeg(self):
        """Common degree (x: 1, w_i: -2i, D_w: -l(w)), or None."""
        degs = set()
        for (e, m, win), _ in self.terms.items():
            degs.add(sum(e) - sum(2 * i for i in m) - length(SignedPerm(win)))
        if len(degs) != 1:
            return None
        return degs.pop()


def _push_through(word, g):
    """Rewrite D_word * g as sum of poly * D_tail; returns {tail: ExtPoly}."""
    pieces = {(): g}
    for letter in reversed(word):
        new = {}
        for tail, poly in pieces.items():
            d = demazure(letter, poly)
            if d:
                prev = new.get(tail)
                new[tail] = d if prev is None else prev + d
            s = act_gen(letter, poly)
            if s:
                key = (letter,) + tail
                prev = new.get(key)
                new[key] = s if prev is None else prev + s
        pieces = new
    return pieces


def nh_mul(a, b):
    """Product in PBW normal form."""
    a._check(b)
    n = a.nvars
    out = {}
    lengths = {}

    def put(key, c):
        v = out.get(key)
        if v is None:
            out[key] = c
        else:
            v = v + c
            if v:
                out[key] = v
            else:
                del out[key]

    for (ea, ma, wa), ca in a.terms.items():
        u = SignedPerm(wa)
        word_u = some_reduced_word(u)
        mono = ExtPoly(n, OMEGA, {(ea, ma): ca})
        for (eb, mb, wb), cb in b.terms.items():
            g = ExtPoly(n, OMEGA, {(eb, mb): cb})
            v = SignedPerm(wb)
            lv = lengths.get(wb)
            if lv is None:
                lv = lengths[wb] = length(v)
            for tail, poly in _push_through(word_u, g).items():
                if not is_reduced(tail, n):
                    continue
                t = from_word(tail, n)
                tv = compose(t, v)
                if length(tv) != len(tail) + lv:
                    continue
                full = mono * poly
                for (e, m), c in full.terms.items():
                    put((e, m, tv.window), c)
    return NHElement(n, out)


def nh_act(a, f):
    """Act on an extended polynomial: x's and w's multiply, D's divide."""
    if f.family != OMEGA:
        raise ValueError("the algebra acts on the w family")
    if a.nvars != f.nvars:
        raise ValueError("rank mismatch")
    n = a.nvars
    out = ExtPoly.zero(n)
    for (e, m, win), c in a.terms.items():
        g = demazure_w(SignedPerm(win), f)
        if g:
            out = out + ExtPoly(n, OMEGA, {(e, m): c}) * g
    return out


# -- text form ----------------------------------------------------------

_D_RE = re.compile(r"^D\(\s*(\d+(?:\s*,\s*\d+)*)?\s*\)$")


def render_nh(a):
    if not a.terms:
        return "0"

    def sort_key(key):
        e, m, win = key
        return (length(SignedPerm(win)), win, m, tuple(-v for v in e))

    pieces = []
    for idx, key in enumerate(sorted(a.terms, key=sort_key)):
        e, m, win = key
        c = a.terms[key]
        factors = []
        for i, p in enumerate(e, start=1):
            if p == 1:
                factors.append(f"x{i}")
            elif p > 1:
                factors.append(f"x{i}^{p}")
        for i in m:
            factors.append(f"w{i}")
        w = SignedPerm(win)
        if not w.is_identity():
            factors.append("D(" + ",".join(map(str, some_reduced_word(w))) + ")")
        mag = abs(c)
        if not factors:
            body = str(mag)
        else:
            if mag != 1:
                factors.insert(0, str(mag))
            body = "*".join(factors)
        if idx == 0:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append(("- " if c < 0 else "+ ") + body)
    return " ".join(pieces)


def parse_nh(text, nvars):
    """Parse a sum of terms like ``x1^2*w1*D(1,2,1)``."""
    s = text.strip()
    if s == "0":
        return NHElement.zero(nvars)
    s = s.replace("-", "+-")
    total = NHElement.zero(nvars)
    for chunk in s.split("+"):
        chunk = chunk.strip()
        if not chunk:
            continue
        sign = 1
        if chunk.startswith("-"):
            sign = -1
            chunk = chunk[1:].strip()
        factors = [p.strip() for p in chunk.split("*")]
        word = None
        plain = []
        for fac in factors:
            m = _D_RE.match(fac)
            if m:
                if word is not None:
                    raise ValueError("more than one D(...) factor in a term")
                word = tuple(int(v) for v in m.group(1).split(",")) if m.group(1) else ()
            else:
                plain.append(fac)
        if plain:
            coeff, xexp, odd_seq, fam = parse_term("*".join(plain), nvars)
            if fam not in (None, OMEGA):
                raise ValueError("nilHecke terms use the w family")
        else:
            coeff, xexp, odd_seq = Fraction(1), (0,) * nvars, []
        mono = ExtPoly.from_terms(nvars, [(sign * coeff, xexp, odd_seq)], OMEGA)
        term = NHElement.from_poly(mono)
        if word is not None:
            term = nh_mul(term, NHElement.dee_word(word, nvars))
        total = total + term
    return total


# -- verification suite -------------------------------------------------


def _relation_pairs(n):
    """Pairs of NH elements that the presentation declares equal."""
    one = NHElement.one(n)
    pairs = []

    def dee(i):
        return NHElement.dee(from_word((i,), n))

    def x(i):
        return NHElement.x(i, n)

    def w(i):
        return NHElement.omega(i, n)

    for i in range(1, n + 1):
        pairs.append((f"D{i}^2 = 0", dee(i) * dee(i), NHElement.zero(n)))
    for i in range(1, n):
        for j in range(i + 2, n + 1):
            pairs.append((f"D{i} D{j} commute", dee(i) * dee(j), dee(j) * dee(i)))
    for i in range(1, n - 1):
        pairs.append(
            (
                f"braid D{i} D{i+1}",
                dee(i) * dee(i + 1) * dee(i),
                dee(i + 1) * dee(i) * dee(i + 1),
            )
        )
    if n >= 2:
        a = dee(n) * dee(n - 1) * dee(n) * dee(n - 1)
        b = dee(n - 1) * dee(n) * dee(n - 1) * dee(n)
        pairs.append(("length-4 braid", a, b))
    for i in range(1, n):
        pairs.append((f"D{i} x{i} - x{i+1} D{i} = 1", dee(i) * x(i) - x(i + 1) * dee(i), one))
        pairs.append(
            (f"D{i} x{i+1} - x{i} D{i} = -1", dee(i) * x(i + 1) - x(i) * dee(i), -one)
        )
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                pairs.append((f"D{i} x{j} commute", dee(i) * x(j), x(j) * dee(i)))
    pairs.append((f"D{n} x{n} + x{n} D{n} = 1", dee(n) * x(n) + x(n) * dee(n), one))
    for j in range(1, n):
        pairs.append((f"D{n} x{j} commute", dee(n) * x(j), x(j) * dee(n)))
    for i in range(1, n):
        for j in range(1, n + 1):
            if j != i:
                pairs.append((f"D{i} w{j} commute", dee(i) * w(j), w(j) * dee(i)))
        xi, xj = ExtPoly.x(i, n), ExtPoly.x(i + 1, n)
        corr = NHElement.from_poly((xi * xi - xj * xj) * ExtPoly.odd(i + 1, n)) * dee(i)
        low = NHElement.from_poly((xi + xj) * ExtPoly.odd(i + 1, n))
        pairs.append((f"D{i} w{i} rewrite", dee(i) * w(i), w(i) * dee(i) + corr - low))
        inv = NHElement.from_poly(
            ExtPoly.odd(i, n) - ExtPoly.x(i + 1, n) ** 2 * ExtPoly.odd(i + 1, n)
        )
        pairs.append((f"invariant slides past D{i}", dee(i) * inv, inv * dee(i)))
    for j in range(1, n + 1):
        pairs.append((f"D{n} w{j} commute", dee(n) * w(j), w(j) * dee(n)))
    return pairs


def _random_nh(n, rng, group, max_terms=3):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = tuple(rng.randint(0, 2) for _ in range(n))
        m = tuple(i for i in range(1, n + 1) if rng.random() < 0.3)
        w = rng.choice(group)
        c = Fraction(rng.choice([c for c in range(-4, 5) if c]), rng.randint(1, 3))
        key = (e, m, w.window)
        terms[key] = terms.get(key, Fraction(0)) + c
    return NHElement(n, {k: v for k, v in terms.items() if v})


def verify_presentation(n, trials=25, seed=0):
    """Element-level relations, action compatibility, faithfulness evidence."""
    rep = SuiteReport(f"nilhecke(n={n})")
    rng = random.Random(seed)
    group = enumerate_group(n)

    pairs = _relation_pairs(n)
    bad = [name for name, lhs, rhs in pairs if lhs != rhs]
    rep.add("presentation relations in PBW form", not bad, ", ".join(bad) or f"{len(pairs)} relations")

    def rnd_poly():
        return random_poly(n, OMEGA, max_xdeg=3, max_terms=3, rng=rng)

    ok = True
    for _ in range(trials):
        f = rnd_poly()
        name, lhs, rhs = pairs[rng.randrange(len(pairs))]
        ok = ok and nh_act(lhs, f) == nh_act(rhs, f)
    rep.add("relations agree under the action", ok)

    ok = True
    for _ in range(trials):
        a = _random_nh(n, rng, group)
        b = _random_nh(n, rng, group)
        f = rnd_poly()
        ok = ok and nh_act(nh_mul(a, b), f) == nh_act(a, nh_act(b, f))
    rep.add("multiplication matches composed action", ok)

    ok = True
    for _ in range(trials):
        a = _random_nh(n, rng, group, max_terms=2)
        b = _random_nh(n, rng, group, max_terms=2)
        c = _random_nh(n, rng, group, max_terms=2)
        ok = ok and nh_mul(nh_mul(a, b), c) == nh_mul(a, nh_mul(b, c))
    rep.add("associativity", ok)

    ok = True
    for _ in range(trials):
        a = _random_nh(n, rng, group)
        if a.is_zero():
            continue
        ok = ok and _detects_nonzero(a)
    rep.add("faithfulness on a degree window", ok)

    return rep


def _detects_nonzero(a):
    """Find a plain monomial the nonzero element acts on without vanishing."""
    n = a.nvars
    bound = max((sum(e) for (e, _, _) in a.terms), default=0) + n * n + 1
    for k in itertools.product(range(bound), repeat=n):
        probe = ExtPoly(n, OMEGA, {(k, ()): Fraction(1)})
        if nh_act(a, probe):
            return True
    return False


def pbw_well_formed(a):
    """True when every key is a valid PBW index and no coefficient is zero."""
    for (e, m, win), c in a.terms.items():
        if not c:
            return False
        if len(e) != a.nvars or any(v < 0 for v in e):
            return False
        if list(m) != sorted(set(m)) or any(not 1 <= i <= a.nvars for i in m):
            return False
        try:
            SignedPerm(win)
        except ValueError:
            return False
    return True
