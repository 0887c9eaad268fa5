"""The signed-permutation group of type B and its twisted action.

Elements are signed permutations in window notation: ``(w(1), ..., w(n))``
with each ``|w(i)|`` distinct and covering ``1..n``.  Generators are
``s_1..s_{n-1}`` (adjacent transpositions of positions) and ``s_n``
(sign change of the last position).

The action on extended polynomials permutes/negates the even variables
and twists the odd generators:

* ``s_i(w_j) = w_j`` for ``j != i`` and
  ``s_i(w_i) = w_i + (x_i^2 - x_{i+1}^2) w_{i+1}``;
* ``s_n`` fixes every ``w_j``;
* on the dx family, ``s_i`` permutes ``dx_i, dx_{i+1}`` and ``s_n``
  negates ``dx_n``.
"""

from __future__ import annotations

import itertools
import random
import re

from .extpoly import DX, OMEGA, XDEG, ExtPoly, degree, random_poly
from .report import SuiteReport

__all__ = [
    "SignedPerm",
    "identity",
    "gen",
    "from_word",
    "compose",
    "inverse",
    "length",
    "right_descents",
    "some_reduced_word",
    "all_reduced_words",
    "is_reduced",
    "longest_element",
    "longest_word",
    "enumerate_group",
    "act",
    "act_gen",
    "render_perm",
    "parse_perm",
    "verify_weyl",
]


class SignedPerm:
    """A signed permutation; treat instances as immutable."""

    __slots__ = ("window",)

    def __init__(self, window):
        window = tuple(window)
        n = len(window)
        if sorted(abs(v) for v in window) != list(range(1, n + 1)):
            raise ValueError(f"bad window {window!r}")
        self.window = window

    @property
    def n(self):
        return len(self.window)

    def apply(self, j):
        """Image of the signed index j (``w(-j) = -w(j)``)."""
        v = self.window[abs(j) - 1]
        return v if j > 0 else -v

    def is_identity(self):
        return self.window == tuple(range(1, self.n + 1))

    def __mul__(self, other):
        return compose(self, other)

    def __eq__(self, other):
        return isinstance(other, SignedPerm) and self.window == other.window

    def __hash__(self):
        return hash(self.window)

    def __repr__(self):
        return f"SignedPerm{self.window}"


def identity(n):
    return SignedPerm(range(1, n + 1))


def gen(i, n):
    """The generator s_i: adjacent swap for i < n, last-sign change for i = n."""
    if not 1 <= i <= n:
        raise ValueError(f"generator index {i} out of range 1..{n}")
    win = list(range(1, n + 1))
    if i < n:
        win[i - 1], win[i] = win[i], win[i - 1]
    else:
        win[n - 1] = -n
    return SignedPerm(win)


def compose(u, v):
    """The product uv (the map sending j to u(v(j)))."""
    if u.n != v.n:
        raise ValueError("rank mismatch")
    return SignedPerm(tuple(u.apply(v.window[j]) for j in range(u.n)))


def inverse(w):
    win = [0] * w.n
    for j, v in enumerate(w.window, start=1):
        win[abs(v) - 1] = j if v > 0 else -j
    return SignedPerm(win)


def from_word(word, n):
    w = identity(n)
    for i in word:
        w = compose(w, gen(i, n))
    return w


def length(w):
    """Coxeter length: positive roots sent to negative roots.

    Roots are e_i, e_i - e_j and e_i + e_j (i < j); the window maps
    e_i to sign(w(i)) * e_{|w(i)|}.
    """
    win = w.window
    n = w.n
    count = 0
    for i in range(n):
        if win[i] < 0:
            count += 1
        pi, ci = abs(win[i]), (1 if win[i] > 0 else -1)
        for j in range(i + 1, n):
            pj, cj = abs(win[j]), (1 if win[j] > 0 else -1)
            for s in (1, -1):
                lead = ci if pi < pj else s * cj
                if lead < 0:
                    count += 1
    return count


def right_descents(w):
    win = w.window
    out = []
    for i in range(1, w.n):
        a, b = win[i - 1], win[i]
        if (a < 0 and b > 0) or (a * b > 0 and a > b):
            out.append(i)
    if win[w.n - 1] < 0:
        out.append(w.n)
    return out


def some_reduced_word(w):
    """A reduced word via descent stripping (letters multiply left to right)."""
    letters = []
    cur = w
    while True:
        ds = right_descents(cur)
        if not ds:
            break
        i = ds[0]
        cur = compose(cur, gen(i, cur.n))
        letters.append(i)
    if not cur.is_identity():
        raise AssertionError("descent stripping failed to reach the identity")
    return tuple(reversed(letters))


def all_reduced_words(w):
    """Every reduced word of w (exponential; meant for small ranks)."""
    if w.is_identity():
        return [()]
    out = []
    for i in right_descents(w):
        for u in all_reduced_words(compose(w, gen(i, w.n))):
            out.append(u + (i,))
    return out


def is_reduced(word, n):
    return length(from_word(word, n)) == len(word)


def longest_element(n):
    return SignedPerm(tuple(-i for i in range(1, n + 1)))


def longest_word(n):
    """The nested reduced word (s_1..s_n..s_1)(s_2..s_n..s_2)...(s_n)."""
    word = []
    for k in range(1, n + 1):
        word.extend(range(k, n + 1))
        word.extend(range(n - 1, k - 1, -1))
    return tuple(word)


def enumerate_group(n):
    """All 2^n n! elements, sorted by window (n <= 4)."""
    if n > 4:
        raise ValueError("group enumeration is capped at n = 4")
    out = []
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            out.append(SignedPerm(tuple(s * p for s, p in zip(signs, perm))))
    out.sort(key=lambda w: w.window)
    return out


# -- the twisted action -------------------------------------------------


def act_gen(i, f):
    """Apply the generator s_i to an extended polynomial."""
    n = f.nvars
    if not 1 <= i <= n:
        raise ValueError(f"generator index {i} out of range 1..{n}")
    out = {}

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

    if i == n:
        for (e, m), c in f.terms.items():
            sign = -1 if e[n - 1] % 2 else 1
            if f.family == DX and n in m:
                sign = -sign
            put((e, m), c if sign > 0 else -c)
        return ExtPoly(n, f.family, out)

    for (e, m), c in f.terms.items():
        ee = list(e)
        ee[i - 1], ee[i] = ee[i], ee[i - 1]
        ee = tuple(ee)
        if f.family == OMEGA:
            put((ee, m), c)
            if i in m and (i + 1) not in m:
                shifted = tuple(sorted(x if x != i else i + 1 for x in m))
                plus = list(ee)
                plus[i - 1] += 2
                minus = list(ee)
                minus[i] += 2
                put((tuple(plus), shifted), c)
                put((tuple(minus), shifted), -c)
        else:
            has_i, has_j = i in m, (i + 1) in m
            if has_i and has_j:
                put((ee, m), -c)
            elif has_i:
                put((ee, tuple(sorted(x if x != i else i + 1 for x in m))), c)
            elif has_j:
                put((ee, tuple(sorted(x if x != i + 1 else i for x in m))), c)
            else:
                put((ee, m), c)
    return ExtPoly(n, f.family, out)


def act_word(word, f):
    """Apply a generator word, rightmost letter first."""
    for i in reversed(word):
        f = act_gen(i, f)
    return f


def act(w, f):
    if w.n != f.nvars:
        raise ValueError("rank mismatch")
    return act_word(some_reduced_word(w), f)


# -- text form ----------------------------------------------------------

_PERM_RE = re.compile(r"^\(\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\)$")


def render_perm(w):
    return "(" + ",".join(str(v) for v in w.window) + ")"


def parse_perm(text):
    m = _PERM_RE.match(text.strip())
    if not m:
        raise ValueError(f"cannot parse window {text!r}")
    return SignedPerm(tuple(int(p) for p in m.group(1).split(",")))


def parse_word(text):
    text = text.strip()
    if not text:
        return ()
    return tuple(int(p) for p in text.split(","))


# -- verification suite -------------------------------------------------


def verify_weyl(n, trials=25, seed=0):
    """Check the defining group relations and the action's consistency."""
    rep = SuiteReport(f"weyl(n={n})")
    rng = random.Random(seed)

    if n <= 4:
        group = enumerate_group(n)
        rep.add("group order", len(group) == (2**n) * _factorial(n), f"|W| = {len(group)}")
        rep.add(
            "length vs reduced words",
            all(length(w) == len(some_reduced_word(w)) for w in group),
        )
    w0 = longest_element(n)
    rep.add("longest element length", length(w0) == n * n, f"l(w0) = {length(w0)}")
    rep.add("nested word gives w0", from_word(longest_word(n), n) == w0)

    ok = all(compose(gen(i, n), gen(i, n)).is_identity() for i in range(1, n + 1))
    rep.add("generator squares (group)", ok)
    ok = True
    for i in range(1, n):
        for j in range(i + 2, n + 1):
            a = compose(gen(i, n), gen(j, n))
            b = compose(gen(j, n), gen(i, n))
            ok = ok and a == b
    rep.add("distant generators commute (group)", ok)
    ok = True
    for i in range(1, n - 1):
        a = from_word((i, i + 1, i), n)
        b = from_word((i + 1, i, i + 1), n)
        ok = ok and a == b
    rep.add("adjacent braid (group)", ok)
    if n >= 2:
        a = from_word((n, n - 1, n, n - 1), n)
        b = from_word((n - 1, n, n - 1, n), n)
        rep.add("length-4 braid with s_n (group)", a == b)

    def rnd(fam):
        return random_poly(n, fam, max_xdeg=3, max_terms=4, rng=rng)

    for fam in (OMEGA, DX):
        ok = True
        for _ in range(trials):
            f = rnd(fam)
            for i in range(1, n + 1):
                ok = ok and act_gen(i, act_gen(i, f)) == f
        rep.add(f"involutions on {fam} polys", ok)

    ok = True
    for _ in range(trials):
        f = rnd(OMEGA)
        for i in range(1, n - 1):
            ok = ok and act_word((i, i + 1, i), f) == act_word((i + 1, i, i + 1), f)
        for i in range(1, n - 1):
            for j in range(i + 2, n + 1):
                ok = ok and act_word((i, j), f) == act_word((j, i), f)
        if n >= 2:
            ok = ok and act_word((n, n - 1, n, n - 1), f) == act_word((n - 1, n, n - 1, n), f)
    rep.add("braid relations on the action", ok)

    ok = True
    for _ in range(trials):
        f = rnd(OMEGA)
        word_u = tuple(rng.randint(1, n) for _ in range(rng.randint(0, 4)))
        word_v = tuple(rng.randint(1, n) for _ in range(rng.randint(0, 4)))
        u, v = from_word(word_u, n), from_word(word_v, n)
        ok = ok and act(u, act(v, f)) == act(compose(u, v), f)
    rep.add("action respects composition", ok)

    ok = True
    for _ in range(trials):
        f, g = rnd(OMEGA), rnd(OMEGA)
        i = rng.randint(1, n)
        ok = ok and act_gen(i, f * g) == act_gen(i, f) * act_gen(i, g)
    rep.add("generators act as ring maps", ok)

    ok = True
    for _ in range(trials):
        f = rnd(OMEGA)
        i = rng.randint(1, n)
        for d, comp in f.homogeneous_components(XDEG).items():
            img = act_gen(i, comp)
            ok = ok and (img.is_zero() or degree(img, XDEG) == d)
    rep.add("action preserves degree", ok)

    return rep


def _factorial(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out
