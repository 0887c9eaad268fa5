"""The exterior-derivative picture of the invariant calculus.

Even polynomials map into the dx superalgebra via the exterior
derivative; divided differences extend to a localized ring whose
denominators are the root forms x_i - x_j, x_i + x_j, x_i (the simple
forms alone are not stable under the twisted action, so the full list
is used).  An admissible tuple p of even polynomials yields an upper
triangular matrix P with constant diagonal; inverting it against the
exterior derivatives of invariant generators f produces a map J from
the odd generators into the dx ring obeying the same divided-difference
table as the w generators, which is verified rather than assumed.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from fractions import Fraction

from . import linalg
from .demazure import demazure, demazure_word
from .extpoly import (
    DX,
    OMEGA,
    ExtPoly,
    LinearForm,
    XDEG,
    degree,
    exact_div_linear,
    DivisionError,
    random_poly,
    render,
)
from .report import SuiteReport
from .schur import elem_squares, invariant_schur_basis, is_invariant
from .weylb import act_gen

__all__ = [
    "LocalizedPoly",
    "PolyMatrix",
    "AdmissibleTuple",
    "exterior_d",
    "act_dx_form",
    "act_localized",
    "demazure_dx",
    "chain_word",
    "default_admissible",
    "validate_admissible",
    "p_matrix",
    "gamma",
    "rho",
    "check_char1",
    "check_char2",
    "mixing_matrix",
    "default_invariant_gens",
    "build_J",
    "verify_J",
    "solomon_compare",
    "verify_solomon",
]


def exterior_d(f):
    """Total differential of an even polynomial, in the dx family."""
    if not f.is_even():
        raise ValueError("the differential of an odd element is not defined here")
    n = f.nvars
    out = {}
    for (e, _), c in f.terms.items():
        for i in range(n):
            if not e[i]:
                continue
            ee = list(e)
            ee[i] -= 1
            key = (tuple(ee), (i + 1,))
            v = out.get(key, Fraction(0)) + c * e[i]
            if v:
                out[key] = v
            else:
                del out[key]
    return ExtPoly(n, DX, out)


# -- the localized ring -------------------------------------------------


def _form_sort_key(form):
    return (form.kind, form.i, form.j if form.j is not None else 0)


def _denom_poly(denom, nvars):
    out = ExtPoly.one(nvars, DX)
    for form in denom:
        out = out * form.as_poly(nvars, DX)
    return out


class LocalizedPoly:
    """A dx-polynomial divided by a multiset of root forms."""

    __slots__ = ("num", "denom")

    def __init__(self, num, denom=()):
        if num.family != DX:
            num = num.as_family(DX)
        self.num = num
        self.denom = tuple(sorted(denom, key=_form_sort_key))

    @classmethod
    def from_poly(cls, f):
        return cls(f if f.family == DX else f.as_family(DX))

    @classmethod
    def zero(cls, nvars):
        return cls(ExtPoly.zero(nvars, DX))

    @property
    def nvars(self):
        return self.num.nvars

    def is_zero(self):
        return self.num.is_zero()

    def cancel(self, order=None):
        """Strike every denominator form that divides the numerator.

        The reduction is confluent on this form list; ``order`` exists
        so tests can drive the reduction in shuffled orders.
        """
        num = self.num
        denom = list(self.denom)
        changed = True
        while changed and denom and not num.is_zero():
            changed = False
            if order is None:
                forms = list(denom)
            else:
                forms = [f for f in order if f in denom]
                forms += [f for f in denom if f not in forms]
            for form in forms:
                try:
                    num = exact_div_linear(num, form)
                except DivisionError:
                    continue
                denom.remove(form)
                changed = True
                break
        if num.is_zero():
            denom = []
        return LocalizedPoly(num, denom)

    def divided(self, form):
        return LocalizedPoly(self.num, self.denom + (form,)).cancel()

    def _coerce(self, other):
        if isinstance(other, LocalizedPoly):
            return other
        if isinstance(other, ExtPoly):
            return LocalizedPoly.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return LocalizedPoly.from_poly(ExtPoly.const(self.nvars, other, DX))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = Counter(self.denom), Counter(other.denom)
        lcm = a | b
        fa = _denom_poly((lcm - a).elements(), self.nvars)
        fb = _denom_poly((lcm - b).elements(), self.nvars)
        return LocalizedPoly(
            self.num * fa + other.num * fb, tuple(lcm.elements())
        ).cancel()

    __radd__ = __add__

    def __neg__(self):
        return LocalizedPoly(-self.num, self.denom)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LocalizedPoly(self.num * other, self.denom)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return LocalizedPoly(
            self.num * other.num, self.denom + other.denom
        ).cancel()

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        other = self._coerce(other)
        return NotImplemented if other is None else other * self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = Counter(self.denom), Counter(other.denom)
        fa = _denom_poly(((a | b) - a).elements(), self.nvars)
        fb = _denom_poly(((a | b) - b).elements(), self.nvars)
        return self.num * fa == other.num * fb

    __hash__ = None

    def as_poly(self):
        """The underlying polynomial; error when denominators remain."""
        red = self.cancel()
        if red.denom:
            raise ValueError(f"element is genuinely localized: {red!r}")
        return red.num

    def __repr__(self):
        if not self.denom:
            return render(self.num)
        denom = " * ".join(f"({form!r})" for form in self.denom)
        return f"({render(self.num)}) / ({denom})"


def act_dx_form(i, form, n):
    """Image of a root form under a group generator: (form, sign)."""
    if i == n:
        if form.kind == "var" and form.i == n:
            return form, -1
        if form.kind == "diff" and form.j == n:
            return LinearForm.sum(form.i, n), 1
        if form.kind == "sum" and form.j == n:
            return LinearForm.diff(form.i, n), 1
        return form, 1

    def p(t):
        if t == i:
            return i + 1
        if t == i + 1:
            return i
        return t

    if form.kind == "var":
        return LinearForm.var(p(form.i)), 1
    a, b = p(form.i), p(form.j)
    if a > b:
        a, b = b, a
        if form.kind == "diff":
            return LinearForm.diff(a, b), -1
    return LinearForm(form.kind, a, b), 1


def act_localized(i, F):
    """Twisted action of a generator on a localized element."""
    n = F.nvars
    num = act_gen(i, F.num)
    sign = 1
    denom = []
    for form in F.denom:
        form2, s = act_dx_form(i, form, n)
        denom.append(form2)
        sign *= s
    if sign < 0:
        num = -num
    return LocalizedPoly(num, denom)


def demazure_dx(i, F):
    """Twisted divided difference on the localized dx ring."""
    if isinstance(F, ExtPoly):
        F = LocalizedPoly.from_poly(F)
    n = F.nvars
    if not 1 <= i <= n:
        raise ValueError(f"generator index {i} out of range 1..{n}")
    G = F - act_localized(i, F)
    if i < n:
        return G.divided(LinearForm.diff(i, i + 1))
    return (G * Fraction(1, 2)).divided(LinearForm.var(n))


# -- admissible tuples and their matrices -------------------------------


def chain_word(j, n):
    """The word s_{j+1} s_j s_{j+2} s_{j+1} ... s_n s_{n-1}; empty for j=n."""
    if not 1 <= j <= n:
        raise ValueError(f"index {j} out of range 1..{n}")
    out = []
    for t in range(j, n):
        out.extend((t + 1, t))
    return tuple(out)


class AdmissibleTuple:
    """A candidate tuple of even polynomials; validity is checked, not assumed."""

    __slots__ = ("entries", "nvars")

    def __init__(self, entries, nvars=None):
        entries = tuple(entries)
        if not entries:
            raise ValueError("empty tuple")
        if nvars is None:
            nvars = entries[0].nvars if isinstance(entries[0], ExtPoly) else len(entries)
        self.nvars = nvars
        fixed = []
        for p in entries:
            if isinstance(p, (int, Fraction)):
                p = ExtPoly.const(nvars, p)
            fixed.append(p)
        if len(fixed) != nvars:
            raise ValueError("need one entry per variable")
        self.entries = tuple(fixed)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, k):
        return self.entries[k]

    def __len__(self):
        return len(self.entries)

    def __repr__(self):
        return "(" + ", ".join(render(p) for p in self.entries) + ")"


def default_admissible(n):
    """The tuple p_i = (-1)^(n-i) x_n^(2(n-i))."""
    if n < 2:
        raise ValueError("needs at least two variables")
    entries = []
    for i in range(1, n + 1):
        e = [0] * n
        e[n - 1] = 2 * (n - i)
        sign = -1 if (n - i) % 2 else 1
        entries.append(ExtPoly(n, OMEGA, {(tuple(e), ()): Fraction(sign)}))
    return AdmissibleTuple(entries, n)


def validate_admissible(p):
    """Check the four admissibility conditions; returns a report."""
    if not isinstance(p, AdmissibleTuple):
        p = AdmissibleTuple(p)
    n = p.nvars
    rep = SuiteReport("admissible")

    ok = all(
        act_gen(i, pj) == pj for pj in p for i in range(1, n - 1)
    )
    rep.add("symmetric in the first n-1 variables", ok)

    ok = all(act_gen(n, pj) == pj for pj in p)
    rep.add("fixed by the sign change", ok)

    ok = True
    for j, pj in enumerate(p, start=1):
        want = 2 * (n - j)
        ok = ok and not pj.is_zero() and degree(pj, XDEG) == want
    rep.add("degrees 2(n-j)", ok)

    ok = True
    for j, pj in enumerate(p, start=1):
        img = demazure_word(chain_word(j, n), pj)
        ok = ok and not img.is_zero() and degree(img, XDEG) == 0
    rep.add("chain of divided differences lands in nonzero constants", ok)

    return rep


class PolyMatrix:
    """A square matrix of even polynomials."""

    __slots__ = ("entries", "nvars")

    def __init__(self, entries, nvars=None):
        entries = [list(row) for row in entries]
        size = len(entries)
        if any(len(row) != size for row in entries):
            raise ValueError("matrix must be square")
        if nvars is None:
            nvars = entries[0][0].nvars
        self.entries = entries
        self.nvars = nvars

    @classmethod
    def identity(cls, size, nvars):
        one = ExtPoly.one(nvars)
        zero = ExtPoly.zero(nvars)
        return cls(
            [[one if i == j else zero for j in range(size)] for i in range(size)],
            nvars,
        )

    @property
    def size(self):
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i - 1][j - 1]

    def map(self, fn):
        return PolyMatrix(
            [[fn(e) for e in row] for row in self.entries], self.nvars
        )

    def __eq__(self, other):
        return (
            isinstance(other, PolyMatrix)
            and self.size == other.size
            and all(
                a == b
                for ra, rb in zip(self.entries, other.entries)
                for a, b in zip(ra, rb)
            )
        )

    __hash__ = None

    def is_zero(self):
        return all(e.is_zero() for row in self.entries for e in row)

    def mul_vector(self, vec):
        """Matrix times a column of (possibly odd) polynomials."""
        out = []
        for row in self.entries:
            acc = None
            for a, v in zip(row, vec):
                piece = a.as_family(v.family) * v
                acc = piece if acc is None else acc + piece
            out.append(acc)
        return out

    def mul(self, other):
        """Matrix product."""
        size = self.size
        zero = ExtPoly.zero(self.nvars)
        out = [[zero for _ in range(size)] for _ in range(size)]
        for a in range(size):
            for b in range(size):
                acc = zero
                for t in range(size):
                    acc = acc + self.entries[a][t] * other.entries[t][b]
                out[a][b] = acc
        return PolyMatrix(out, self.nvars)

    def invert_upper(self):
        """Inverse of an upper triangular matrix with constant diagonal."""
        size = self.size
        n = self.nvars
        diag = []
        for t in range(size):
            d = self.entries[t][t]
            c = d.constant_term()
            if d != ExtPoly.const(n, c) or not c:
                raise ValueError("diagonal must be nonzero constants")
            diag.append(c)
        zero = ExtPoly.zero(n)
        inv = [[zero for _ in range(size)] for _ in range(size)]
        for j in range(size):
            inv[j][j] = ExtPoly.const(n, Fraction(1, 1) / diag[j])
        for j in range(size):
            for k in range(j + 1, size):
                acc = zero
                for t in range(j + 1, k + 1):
                    acc = acc + self.entries[j][t] * inv[t][k]
                inv[j][k] = acc * (Fraction(-1) / diag[j])
        return PolyMatrix(inv, n)

    def __repr__(self):
        rows = [
            "[" + ", ".join(render(e) for e in row) + "]" for row in self.entries
        ]
        return "[" + ",\n ".join(rows) + "]"


def p_matrix(p):
    """The matrix with (i,j) entry the c[j]-chain applied to p_i."""
    if not isinstance(p, AdmissibleTuple):
        p = AdmissibleTuple(p)
    n = p.nvars
    rows = []
    for pi in p:
        rows.append([demazure_word(chain_word(j, n), pi) for j in range(1, n + 1)])
    return PolyMatrix(rows, n)


def gamma(k, A):
    """Column k of A moved to column k+1, zeros elsewhere."""
    size = A.size
    if not 1 <= k <= size - 1:
        raise ValueError(f"index {k} out of range 1..{size - 1}")
    zero = ExtPoly.zero(A.nvars)
    return PolyMatrix(
        [
            [A.entries[i][k - 1] if j == k else zero for j in range(size)]
            for i in range(size)
        ],
        A.nvars,
    )


def rho(k, A):
    """Row k+1 of A moved to row k, zeros elsewhere."""
    size = A.size
    if not 1 <= k <= size - 1:
        raise ValueError(f"index {k} out of range 1..{size - 1}")
    zero = ExtPoly.zero(A.nvars)
    return PolyMatrix(
        [
            [A.entries[k][j] if i == k - 1 else zero for j in range(size)]
            for i in range(size)
        ],
        A.nvars,
    )


def _matrix_demazure(i, A):
    return A.map(lambda e: demazure(i, e))


def mixing_matrix(k, P):
    """The matrix governing divided differences of the solved images.

    Because the generator derivatives annihilate df, the images
    J(w) = P^{-1} df always satisfy d_k(J(w)) = [d_k(P^{-1}) P] J(w);
    this returns that bracket.  The clean generator table is the
    statement that it collapses to a single entry -(x_k+x_{k+1}) at
    (k, k+1) — which holds at rank two but acquires corrections in the
    last column from rank three on.
    """
    Pinv = P.invert_upper()
    return Pinv.map(lambda e: demazure(k, e)).mul(P)


def check_char1(p):
    """The two matrix identities an admissible tuple must satisfy."""
    if not isinstance(p, AdmissibleTuple):
        p = AdmissibleTuple(p)
    n = p.nvars
    rep = SuiteReport("char1")
    P = p_matrix(p)

    ok = True
    for k in range(1, n):
        lhs = _matrix_demazure(k + 1, _matrix_demazure(k, P))
        ok = ok and lhs == gamma(k, P)
    rep.add("double divided difference shifts the columns", ok)

    rep.add(
        "the sign-change divided difference kills the matrix",
        _matrix_demazure(n, P).is_zero(),
    )

    ok = P.entries == [
        [demazure_word(chain_word(j + 1, n), P.entries[i][n - 1]) for j in range(n)]
        for i in range(n)
    ]
    rep.add("matrix is recovered from its last column", ok)

    ok = True
    for i in range(n):
        for j in range(n):
            e = P.entries[i][j]
            if i > j:
                ok = ok and e.is_zero()
            elif i == j:
                ok = ok and not e.is_zero() and degree(e, XDEG) == 0
            elif not e.is_zero():
                ok = ok and degree(e, XDEG) == 2 * (j - i)
    rep.add("triangular with the degree pattern 2(j-i)", ok)

    rep.add(
        "last column validates as admissible",
        validate_admissible(AdmissibleTuple([row[n - 1] for row in P.entries], n)).passed,
    )

    return rep


def _vec_demazure(k, vec):
    return [demazure(k, v) for v in vec]


def _vec_is_zero(vec):
    return all(v.is_zero() for v in vec)


def _vec_eq(u, v):
    return all(a == b for a, b in zip(u, v))


def check_char2(P, theta):
    """Evaluate the three linked conditions on (P, theta) and the implication.

    theta is a column of n odd elements (w or dx family).  Condition three
    is normalized so that the bare generator column passes: the entry
    below the active row enters with the factor -(x_k + x_{k+1}).
    """
    n = P.nvars
    theta = list(theta)
    rep = SuiteReport("char2")

    cond1 = _matrix_demazure(n, P).is_zero()
    for k in range(1, n):
        lhs = _matrix_demazure(k + 1, _matrix_demazure(k, P))
        cond1 = cond1 and lhs == gamma(k, P)

    xi = P.mul_vector(theta)
    cond2 = all(
        demazure(k, x).is_zero() for k in range(1, n + 1) for x in xi
    )

    cond3 = _vec_is_zero(_vec_demazure(n, theta))
    for k in range(1, n):
        imgs = _vec_demazure(k, theta)
        fam = theta[0].family
        factor = -(
            ExtPoly.x(k, n, fam) + ExtPoly.x(k + 1, n, fam)
        )
        for i in range(n):
            want = factor * theta[k] if i == k - 1 else ExtPoly.zero(n, fam)
            cond3 = cond3 and imgs[i] == want

    rep.add("condition 1: column-shift identity for the matrix", cond1)
    rep.add("condition 2: the transported column is invariant", cond2)
    rep.add("condition 3: the column obeys the generator table", cond3)
    count = sum((cond1, cond2, cond3))
    rep.add("no two conditions hold without the third", count != 2)
    return rep


# -- the J homomorphism -------------------------------------------------


def default_invariant_gens(n):
    """f_i = e_(n-i+1) in the squared variables, of degree 2(n-i+1)."""
    return [elem_squares(n - i + 1, n, n) for i in range(1, n + 1)]


class JMap:
    """The multiplicative extension of a generator assignment w_i -> dx image."""

    __slots__ = ("images", "nvars")

    def __init__(self, images, nvars):
        self.images = list(images)
        self.nvars = nvars

    def of_generator(self, i):
        return self.images[i - 1]

    def apply(self, f):
        """Image of a w-family polynomial in the dx ring."""
        if f.family != OMEGA:
            raise ValueError("the map is defined on the w family")
        n = f.nvars
        out = ExtPoly.zero(n, DX)
        for (e, mask), c in f.terms.items():
            piece = ExtPoly(n, DX, {(e, ()): c})
            for j in mask:
                piece = piece * self.images[j - 1]
            out = out + piece
        return out

    __call__ = apply


def build_J(fgens=None, p=None, n=None):
    """Solve the matrix relation df = P * J(w) for the generator images."""
    if fgens is None:
        if n is None:
            raise ValueError("need either generators or the variable count")
        fgens = default_invariant_gens(n)
    n = fgens[0].nvars
    if p is None:
        p = default_admissible(n)
    elif not isinstance(p, AdmissibleTuple):
        p = AdmissibleTuple(p)
    if not validate_admissible(p).passed:
        raise ValueError(f"tuple {p!r} is not admissible")
    P = p_matrix(p)
    Pinv = P.invert_upper()
    dfs = [exterior_d(f) for f in fgens]
    images = Pinv.mul_vector(dfs)
    return JMap(images, n)


def verify_J(n, fgens=None, p=None, trials=8, seed=0):
    rep = SuiteReport(f"J(n={n})")
    rng = random.Random(seed)
    if fgens is None:
        fgens = default_invariant_gens(n)
    J = build_J(fgens, p)
    xf = lambda i: ExtPoly.x(i, n, DX)

    ok = True
    for j in range(1, n + 1):
        img = J.of_generator(j)
        ok = ok and not img.is_zero()
        for (e, mask), _ in img.terms.items():
            ok = ok and len(mask) == 1 and sum(e) == 2 * (n - j) + 1
    rep.add("generator images are bihomogeneous of the right degrees", ok)

    ok = True
    for j in range(1, n + 1):
        img = LocalizedPoly.from_poly(J.of_generator(j))
        for k in range(1, n):
            got = demazure_dx(k, img)
            if j == k:
                want = LocalizedPoly.from_poly(
                    -(xf(k) + xf(k + 1)) * J.of_generator(k + 1)
                )
            else:
                want = LocalizedPoly.zero(n)
            ok = ok and got == want
        ok = ok and demazure_dx(n, img).is_zero()
    rep.add("divided differences of the images follow the generator table", ok)

    if p is None:
        p = default_admissible(n)
    P = p_matrix(p)
    ok = True
    for k in range(1, n + 1):
        M = mixing_matrix(k, P)
        for j in range(1, n + 1):
            got = demazure_dx(k, LocalizedPoly.from_poly(J.of_generator(j)))
            want = ExtPoly.zero(n, DX)
            for t in range(1, n + 1):
                want = want + M[j, t].as_family(DX) * J.of_generator(t)
            ok = ok and got == LocalizedPoly.from_poly(want)
    rep.add("divided differences of the images follow the mixing matrix", ok)

    ok = True
    for j in range(1, n + 1):
        img = J.of_generator(j)
        for k in range(1, n):
            want = img
            if j == k:
                want = want + (xf(k) ** 2 - xf(k + 1) ** 2) * J.of_generator(k + 1)
            ok = ok and act_gen(k, img) == want
        ok = ok and act_gen(n, img) == img
    rep.add("group action on the images mirrors the w generators", ok)

    basis = []
    for k in range(n + 1):
        basis.extend(s for _, s in invariant_schur_basis(n, k))
    ok = True
    for _ in range(trials):
        f = rng.choice(basis) * rng.choice(basis)
        if not is_invariant(f):
            continue
        img = J.apply(f)
        ok = ok and all(
            act_gen(i, img) == img for i in range(1, n + 1)
        )
    rep.add("images of invariants are invariant", ok)

    if n == 2:
        keys = set()
        vecs = []
        imgs = [J.apply(s) for s in basis]
        for g in imgs:
            keys |= set(g.terms)
        keys = sorted(keys)
        vecs = [[g.terms.get(k, Fraction(0)) for k in keys] for g in imgs]
        rep.add(
            "images of the invariant basis stay independent",
            linalg.rank(vecs) == len(basis),
        )

        golden = J.of_generator(2) == exterior_d(fgens[1])
        golden = golden and J.of_generator(1) == exterior_d(fgens[0]) + (
            xf(2) ** 2
        ) * exterior_d(fgens[1])
        rep.add("rank-two images match the solved matrix", golden)

    rep.add("unit maps to unit", J.apply(ExtPoly.one(n)) == ExtPoly.one(n, DX))

    return rep


# -- invariant dimension comparison -------------------------------------


def _dx_monomials(n, a, b):
    """All (exponent, mask) keys of x-degree a with b dx letters."""
    masks = list(itertools.combinations(range(1, n + 1), b))
    exps = []

    def rec(i, left, acc):
        if i == n:
            if left == 0:
                exps.append(tuple(acc))
            return
        for e in range(left + 1):
            rec(i + 1, left - e, acc + [e])

    rec(0, a, [])
    return [(e, m) for e in exps for m in masks]


def _invariant_dimension(n, a, b):
    keys = _dx_monomials(n, a, b)
    index = {k: t for t, k in enumerate(keys)}
    rows = []
    for i in range(1, n + 1):
        for key in keys:
            f = ExtPoly(n, DX, {key: Fraction(1)})
            g = act_gen(i, f) - f
            row = [Fraction(0)] * len(keys)
            for kk, c in g.terms.items():
                row[index[kk]] = c
            rows.append(row)
    return len(keys) - linalg.rank(rows)


def _span_dimension(vecs_keys):
    keys = sorted({k for g in vecs_keys for k in g.terms})
    if not keys:
        return 0
    vecs = [[g.terms.get(k, Fraction(0)) for k in keys] for g in vecs_keys]
    return linalg.rank(vecs)


def solomon_compare(n, max_bidegree=(6, None)):
    """Invariants of the dx ring versus the span of f and df monomials."""
    if n > 2:
        raise ValueError("the comparison is desk-scale only")
    max_x, max_dx = max_bidegree
    if max_dx is None:
        max_dx = n
    rep = SuiteReport(f"solomon(n={n})")
    fgens = default_invariant_gens(n)
    dfs = [exterior_d(f) for f in fgens]
    fdegs = [2 * (n - i + 1) for i in range(1, n + 1)]

    for b in range(0, max_dx + 1):
        for a in range(0, max_x + 1):
            dim_inv = _invariant_dimension(n, a, b)
            prods = []
            for T in itertools.combinations(range(n), b):
                dx_deg = sum(fdegs[t] - 1 for t in T)
                rest = a - dx_deg
                if rest < 0:
                    continue
                for expo in _exponents(fdegs, rest):
                    g = ExtPoly.one(n, DX)
                    for i, e in enumerate(expo):
                        for _ in range(e):
                            g = g * fgens[i].as_family(DX)
                    for t in T:
                        g = g * dfs[t]
                    if not g.is_zero():
                        prods.append(g)
            dim_span = _span_dimension(prods)
            rep.add(
                f"bidegree ({a},{b}): invariant dimension {dim_inv}",
                dim_inv == dim_span,
            )
    return rep


def _exponents(degs, total):
    """Exponent tuples with sum(e_i * degs_i) = total."""
    out = []

    def rec(i, left, acc):
        if i == len(degs):
            if left == 0:
                out.append(tuple(acc))
            return
        e = 0
        while e * degs[i] <= left:
            rec(i + 1, left - e * degs[i], acc + [e])
            e += 1

    rec(0, total, [])
    return out


# -- module verification ------------------------------------------------


def verify_solomon(n, trials=8, seed=0):
    rep = SuiteReport(f"solomon module(n={n})")
    rng = random.Random(seed)

    x1 = ExtPoly.x(1, n)
    got = exterior_d(x1 * x1)
    want = ExtPoly(n, DX, {(_unit(n, 0, 1), (1,)): Fraction(2)})
    rep.add("differential of a square", got == want)
    if n >= 2:
        f = ExtPoly.x(1, n) ** 2 * ExtPoly.x(2, n) ** 2
        g = ExtPoly.x(1, n) ** 2 + ExtPoly.x(2, n) ** 2
        lhs = exterior_d(f * g)
        rhs = exterior_d(f) * g.as_family(DX) + f.as_family(DX) * exterior_d(g)
        rep.add("product rule", lhs == rhs)

    ok = True
    for _ in range(trials):
        f = random_poly(n, DX, max_xdeg=3, max_terms=3, rng=rng)
        forms = _all_forms(n)
        denom = tuple(rng.choice(forms) for _ in range(rng.randrange(0, 3)))
        F = LocalizedPoly(f, denom)
        spread = F * _denom_poly(denom, n) if denom else F
        base = spread.cancel()
        for _ in range(3):
            shuffled = list(denom)
            rng.shuffle(shuffled)
            ok = ok and spread.cancel(order=shuffled) == base
    rep.add("cancellation is order independent", ok)

    ok = True
    for _ in range(trials):
        f = random_poly(n, DX, max_xdeg=2, max_terms=2, rng=rng)
        forms = _all_forms(n)
        F = LocalizedPoly(f, tuple(rng.sample(forms, rng.randrange(0, 2))))
        for i in range(1, n + 1):
            ok = ok and demazure_dx(i, demazure_dx(i, F)).is_zero()
    rep.add("localized divided differences square to zero", ok)

    ok = True
    for _ in range(max(2, trials // 2)):
        f = random_poly(n, DX, max_xdeg=2, max_terms=2, rng=rng)
        F = LocalizedPoly(f)
        for i in range(1, n - 1):
            lhs = demazure_dx(i, demazure_dx(i + 1, demazure_dx(i, F)))
            rhs = demazure_dx(i + 1, demazure_dx(i, demazure_dx(i + 1, F)))
            ok = ok and lhs == rhs
        if n >= 2:
            a, b = n - 1, n
            lhs = demazure_dx(a, demazure_dx(b, demazure_dx(a, demazure_dx(b, F))))
            rhs = demazure_dx(b, demazure_dx(a, demazure_dx(b, demazure_dx(a, F))))
            ok = ok and lhs == rhs
    rep.add("localized braid relations", ok)

    p = default_admissible(n)
    rep.add("default tuple is admissible", validate_admissible(p).passed)
    rep.add("characterization one", check_char1(p).passed)

    P = p_matrix(p)
    theta = [ExtPoly.odd(i + 1, n) for i in range(n)]
    rep.add("characterization two on the generator column", check_char2(P, theta).passed)

    J = build_J(n=n)
    if n == 2:
        theta_dx = [J.of_generator(i) for i in range(1, n + 1)]
        rep.add(
            "characterization two on the solved images",
            check_char2(P, theta_dx).passed,
        )

    bad = [ExtPoly.x(1, n, OMEGA) * ExtPoly.odd(1, n)] + [
        ExtPoly.odd(i + 1, n) for i in range(1, n)
    ]
    c2 = check_char2(PolyMatrix.identity(n, n), bad)
    checks = {c.check: c.passed for c in c2.checks}
    rep.add(
        "characterization two flags a broken column",
        not checks["condition 2: the transported column is invariant"]
        and not checks["condition 3: the column obeys the generator table"]
        and checks["no two conditions hold without the third"],
    )

    ok = True
    for j in range(1, n + 1):
        img = J.of_generator(j)
        ok = ok and not img.is_zero()
        for (e, mask), _ in img.terms.items():
            ok = ok and len(mask) == 1 and sum(e) == 2 * (n - j) + 1
    rep.add("image bidegrees", ok)

    ok = True
    for k in range(1, n + 1):
        M = mixing_matrix(k, P)
        for j in range(1, n + 1):
            got = demazure_dx(k, LocalizedPoly.from_poly(J.of_generator(j)))
            want = ExtPoly.zero(n, DX)
            for t in range(1, n + 1):
                want = want + M[j, t].as_family(DX) * J.of_generator(t)
            ok = ok and got == LocalizedPoly.from_poly(want)
    rep.add("image derivatives follow the mixing matrix", ok)

    rep.add("rank-two equivariance suite", verify_J(2, trials=trials, seed=seed).passed)
    if n >= 3:
        ok = True
        for k in range(1, n + 1):
            M = mixing_matrix(k, P)
            for a in range(1, n + 1):
                for b in range(1, n + 1):
                    e = M[a, b]
                    if k < n and (a, b) == (k, k + 1):
                        ok = ok and e == -(
                            ExtPoly.x(k, n) + ExtPoly.x(k + 1, n)
                        )
                    elif k < n and a <= k and b == n:
                        pass  # corrections live here from rank three on
                    else:
                        ok = ok and e.is_zero()
        corr = mixing_matrix(1, P)[1, n]
        ok = ok and not corr.is_zero()
        rep.add("higher-rank corrections sit in the last column", ok)

    if n <= 2:
        rep.add("invariant dimensions match the generator picture",
                solomon_compare(n, (6, None)).passed)

    return rep


def _unit(n, pos, val):
    e = [0] * n
    e[pos] = val
    return tuple(e)


def _all_forms(n):
    out = [LinearForm.var(i) for i in range(1, n + 1)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out.append(LinearForm.diff(i, j))
            out.append(LinearForm.sum(i, j))
    return out
