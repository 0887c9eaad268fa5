"""Extended polynomial rings with exact rational coefficients.

An extended polynomial lives in Q[x_1..x_n] tensored with an exterior
algebra on n odd generators.  Two odd families are supported and never
mixed inside one element:

* ``OMEGA`` -- generators rendered ``w1..wn`` (the extended ring the
  divided-difference calculus acts on);
* ``DX`` -- generators rendered ``dx1..dxn`` (one-forms).

Terms are stored sparsely as ``(xexp, omask) -> Fraction`` with ``xexp``
a tuple of n exponents and ``omask`` a strictly increasing tuple of
1-based odd indices; reordering signs are absorbed at construction.
"""

from __future__ import annotations

import json
import random
import re
from fractions import Fraction

from ._backend import kernels as _k

OMEGA = "w"
DX = "dx"

__all__ = [
    "OMEGA",
    "DX",
    "ExtPoly",
    "DivisionError",
    "LinearForm",
    "XDEG",
    "BIDEG",
    "DGN",
    "degree",
    "exact_div_linear",
    "parse",
    "render",
    "to_json",
    "from_json",
    "random_poly",
]


class DivisionError(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


def _normalize_mask(seq):
    """Sort an odd-index sequence, returning (sign, tuple) or None on repeat."""
    mask = tuple(seq)
    if len(set(mask)) != len(mask):
        return None
    inv = 0
    for i in range(len(mask)):
        for j in range(i + 1, len(mask)):
            if mask[i] > mask[j]:
                inv += 1
    return (1 if inv % 2 == 0 else -1), tuple(sorted(mask))


class ExtPoly:
    """Sparse extended polynomial.  Treat instances as immutable."""

    __slots__ = ("nvars", "family", "terms")

    def __init__(self, nvars, family=OMEGA, terms=None):
        if family not in (OMEGA, DX):
            raise ValueError(f"unknown odd family {family!r}")
        if nvars < 1:
            raise ValueError("nvars must be positive")
        self.nvars = nvars
        self.family = family
        self.terms = terms if terms is not None else {}

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, nvars, family=OMEGA):
        return cls(nvars, family, {})

    @classmethod
    def const(cls, nvars, c, family=OMEGA):
        c = Fraction(c)
        if not c:
            return cls.zero(nvars, family)
        return cls(nvars, family, {((0,) * nvars, ()): c})

    @classmethod
    def one(cls, nvars, family=OMEGA):
        return cls.const(nvars, 1, family)

    @classmethod
    def x(cls, i, nvars, family=OMEGA):
        """The even variable x_i (1-based)."""
        if not 1 <= i <= nvars:
            raise ValueError(f"variable index {i} out of range 1..{nvars}")
        e = [0] * nvars
        e[i - 1] = 1
        return cls(nvars, family, {(tuple(e), ()): Fraction(1)})

    @classmethod
    def odd(cls, i, nvars, family=OMEGA):
        """The odd generator (w_i or dx_i, by family), 1-based."""
        if not 1 <= i <= nvars:
            raise ValueError(f"odd index {i} out of range 1..{nvars}")
        return cls(nvars, family, {((0,) * nvars, (i,)): Fraction(1)})

    @classmethod
    def from_terms(cls, nvars, entries, family=OMEGA):
        """Build from ``(coeff, xexp, odd_seq)`` triples; odd order may be free."""
        acc = {}
        for coeff, xexp, odd_seq in entries:
            c = Fraction(coeff)
            if not c:
                continue
            xexp = tuple(xexp)
            if len(xexp) != nvars or any(e < 0 for e in xexp):
                raise ValueError(f"bad exponent tuple {xexp!r}")
            norm = _normalize_mask(odd_seq)
            if norm is None:
                continue
            sign, mask = norm
            if any(not 1 <= i <= nvars for i in mask):
                raise ValueError(f"odd index out of range in {odd_seq!r}")
            key = (xexp, mask)
            c = c if sign > 0 else -c
            v = acc.get(key)
            acc[key] = c if v is None else v + c
        return cls(nvars, family, {k: v for k, v in acc.items() if v})

    # -- basic queries --------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coeff_of(self, xexp, omask=()):
        return self.terms.get((tuple(xexp), tuple(omask)), Fraction(0))

    def constant_term(self):
        return self.coeff_of((0,) * self.nvars)

    def is_even(self):
        """True when no odd generator appears."""
        return all(not m for (_, m) in self.terms)

    def max_xdeg(self):
        """Largest total x-degree over the support (0 for the zero poly)."""
        return max((sum(e) for (e, _) in self.terms), default=0)

    def as_family(self, family):
        """Reinterpret in the other odd family; only for even elements."""
        if family == self.family:
            return self
        if not self.is_even():
            raise ValueError("cannot convert an element with odd generators")
        return ExtPoly(self.nvars, family, dict(self.terms))

    # -- arithmetic -----------------------------------------------------

    def _check(self, other):
        if self.nvars != other.nvars or self.family != other.family:
            raise ValueError("operands live in different rings")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExtPoly.const(self.nvars, other, self.family)
        if not isinstance(other, ExtPoly):
            return NotImplemented
        self._check(other)
        return ExtPoly(self.nvars, self.family, _k.add_terms(self.terms, other.terms))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExtPoly.const(self.nvars, other, self.family)
        if not isinstance(other, ExtPoly):
            return NotImplemented
        self._check(other)
        return ExtPoly(self.nvars, self.family, _k.sub_terms(self.terms, other.terms))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return ExtPoly(self.nvars, self.family, _k.scale_terms(self.terms, Fraction(-1)))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ExtPoly(self.nvars, self.family, _k.scale_terms(self.terms, Fraction(other)))
        if not isinstance(other, ExtPoly):
            return NotImplemented
        self._check(other)
        return ExtPoly(self.nvars, self.family, _k.mul_terms(self.terms, other.terms))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = ExtPoly.one(self.nvars, self.family)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExtPoly.const(self.nvars, other, self.family)
        if not isinstance(other, ExtPoly):
            return NotImplemented
        return (
            self.nvars == other.nvars
            and self.family == other.family
            and self.terms == other.terms
        )

    __hash__ = None

    def __repr__(self):
        return f"ExtPoly({self.nvars}, {render(self)!r})"

    def __str__(self):
        return render(self)

    # -- grading helpers ------------------------------------------------

    def homogeneous_components(self, grading):
        """Split into homogeneous pieces: dict mapping degree -> ExtPoly."""
        parts = {}
        for key, c in self.terms.items():
            d = _term_degree(key, grading, self.family)
            parts.setdefault(d, {})[key] = c
        return {d: ExtPoly(self.nvars, self.family, t) for d, t in sorted(parts.items())}


# -- gradings -----------------------------------------------------------


class Grading:
    """A degree assignment; use the XDEG / BIDEG singletons or DGN(N)."""

    def __init__(self, kind, N=None):
        self.kind = kind
        self.N = N

    def __repr__(self):
        return f"DGN({self.N})" if self.kind == "dgn" else self.kind.upper()


XDEG = Grading("xdeg")
BIDEG = Grading("bideg")


def DGN(N):
    return Grading("dgn", N)


def _term_degree(key, grading, family):
    xexp, mask = key
    if grading.kind == "xdeg":
        d = sum(xexp)
        if family == OMEGA:
            d += sum(-2 * i for i in mask)
        else:
            d += len(mask)
        return d
    if grading.kind == "bideg":
        return (sum(xexp), len(mask))
    if grading.kind == "dgn":
        if family != OMEGA:
            raise ValueError("DGN grading applies to the w family only")
        return sum(xexp) + sum(2 * (grading.N - i) + 1 for i in mask)
    raise ValueError(f"unknown grading {grading!r}")


def degree(f, grading):
    """Common degree of all terms, or None when inhomogeneous (or zero)."""
    degs = {_term_degree(key, grading, f.family) for key in f.terms}
    if len(degs) != 1:
        return None
    return degs.pop()


# -- exact division by linear forms ------------------------------------


class LinearForm:
    """One of the linear forms x_i - x_j, x_i + x_j (i < j), or x_i."""

    __slots__ = ("kind", "i", "j")

    def __init__(self, kind, i, j=None):
        if kind in ("diff", "sum"):
            if j is None or not i < j:
                raise ValueError("need indices i < j")
        elif kind != "var":
            raise ValueError(f"unknown form kind {kind!r}")
        self.kind = kind
        self.i = i
        self.j = j

    @classmethod
    def diff(cls, i, j):
        return cls("diff", i, j)

    @classmethod
    def sum(cls, i, j):
        return cls("sum", i, j)

    @classmethod
    def var(cls, i):
        return cls("var", i)

    def as_poly(self, nvars, family=OMEGA):
        x = ExtPoly.x
        if self.kind == "diff":
            return x(self.i, nvars, family) - x(self.j, nvars, family)
        if self.kind == "sum":
            return x(self.i, nvars, family) + x(self.j, nvars, family)
        return x(self.i, nvars, family)

    def key(self):
        return (self.kind, self.i, self.j)

    def __eq__(self, other):
        return isinstance(other, LinearForm) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        if self.kind == "diff":
            return f"x{self.i} - x{self.j}"
        if self.kind == "sum":
            return f"x{self.i} + x{self.j}"
        return f"x{self.i}"


def _div_terms(terms, form):
    if form.kind == "var":
        return _k.div_var_terms(terms, form.i - 1)
    s = 1 if form.kind == "diff" else -1
    return _k.div_linear_terms(terms, form.i - 1, form.j - 1, s)


def exact_div_linear(f, form):
    """Divide f exactly by a linear form; DivisionError if it does not divide."""
    quot, rem = _div_terms(f.terms, form)
    if rem:
        raise DivisionError(
            f"{form!r} does not divide exactly",
            remainder=ExtPoly(f.nvars, f.family, rem),
        )
    return ExtPoly(f.nvars, f.family, quot)


# -- text form ----------------------------------------------------------

_FACTOR_RE = re.compile(r"^(?:(\d+(?:/\d+)?)|x(\d+)(?:\^(\d+))?|w(\d+)|dx(\d+))$")


def _render_term(xexp, mask, coeff, family):
    factors = []
    for i, e in enumerate(xexp, start=1):
        if e == 1:
            factors.append(f"x{i}")
        elif e > 1:
            factors.append(f"x{i}^{e}")
    for i in mask:
        factors.append(f"{family}{i}")
    mag = abs(coeff)
    if not factors:
        return str(mag)
    if mag != 1:
        factors.insert(0, str(mag))
    return "*".join(factors)


def _term_sort_key(key):
    xexp, mask = key
    return (mask, tuple(-e for e in xexp))


def render(f):
    """Canonical text form; inverse of parse()."""
    if not f.terms:
        return "0"
    keys = sorted(f.terms, key=_term_sort_key)
    pieces = []
    for idx, key in enumerate(keys):
        c = f.terms[key]
        body = _render_term(key[0], key[1], c, f.family)
        if idx == 0:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append(("- " if c < 0 else "+ ") + body)
    return " ".join(pieces)


def parse_term(chunk, nvars):
    """Parse one product chunk (no sign); returns (coeff, xexp, odd_seq, family).

    family is None when no odd generator occurs in the chunk.
    """
    coeff = Fraction(1)
    xexp = [0] * nvars
    odd_seq = []
    family = None
    chunk = chunk.strip()
    if not chunk:
        raise ValueError("empty term")
    for factor in chunk.split("*"):
        factor = factor.strip()
        m = _FACTOR_RE.match(factor)
        if not m:
            raise ValueError(f"cannot parse factor {factor!r}")
        rat, xi, xe, wi, dxi = m.groups()
        if rat is not None:
            coeff *= Fraction(rat)
        elif xi is not None:
            i = int(xi)
            if not 1 <= i <= nvars:
                raise ValueError(f"variable x{i} out of range 1..{nvars}")
            xexp[i - 1] += int(xe) if xe else 1
        else:
            fam = OMEGA if wi is not None else DX
            i = int(wi if wi is not None else dxi)
            if not 1 <= i <= nvars:
                raise ValueError(f"odd index {i} out of range 1..{nvars}")
            if family is None:
                family = fam
            elif family != fam:
                raise ValueError("mixed odd families in one term")
            odd_seq.append(i)
    return coeff, tuple(xexp), odd_seq, family


def parse(text, nvars, family=None):
    """Parse the canonical text form.

    The odd family is inferred from the generators present; ``family``
    only disambiguates purely even input (default OMEGA).
    """
    s = text.strip()
    if s == "0":
        return ExtPoly.zero(nvars, family or OMEGA)
    s = s.replace("-", "+-")
    entries = []
    seen_family = None
    for chunk in s.split("+"):
        chunk = chunk.strip()
        if not chunk:
            continue
        sign = 1
        if chunk.startswith("-"):
            sign = -1
            chunk = chunk[1:].strip()
        coeff, xexp, odd_seq, fam = parse_term(chunk, nvars)
        if fam is not None:
            if seen_family is None:
                seen_family = fam
            elif seen_family != fam:
                raise ValueError("mixed odd families")
        entries.append((sign * coeff, xexp, odd_seq))
    fam = seen_family or family or OMEGA
    if family is not None and seen_family is not None and family != seen_family:
        raise ValueError(f"expected family {family!r}, found {seen_family!r}")
    return ExtPoly.from_terms(nvars, entries, fam)


# -- JSON form ----------------------------------------------------------


def to_json(f):
    terms = []
    for key in sorted(f.terms, key=_term_sort_key):
        c = f.terms[key]
        terms.append({"coeff": str(c), "x": list(key[0]), "odd": list(key[1])})
    return {"nvars": f.nvars, "odd": f.family, "terms": terms}


def from_json(obj):
    if isinstance(obj, str):
        obj = json.loads(obj)
    entries = [
        (Fraction(t["coeff"]), tuple(t["x"]), tuple(t["odd"])) for t in obj["terms"]
    ]
    return ExtPoly.from_terms(obj["nvars"], entries, obj["odd"])


# -- randomized inputs --------------------------------------------------


def random_poly(nvars, family=OMEGA, max_xdeg=3, max_terms=5, seed=0, rng=None):
    """Deterministic random element for property checks.

    Coefficients are small nonzero rationals; at most ``max_terms`` terms
    (fewer if drawn terms collide).
    """
    r = rng if rng is not None else random.Random(seed)
    entries = []
    for _ in range(r.randint(1, max_terms)):
        xexp = tuple(r.randint(0, max_xdeg) for _ in range(nvars))
        mask = [i for i in range(1, nvars + 1) if r.random() < 0.4]
        num = r.choice([c for c in range(-6, 7) if c])
        den = r.randint(1, 4)
        entries.append((Fraction(num, den), xexp, tuple(mask)))
    return ExtPoly.from_terms(nvars, entries, family)
