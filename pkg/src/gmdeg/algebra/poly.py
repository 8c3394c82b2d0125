"""Sparse multivariate polynomials over QQ or GF(p).

A polynomial is an immutable map from exponent tuples to nonzero
coefficients.  Coefficients live in the raw representation of the ring
(``Fraction`` for QQ, ``int`` in ``[0, p)`` for GF(p)).

The text fixture format (SCS) is one term per line::

    # x0^2 - 3/2 x1
    1 2 0
    -3/2 0 1
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .rings import QQ, GF, FpElement, IncompatibleRings

Monomial = tuple


def grevlex_key(m: Monomial):
    """Sort key realising graded reverse lexicographic order (larger is bigger)."""
    return (sum(m), tuple(-e for e in reversed(m)))


def _is_fp(ring) -> bool:
    return isinstance(ring, GF)


class MultiPoly:
    __slots__ = ("ring", "nvars", "terms")

    def __init__(self, ring, nvars: int, terms: Mapping[Monomial, object] | None = None):
        self.ring = ring
        self.nvars = nvars
        clean = {}
        if terms:
            for m, c in terms.items():
                m = tuple(m)
                if len(m) != nvars or any(e < 0 for e in m):
                    raise ValueError(f"bad exponent vector {m} for {nvars} variables")
                c = ring.coerce(c)
                if c:
                    clean[m] = c
        self.terms = clean

    @classmethod
    def _raw(cls, ring, nvars, terms):
        # trusted constructor: terms already normalized
        f = object.__new__(cls)
        f.ring = ring
        f.nvars = nvars
        f.terms = terms
        return f

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, ring, nvars):
        return cls._raw(ring, nvars, {})

    @classmethod
    def constant(cls, ring, nvars, c):
        return cls(ring, nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, ring, nvars, i):
        m = [0] * nvars
        m[i] = 1
        return cls._raw(ring, nvars, {tuple(m): 1 if _is_fp(ring) else Fraction(1)})

    @classmethod
    def gens(cls, ring, nvars):
        return [cls.var(ring, nvars, i) for i in range(nvars)]

    @classmethod
    def monomial(cls, ring, m: Monomial, c=1):
        return cls(ring, len(m), {tuple(m): c})

    # -- basic queries ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=grevlex_key)

    def leading_coefficient(self):
        return self.terms[self.leading_monomial()]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def coefficient(self, m: Monomial):
        return self.terms.get(tuple(m), self.ring.coerce(0))

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "MultiPoly"):
        if self.ring != other.ring or self.nvars != other.nvars:
            raise IncompatibleRings()

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, FpElement)):
            return MultiPoly.constant(self.ring, self.nvars, other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self._combine(other, -1)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other._combine(self, -1)

    def _combine(self, other, sign):
        res = dict(self.terms)
        if _is_fp(self.ring):
            p = self.ring.p
            for m, c in other.terms.items():
                v = (res.get(m, 0) + sign * c) % p
                if v:
                    res[m] = v
                else:
                    res.pop(m, None)
        else:
            for m, c in other.terms.items():
                v = res.get(m, 0) + sign * c
                if v:
                    res[m] = v
                else:
                    res.pop(m, None)
        return MultiPoly._raw(self.ring, self.nvars, res)

    def __neg__(self):
        if _is_fp(self.ring):
            p = self.ring.p
            return MultiPoly._raw(self.ring, self.nvars, {m: p - c for m, c in self.terms.items()})
        return MultiPoly._raw(self.ring, self.nvars, {m: -c for m, c in self.terms.items()})

    def scale(self, c):
        c = self.ring.coerce(c)
        if not c:
            return MultiPoly.zero(self.ring, self.nvars)
        if _is_fp(self.ring):
            p = self.ring.p
            return MultiPoly._raw(self.ring, self.nvars, {m: v * c % p for m, v in self.terms.items()})
        return MultiPoly._raw(self.ring, self.nvars, {m: v * c for m, v in self.terms.items()})

    def mul_term(self, mono: Monomial, c=1):
        """Multiply by the term ``c * x^mono``."""
        c = self.ring.coerce(c)
        if not c:
            return MultiPoly.zero(self.ring, self.nvars)
        if _is_fp(self.ring):
            p = self.ring.p
            return MultiPoly._raw(self.ring, self.nvars, {
                tuple(a + b for a, b in zip(m, mono)): v * c % p for m, v in self.terms.items()})
        return MultiPoly._raw(self.ring, self.nvars, {
            tuple(a + b for a, b in zip(m, mono)): v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FpElement)):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        res: dict = {}
        get = res.get
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                res[m] = get(m, 0) + c1 * c2
        if _is_fp(self.ring):
            p = self.ring.p
            res = {m: c % p for m, c in res.items() if c % p}
        else:
            res = {m: c for m, c in res.items() if c}
        return MultiPoly._raw(self.ring, self.nvars, res)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, FpElement)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = MultiPoly.constant(self.ring, self.nvars, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.ring == other.ring and self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction, FpElement)):
            return self == MultiPoly.constant(self.ring, self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def monic(self):
        if not self.terms:
            return self
        return self.scale(self.ring.inv(self.leading_coefficient()))

    # -- division ---------------------------------------------------------

    def divmod(self, divisors: Sequence["MultiPoly"]):
        """Multivariate division (grevlex); returns (quotients, remainder)."""
        for g in divisors:
            self._check(g)
            if not g.terms:
                raise ZeroDivisionError("division by zero polynomial")
        ring, n = self.ring, self.nvars
        quots = [dict() for _ in divisors]
        leads = [(g.leading_monomial(), g.leading_coefficient()) for g in divisors]
        rest = dict(self.terms)
        rem = {}
        fp = _is_fp(ring)
        p = ring.p if fp else None
        while rest:
            m = max(rest, key=grevlex_key)
            c = rest[m]
            for k, (lm, lc) in enumerate(leads):
                if all(a >= b for a, b in zip(m, lm)):
                    shift = tuple(a - b for a, b in zip(m, lm))
                    f = c * ring.inv(lc)
                    if fp:
                        f %= p
                    quots[k][shift] = f
                    for gm, gc in divisors[k].terms.items():
                        t = tuple(a + b for a, b in zip(gm, shift))
                        v = rest.get(t, 0) - f * gc
                        if fp:
                            v %= p
                        if v:
                            rest[t] = v
                        else:
                            rest.pop(t, None)
                    break
            else:
                rem[m] = c
                del rest[m]
        return ([MultiPoly._raw(ring, n, q) for q in quots], MultiPoly._raw(ring, n, rem))

    def divexact(self, other: "MultiPoly") -> "MultiPoly":
        (q,), r = self.divmod([other])
        if r.terms:
            raise ArithmeticError("division is not exact")
        return q

    # -- evaluation and substitution --------------------------------------

    def evaluate(self, point: Sequence):
        if len(point) != self.nvars:
            raise ValueError("point length does not match variable count")
        ring = self.ring
        vals = [ring.coerce(x) for x in point]
        total = 0
        if _is_fp(ring):
            p = ring.p
            for m, c in self.terms.items():
                t = c
                for v, e in zip(vals, m):
                    if e:
                        t = t * pow(v, e, p) % p
                total += t
            return total % p
        for m, c in self.terms.items():
            t = c
            for v, e in zip(vals, m):
                if e:
                    t = t * v ** e
            total += t
        return Fraction(total)

    def substitute(self, images: Sequence["MultiPoly"]) -> "MultiPoly":
        """Replace variable i by ``images[i]`` (all in a common target ring)."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        target = images[0]
        out = MultiPoly.zero(target.ring, target.nvars)
        cache: dict = {}

        def power(i, e):
            key = (i, e)
            if key not in cache:
                cache[key] = images[i] ** e
            return cache[key]

        for m, c in self.terms.items():
            t = MultiPoly.constant(target.ring, target.nvars, c)
            for i, e in enumerate(m):
                if e:
                    t = t * power(i, e)
            out = out + t
        return out

    def to_ring(self, ring) -> "MultiPoly":
        return MultiPoly(ring, self.nvars, self.terms)

    def derivative(self, i: int) -> "MultiPoly":
        res = {}
        for m, c in self.terms.items():
            if m[i]:
                mm = list(m)
                mm[i] -= 1
                res[tuple(mm)] = c * m[i]
        return MultiPoly(self.ring, self.nvars, res)

    # -- printing and SCS round trip --------------------------------------

    def __repr__(self):
        return self.pretty()

    def pretty(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or [f"x{i}" for i in range(self.nvars)]
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(
                n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)

    def to_scs(self) -> str:
        lines = [" ".join([self.ring.format(c), *map(str, m)]) for m, c in self.sorted_terms()]
        return "".join(line + "\n" for line in lines)

    @classmethod
    def from_scs(cls, text: str, ring=QQ, nvars: int | None = None) -> "MultiPoly":
        terms = {}
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            tokens = line.split()
            exps = tuple(int(t) for t in tokens[1:])
            if nvars is None:
                nvars = len(exps)
            if len(exps) != nvars:
                raise ValueError(f"term {line!r} has {len(exps)} exponents, expected {nvars}")
            if exps in terms:
                raise ValueError(f"duplicate monomial {exps}")
            terms[exps] = ring.parse(tokens[0])
        if nvars is None:
            raise ValueError("cannot infer variable count from an empty SCS text; pass nvars")
        return cls(ring, nvars, terms)


def poly_arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    if not isinstance(a, MultiPoly) or not isinstance(b, MultiPoly):
        raise TypeError("poly_arith expects two MultiPoly operands")
    a._check(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def homogeneous_monomials(nvars: int, degree: int) -> list[Monomial]:
    """All monomials of the given degree, in descending grevlex order."""
    out = []

    def rec(prefix, left, k):
        if k == nvars - 1:
            out.append(tuple(prefix + [left]))
            return
        for e in range(left, -1, -1):
            rec(prefix + [e], left - e, k + 1)

    if nvars == 0:
        return [()] if degree == 0 else []
    rec([], degree, 0)
    out.sort(key=grevlex_key, reverse=True)
    return out


def linear_form(ring, coeffs: Iterable) -> MultiPoly:
    coeffs = list(coeffs)
    n = len(coeffs)
    return MultiPoly(ring, n, {tuple(int(i == j) for j in range(n)): c for i, c in enumerate(coeffs)})
