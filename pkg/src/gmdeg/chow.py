"""Chern characters, Todd classes and Riemann-Roch on P^3.

The rational Chow ring of P^3 is Q[h]/(h^4).  Everything here is exact
(:class:`fractions.Fraction`); no floating point is involved.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

DIM = 3


def _frac_str(c: Fraction) -> str:
    return str(c)


@dataclass(frozen=True)
class ChowClass:
    """c0 + c1 h + c2 h^2 + c3 h^3 with rational coefficients."""

    coeffs: tuple

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > DIM + 1 and any(cs[DIM + 1:]):
            raise ValueError("classes above h^3 vanish on P^3; truncate explicitly")
        cs = (cs + [Fraction(0)] * (DIM + 1))[:DIM + 1]
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def h(cls, power: int = 1) -> "ChowClass":
        cs = [0] * (DIM + 1)
        if power <= DIM:
            cs[power] = 1
        return cls(cs)

    @classmethod
    def one(cls) -> "ChowClass":
        return cls([1])

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __add__(self, other):
        other = _as_class(other)
        return ChowClass(a + b for a, b in zip(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return ChowClass(-a for a in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_class(other))

    def __rsub__(self, other):
        return _as_class(other) - self

    def __mul__(self, other):
        other = _as_class(other)
        out = [Fraction(0)] * (DIM + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(DIM + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return ChowClass(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not defined")
        out = ChowClass.one()
        for _ in range(e):
            out = out * self
        return out

    def degree_part(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("h" if k == 1 else f"h^{k}")
            if k and abs(c) == 1:
                body = mono
            else:
                body = _frac_str(abs(c)) + ("*" + mono if mono else "")
            parts.append(("-" if c < 0 else "+", body))
        if not parts:
            return "0"
        sign, body = parts[0]
        s = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def to_json(self) -> list[str]:
        return [_frac_str(c) for c in self.coeffs]


def _as_class(x) -> ChowClass:
    if isinstance(x, ChowClass):
        return x
    if isinstance(x, (int, Fraction)):
        return ChowClass([x])
    raise TypeError(f"cannot use {type(x).__name__} as a Chow class")


@dataclass(frozen=True)
class ChernVector:
    """Rank and Chern classes c1, c2, c3 (as multiples of h, h^2, h^3)."""

    rank: int
    c1: Fraction = Fraction(0)
    c2: Fraction = Fraction(0)
    c3: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("c1", "c2", "c3"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.rank < 0:
            raise ValueError("rank must be non-negative")

    def total(self) -> ChowClass:
        return ChowClass([1, self.c1, self.c2, self.c3])


@dataclass(frozen=True)
class SheafClass:
    """A K-theory class on P^3, recorded through its Chern character."""

    ch: ChowClass

    @property
    def rank(self) -> Fraction:
        return self.ch[0]

    def __add__(self, other: "SheafClass") -> "SheafClass":
        return SheafClass(self.ch + other.ch)

    def __sub__(self, other: "SheafClass") -> "SheafClass":
        return SheafClass(self.ch - other.ch)

    def __mul__(self, n):
        # n copies (direct sum) or tensor product with another class
        if isinstance(n, SheafClass):
            return SheafClass(self.ch * n.ch)
        return SheafClass(self.ch * n)

    __rmul__ = __mul__


def chern_to_char(v: ChernVector) -> SheafClass:
    c1, c2, c3 = v.c1, v.c2, v.c3
    return SheafClass(ChowClass([
        v.rank,
        c1,
        (c1 ** 2 - 2 * c2) / 2,
        (c1 ** 3 - 3 * c1 * c2 + 3 * c3) / 6,
    ]))


def char_to_chern(s: SheafClass) -> ChernVector:
    """Invert :func:`chern_to_char` through Newton's identities.

    With power sums p_k = k! ch_k, the elementary symmetric functions satisfy
    e1 = p1, 2 e2 = e1 p1 - p2, 3 e3 = e2 p1 - e1 p2 + p3.
    """
    r, a1, a2, a3 = s.ch.coeffs
    if r.denominator != 1:
        raise ValueError(f"rank {r} is not an integer")
    p1, p2, p3 = a1, 2 * a2, 6 * a3
    e1 = p1
    e2 = (e1 * p1 - p2) / 2
    e3 = (e2 * p1 - e1 * p2 + p3) / 3
    return ChernVector(int(r), e1, e2, e3)


def sequence_combine(terms: Sequence[tuple[int, SheafClass]]) -> SheafClass:
    acc = ChowClass()
    for sign, s in terms:
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign}")
        acc = acc + s.ch if sign == 1 else acc - s.ch
    return SheafClass(acc)


def line_bundle(m: int) -> SheafClass:
    return chern_to_char(ChernVector(1, m))


def char_of_twist(s: SheafClass, m: int) -> SheafClass:
    return SheafClass(s.ch * line_bundle(m).ch)


def todd(v: ChernVector) -> ChowClass:
    c1, c2 = v.c1, v.c2
    return ChowClass([1, c1 / 2, (c1 ** 2 + c2) / 12, c1 * c2 / 24])


TANGENT_P3 = ChernVector(3, 4, 6, 4)


def tangent_class() -> SheafClass:
    """ch of the tangent sheaf from the Euler sequence 0 -> O -> O(1)^4 -> T -> 0."""
    return sequence_combine([(1, 4 * line_bundle(1)), (-1, line_bundle(0))])


def todd_p3() -> ChowClass:
    return todd(char_to_chern(tangent_class()))


def euler_characteristic(s: SheafClass) -> Fraction:
    return (s.ch * todd_p3())[DIM]


def chi_line_bundle(m: int) -> int:
    """chi(O(m)) on P^3 by the binomial formula, valid for every integer m."""
    if m >= -3:
        return comb(m + 3, 3)
    # Serre duality: chi(O(m)) = -chi(O(-4-m))
    return -comb(-m - 1, 3)


class ChowMismatch(AssertionError):
    def __init__(self, label: str, got, expected):
        super().__init__(f"{label}: computed {got}, expected {expected}")
        self.label = label


@dataclass(frozen=True)
class ContactInvariants:
    twist: int
    degree: int
    genus: int


# The classes the contact-curve computation must pass through, in order.
EXPECTED = {
    "ch(T)": ChowClass([3, 4, 2, Fraction(2, 3)]),
    "td(T)": ChowClass([1, 2, Fraction(11, 6), 1]),
    "ch(E)": ChowClass([3, 3, Fraction(1, 2), Fraction(-1, 2)]),
    "ch(N^v)": ChowClass([2, -2, 0, Fraction(2, 3)]),
    "ch(I_C(a))": ChowClass([1, 5, Fraction(1, 2), Fraction(-7, 6)]),
    "ch(I_C).td(T)": ChowClass([1, 2, Fraction(-61, 6), 15]),
}


def contact_pipeline() -> list[tuple[str, ChowClass]]:
    """Every intermediate class of the contact-curve computation, in order."""
    T = tangent_class()
    td = todd_p3()
    omega2 = sequence_combine([(1, 4 * line_bundle(1)), (-1, line_bundle(2))])
    E = sequence_combine([(1, line_bundle(1)), (1, omega2), (-1, line_bundle(0))])
    T_minus2 = sequence_combine([(1, 4 * line_bundle(-1)), (-1, line_bundle(-2))])
    N_dual = sequence_combine([(1, T_minus2), (-1, line_bundle(0))])
    I_a = sequence_combine([(1, E), (-1, N_dual)])
    a = I_a.ch[1]
    if a.denominator != 1:
        raise ChowMismatch("twist", a, "an integer")
    I = char_of_twist(I_a, -int(a))
    return [
        ("ch(T)", T.ch),
        ("td(T)", td),
        ("ch(Omega(2))", omega2.ch),
        ("ch(E)", E.ch),
        ("ch(T(-2))", T_minus2.ch),
        ("ch(N^v)", N_dual.ch),
        ("ch(I_C(a))", I_a.ch),
        ("ch(I_C)", I.ch),
        ("ch(I_C).td(T)", I.ch * td),
    ]


def contact_curve_invariants() -> ContactInvariants:
    stages = dict(contact_pipeline())
    for label, want in EXPECTED.items():
        if stages[label] != want:
            raise ChowMismatch(label, stages[label], want)
    I_a = SheafClass(stages["ch(I_C(a))"])
    a = int(I_a.ch[1])
    # O_C(a) = O(a) - I_C(a); c1 vanishes and c2 = -deg(C) h^2 for a curve
    O_C = sequence_combine([(1, line_bundle(a)), (-1, I_a)])
    cv = char_to_chern(O_C)
    if cv.rank != 0 or cv.c1 != 0:
        raise ChowMismatch("ch(O_C(a))", O_C.ch, "rank 0 and c1 = 0")
    deg = -cv.c2
    genus = stages["ch(I_C).td(T)"][DIM]
    if deg.denominator != 1 or genus.denominator != 1:
        raise ChowMismatch("integrality", (deg, genus), "integers")
    return ContactInvariants(a, int(deg), int(genus))


def verify_records() -> list[dict]:
    """One record per checked class; used by the ``chow verify`` command."""
    stages = dict(contact_pipeline())
    records = []
    for label, want in EXPECTED.items():
        got = stages[label]
        records.append({
            "label": label,
            "computed": str(got),
            "expected": str(want),
            "status": "PASS" if got == want else "FAIL",
        })
    try:
        inv = contact_curve_invariants()
        got = [inv.twist, inv.degree, inv.genus]
    except ChowMismatch as exc:
        got = str(exc)
    records.append({
        "label": "(a, deg C, p_a(C))",
        "computed": got,
        "expected": [5, 12, 15],
        "status": "PASS" if got == [5, 12, 15] else "FAIL",
    })
    return records
