"""Univariate polynomial gcd and square-free parts over F_p."""
from __future__ import annotations

from .poly import MultiPoly
from .rings import GF


def _to_list(f: MultiPoly) -> list[int]:
    out = [0] * (f.total_degree() + 1)
    for (e,), c in f.terms.items():
        out[e] = c
    return out


def _from_list(ring, coeffs: list[int]) -> MultiPoly:
    return MultiPoly(ring, 1, {(i,): c for i, c in enumerate(coeffs) if c})


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _divmod(a: list[int], b: list[int], p: int):
    a = list(a)
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 1)
    while len(_trim(a)) >= len(b):
        shift = len(a) - len(b)
        f = a[-1] * inv % p
        q[shift] = f
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - f * c) % p
    return _trim(q), a


def _monic(a: list[int], p: int) -> list[int]:
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def gcd_list(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _divmod(a, b, p)[1]
    return _monic(a, p) if a else []


def univariate_gcd(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    if f.nvars != 1 or g.nvars != 1 or not isinstance(f.ring, GF):
        raise ValueError("univariate_gcd expects univariate polynomials over GF(p)")
    f._check(g)
    return _from_list(f.ring, gcd_list(_to_list(f), _to_list(g), f.ring.p))


def squarefree_part(f: MultiPoly) -> MultiPoly:
    """f / gcd(f, f'), made monic.  Requires p > deg f."""
    if f.nvars != 1 or not isinstance(f.ring, GF):
        raise ValueError("squarefree_part expects a univariate polynomial over GF(p)")
    if f.is_zero():
        raise ValueError("square-free part of the zero polynomial")
    p = f.ring.p
    a = _to_list(f)
    if len(a) - 1 >= p:
        raise ValueError("degree must be smaller than the characteristic")
    da = _trim([i * c % p for i, c in enumerate(a)][1:])
    g = gcd_list(a, da, p) if da else [1]
    q, r = _divmod(a, g, p)
    assert not r
    return _from_list(f.ring, _monic(q, p))
