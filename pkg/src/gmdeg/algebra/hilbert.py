"""Hilbert series of monomial ideals and the dimension/degree they encode."""
from __future__ import annotations

from math import comb
from typing import NamedTuple, Sequence

from .groebner import IdealBasis


class HilbertData(NamedTuple):
    """Projective dimension and degree; both None for the empty scheme."""

    dim: int | None
    degree: int | None

    @property
    def empty(self) -> bool:
        return self.dim is None


EMPTY = HilbertData(None, None)


def _minimalize(gens: list[tuple]) -> list[tuple]:
    gens = sorted(set(gens), key=sum)
    out: list[tuple] = []
    for m in gens:
        if not any(all(a <= b for a, b in zip(g, m)) for g in out):
            out.append(m)
    return out


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_add(a: list[int], b: list[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return out


def hilbert_numerator(gens: Sequence[tuple], nvars: int) -> list[int]:
    """Numerator N(t) with HS(R/I) = N(t) / (1 - t)^nvars, as a coefficient list."""
    gens = _minimalize([tuple(g) for g in gens])
    if not gens:
        return [1]
    if any(sum(g) == 0 for g in gens):
        return [0]
    # base case: pairwise coprime generators
    used = [0] * nvars
    coprime = True
    for g in gens:
        for i, e in enumerate(g):
            if e:
                if used[i]:
                    coprime = False
                used[i] += 1
    if coprime:
        out = [1]
        for g in gens:
            d = sum(g)
            out = _poly_mul(out, [1] + [0] * (d - 1) + [-1])
        return out
    # pivot on the variable shared by most mixed (non pure-power) generators
    mixed = [g for g in gens if sum(1 for e in g if e) > 1]
    var = max(range(nvars), key=lambda i: sum(1 for g in mixed if g[i]))
    exps = sorted(g[var] for g in mixed if g[var])
    e = exps[len(exps) // 2]
    pivot = tuple(e if i == var else 0 for i in range(nvars))
    with_pivot = hilbert_numerator(gens + [pivot], nvars)
    colon = [tuple(max(a - b, 0) for a, b in zip(g, pivot)) for g in gens]
    shifted = [0] * e + hilbert_numerator(colon, nvars)
    return _poly_add(with_pivot, shifted)


def dim_degree_from_numerator(num: list[int], nvars: int) -> HilbertData:
    num = list(num)
    while num and num[-1] == 0:
        num.pop()
    if not num:
        return EMPTY
    k = nvars
    # divide by (1 - t) while t = 1 is a root
    while k > 0 and sum(num) == 0:
        q = []
        acc = 0
        for c in num[:-1]:
            acc += c
            q.append(acc)
        num = q
        k -= 1
    if k == 0:
        return EMPTY
    return HilbertData(k - 1, sum(num))


def monomial_dim_degree(gens: Sequence[tuple], nvars: int) -> HilbertData:
    return dim_degree_from_numerator(hilbert_numerator(gens, nvars), nvars)


def hilbert_dim_degree(G: IdealBasis) -> HilbertData:
    """Projective dimension and degree of V(I), read from the lead-term ideal of G."""
    if not G.is_groebner:
        raise ValueError("hilbert_dim_degree needs a Groebner basis")
    return monomial_dim_degree(G.leading_monomials(), G.nvars)


def hilbert_function(gens: Sequence[tuple], nvars: int, degree: int) -> int:
    """dim_k (R/I)_degree for a monomial ideal, from the series expansion."""
    num = hilbert_numerator(gens, nvars)
    # coefficient of t^degree in num(t) / (1 - t)^nvars
    return sum(c * comb(degree - i + nvars - 1, nvars - 1)
               for i, c in enumerate(num) if i <= degree)
