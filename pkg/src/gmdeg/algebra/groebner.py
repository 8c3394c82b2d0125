"""Reduced Groebner bases of homogeneous ideals over F_p (grevlex).

Pairs are managed Buchberger-style: Gebauer-Moeller installation applies
both Buchberger criteria (coprime leading monomials, chain criterion), and
pairs are processed by increasing sugar, which equals the degree for
homogeneous input.  All S-polynomials of one degree are reduced together
by dense Gaussian elimination over the monomials they touch.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .poly import MultiPoly, grevlex_key
from .rings import GF

DEFAULT_BUDGET = 200_000
MAX_VARS = 6


def default_budget() -> int:
    env = os.environ.get("GMDEG_GROEBNER_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass(frozen=True)
class IdealBasis:
    generators: tuple
    is_groebner: bool = False

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        if gens:
            ring, n = gens[0].ring, gens[0].nvars
            if any(g.ring != ring or g.nvars != n for g in gens):
                raise ValueError("generators live in different rings")

    @property
    def ring(self):
        return self.generators[0].ring

    @property
    def nvars(self):
        return self.generators[0].nvars

    def leading_monomials(self) -> list[tuple]:
        return [g.leading_monomial() for g in self.generators]

    def __len__(self):
        return len(self.generators)


class GroebnerBudgetExhausted(RuntimeError):
    def __init__(self, partial: IdealBasis, reductions: int):
        super().__init__("groebner budget exhausted")
        self.partial = partial
        self.reductions = reductions


@dataclass
class GroebnerStats:
    reductions: int = 0
    pairs_skipped: int = 0
    max_degree: int = 0
    batches: list = field(default_factory=list)


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a, b) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _quot(a, b):
    return tuple(x - y for x, y in zip(a, b))


class _Pairs:
    """Critical pairs with Gebauer-Moeller installation."""

    def __init__(self):
        self.pairs: dict[tuple[int, int], tuple] = {}
        self.skipped = 0

    def install(self, lms: list, h: int):
        lh = lms[h]
        cand = [(g, _lcm(lms[g], lh)) for g in range(h)]
        kept = []
        while cand:
            g, l = cand.pop(0)
            if _coprime(lms[g], lh) or not any(
                    _divides(l2, l) for _, l2 in cand + kept):
                kept.append((g, l))
            else:
                self.skipped += 1
        for key, l in list(self.pairs.items()):
            g1, g2 = key
            if _divides(lh, l) and _lcm(lms[g1], lh) != l and _lcm(lms[g2], lh) != l:
                del self.pairs[key]
                self.skipped += 1
        for g, l in kept:
            if _coprime(lms[g], lh):
                self.skipped += 1
            else:
                self.pairs[(g, h)] = l

    def min_degree(self):
        return min((sum(l) for l in self.pairs.values()), default=None)

    def pop_degree(self, d: int):
        out = [(k, l) for k, l in self.pairs.items() if sum(l) == d]
        for k, _ in out:
            del self.pairs[k]
        return out


def _rref(B: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_p; returns (nonzero rows, pivot columns)."""
    B = B.copy()
    nrows, ncols = B.shape
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(B[r:, c])
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            B[[r, k]] = B[[k, r]]
        B[r] = B[r] * pow(int(B[r, c]), -1, p) % p
        col = B[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            B[hit] = (B[hit] - col[hit, None] * B[r]) % p
        pivots.append(c)
        r += 1
    return B[:r], pivots


def _check_input(ideal: IdealBasis):
    gens = [g for g in ideal.generators if g]
    if not ideal.generators:
        raise ValueError("empty generator list")
    if not isinstance(ideal.ring, GF):
        raise ValueError("groebner works over prime fields only")
    if ideal.nvars > MAX_VARS:
        raise ValueError(f"at most {MAX_VARS} variables supported, got {ideal.nvars}")
    for g in gens:
        if not g.is_homogeneous():
            raise ValueError("groebner requires homogeneous generators")
    return gens


def groebner(ideal: IdealBasis, budget: int | None = None,
             stats: GroebnerStats | None = None) -> IdealBasis:
    """Reduced grevlex Groebner basis of a homogeneous ideal over F_p.

    ``budget`` caps the number of polynomials sent through reduction
    (input generators plus S-polynomials).  When it is exceeded
    :class:`GroebnerBudgetExhausted` is raised with the partial basis.
    """
    gens = _check_input(ideal)
    ring, n = ideal.ring, ideal.nvars
    p = ring.p
    budget = default_budget() if budget is None else budget
    stats = stats if stats is not None else GroebnerStats()

    basis: list[dict] = []
    lms: list[tuple] = []
    pairs = _Pairs()
    pending: dict[int, list[dict]] = {}
    for g in gens:
        pending.setdefault(g.total_degree(), []).append(dict(g.terms))

    def partial():
        return IdealBasis(tuple(MultiPoly._raw(ring, n, dict(b)) for b in basis), False)

    while pending or pairs.pairs:
        d_in = min(pending) if pending else None
        d_pair = pairs.min_degree()
        d = min(x for x in (d_in, d_pair) if x is not None)
        rows = pending.pop(d, []) if d == d_in else []
        for (i, j), l in pairs.pop_degree(d):
            si, sj = _quot(l, lms[i]), _quot(l, lms[j])
            s = {}
            for m, c in basis[i].items():
                s[tuple(a + b for a, b in zip(m, si))] = c
            for m, c in basis[j].items():
                t = tuple(a + b for a, b in zip(m, sj))
                v = (s.get(t, 0) - c) % p
                if v:
                    s[t] = v
                else:
                    s.pop(t, None)
            if s:
                rows.append(s)
        stats.reductions += len(rows)
        if stats.reductions > budget:
            stats.pairs_skipped = pairs.skipped
            raise GroebnerBudgetExhausted(partial(), stats.reductions)
        if not rows:
            continue
        stats.max_degree = max(stats.max_degree, d)
        new = _reduce_batch(rows, basis, lms, p)
        stats.batches.append((d, len(rows), len(new)))
        for poly, lm in new:
            basis.append(poly)
            lms.append(lm)
            pairs.install(lms, len(basis) - 1)
    stats.pairs_skipped = pairs.skipped
    out = [MultiPoly._raw(ring, n, b) for b in basis]
    out.sort(key=lambda f: grevlex_key(f.leading_monomial()), reverse=True)
    return IdealBasis(tuple(out), True)


def _reduce_batch(rows: list[dict], basis: list[dict], lms: list[tuple], p: int):
    """Reduce same-degree rows by the basis; return new (poly, lm) in echelon form."""
    # symbolic preprocessing: pick one reducer per reducible monomial
    todo = set()
    for r in rows:
        todo.update(r)
    seen = set()
    reducers: dict[tuple, dict] = {}
    while todo:
        m = todo.pop()
        if m in seen:
            continue
        seen.add(m)
        for k in range(len(basis) - 1, -1, -1):
            lm = lms[k]
            if _divides(lm, m):
                shift = _quot(m, lm)
                red = {tuple(a + b for a, b in zip(t, shift)): c for t, c in basis[k].items()}
                reducers[m] = red
                todo.update(t for t in red if t not in seen)
                break
    cols = sorted(seen, key=grevlex_key, reverse=True)
    index = {m: i for i, m in enumerate(cols)}
    B = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for i, r in enumerate(rows):
        for m, c in r.items():
            B[i, index[m]] = c
    for m in cols:
        red = reducers.get(m)
        if red is None:
            continue
        c = index[m]
        f = B[:, c]
        hit = np.flatnonzero(f)
        if hit.size == 0:
            continue
        R = np.zeros(len(cols), dtype=np.int64)
        for t, v in red.items():
            R[index[t]] = v
        B[hit] = (B[hit] - f[hit, None] * R) % p
    E, pivots = _rref(B, p)
    out = []
    for row, pc in zip(E, pivots):
        nz = np.flatnonzero(row)
        out.append(({cols[k]: int(row[k]) for k in nz}, cols[pc]))
    return out


def normal_form(f: MultiPoly, basis: IdealBasis | Sequence[MultiPoly]) -> MultiPoly:
    """Remainder of f under multivariate division by the basis elements."""
    gens = basis.generators if isinstance(basis, IdealBasis) else tuple(basis)
    gens = [g for g in gens if g]
    if not gens:
        return f
    return f.divmod(gens)[1]


def in_ideal(f: MultiPoly, G: IdealBasis) -> bool:
    if not G.is_groebner:
        raise ValueError("ideal membership needs a Groebner basis")
    return normal_form(f, G).is_zero()


def saturate_last_variable(G: IdealBasis, budget: int | None = None) -> IdealBasis:
    """Saturation by the last variable (Bayer-Stillman; valid for grevlex bases)."""
    if not G.is_groebner:
        raise ValueError("saturation needs a Groebner basis")
    n = G.nvars
    out = []
    for g in G.generators:
        k = min(m[n - 1] for m in g.terms)
        if k:
            shift = [0] * n
            shift[-1] = k
            g = MultiPoly._raw(g.ring, n, {
                tuple(a - b for a, b in zip(m, shift)): c for m, c in g.terms.items()})
        out.append(g)
    return groebner(IdealBasis(tuple(out)), budget=budget)


def is_groebner_basis(G: Sequence[MultiPoly]) -> bool:
    """Buchberger's criterion checked directly: every S-polynomial reduces to zero."""
    G = [g.monic() for g in G if g]
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            li, lj = G[i].leading_monomial(), G[j].leading_monomial()
            l = _lcm(li, lj)
            s = G[i].mul_term(_quot(l, li)) - G[j].mul_term(_quot(l, lj))
            if normal_form(s, G):
                return False
    return True
