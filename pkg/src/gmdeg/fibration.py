"""Quadric and conic fibrations attached to a Gushel-Mukai datum over F_p.

W = F_p^5 with Plucker space Lambda^2 W (basis e_a ^ e_b, a < b).  A datum
is a quadratic form q on Lambda^2 W, a linear form h on Lambda^2 W and a
4-dimensional subspace V of W.  Over v in P(W) the quadric fiber is q on
{v ^ w}; cutting it with h gives a conic, and restricting v to P(V) gives
the conic bundle over P^3.  Fiber ranks are read from Gram matrices in the
basis v ^ b_i for a basis b of a complement of v.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .algebra import (
    GF, MultiPoly, PolyMatrix, IdealBasis, QQ, EMPTY, GroebnerBudgetExhausted,
    determinant, minors, symmetric_minors, groebner, saturate_last_variable,
    hilbert_dim_degree, rank_mod_p, batched_rank_mod_p, nullspace_mod_p,
    squarefree_part, is_prime,
)

log = logging.getLogger(__name__)

PAIRS = tuple(combinations(range(5), 2))
PAIR_INDEX = {pr: k for k, pr in enumerate(PAIRS)}
RETRY_CAP = 100
DEGENERATE = "DEGENERATE-FIBER"
CENSUS_CHUNK = 1 << 16
_SEED_MASK = (1 << 64) - 1


def philox(seed: int, stream: int = 0) -> np.random.Generator:
    """Counter-based generator keyed by (seed, stream)."""
    return np.random.Generator(np.random.Philox(key=(seed & _SEED_MASK) | (stream << 64)))


class InstanceRetriesExhausted(RuntimeError):
    pass


class DiscriminantError(RuntimeError):
    def __init__(self, msg: str, factor_degrees: list[int]):
        super().__init__(f"{msg}; factor degrees {factor_degrees}")
        self.factor_degrees = factor_degrees


class ContactIdentityError(AssertionError):
    pass


def skew_matrix(h) -> list[list[int]]:
    """The 5x5 alternating matrix H with h(u ^ w) = u^T H w."""
    H = [[0] * 5 for _ in range(5)]
    for (a, b), c in zip(PAIRS, h):
        H[a][b] = c
        H[b][a] = -c
    return H


def wedge(u, w) -> list:
    return [u[a] * w[b] - u[b] * w[a] for a, b in PAIRS]


@dataclass(frozen=True)
class FibrationInstance:
    p: int
    q: tuple       # 10x10 symmetric, entries in [0, p)
    h: tuple       # 10 entries
    V: tuple       # 4x5, rank 4
    seed: int
    retries: tuple = ()

    @property
    def vertex(self) -> tuple[int, ...]:
        """The point P of P(W) where the section defined by h vanishes."""
        ker = nullspace_mod_p(skew_matrix(self.h), self.p)
        if len(ker) != 1:
            raise ValueError("h does not define a single vertex")
        return tuple(ker[0])

    def to_json(self) -> dict:
        return {"p": self.p, "seed": self.seed, "retries": len(self.retries),
                "retry_reasons": list(self.retries)}


def sample_instance(p: int, seed: int, retry_cap: int = RETRY_CAP) -> FibrationInstance:
    """Draw (q, h, V) uniformly and deterministically from (p, seed).

    Draws with rank V < 4, h = 0, h of rank below 4, or vertex inside P(V)
    are discarded; each discard is recorded in ``retries``.
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    rng = philox(seed, 0)
    reasons = []
    for _ in range(retry_cap + 1):
        upper = rng.integers(0, p, size=(10, 10))
        q = np.triu(upper) + np.triu(upper, 1).T
        h = rng.integers(0, p, size=10)
        V = rng.integers(0, p, size=(4, 5))
        Vl = V.tolist()
        reason = None
        if rank_mod_p(Vl, p) < 4:
            reason = "V has rank below 4"
        elif not h.any():
            reason = "h = 0"
        elif rank_mod_p(skew_matrix(h.tolist()), p) < 4:
            reason = "h has rank below 4"
        else:
            P = nullspace_mod_p(skew_matrix(h.tolist()), p)[0]
            if rank_mod_p(Vl + [P], p) < 5:
                reason = "vertex lies on P(V)"
        if reason is None:
            return FibrationInstance(
                p, tuple(map(tuple, q.tolist())), tuple(h.tolist()),
                tuple(map(tuple, Vl)), seed, tuple(reasons))
        log.info("instance (p=%d, seed=%d) resampled: %s", p, seed, reason)
        reasons.append(reason)
    raise InstanceRetriesExhausted(
        f"no generic instance after {retry_cap} retries for p={p}, seed={seed}")


# -- symbolic construction -------------------------------------------------

def _wedge_linear(vcoef: np.ndarray, b) -> np.ndarray:
    """Coefficient vectors (10 x nvars) of v ^ b for v linear in the variables.

    ``vcoef`` has shape (5, nvars): row a holds the coefficients of v_a.
    """
    out = np.zeros((10, vcoef.shape[1]), dtype=object)
    for k, (a, c) in enumerate(PAIRS):
        out[k] = vcoef[a] * int(b[c]) - vcoef[c] * int(b[a])
    return out


def _quadratic(ring, C: np.ndarray) -> MultiPoly:
    n = C.shape[0]
    terms = {}
    for s in range(n):
        for t in range(n):
            c = int(C[s, t])
            if c:
                m = [0] * n
                m[s] += 1
                m[t] += 1
                m = tuple(m)
                terms[m] = terms.get(m, 0) + c
    return MultiPoly(ring, n, terms)


def _linear(ring, c) -> MultiPoly:
    n = len(c)
    return MultiPoly(ring, n, {tuple(int(i == k) for i in range(n)): int(x)
                               for k, x in enumerate(c) if int(x) % ring.p})


def _gram_block(inst: FibrationInstance, vcoef: np.ndarray, basis) -> tuple[list, list]:
    """Quadratic Gram entries q(v^b_i, v^b_j) and linear entries h(v^b_i)."""
    ring = GF(inst.p)
    q = np.array(inst.q, dtype=object)
    h = np.array(inst.h, dtype=object)
    L = [_wedge_linear(vcoef, b) for b in basis]
    gram = [[None] * len(basis) for _ in basis]
    for i in range(len(basis)):
        qL = q.dot(L[i])  # 10 x n
        for j in range(i, len(basis)):
            C = L[j].T.dot(qL) % inst.p
            gram[i][j] = gram[j][i] = _quadratic(ring, C)
    ell = [_linear(ring, h.dot(Li) % inst.p) for Li in L]
    return gram, ell


def complement_basis(inst: FibrationInstance, chart: int) -> list[list[int]]:
    """Rows of V other than ``chart`` plus a standard vector outside V.

    Together with v = sum x_i V_i these span W whenever x_chart != 0.
    """
    if not 0 <= chart < 4:
        raise ValueError("chart index must be in 0..3")
    rows = [list(r) for i, r in enumerate(inst.V) if i != chart]
    for j in range(5):
        e = [int(k == j) for k in range(5)]
        if rank_mod_p([list(r) for r in inst.V] + [e], inst.p) == 5:
            return rows + [e]
    raise AssertionError("V spans W")


@dataclass(frozen=True)
class BorderedMatrix:
    """[[Q_v, l_v^T], [l_v, 0]] over P(V) in one chart."""

    matrix: PolyMatrix
    chart: int
    basis: tuple

    @property
    def quadric(self) -> PolyMatrix:
        return self.matrix.submatrix(range(4), range(4))

    @property
    def linear(self) -> list[MultiPoly]:
        return [self.matrix[4, j] for j in range(4)]


def bordered_matrix(inst: FibrationInstance, chart: int = 0) -> BorderedMatrix:
    basis = complement_basis(inst, chart)
    vcoef = np.array(inst.V, dtype=object).T  # v_a = sum_i x_i V[i][a]
    gram, ell = _gram_block(inst, vcoef, basis)
    zero = MultiPoly.zero(GF(inst.p), 4)
    rows = [gram[i] + [ell[i]] for i in range(4)] + [ell + [zero]]
    return BorderedMatrix(PolyMatrix(rows, symmetric=True), chart,
                          tuple(map(tuple, basis)))


def fiber_form_matrix(inst: FibrationInstance, change=None) -> PolyMatrix:
    """A_v = (q(v ^ e_i, v ^ e_j)) on P(W), with v = change @ y.

    A_v is symmetric with v in its kernel, so its rank equals the rank of the
    quadric fiber over v.
    """
    change = np.eye(5, dtype=object) if change is None else np.array(change, dtype=object)
    basis = [[int(k == i) for k in range(5)] for i in range(5)]
    gram, _ = _gram_block(inst, change, basis)
    return PolyMatrix(gram, symmetric=True)


# -- numeric evaluation ----------------------------------------------------

def _charts(X: np.ndarray) -> np.ndarray:
    return np.argmax(X != 0, axis=1)


def evaluate_bordered(inst: FibrationInstance, X: np.ndarray) -> np.ndarray:
    """Bordered matrices (N, 5, 5) at the points X (N, 4), each in its first nonzero chart."""
    p = inst.p
    X = np.asarray(X, dtype=np.int64) % p
    V = np.array(inst.V, dtype=np.int64)
    q = np.array(inst.q, dtype=np.int64)
    h = np.array(inst.h, dtype=np.int64)
    bases = np.array([complement_basis(inst, k) for k in range(4)], dtype=np.int64)
    v = X @ V % p                                  # (N, 5)
    B = bases[_charts(X)]                          # (N, 4, 5)
    ia = np.array([a for a, _ in PAIRS])
    ib = np.array([b for _, b in PAIRS])
    Wg = (v[:, None, ia] * B[:, :, ib] - v[:, None, ib] * B[:, :, ia]) % p   # (N, 4, 10)
    Qw = np.einsum("nik,kl->nil", Wg, q) % p
    Q = np.einsum("nil,njl->nij", Qw, Wg) % p
    ell = Wg @ h % p
    out = np.zeros((X.shape[0], 5, 5), dtype=np.int64)
    out[:, :4, :4] = Q
    out[:, :4, 4] = ell
    out[:, 4, :4] = ell
    return out


def conic_ranks(inst: FibrationInstance, X: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(conic ranks, quadric ranks, degenerate mask) at the points X."""
    M = evaluate_bordered(inst, X)
    degenerate = ~M[:, 4, :4].any(axis=1)
    full = batched_rank_mod_p(M, inst.p)
    quad = batched_rank_mod_p(M[:, :4, :4], inst.p)
    return full - 2, quad, degenerate


def conic_rank_from_blocks(Q, ell, p: int) -> int | str:
    """Rank of Q restricted to ker(ell), read off the bordered matrix."""
    ell = [int(x) % p for x in ell]
    if not any(ell):
        return DEGENERATE
    M = [list(map(int, row)) + [e] for row, e in zip(Q, ell)] + [ell + [0]]
    return rank_mod_p(M, p) - 2


def conic_rank_at(inst: FibrationInstance, v) -> int | str:
    """Rank (0..3) of the conic over the point v of P(V), or DEGENERATE."""
    X = np.array([list(v)], dtype=np.int64) % inst.p
    if not X.any():
        raise ValueError("the zero vector is not a projective point")
    M = evaluate_bordered(inst, X)[0]
    return conic_rank_from_blocks(M[:4, :4].tolist(), M[4, :4].tolist(), inst.p)


def quadric_rank_at(inst: FibrationInstance, v) -> int:
    X = np.array([list(v)], dtype=np.int64) % inst.p
    if not X.any():
        raise ValueError("the zero vector is not a projective point")
    return rank_mod_p(evaluate_bordered(inst, X)[0][:4, :4].tolist(), inst.p)


def projective_points(p: int, n: int = 4):
    """Every point of P^{n-1}(F_p), normalized with first nonzero entry 1."""
    for lead in range(n):
        rest = n - lead - 1
        grid = np.indices((p,) * rest).reshape(rest, -1).T if rest else np.zeros((1, 0), int)
        X = np.zeros((grid.shape[0], n), dtype=np.int64)
        X[:, lead] = 1
        X[:, lead + 1:] = grid
        yield X


# -- sampling census -------------------------------------------------------

def _sample_points(p: int, seed: int, chunk: int, size: int) -> np.ndarray:
    rng = philox(seed, chunk + 1)
    X = rng.integers(0, p, size=(size, 4))
    zero = ~X.any(axis=1)
    while zero.any():
        X[zero] = rng.integers(0, p, size=(int(zero.sum()), 4))
        zero = ~X.any(axis=1)
    return X


def codimension_estimate(fraction: float, p: int) -> float | None:
    """Codimension c with fraction ~ p^-c (Lang-Weil heuristic)."""
    if fraction <= 0:
        return None
    return -math.log(fraction) / math.log(p)


def strata_census(inst: FibrationInstance, trials: int, seed: int,
                  chunk_size: int = CENSUS_CHUNK) -> dict:
    """Conic and quadric ranks at ``trials`` uniform points of P(V)(F_p).

    Chunk c draws its points from the generator keyed by (seed, c + 1), so
    the tally does not depend on how chunks are scheduled.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    conic = np.zeros(4, dtype=np.int64)
    quad = np.zeros(5, dtype=np.int64)
    degenerate = 0
    done = 0
    chunk = 0
    while done < trials:
        size = min(chunk_size, trials - done)
        X = _sample_points(inst.p, seed, chunk, size)
        c, qr, deg = conic_ranks(inst, X)
        degenerate += int(deg.sum())
        conic += np.bincount(c[~deg], minlength=4)[:4]
        quad += np.bincount(qr, minlength=5)[:5]
        done += size
        chunk += 1
    rank_le = {r: int(conic[:r + 1].sum()) for r in range(3)}
    codim = {}
    for r in range(3):
        frac = rank_le[r] / trials
        est = codimension_estimate(frac, inst.p)
        codim[f"rank<={r}"] = {"fraction": frac,
                               "codim": None if est is None else round(est, 4)}
    return {
        "trials": trials,
        "seed": seed,
        "census": {f"rank{r}": int(conic[r]) for r in range(4)},
        "degenerate": degenerate,
        "quadric_census": {f"rank{r}": int(quad[r]) for r in range(5)},
        "codim_estimates": codim,
    }


# -- exact strata over P(W) ------------------------------------------------

def chart_change(inst: FibrationInstance, chart: int, seed: int | None = None) -> list[list[int]]:
    """Coordinate change v = g y with v_chart = y_4, so saturation by the
    chart coordinate is saturation by the last variable.

    With ``seed`` None, g is the transposition of ``chart`` and 4; otherwise
    the remaining rows are drawn at random (invertibility enforced).
    """
    if not 0 <= chart < 5:
        raise ValueError("chart index must be in 0..4")
    p = inst.p
    if seed is None:
        g = [[int(j == i) for j in range(5)] for i in range(5)]
        g[chart], g[4] = g[4], g[chart]
        return g
    rng = philox(seed, 1 << 32)
    while True:
        g = rng.integers(0, p, size=(5, 5)).tolist()
        g[chart] = [0, 0, 0, 0, 1]
        if rank_mod_p(g, p) == 5:
            return g


def _strip_last_variable(f: MultiPoly) -> tuple[MultiPoly, int]:
    k = min(m[-1] for m in f.terms)
    if not k:
        return f, 0
    shift = (0,) * (f.nvars - 1) + (k,)
    return MultiPoly._raw(f.ring, f.nvars, {
        tuple(a - b for a, b in zip(m, shift)): c for m, c in f.terms.items()}), k


def _stratum(gens, budget, saturate: bool) -> dict:
    gens = [g for g in gens if g]
    if not gens:
        return {"dim": 4, "degree": 1, "budget_status": "ok"}
    try:
        G = groebner(IdealBasis(tuple(gens)), budget=budget)
        if saturate:
            G = saturate_last_variable(G, budget=budget)
    except GroebnerBudgetExhausted as exc:
        return {"dim": None, "degree": None, "budget_status": "exhausted",
                "partial_basis_size": len(exc.partial), "reductions": exc.reductions}
    hd = hilbert_dim_degree(G)
    return {"dim": "EMPTY" if hd.empty else hd.dim,
            "degree": None if hd.empty else hd.degree,
            "budget_status": "ok", "basis_size": len(G)}


def strata_ideal_analysis(inst: FibrationInstance, chart: int = 4,
                          change_seed: int | None = None,
                          budget: int | None = None,
                          intrinsic: bool = True) -> dict:
    """Dimension and degree of the rank strata of the quadric fibration on P(W).

    Chart route: Q is A_v without row and column ``chart``; its determinant is
    v_chart^2 times the discriminant, and its minors are saturated by v_chart.
    Intrinsic route: minors of the full 5x5 A_v, where no chart factor occurs.
    """
    g = chart_change(inst, chart, change_seed)
    A = fiber_form_matrix(inst, g)
    # rows of A are indexed by e_0..e_4 in v-coordinates; drop the chart row
    keep = [i for i in range(5) if i != chart]
    Q = A.submatrix(keep, keep)
    det = determinant(Q)
    disc, power = _strip_last_variable(det)
    out = {
        "chart": chart,
        "change_seed": change_seed,
        "factors": [power, disc.total_degree()],
        "strata": {},
    }
    s3 = _stratum([disc], budget, saturate=False)
    s3["route"] = "chart determinant divided by chart coordinate power"
    out["strata"]["rank<=3"] = s3
    for r, size in ((2, 3), (1, 2)):
        entry = _stratum(symmetric_minors(Q, size), budget, saturate=True)
        entry["route"] = f"chart {size}x{size} minors saturated by chart coordinate"
        if intrinsic:
            entry["intrinsic"] = _stratum(symmetric_minors(A, size), budget, saturate=False)
            entry["routes_agree"] = (entry["intrinsic"]["dim"] == entry["dim"]
                                     and entry["intrinsic"]["degree"] == entry["degree"])
        out["strata"][f"rank<={r}"] = entry
    return out


# -- discriminant over P(V) ------------------------------------------------

@dataclass(frozen=True)
class Discriminant:
    form: MultiPoly
    chart: int
    factor_degrees: tuple[int, ...]


def discriminant(inst: FibrationInstance, chart: int = 0) -> Discriminant:
    """The sextic over which conics of the bundle on P(V) are singular.

    The bordered determinant in a chart is a degree-8 form divisible by the
    square of the chart coordinate (the squared determinant of the change of
    basis); the quotient is the discriminant.
    """
    B = bordered_matrix(inst, chart)
    det = determinant(B.matrix)
    if det.is_zero():
        raise DiscriminantError("bordered determinant vanishes identically", [])
    n = det.nvars
    x = MultiPoly.var(det.ring, n, chart)
    power = 0
    rest = det
    while True:
        quo, rem = rest.divmod([x])
        if not rem.is_zero():
            break
        rest = quo[0]
        power += 1
    degrees = [power, rest.total_degree()] if power else [rest.total_degree()]
    if power != 2 or rest.total_degree() != 6:
        raise DiscriminantError("no degree-6 component after removing the chart factor",
                                degrees)
    return Discriminant(rest.monic(), chart, tuple(degrees))


def restrict_to_line(f: MultiPoly, a, b) -> MultiPoly:
    """f(a + t b) as a univariate polynomial in t."""
    ring = f.ring
    t = MultiPoly.var(ring, 1, 0)
    images = [MultiPoly.constant(ring, 1, ai) + t.scale(bi) for ai, bi in zip(a, b)]
    return f.substitute(images)


def squarefree_on_lines(inst: FibrationInstance, D: MultiPoly, lines: int = 50,
                        seed: int = 0) -> list[int]:
    """Degrees of squarefree parts of D restricted to random lines.

    Lines along which the restriction drops degree (the point at infinity on
    the surface) are redrawn.
    """
    rng = philox(seed, 2 << 32)
    p = inst.p
    d = D.total_degree()
    out = []
    while len(out) < lines:
        a, b = rng.integers(0, p, size=(2, 4)).tolist()
        f = restrict_to_line(D, a, b)
        if f.is_zero() or f.total_degree() != d:
            continue
        out.append(squarefree_part(f).total_degree())
    return out


# -- local contact identities ----------------------------------------------

CONTACT_VARS = ("f", "g", "delta", "s", "t")


def contact_identities() -> dict:
    """Symbolic checks of the local determinant identities over Q."""
    f, g, d, s, t = MultiPoly.gens(QQ, 5)
    one = MultiPoly.constant(QQ, 5, 1)
    zero = MultiPoly.zero(QQ, 5)
    M = PolyMatrix([[one, zero, zero], [zero, one, zero], [zero, zero, d]])
    normal_forms = {
        "case 1": PolyMatrix([[one, zero, f], [zero, one, g]]),
        "case 2": PolyMatrix([[one, f, zero], [zero, g, one]]),
        "case 3": PolyMatrix([[f, one, zero], [g, zero, one]]),
    }
    expected = {
        "case 1": one + d * (f * f + g * g),
        "case 2": (one + f * f) * d + g * g,
        "case 3": (f * f + one) * d + g * g,
    }
    records = []

    def record(label, got, want):
        diff = got - want
        records.append({"label": label, "computed": got.pretty(CONTACT_VARS),
                        "expected": want.pretty(CONTACT_VARS),
                        "status": "PASS" if diff.is_zero() else "FAIL"})
        if not diff.is_zero():
            raise ContactIdentityError(f"{label}: difference {diff.pretty(CONTACT_VARS)}")

    dets = {}
    for name, N in normal_forms.items():
        dets[name] = determinant(N @ M @ N.transpose())
        record(f"det(N M N^T), {name}", dets[name], expected[name])
    # case 1 is a unit along delta = 0
    record("case 1 modulo delta", dets["case 1"].divmod([d])[1], one)
    # cases 2, 3 restrict to g^2 on delta = 0, and on each of s = 0, t = 0 when delta = st
    for name in ("case 2", "case 3"):
        record(f"{name} modulo delta", dets[name].divmod([d])[1], g * g)
        split = dets[name].substitute([f, g, s * t, s, t])
        record(f"{name} modulo s with delta = st", split.divmod([s])[1], g * g)
        record(f"{name} modulo t with delta = st", split.divmod([t])[1], g * g)
    # degeneracy scheme of N^v -> E in case 3: the 2x2 minors generate (delta, g)
    phi = PolyMatrix([[f, g], [one, zero], [zero, d]])
    mins = minors(phi, 2)
    reduced = [m.divmod([d, g])[1] for m in mins]
    contains_generators = all(any(m == x or m == -x for m in mins) for x in (d, g))
    ok = all(r.is_zero() for r in reduced) and contains_generators
    records.append({"label": "2x2 minors of the case-3 map generate (delta, g)",
                    "computed": [m.pretty(CONTACT_VARS) for m in mins],
                    "expected": ["delta", "g"],
                    "status": "PASS" if ok else "FAIL"})
    if not ok:
        raise ContactIdentityError("degeneracy ideal differs from (delta, g)")
    return {"records": records,
            "status": "PASS" if all(r["status"] == "PASS" for r in records) else "FAIL"}
