"""Acceptance criteria, one test per criterion (two for the statistical one).

Each test is tagged with the ``criterion`` marker. The conftest prints one
PASS/FAIL line per criterion at the end of the session.
"""
import time
from argparse import Namespace
from fractions import Fraction as Fr

import numpy as np
import pytest
import sympy

from gmdeg import chain as chain_mod
from gmdeg.chain import exclusion_chain
from gmdeg.chow import ChowClass, contact_curve_invariants, contact_pipeline
from gmdeg.cli import (
    run_chow_verify, run_config_exclude, run_config_verify, run_fibration_contact,
    run_fibration_strata, run_gin_enumerate, run_gin_invariants, run_gin_theorem,
    run_lattice_sextic, run_lattice_splittings, run_paper,
)
from gmdeg.config import GridConfig
from gmdeg.fibration import conic_rank_at, projective_points, quadric_rank_at, sample_instance

from oracles import kernel_oracle

QUINTIC = "o\no o\n* 1 o\n* * * o\n* * * * *\n"


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def records(rep):
    return {r["label"]: r for r in rep.to_json()["records"]}


@pytest.mark.criterion(1, "Chow pipeline exactness")
def test_criterion_1_chow():
    rep, secs = timed(run_chow_verify)
    assert rep.status == "PASS"
    stages = dict(contact_pipeline())
    want = {
        "ch(T)": [3, 4, 2, Fr(2, 3)],
        "td(T)": [1, 2, Fr(11, 6), 1],
        "ch(E)": [3, 3, Fr(1, 2), Fr(-1, 2)],
        "ch(N^v)": [2, -2, 0, Fr(2, 3)],
        "ch(I_C(a))": [1, 5, Fr(1, 2), Fr(-7, 6)],
        "ch(I_C).td(T)": [1, 2, Fr(-61, 6), 15],
    }
    for label, coeffs in want.items():
        assert stages[label] == ChowClass(coeffs), label
    inv = contact_curve_invariants()
    assert (inv.twist, inv.degree, inv.genus) == (5, 12, 15)
    assert secs < 1.0, secs


@pytest.mark.criterion(2, "gin enumeration and sextic theorem")
def test_criterion_2_gin(tmp_path):
    t0 = time.perf_counter()
    enum = run_gin_enumerate(Namespace(degree=6))
    theorem = run_gin_theorem()
    path = tmp_path / "quintic.txt"
    path.write_text(QUINTIC)
    inv = run_gin_invariants(Namespace(file=str(path)))
    secs = time.perf_counter() - t0
    assert enum.status == theorem.status == inv.status == "PASS"
    assert enum.data["arrangements"] == [[6], [5, 1], [4, 2], [3, 2, 1]]
    cases = {tuple(c["arrangement"]): (c["verdict"], c["genus_bound"])
             for c in theorem.data["cases"]}
    assert cases == {
        (6,): ("SECANT-CONTRADICTION", None),
        (5, 1): ("SECANT-CONTRADICTION", None),
        (4, 2): ("GENUS-BOUND", 4),
        (3, 2, 1): ("GENUS-BOUND", 3),
    }
    assert theorem.data["max_genus"] == 4 and theorem.data["complete_intersection_2_3"]
    d = inv.data
    assert (d["degree"], d["genus"], d["lambda"], d["min_hypersurface_degree"]) == (5, 2, [4, 1], 2)
    assert secs < 1.0, secs


@pytest.mark.criterion(3, "lattice uniqueness")
def test_criterion_3_lattice():
    t0 = time.perf_counter()
    sextic = run_lattice_sextic()
    four = run_lattice_splittings(Namespace(genus_bound=4))
    five = run_lattice_splittings(Namespace(genus_bound=5))
    secs = time.perf_counter() - t0
    assert sextic.status == four.status == five.status == "PASS"
    # (n0, n1, n2): all sixteen nodes with multiplicity one
    assert sextic.data["solutions"] == [[0, 16, 0]]
    assert records(sextic)["genus of (6H - E_1 - ... - E_16)/2"]["computed"] == "15"
    pairs = lambda rep: {(a, g) for s in rep.data["splittings"] for a, g in (s[:2], s[2:])}
    assert pairs(four) == {(10, 3), (6, 4)}
    assert pairs(five) == {(10, 3), (6, 4), (2, 5), (14, 2)}
    assert secs < 1.0, secs


@pytest.mark.criterion(4, "configuration census and exclusion")
def test_criterion_4_config():
    t0 = time.perf_counter()
    census = run_config_verify()
    traces = {L: run_config_exclude(Namespace(lines=L)) for L in (2, 5, 9)}
    secs = time.perf_counter() - t0
    assert census.status == "PASS"
    assert census.to_json()["data"]["census"] == {
        "nodes_per_trope": {"6": 16}, "tropes_per_node": {"6": 16},
        "common_nodes_per_trope_pair": {"2": 120}, "tropes_per_node_pair": {"2": 120},
    }
    for L, rep in traces.items():
        assert rep.status == "PASS"
        assert rep.data["verdict"] == "IMPOSSIBLE", L
    numbers = [s["numbers"] for s in traces[9].data["steps"]]
    assert any(n.get("tropes_other_than_T") == 15 for n in numbers)
    assert any(n.get("at_least") == 6 for n in numbers)
    assert any(n.get("at_least") == 7 for n in numbers)
    assert secs < 1.0, secs


@pytest.mark.criterion(5, "contact identities")
def test_criterion_5_contact():
    rep, secs = timed(run_fibration_contact)
    assert rep.status == "PASS"
    recs = records(rep)
    f, g, delta = sympy.symbols("f g delta")
    want = {
        "det(N M N^T), case 1": 1 + delta * (f ** 2 + g ** 2),
        "det(N M N^T), case 2": (1 + f ** 2) * delta + g ** 2,
        "det(N M N^T), case 3": (f ** 2 + 1) * delta + g ** 2,
    }
    for label, expr in want.items():
        got = sympy.sympify(recs[label]["computed"], locals={"delta": delta})
        assert sympy.expand(got - expr) == 0, label
    assert recs["2x2 minors of the case-3 map generate (delta, g)"]["status"] == "PASS"
    assert secs < 1.0, secs


@pytest.mark.criterion(6, "rank strata, exact (20 instances at p = 32003)")
def test_criterion_6_exact_strata():
    reproduced, worst = 0, 0.0
    for seed in range(1, 21):
        rep, secs = timed(run_fibration_strata,
                          Namespace(prime=32003, seed=seed, trials=1000, exact=True))
        worst = max(worst, secs)
        ex = rep.data["exact"]
        ok = (rep.status == "PASS" and secs <= 600
              and (ex["rank<=2"]["dim"], ex["rank<=2"]["degree"]) == (1, 40)
              and ex["rank<=1"]["dim"] == "EMPTY"
              and ex["rank<=3"]["degree"] == 6 and rep.data["factors"] == [2, 6])
        reproduced += ok
    assert reproduced >= 18, reproduced
    assert worst <= 600


@pytest.fixture(scope="module")
def censuses():
    out = {}
    for p in (101, 1009):
        rep = run_fibration_strata(Namespace(prime=p, seed=1, trials=10 ** 6, exact=False))
        out[p] = rep
    return out


@pytest.mark.criterion(7, "rank strata, statistical")
def test_criterion_7_sampling(censuses):
    scaled = {}
    for p, rep in censuses.items():
        assert rep.status == "PASS"
        frac = rep.data["codim_estimates"]["rank<=2"]["fraction"]
        scaled[p] = frac * p
        assert 1 / 3 <= scaled[p] <= 3, (p, frac)
        counts, quad = rep.data["census"], rep.data["quadric_census"]
        assert counts["rank0"] == 0
        assert counts["rank1"] == 0
        assert quad["rank0"] + quad["rank1"] == 0
    assert 1 / 3 <= scaled[101] / scaled[1009] <= 3


@pytest.mark.criterion(7, "rank strata, statistical")
@pytest.mark.parametrize("seed", [1, 2, 3])
def test_criterion_7_f7_oracle(seed):
    inst = sample_instance(7, seed)
    X = np.concatenate(list(projective_points(7)))
    for x in X.tolist():
        conic, quad = kernel_oracle(inst, x)
        assert conic_rank_at(inst, x) == conic
        assert quadric_rank_at(inst, x) == quad


@pytest.mark.xfail(strict=True, reason="seed 3 has a zero-dimensional double-line locus "
                   "with two F_101 points, both of which the census hits")
def test_conic_rank_one_is_not_always_absent():
    rep = run_fibration_strata(Namespace(prime=101, seed=3, trials=10 ** 6, exact=False))
    assert rep.data["census"]["rank1"] == 0


@pytest.mark.criterion(8, "cross-module composition")
def test_criterion_8_composition(monkeypatch):
    rep = run_paper(Namespace(config=None))
    assert rep.status == "PASS", [r for r in rep.to_json()["records"] if r["status"] != "PASS"]
    assert rep.data["chain"]["verdict"] == "IMPOSSIBLE"
    assert [tuple(s) for s in rep.data["chain"]["splittings"]] == [(10, 3, 6, 4)]
    # each input, disabled in turn, leaves the contradiction unproved
    assert exclusion_chain(genus_bound=5)["verdict"] == "UNDECIDED"
    broken = GridConfig(lambda n, t: n[0] == t[0] and n != t)
    assert exclusion_chain(config=broken)["verdict"] == "UNDECIDED"
    monkeypatch.setattr(chain_mod, "enumerate_cubic_splittings", lambda bound: [])
    assert exclusion_chain()["verdict"] == "UNDECIDED"
