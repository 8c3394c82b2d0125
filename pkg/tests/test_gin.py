import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from gmdeg.gin import (
    BULLET, CIRCLE, Cell, Diagram, InvalidDiagram, NotBorelFixed, UnboundedDiagram,
    degree, enumerate_arrangements, genus, gin_to_diagram, hyperplane_section,
    lambda_sequence, min_hypersurface_degrees, secant_test, sextic_theorem_report,
    strict_partitions, validate,
)

QUINTIC = """\
o
o o
* 1 o
* * * o
* * * * *
"""


def example():
    return Diagram.from_text(QUINTIC)


# -- oracles ------------------------------------------------------------------

def borel_closure(monos):
    """Smallest set containing monos and closed under the three Borel moves."""
    todo = list(monos)
    out = set()
    while todo:
        m = todo.pop()
        if m in out:
            continue
        out.add(m)
        for src, dst in ((1, 0), (2, 0), (2, 1)):
            if m[src]:
                n = list(m)
                n[src] -= 1
                n[dst] += 1
                todo.append(tuple(n))
    return sorted(out)


def random_borel_ideal(rng):
    """Saturated Borel-fixed ideal of a curve: no pure power of x2, so f(0,0) is a circle."""
    b = rng.randint(1, 6)
    seeds = [(0, b, 0)]
    for _ in range(rng.randint(0, 4)):
        i = rng.randint(0, 4)
        j = rng.randint(0 if i else 1, 4)
        k = rng.randint(1, 3)
        seeds.append((i, j, k))
    return borel_closure(seeds)


def in_ideal(m, gens):
    return any(all(a <= c for a, c in zip(g, m)) for g in gens)


def hilbert_oracle(gens):
    """Degree and genus by counting standard monomials of x0, x1, x2, x3."""
    top = max(sum(g) for g in gens) + 4

    def h_section(s):
        return sum(1 for i in range(s + 1) for j in range(s + 1 - i)
                   if not in_ideal((i, j, s - i - j), gens))
    acc = [0]
    for s in range(top + 2):
        acc.append(acc[-1] + h_section(s))
    H = acc[1:]
    d = H[top + 1] - H[top]
    assert H[top] - H[top - 1] == d
    return d, 1 + d * top - H[top]


@st.composite
def borel_ideals(draw):
    return random_borel_ideal(random.Random(draw(st.integers(0, 10 ** 9))))


# -- text format --------------------------------------------------------------

def test_text_round_trip():
    d = example()
    assert d.to_text() == QUINTIC
    assert Diagram.from_text(d.to_text()) == d


def test_cell_tokens():
    assert [Cell.parse(t) for t in ("*", "o", "7")] == [BULLET, CIRCLE, Cell(7)]
    assert (str(BULLET), str(CIRCLE), str(Cell(3))) == ("•", "∘", "3")
    for bad in ("0", "-1", "x"):
        with pytest.raises(ValueError):
            Cell.parse(bad)


def test_row_length_checked():
    with pytest.raises(ValueError):
        Diagram.from_text("o\no\n")


@given(borel_ideals())
@settings(max_examples=50, deadline=None)
def test_round_trip_random(gens):
    d = gin_to_diagram(gens)
    assert Diagram.from_text(d.to_text()) == d


# -- validation ---------------------------------------------------------------

def test_validate_examples():
    assert validate(example()) is None
    assert validate(Diagram([[BULLET]])) is None
    v = validate(Diagram.from_arrangement((3, 3)))
    assert v is not None
    assert (v.cell, v.other) == ((0, 3), (1, 2))
    assert "(0, 3) vs (1, 2)" in str(v)


def test_validate_diagonal_strictness():
    assert validate(Diagram.from_text("o\n2 2\n* * *\n")) is None
    d = Diagram.from_text("o\no o\n2 2 o\n2 2 2 o\n* * * * *\n")
    v = validate(d)
    assert v.rule == "diagonal not decreasing"
    assert (v.cell, v.other) == ((3, 0), (2, 0))


def test_validate_last_row():
    d = Diagram.from_text("o\n* o\n")
    assert validate(d) is not None


def test_invalid_diagram_raises():
    with pytest.raises(InvalidDiagram):
        degree(Diagram.from_arrangement((3, 3)))


# -- invariants ---------------------------------------------------------------

def test_example_invariants():
    d = example()
    assert degree(d) == 5
    assert genus(d) == 2
    assert lambda_sequence(d) == (4, 1)
    assert min_hypersurface_degrees(d)[0] == 2


def test_all_bullet():
    d = Diagram([[BULLET]])
    assert (degree(d), genus(d), lambda_sequence(d)) == (0, 0, ())
    assert min_hypersurface_degrees(d) == [0]


@pytest.mark.parametrize("lam, deg, g", [((6,), 6, 10), ((5, 1), 6, 6), ((4, 2), 6, 4),
                                         ((3, 2, 1), 6, 3)])
def test_arrangement_invariants(lam, deg, g):
    d = Diagram.from_arrangement(lam)
    assert degree(d) == deg
    assert genus(d) == g
    assert lambda_sequence(d) == lam


def test_min_hypersurface_quadric_for_4_2():
    assert min_hypersurface_degrees(Diagram.from_arrangement((4, 2)))[0] == 2


def test_hyperplane_section_example():
    second = Diagram.from_text(QUINTIC.replace("1", "*"))
    assert hyperplane_section(example()) == second
    assert hyperplane_section(second) == second


@given(borel_ideals())
@settings(max_examples=50, deadline=None)
def test_hyperplane_section_properties(gens):
    d = gin_to_diagram(gens)
    s = hyperplane_section(d)
    assert validate(s) is None
    assert hyperplane_section(s) == s
    assert degree(s) == degree(d)
    has_numbers = any(c.numeric for _, _, c in d.cells())
    assert genus(s) >= genus(d)
    assert (genus(s) == genus(d)) == (not has_numbers)


@given(borel_ideals())
@settings(max_examples=50, deadline=None)
def test_degree_is_sum_of_lambda(gens):
    d = gin_to_diagram(gens)
    assert degree(d) == sum(lambda_sequence(d))


def test_monomial_counting_oracle_fifty_fixtures():
    rng = random.Random(2024)
    for _ in range(50):
        gens = random_borel_ideal(rng)
        d = gin_to_diagram(gens)
        assert (degree(d), genus(d)) == hilbert_oracle(gens), gens


# -- arrangements -------------------------------------------------------------

def test_enumerate_examples():
    assert enumerate_arrangements(6) == [(6,), (5, 1), (4, 2), (3, 2, 1)]
    assert enumerate_arrangements(1) == [(1,)]


def all_partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in all_partitions(n - first, first):
            yield (first,) + rest


def test_degree_five_by_brute_force_filter():
    valid = [lam for lam in all_partitions(5) if validate(Diagram.from_arrangement(lam)) is None]
    assert valid == [(5,), (4, 1), (3, 2)] == enumerate_arrangements(5)


def distinct_partition_count(n):
    # independent oracle: coefficient of t^n in prod (1 + t^k)
    coeffs = [1] + [0] * n
    for k in range(1, n + 1):
        for m in range(n, k - 1, -1):
            coeffs[m] += coeffs[m - k]
    return coeffs[n]


@pytest.mark.parametrize("D", range(1, 21))
def test_enumeration_count(D):
    arr = enumerate_arrangements(D)
    assert len(arr) == distinct_partition_count(D)
    assert arr == sorted(arr, reverse=True)
    # valid arrangement <=> strict partition
    for lam in all_partitions(D):
        ok = validate(Diagram.from_arrangement(lam)) is None
        assert ok == (lam in arr)


@pytest.mark.parametrize("D", [0, 31])
def test_enumeration_range(D):
    with pytest.raises(ValueError):
        enumerate_arrangements(D)


def test_strict_partitions_helper():
    assert strict_partitions(0) == [()]
    assert strict_partitions(7) == [(7,), (6, 1), (5, 2), (4, 3), (4, 2, 1)]


def test_secant_test():
    assert secant_test((6,)) == 6
    assert secant_test((4, 2)) is None
    assert secant_test((5, 1)) == 5
    assert secant_test(()) is None


# -- theorem ------------------------------------------------------------------

def test_sextic_theorem():
    v = sextic_theorem_report()
    got = {c.arrangement: (c.verdict, c.secant_length, c.genus_bound) for c in v.cases}
    assert got == {
        (6,): ("SECANT-CONTRADICTION", 6, None),
        (5, 1): ("SECANT-CONTRADICTION", 5, None),
        (4, 2): ("GENUS-BOUND", None, 4),
        (3, 2, 1): ("GENUS-BOUND", None, 3),
    }
    assert (v.max_genus, v.extremal, v.complete_intersection) == (4, (4, 2), True)


def test_sextic_report_json():
    j = sextic_theorem_report().to_json()
    assert j["max_genus"] == 4 and j["complete_intersection_2_3"] is True


# -- gin_to_diagram -----------------------------------------------------------

def test_gin_to_diagram_examples():
    d = gin_to_diagram([(1, 0, 0), (0, 2, 0)])
    assert d(0, 0) == CIRCLE and d(0, 1) == CIRCLE and d(1, 0) == BULLET
    assert lambda_sequence(d) == (2,)
    with pytest.raises(UnboundedDiagram):
        gin_to_diagram([(1, 0, 0)])
    with pytest.raises(NotBorelFixed, match=r"Borel move \(i\) fails"):
        gin_to_diagram([(0, 3, 0)])


def test_gin_to_diagram_quintic():
    gens = [(2, 0, 0), (1, 1, 1), (1, 2, 0), (0, 4, 0)]
    d = gin_to_diagram(borel_closure(gens))
    assert d == example()


def test_gin_to_diagram_bad_input():
    with pytest.raises(ValueError):
        gin_to_diagram([(1, 0)])


def test_genus_formula_is_for_curves():
    # with no circle the formula drops the constant term of the Hilbert polynomial
    gens = borel_closure([(0, 0, 1), (0, 1, 0)])
    d = gin_to_diagram(gens)
    assert degree(d) == 0
    assert hilbert_oracle(gens) == (0, genus(d) + 1)


def test_all_small_borel_ideals_agree_with_oracle():
    # exhaustive over Borel closures of single generators with small exponents
    for m in product(range(3), range(1, 4), range(3)):
        gens = borel_closure([m, (0, 4, 0)])
        d = gin_to_diagram(gens)
        assert (degree(d), genus(d)) == hilbert_oracle(gens)
