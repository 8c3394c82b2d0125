"""The (16,6) configuration of nodes and trope planes on a Kummer surface.

Nodes and tropes are both labelled by cells (r, c) of a 4x4 grid.  A node
lies on a trope when it shares exactly one of row and column with it: the
three other cells of the trope's row and the three other cells of its column.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import ceil
from typing import Callable

Position = tuple[int, int]
GRID = tuple((r, c) for r in range(4) for c in range(4))
ADMISSIBLE_LINE_COUNTS = (2, 5, 9)
# premise: every trope other than the distinguished one contains a line of S
OTHER_TROPES = len(GRID) - 1


def kummer_rule(node: Position, trope: Position) -> bool:
    return (node[0] == trope[0]) != (node[1] == trope[1])


def _check(pos):
    if pos not in GRID:
        raise ValueError(f"{pos} is not a grid position")


@dataclass(frozen=True)
class GridConfig:
    incidence: Callable[[Position, Position], bool] = kummer_rule

    def nodes_of_trope(self, t: Position) -> frozenset:
        _check(t)
        return frozenset(n for n in GRID if self.incidence(n, t))

    def tropes_of_node(self, n: Position) -> frozenset:
        _check(n)
        return frozenset(t for t in GRID if self.incidence(n, t))

    def common_nodes(self, t1: Position, t2: Position) -> frozenset:
        if t1 == t2:
            raise ValueError("tropes must be distinct")
        return self.nodes_of_trope(t1) & self.nodes_of_trope(t2)

    def tropes_through_pair(self, n1: Position, n2: Position) -> frozenset:
        if n1 == n2:
            raise ValueError("nodes must be distinct")
        return self.tropes_of_node(n1) & self.tropes_of_node(n2)


KUMMER = GridConfig()


def nodes_of_trope(t: Position) -> frozenset:
    return KUMMER.nodes_of_trope(t)


def common_nodes(t1: Position, t2: Position) -> frozenset:
    return KUMMER.common_nodes(t1, t2)


def tropes_through_pair(n1: Position, n2: Position) -> frozenset:
    return KUMMER.tropes_through_pair(n1, n2)


@dataclass(frozen=True)
class Census:
    nodes_per_trope: tuple[int, ...]
    tropes_per_node: tuple[int, ...]
    common_per_trope_pair: tuple[int, ...]
    tropes_per_node_pair: tuple[int, ...]

    EXPECTED = (6, 6, 2, 2)

    def counts(self) -> dict[str, dict[int, int]]:
        def hist(xs):
            out: dict[int, int] = {}
            for x in xs:
                out[x] = out.get(x, 0) + 1
            return dict(sorted(out.items()))
        return {
            "nodes_per_trope": hist(self.nodes_per_trope),
            "tropes_per_node": hist(self.tropes_per_node),
            "common_nodes_per_trope_pair": hist(self.common_per_trope_pair),
            "tropes_per_node_pair": hist(self.tropes_per_node_pair),
        }

    @property
    def ok(self) -> bool:
        lists = (self.nodes_per_trope, self.tropes_per_node,
                 self.common_per_trope_pair, self.tropes_per_node_pair)
        return all(set(xs) == {want} for xs, want in zip(lists, self.EXPECTED))

    def failures(self) -> list[str]:
        out = []
        for (name, hist), want in zip(self.counts().items(), self.EXPECTED):
            if set(hist) != {want}:
                out.append(f"{name}: expected all {want}, got {hist}")
        return out


def verify_configuration(config: GridConfig = KUMMER) -> Census:
    return Census(
        tuple(len(config.nodes_of_trope(t)) for t in GRID),
        tuple(len(config.tropes_of_node(n)) for n in GRID),
        tuple(len(config.common_nodes(a, b)) for a, b in combinations(GRID, 2)),
        tuple(len(config.tropes_through_pair(a, b)) for a, b in combinations(GRID, 2)),
    )


@dataclass
class ExclusionTrace:
    lines: int
    steps: list[dict] = field(default_factory=list)
    verdict: str = "UNDECIDED"

    def step(self, claim: str, numbers: dict, verdict: str):
        self.steps.append({"claim": claim, "numbers": numbers, "verdict": verdict})

    def to_json(self) -> dict:
        return {"lines": self.lines, "steps": self.steps, "verdict": self.verdict}


def exclusion_report(lines: int, nodes_in_class: int | None = 6,
                     config: GridConfig = KUMMER) -> ExclusionTrace:
    """Pigeonhole exclusion of a cubic symmetroid S carrying ``lines`` lines.

    ``nodes_in_class`` is the number of nodes the genus-4 half-class passes
    through (6 for the class (3H - E_11 - ... - E_16)/2); ``None`` means the
    class is not pinned down and the counting step cannot conclude.
    """
    if lines not in ADMISSIBLE_LINE_COUNTS:
        raise ValueError(f"line count must be one of {ADMISSIBLE_LINE_COUNTS}, got {lines}")
    trace = ExclusionTrace(lines)
    census = verify_configuration(config)
    max_pair = max(census.tropes_per_node_pair)
    common = set(census.common_per_trope_pair)
    trace.step("census of the incidence model", {
        "max_tropes_through_node_pair": max_pair,
        "common_nodes_per_trope_pair": sorted(common),
    }, "PASS" if census.ok else "FAIL")
    if not census.ok:
        return trace
    trace.step("premise: each trope other than T contains a line of S",
               {"tropes_other_than_T": OTHER_TROPES, "lines_on_S": lines}, "ASSUMED")
    # two trope planes meet in a line through their common nodes, so a third
    # plane through that line would put a node pair on three tropes
    per_line = ceil(OTHER_TROPES / lines)
    three_impossible = max_pair < 3
    trace.step("pigeonhole: some line lies on at least ceil(15/L) tropes",
               {"tropes": OTHER_TROPES, "lines": lines, "ceil": per_line,
                "three_tropes_through_a_line_possible": not three_impossible},
               "CONTRADICTION" if per_line >= 3 and three_impossible else "NO-CONTRADICTION")
    if per_line >= 3 and three_impossible:
        trace.verdict = "IMPOSSIBLE"
        return trace
    # every line lies on at most two tropes, so at least 15 - L lines lie on two
    doubled = OTHER_TROPES - lines
    trace.step("lines of S lying on two tropes other than T",
               {"tropes": OTHER_TROPES, "lines": lines, "at_least": doubled}, "DERIVED")
    nodes_on_T = census.nodes_per_trope[0]
    # a doubled line carries its two common nodes; both on T would put that
    # pair on three tropes, so at least one is off T
    on_T_at_most = 1 if max_pair <= 2 else min(common)
    off_T = min(common) - on_T_at_most if doubled > 0 else 0
    met = nodes_on_T + off_T
    trace.step("nodes met by S: all nodes of T plus a node off T",
               {"nodes_on_T": nodes_on_T, "nodes_off_T_at_least": off_T,
                "at_least": met}, "DERIVED")
    if nodes_in_class is None:
        trace.step("compare with the node count of the contact class",
                   {"at_least": met, "class_nodes": None}, "UNDECIDED")
        return trace
    contradiction = met > nodes_in_class
    trace.step("compare with the node count of the contact class",
               {"at_least": met, "class_nodes": nodes_in_class},
               "CONTRADICTION" if contradiction else "NO-CONTRADICTION")
    trace.verdict = "IMPOSSIBLE" if contradiction else "UNDECIDED"
    return trace
