"""Wiring of the exclusion argument across the gin, lattice and config modules.

The maximal genus of a sextic on an irreducible cubic (gin) bounds the
admissible node splittings (lattice); the surviving splitting fixes how many
nodes the genus-4 contact class passes through, which the trope counting
(config) contradicts for every admissible number of lines.
"""
from __future__ import annotations

from .config import ADMISSIBLE_LINE_COUNTS, KUMMER, GridConfig, exclusion_report, verify_configuration
from .gin import sextic_theorem_report
from .lattice import enumerate_cubic_splittings


def exclusion_chain(genus_bound: int | None = None, config: GridConfig = KUMMER) -> dict:
    """Run the three steps; ``genus_bound`` overrides the value derived from gin."""
    sextic = sextic_theorem_report()
    bound = sextic.max_genus if genus_bound is None else genus_bound
    splittings = enumerate_cubic_splittings(bound)
    census_ok = verify_configuration(config).ok
    nodes = None
    if len(splittings) == 1:
        s = splittings[0]
        # the contact cubic S meets K along the member of top genus
        nodes = s.size1 if s.genus1 > s.genus2 else s.size2
    traces = {L: exclusion_report(L, nodes, config) for L in ADMISSIBLE_LINE_COUNTS}
    unresolved = [sp.as_tuple() for sp in splittings if max(sp.genus1, sp.genus2) > sextic.max_genus]
    impossible = (census_ok and len(splittings) == 1
                  and all(t.verdict == "IMPOSSIBLE" for t in traces.values()))
    return {
        "genus_bound": bound,
        "genus_bound_source": "gin" if genus_bound is None else "override",
        "splittings": [sp.as_tuple() for sp in splittings],
        "unresolved_splittings": unresolved,
        "class_nodes": nodes,
        "census_ok": census_ok,
        "exclusions": {str(L): t.verdict for L, t in traces.items()},
        "verdict": "IMPOSSIBLE" if impossible else "UNDECIDED",
    }
