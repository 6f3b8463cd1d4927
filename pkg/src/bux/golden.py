"""Committed golden files under ``bux/data`` and how to rebuild them.

    python -m bux.golden            # compare the committed files with fresh ones
    python -m bux.golden --write    # regenerate them

Certificates are found by deterministic searches, so regenerating gives
byte-identical files.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .complex import boundary_of_simplex, complete_graph, cycle_graph, grotzsch_graph, petersen_graph
from .complex import simplex, simplex_skeleton
from .gf2 import canonical_modulus
from .invariants import (
    counterexample_allowed,
    counterexample_complex,
    find_liftable_char_map,
    search_char_map_gf2,
    spread_coloring,
)
from .io import dump_certificate, dump_complex

DATA = Path(__file__).parent / "data"

COMPLEXES = {
    "grotzsch": grotzsch_graph,
    "k4": lambda: complete_graph(4),
    "c5": lambda: cycle_graph(5),
    "petersen": petersen_graph,
    "simplex_5": lambda: simplex(5),
    "boundary_simplex_3": lambda: boundary_of_simplex(4),
    "grotzsch_k4": counterexample_complex,
    "deltask_62_2": lambda: simplex_skeleton(63, 2),
}

SPREADS = ((2, 1), (3, 1), (4, 2), (6, 2), (6, 3))


def golden_files():
    """Mapping of relative path -> file contents."""
    out = {}
    for name, make in COMPLEXES.items():
        out[f"complexes/{name}.json"] = dump_complex(make(), name)
    J = counterexample_complex()
    found = find_liftable_char_map(J, 5, None, counterexample_allowed(5))
    if found is None:
        raise RuntimeError("no counterexample certificate found")
    ref = "../complexes/grotzsch_k4.json"
    out["certificates/counterexample_gf2.json"] = dump_certificate(found[0], ref)
    out["certificates/counterexample_int.json"] = dump_certificate(found[1], ref)
    bd = search_char_map_gf2(boundary_of_simplex(4), 3)
    out["certificates/boundary_simplex_3_gf2.json"] = dump_certificate(
        bd, "../complexes/boundary_simplex_3.json"
    )
    for l, q in SPREADS:
        sc = spread_coloring(l, q)
        obj = {"l": l, "q": q, "modulus": canonical_modulus(q), "colors": list(sc.colors)}
        out[f"certificates/spread_l{l}_q{q}.json"] = json.dumps(obj, sort_keys=True) + "\n"
    return out


def main(argv=None):
    p = argparse.ArgumentParser(description="check or regenerate the golden data files")
    p.add_argument("--write", action="store_true")
    args = p.parse_args(argv)
    stale = []
    for rel, text in golden_files().items():
        path = DATA / rel
        if args.write:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text)
        elif not path.exists() or path.read_text() != text:
            stale.append(rel)
    for rel in stale:
        print(f"differs: {rel}")
    return 1 if stale else 0


if __name__ == "__main__":
    sys.exit(main())
