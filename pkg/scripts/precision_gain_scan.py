"""Scan a seeded random program corpus for precision gains.

For every program three cautious constructions are compared: the pair-space
least fixpoint of the program's bracketing operator, the same under the
ultimate (most precise) approximator, and the convex-set construction. The
scan counts how often each refinement is strict and prints a few witnesses.

Usage: python scripts/precision_gain_scan.py [count] [seed]
"""

import sys

from aft.approx import ultimate
from aft.convex import convex_kripke_kleene, embed_interval
from aft.corpus import random_programs
from aft.fixpoints import kripke_kleene
from aft.lp import fitting, program_lattice, tp


def main(argv):
    count = int(argv[1]) if len(argv) > 1 else 500
    seed = int(argv[2]) if len(argv) > 2 else 42
    programs = random_programs(count, seed=seed)

    ultimate_gains = []
    convex_gains = []
    for prog in programs:
        lat = program_lattice(prog)
        op = tp(prog, lat)
        kk_fit, _ = kripke_kleene(fitting(prog, lat))
        kk_ult, _ = kripke_kleene(ultimate(lat, op))
        kk_cvx, _ = convex_kripke_kleene(lat, op)
        if kk_fit != kk_ult:
            ultimate_gains.append((prog, kk_fit, kk_ult))
        if kk_cvx != embed_interval(kk_ult):
            convex_gains.append((prog, kk_ult, kk_cvx))

    print(f"programs: {count} (seed {seed})")
    print(f"ultimate strictly more precise than the bracketing operator: {len(ultimate_gains)}")
    print(f"convex strictly more precise than the ultimate interval:     {len(convex_gains)}")

    for label, rows in (("ultimate", ultimate_gains), ("convex", convex_gains)):
        for prog, before, after in rows[:3]:
            print(f"\n{label} gain witness:")
            print("  " + prog.to_text().replace("\n", "\n  "))
            print(f"  before: {before}")
            print(f"  after:  {after if not isinstance(after, frozenset) else sorted(map(sorted, after))}")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
