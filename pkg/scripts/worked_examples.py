"""Print full semantics reports for the classic textbook instances."""

import sys

from aft.adf import adf_semantics, parse_adf
from aft.fixpoints import semantics_report
from aft.lp import fitting, parse_program

PROGRAMS = {
    "two-cycle": "p :- not q.\nq :- not p.",
    "positive loop": "p :- p.",
    "negative loop": "p :- not p.",
    "definite": "p.\nq :- p.",
    "ultimate separator": "p :- q.\np :- not q.\nq :- q.",
}

FRAMEWORKS = {
    "chain a, b <- a, c <- not b": "s(a). s(b). s(c). ac(a, true). ac(b, a). ac(c, neg(b)).",
    "self-attack": "s(a). ac(a, neg(a)).",
}


def show_sets(sets):
    return ", ".join("{" + ",".join(sorted(m)) + "}" for m in sorted(sets, key=sorted)) or "(none)"


def main():
    for name, text in PROGRAMS.items():
        report = semantics_report(fitting(parse_program(text)))
        print(f"== {name} ==")
        print("  " + text.replace("\n", "\n  "))
        print(f"  kripke-kleene:  {report.kripke_kleene}")
        print(f"  well-founded:   {report.well_founded}")
        print(f"  supported:      {show_sets(report.supported)}")
        print(f"  stable:         {show_sets(report.stable)}")
        print(f"  partial stable: {sorted((sorted(p.lower), sorted(p.upper)) for p in report.partial_stable)}")
        print()

    for name, text in FRAMEWORKS.items():
        report = adf_semantics(parse_adf(text))
        print(f"== framework: {name} ==")
        print("  " + text)
        print(f"  grounded:     {report.grounded}")
        print(f"  well-founded: {report.well_founded}")
        print(f"  two-valued:   {show_sets(report.two_valued)}")
        print(f"  stable:       {show_sets(report.stable)}")
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
