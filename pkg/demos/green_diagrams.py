"""Green diagrams of generic initial ideals and the sextic genus bound.

Reads a degree 5 example, cuts it by a hyperplane, then lists every valid
arrangement of a degree 6 curve and the verdict for each.
"""
from gmdeg.gin import (
    Diagram, degree, enumerate_arrangements, genus, hyperplane_section, lambda_sequence,
    min_hypersurface_degrees, sextic_theorem_report, validate,
)

EXAMPLE = """\
o
o o
* 1 o
* * * o
* * * * *
"""


def main():
    d = Diagram.from_text(EXAMPLE)
    print(d.to_text())
    print(f"degree {degree(d)}, genus {genus(d)}, lambda {lambda_sequence(d)}, "
          f"smallest hypersurface degree {min_hypersurface_degrees(d)[0]}")
    s = hyperplane_section(d)
    print(f"\nhyperplane section (numbers become bullets), genus {genus(s)}:")
    print(s.to_text())

    bad = Diagram.from_arrangement((3, 3))
    print(f"arrangement (3, 3) is rejected: {validate(bad)}")

    print("\nDegree 6 arrangements:", enumerate_arrangements(6))
    report = sextic_theorem_report()
    for case in report.cases:
        detail = (f"secant line of length {case.secant_length}" if case.secant_length
                  else f"genus at most {case.genus_bound}")
        print(f"  {case.arrangement}: {case.verdict} ({detail})")
    print(f"max genus on an irreducible cubic: {report.max_genus}, "
          f"attained by {report.extremal}, complete intersection (2,3): "
          f"{report.complete_intersection}")


if __name__ == "__main__":
    main()
