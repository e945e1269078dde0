#!/usr/bin/env python3
"""Writes the degree-2 family member F_a for a rational parameter a.

    python3 tools/make_fa_fixture.py 2 > fixtures/fa2.fol
"""
import sys
from fractions import Fraction


def main() -> int:
    if len(sys.argv) != 2:
        print("usage: make_fa_fixture.py <a>", file=sys.stderr)
        return 1
    a = Fraction(sys.argv[1])
    if a in (0, 1, -1):
        print("a must not be 0, 1 or -1", file=sys.stderr)
        return 1
    s = str(a)
    print(f"# F_a with a = {s}")
    print(f"A = Z*(({s})*X*Z - Y^2 + Z^2)")
    print("B = Z*(X^2 - Z^2)")
    print(f"C = X*Y^2 - ({s})*X^2*Z - X*Z^2 - X^2*Y + Y*Z^2")
    return 0


if __name__ == "__main__":
    sys.exit(main())
