"""Writes the gcd-growth table for (a, b) = (2, 3), n <= 60, directly from
Python integers."""

import math
import sys
from pathlib import Path


def fmt(x):
    # 17 significant digits, exponent without padding or '+'
    m, e = f"{x:.16e}".split("e")
    return f"{m}e{int(e)}"


def main(out):
    a, b = 2, 3
    lines = ["n,gcd,log_gcd_over_n_f64"]
    for n in range(1, 61):
        g = math.gcd(a**n - 1, b**n - 1)
        lines.append(f"{n},{g},{fmt(math.log(g) / n)}")
    Path(out).write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1])
