"""Regenerate the accuracy-contract fixture (src/bessel_lommel/data/accuracy_grid.csv).

Reference values come from mpmath at 40 significant digits; the fixture is
committed so the test suite does not depend on mpmath being installed.
"""

from pathlib import Path

import mpmath as mp

mp.mp.dps = 40

OUT = Path(__file__).resolve().parents[1] / "src/bessel_lommel/data/accuracy_grid.csv"

J_ORDERS = [-0.5, 0.0, 0.5, 1.125, 2.7, 5.619, 10.0, 30.25, 60.0]
J_ARGS = [0.05, 0.5, 1.0, 2.404825557695773, 5.0, 12.0, 25.0, 50.0, 100.0]
Y_ORDERS = [-5.5, -0.5, 0.0, 1.125, 10.0, 33.0, 60.0]
Y_ARGS = [0.1, 0.5, 1.0, 5.0, 12.0, 25.0, 50.0, 100.0]
K0_ARGS = [1e-3, 0.01, 0.1, 0.5, 1.0, 5.0, 10.0, 30.0, 50.0]


def main() -> None:
    rows = []
    for nu in J_ORDERS:
        for x in J_ARGS:
            rows.append(("j", nu, x, mp.besselj(nu, x)))
    for nu in Y_ORDERS:
        for x in Y_ARGS:
            rows.append(("y", nu, x, mp.bessely(nu, x)))
    for x in K0_ARGS:
        rows.append(("k0", 0.0, x, mp.besselk(0, x)))
    with OUT.open("w", encoding="utf-8") as fh:
        fh.write("kind,nu,x,reference_value\n")
        for kind, nu, x, v in rows:
            fh.write(f"{kind},{nu!r},{x!r},{mp.nstr(v, 20, strip_zeros=False)}\n")
    print(f"wrote {len(rows)} rows to {OUT}")


if __name__ == "__main__":
    main()
