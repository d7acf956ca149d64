"""Excitation exchange between the atom pair and the field mode.

Starting from both atoms in the ground state and n photons in the cavity,
the populations of the symmetric levels oscillate with the collective
frequency sqrt(2*(2n - 1)) * g.  This script evolves the full model exactly,
reads the family coefficients back from the reduced state, and lines them up
against the closed trigonometric forms.
"""

import math

import numpy as np

from cavsqueeze import (
    ModelConfig,
    closed_form_coeffs,
    evolve_exact,
    family_coeffs_from_density,
    rabi_frequency,
)


def bar(x, width=30):
    filled = int(round(x * width))
    return "#" * filled + "." * (width - filled)


def main():
    print("Collective oscillation frequency in units of g:")
    for n in (1, 2, 3, 5, 10):
        print(f"  n = {n:2d}   lambda = sqrt(2*(2n-1)) = {rabi_frequency(n):.6f}")
    print()

    n = 2
    period = 2.0 * math.pi / rabi_frequency(n)
    print(f"One full period for n = {n} photons (gt from 0 to {period:.4f}):")
    print(f"{'gt':>8} {'x1':>10} {'x2':>10} {'x3':>10}   x2 (symmetric level)")
    worst = 0.0
    for gt in np.linspace(0.0, period, 13):
        rho = evolve_exact(ModelConfig(n, float(gt)))
        got = family_coeffs_from_density(rho)
        want = closed_form_coeffs(n, float(gt))
        worst = max(
            worst,
            abs(got.x1 - want.x1),
            abs(got.x2 - want.x2),
            abs(got.x3 - want.x3),
        )
        print(
            f"{gt:8.4f} {got.x1:10.6f} {got.x2:10.6f} {got.x3:10.6f}   |{bar(got.x2)}|"
        )
    print(f"\nmax |exact - closed form| over the table: {worst:.3e}")

    # the doubly excited level never fills completely: x1 peaks at
    # 4n(n-1)/(2n-1)^2 when cos(theta) = -1
    peak = 4.0 * n * (n - 1) / (2 * n - 1) ** 2
    got_peak = closed_form_coeffs(n, period / 2.0).x1
    print(f"x1 at half period: {got_peak:.6f} (formula 4n(n-1)/(2n-1)^2 = {peak:.6f})")


if __name__ == "__main__":
    main()
