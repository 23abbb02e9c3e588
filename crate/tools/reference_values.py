#!/usr/bin/env python3
"""Generate frozen reference values for the test suite.

Writes crates/bargmann/tests/common/reference.rs. All values are computed
with mpmath at 50..120 digit working precision, well beyond f64, so the
emitted constants are correctly rounded. Rerun after editing:

    python3 tools/reference_values.py
"""

from mpmath import mp, mpf, mpc, besselk, gamma, sqrt, pi, nstr

OUT = "crates/bargmann/tests/common/reference.rs"


def gamma_mu(mu, n):
    g = mpf(1)
    for k in range(1, n + 1):
        g *= k + 2 * mu * (k % 2)
    return g


def e_mu(mu, z, terms=2000):
    s = mpc(0)
    t = mpc(1)
    for n in range(terms):
        s += t
        t = t * z / (n + 1 + 2 * mu * ((n + 1) % 2))
        if abs(t) < mpf(10) ** (-mp.dps + 5) * max(abs(s), mpf(1)) and n > abs(z):
            break
    return s


def f64(x):
    return nstr(x, 17, strip_zeros=False)


def log_grid(lo, hi, n):
    lo, hi = mpf(lo), mpf(hi)
    return [lo * (hi / lo) ** (mpf(i) / (n - 1)) for i in range(n)]


def main():
    mp.dps = 50
    lines = []
    push = lines.append
    push("// Generated by tools/reference_values.py (mpmath at 50..120 digit")
    push("// precision, correctly rounded to f64). Do not edit by hand.")
    push("#![allow(dead_code, clippy::excessive_precision)]")
    push("")

    # Macdonald function K_alpha(x) on the acceptance grid: 20 log points.
    alphas = [mpf("0"), mpf("0.3"), mpf("0.5"), mpf("1.5"), mpf("3")]
    xs = log_grid("0.001", "30", 20)
    push("pub const K_GRID_ALPHAS: [f64; 5] = [0.0, 0.3, 0.5, 1.5, 3.0];")
    push("pub const K_GRID_XS: [f64; 20] = [")
    for x in xs:
        push(f"    {f64(x)},")
    push("];")
    push("// K_GRID_VALUES[i][j] = K(alpha_i, x_j)")
    push("pub const K_GRID_VALUES: [[f64; 20]; 5] = [")
    for a in alphas:
        push("    [")
        for x in xs:
            push(f"        {f64(besselk(a, x))},")
    # close row
        push("    ],")
    push("];")
    push("")

    # Dense grid for the integer-order cancellation band, alpha in {0, 0.3, 3}.
    xs_d = log_grid("0.001", "30", 40)
    push("pub const K_DENSE_ALPHAS: [f64; 3] = [0.0, 0.3, 3.0];")
    push("pub const K_DENSE_XS: [f64; 40] = [")
    for x in xs_d:
        push(f"    {f64(x)},")
    push("];")
    push("pub const K_DENSE_VALUES: [[f64; 40]; 3] = [")
    for a in [mpf("0"), mpf("0.3"), mpf("3")]:
        push("    [")
        for x in xs_d:
            push(f"        {f64(besselk(a, x))},")
        push("    ],")
    push("];")
    push("")

    # Deformed exponential at moderate arguments, mu in {0.5, 1, 2}.
    mus = [mpf("0.5"), mpf("1"), mpf("2")]
    zs = [
        mpc(1, 0), mpc(-1, 0), mpc(0, "0.5"), mpc(1, 1),
        mpc(2, -1), mpc(3, 0), mpc(-2, 2), mpc(0, 4),
    ]
    push("pub const EMU_MUS: [f64; 3] = [0.5, 1.0, 2.0];")
    push("pub const EMU_ZS: [[f64; 2]; 8] = [")
    for z in zs:
        push(f"    [{f64(z.real)}, {f64(z.imag)}],")
    push("];")
    push("// EMU_VALUES[i][j] = e_mu(mu_i, z_j) as [re, im]")
    push("pub const EMU_VALUES: [[[f64; 2]; 8]; 3] = [")
    for mu in mus:
        push("    [")
        for z in zs:
            v = e_mu(mu, z)
            push(f"        [{f64(v.real)}, {f64(v.imag)}],")
        push("    ],")
    push("];")
    push("")

    # Deformed exponential at large arguments (asymptotic branch coverage).
    mp.dps = 120
    mus_l = [mpf("0.5"), mpf("1.3"), mpf("5")]
    zs_l = [
        mpc(12, 0), mpc(0, 15), mpc(9, 9), mpc(0, 30), mpc(25, 10),
        mpc(0, 80), mpc(50, 50), mpc(0, -40), mpc(-30, 5), mpc(-20, -15),
    ]
    push("pub const EMU_LARGE_MUS: [f64; 3] = [0.5, 1.3, 5.0];")
    push("pub const EMU_LARGE_ZS: [[f64; 2]; 10] = [")
    for z in zs_l:
        push(f"    [{f64(z.real)}, {f64(z.imag)}],")
    push("];")
    push("pub const EMU_LARGE_VALUES: [[[f64; 2]; 10]; 3] = [")
    for mu in mus_l:
        push("    [")
        for z in zs_l:
            v = e_mu(mu, z, terms=4000)
            push(f"        [{f64(v.real)}, {f64(v.imag)}],")
        push("    ],")
    push("];")
    mp.dps = 50
    push("")

    # Odd-parity plane measure mass: sqrt(pi) * Gamma(mu+1) / Gamma(mu+1/2).
    push("pub const ODD_MASS_MUS: [f64; 4] = [0.0, 0.5, 1.0, 2.5];")
    push("pub const ODD_MASS_VALUES: [f64; 4] = [")
    for mu in [mpf(0), mpf("0.5"), mpf(1), mpf("2.5")]:
        push(f"    {f64(sqrt(pi) * gamma(mu + 1) / gamma(mu + mpf(1) / 2))},")
    push("];")
    push("")

    # Canonical single values.
    push(f"pub const K_HALF_AT_1: f64 = {f64(sqrt(pi / 2) / mp.e)};")
    push(f"pub const GAMMA_MU1_N3: f64 = 30.0;")
    push(f"pub const GAMMA_MU0_N4: f64 = 24.0;")
    g15 = gamma(mpf("1.5"))
    push(f"pub const GAMMA_1_5: f64 = {f64(g15)};")
    push("")

    with open(OUT, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"wrote {OUT} ({len(lines)} lines)")


if __name__ == "__main__":
    main()
