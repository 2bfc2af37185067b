#!/usr/bin/env python3
"""Independent oracle for the F=2 Zeeman level energies of the 87Rb ground state.

Diagonalizes the full hyperfine + Zeeman Hamiltonian in the uncoupled
|m_I, m_J> basis (I = 3/2, J = 1/2) with 50-digit arithmetic, so it does not
share the closed-form Breit-Rabi code path used by the library. Prints the
F=2 energies (m_F = +2 .. -2) in kHz, shifted so the m_F = 0 level is zero.

Usage: breit_rabi_oracle.py [B_gauss ...]
"""
import sys

import mpmath as mp

mp.mp.dps = 50

H_PLANCK = mp.mpf("6.62607015e-34")        # J s (exact, SI)
MU_B = mp.mpf("9.2740100783e-24")          # J/T
DELTA_E_HFS = mp.mpf("6834682610.904")     # Hz, 87Rb 5^2S_1/2 hyperfine splitting
G_J = mp.mpf("2.00233113")
G_I = mp.mpf("-0.0009951414")

I_SPIN = mp.mpf(3) / 2
J_SPIN = mp.mpf(1) / 2


def spin_matrices(s):
    dim = int(2 * s + 1)
    ms = [s - k for k in range(dim)]
    sz = mp.zeros(dim)
    sp = mp.zeros(dim)
    for a in range(dim):
        sz[a, a] = ms[a]
    for a in range(1, dim):
        m = ms[a]  # raising |s,m> -> |s,m+1>
        sp[a - 1, a] = mp.sqrt(s * (s + 1) - m * (m + 1))
    return sz, sp, sp.T


def kron(a, b):
    ra, ca = a.rows, a.cols
    rb, cb = b.rows, b.cols
    out = mp.zeros(ra * rb, ca * cb)
    for i in range(ra):
        for j in range(ca):
            for k in range(rb):
                for l in range(cb):
                    out[i * rb + k, j * cb + l] = a[i, j] * b[k, l]
    return out


def f2_energies_hz(b_gauss):
    b_tesla = mp.mpf(b_gauss) * mp.mpf("1e-4")
    iz, ip, im = spin_matrices(I_SPIN)
    jz, jp, jm = spin_matrices(J_SPIN)
    idi = mp.eye(int(2 * I_SPIN + 1))
    idj = mp.eye(int(2 * J_SPIN + 1))

    a_hfs = H_PLANCK * DELTA_E_HFS / 2  # J; F=2 <-> F=1 splitting is 2A
    idotj = kron(iz, jz) + (kron(ip, jm) + kron(im, jp)) / 2
    h = a_hfs * idotj + MU_B * b_tesla * (G_J * kron(idi, jz) + G_I * kron(iz, idj))

    # group eigenstates by m_F (H is block diagonal in m_F); F=2 is the
    # higher-energy root of each block for A > 0
    mf_of = {}
    dim_i, dim_j = int(2 * I_SPIN + 1), int(2 * J_SPIN + 1)
    for a in range(dim_i):
        for b in range(dim_j):
            mf_of[a * dim_j + b] = (I_SPIN - a) + (J_SPIN - b)

    energies = {}
    for mf in [2, 1, 0, -1, -2]:
        idx = [k for k, v in mf_of.items() if v == mf]
        sub = mp.zeros(len(idx))
        for p, ip_ in enumerate(idx):
            for q, iq in enumerate(idx):
                sub[p, q] = h[ip_, iq]
        eig = mp.eigsy(sub, eigvals_only=True)
        energies[mf] = max(eig) / H_PLANCK  # Hz

    shift = energies[0]
    return [energies[m] - shift for m in [2, 1, 0, -1, -2]]


def main(argv):
    fields = [mp.mpf(a) for a in argv[1:]] or [mp.mpf("6.179"), mp.mpf("6.180"), mp.mpf(0)]
    for b in fields:
        vals = f2_energies_hz(b)
        khz = ", ".join(mp.nstr(v / 1000, 17) for v in vals)
        print(f"B = {mp.nstr(b, 10)} G : [{khz}] kHz")


if __name__ == "__main__":
    main(sys.argv)
