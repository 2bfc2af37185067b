#!/usr/bin/env python3
"""Independent dense-eigensolver oracle for the dressed eigenstate targets.

Builds H0 + H1 + V(f_bar) explicitly (numpy) with the level energies taken
from breit_rabi_oracle and prints the populations of the ground and highest
eigenvectors at the working point B = 6.179 G, Omega = 2*pi*60 kHz,
f_bar = 2*pi*4323 kHz.
"""
import numpy as np

from breit_rabi_oracle import f2_energies_hz

TWO_PI = 2 * np.pi


def dressed_hamiltonian(b_gauss=6.179, rabi_khz=60.0, f_bar_khz=4323.0):
    w = TWO_PI * np.array([float(x) for x in f2_energies_hz(b_gauss)])
    omega = TWO_PI * rabi_khz * 1e3
    f = TWO_PI * f_bar_khz * 1e3
    c = np.sqrt(1.5) * omega
    h = np.diag(w).astype(float)
    for (i, j, v) in [(0, 1, omega), (1, 2, c), (2, 3, c), (3, 4, omega)]:
        h[i, j] = v
        h[j, i] = v
    h += f * np.diag([-2.0, -1.0, 0.0, 1.0, 2.0])
    return h


def main():
    h = dressed_hamiltonian()
    vals, vecs = np.linalg.eigh(h)
    for name, idx in [("ground", 0), ("highest", 4)]:
        pops = np.abs(vecs[:, idx]) ** 2
        txt = ", ".join(f"{p:.15f}" for p in pops)
        print(f"{name}: eigenvalue/2pi = {vals[idx] / TWO_PI / 1e3:.9f} kHz  populations = [{txt}]")


if __name__ == "__main__":
    main()
