#!/usr/bin/env python3
"""Reference probability tables for the bundled case studies.

Builds every state and measurement directly in numpy (no shared code with
the C++ engine) and writes core/data/expected/<case>.json. Rerun after
changing a case study; the output is committed.
"""
import json
import pathlib

import numpy as np

ROOT = pathlib.Path(__file__).resolve().parents[2]
OUT = ROOT / "core" / "data" / "expected"

ket0 = np.array([1, 0], dtype=complex)
ket1 = np.array([0, 1], dtype=complex)
I2 = np.eye(2, dtype=complex)


def proj(v):
    v = np.asarray(v, dtype=complex)
    return np.outer(v, v.conj())


def spin_up(theta, phi):
    return np.array([np.cos(theta / 2), np.exp(1j * phi) * np.sin(theta / 2)])


def spin_config(theta, phi):
    up = proj(spin_up(theta, phi))
    return [("up", up), ("down", I2 - up)]


def born(state, effects):
    rho = proj(state) if state.ndim == 1 else state
    out = {}
    for label, e in effects:
        p = float(np.real(np.trace(e @ rho)))
        out[label] = min(1.0, max(0.0, p))
    return out


def lift_left(effects):
    return [(l, np.kron(e, I2)) for l, e in effects]


def lift_right(effects):
    return [(l, np.kron(I2, e)) for l, e in effects]


def spin_pair(ta, pa, tb, pb):
    return [(f"({la},{lb})", np.kron(ea, eb))
            for la, ea in spin_config(ta, pa) for lb, eb in spin_config(tb, pb)]


def entry(structure, config, probs):
    return {"structure": structure, "config": config, "probabilities": probs}


def stern_gerlach():
    z_up = spin_up(0, 0)
    return [
        entry("z_up", "z_axis", born(z_up, spin_config(0, 0))),
        entry("z_up", "x_axis", born(z_up, spin_config(np.pi / 2, 0))),
    ]


def double_slit():
    plus = (ket0 + ket1) / np.sqrt(2)
    minus = (ket0 - ket1) / np.sqrt(2)
    interference = [("bright", proj(plus)), ("dark", proj(minus))]
    phases = [k * np.pi / 4 for k in range(8)]
    rows = []
    for k, phi in enumerate(phases):
        psi = (ket0 + np.exp(1j * phi) * ket1) / np.sqrt(2)
        rows.append(entry(f"open_{k}", "interference", born(psi, interference)))
    for k, phi in enumerate(phases):
        psi = (np.kron(ket0, ket0) + np.exp(1j * phi) * np.kron(ket1, ket1)) / np.sqrt(2)
        # Reduce to the path mode by tracing out the marker.
        rho = proj(psi).reshape(2, 2, 2, 2)
        rho_path = np.einsum("ajbj->ab", rho)
        rows.append(entry(f"tagged_{k}", "interference", born(rho_path, interference)))
    return rows


def singlet_bell():
    singlet = (np.kron(ket0, ket1) - np.kron(ket1, ket0)) / np.sqrt(2)
    return [
        entry("psi", "equal_z", born(singlet, spin_pair(0, 0, 0, 0))),
        entry("psi", "orthogonal", born(singlet, spin_pair(0, 0, np.pi / 2, 0))),
        entry("psi", "alice_0", born(singlet, lift_left(spin_config(0, 0)))),
        entry("psi", "bob_45", born(singlet, lift_right(spin_config(np.pi / 4, 0)))),
    ]


def wigner_friend():
    s = 1 / np.sqrt(2)
    k00, k01, k10, k11 = (np.kron(a, b) for a in (ket0, ket1) for b in (ket0, ket1))
    bell = [
        ("phi_plus", proj(s * (k00 + k11))),
        ("phi_minus", proj(s * (k00 - k11))),
        ("psi_plus", proj(s * (k01 + k10))),
        ("psi_minus", proj(s * (k01 - k10))),
    ]
    lab = s * (k00 + k11)
    notebook = [("read_up", proj(k00) + proj(k10)), ("read_down", proj(k01) + proj(k11))]
    return [
        entry("lab_state", "wigner_basis", born(lab, bell)),
        entry("lab_state", "friend_record", born(lab, lift_right(spin_config(0, 0)))),
        entry("lab_state", "notebook", born(lab, notebook)),
    ]


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, fn in [("stern_gerlach", stern_gerlach), ("double_slit", double_slit),
                     ("singlet_bell", singlet_bell), ("wigner_friend", wigner_friend)]:
        doc = {"case": name, "entries": fn()}
        (OUT / f"{name}.json").write_text(json.dumps(doc, indent=2) + "\n")
        print("wrote", name)

    # Values frozen into the C++ unit tests.
    up = spin_up(0, 0)
    print("theta=pi/3:", born(up, spin_config(np.pi / 3, 0)))
    print("x-up after update:", spin_up(np.pi / 2, 0))
    singlet = (np.kron(ket0, ket1) - np.kron(ket1, ket0)) / np.sqrt(2)
    print("singlet zz:", born(singlet, spin_pair(0, 0, 0, 0)))
    print("singlet pi/3 (same-outcome):", born(singlet, spin_pair(np.pi / 3, 0, 0, 0)))


if __name__ == "__main__":
    main()
