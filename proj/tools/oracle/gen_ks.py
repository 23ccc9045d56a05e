#!/usr/bin/env python3
"""Writes the bundled Kochen-Specker instance files under core/data/ks/.

cabello-18: the 18-ray, 9-basis set in dimension 4, contexts listed by hand.
peres-33: the 33 rays in dimension 3 whose squared components are
permutations of (0,0,1), (0,1,1), (0,1,2), (1,1,2); contexts are every
orthogonal triad among them.
"""
import itertools
import pathlib

import numpy as np

ROOT = pathlib.Path(__file__).resolve().parents[2]
OUT = ROOT / "core" / "data" / "ks"

CABELLO_CONTEXTS = [
    [(0, 0, 0, 1), (0, 0, 1, 0), (1, 1, 0, 0), (1, -1, 0, 0)],
    [(0, 0, 0, 1), (0, 1, 0, 0), (1, 0, 1, 0), (1, 0, -1, 0)],
    [(1, -1, 1, -1), (1, -1, -1, 1), (1, 1, 0, 0), (0, 0, 1, 1)],
    [(1, -1, 1, -1), (1, 1, 1, 1), (1, 0, -1, 0), (0, 1, 0, -1)],
    [(0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 1), (1, 0, 0, -1)],
    [(1, -1, -1, 1), (1, 1, 1, 1), (1, 0, 0, -1), (0, 1, -1, 0)],
    [(1, 1, -1, 1), (1, 1, 1, -1), (1, -1, 0, 0), (0, 0, 1, 1)],
    [(1, 1, -1, 1), (-1, 1, 1, 1), (1, 0, 1, 0), (0, 1, 0, -1)],
    [(1, 1, 1, -1), (-1, 1, 1, 1), (1, 0, 0, 1), (0, 1, -1, 0)],
]


def fmt(x):
    r = repr(float(x))
    return "0" if r in ("0.0", "-0.0") else r


def write(name, dim, rays, contexts, header):
    lines = [f"# {line}" for line in header] + [f"dim {dim}"]
    for i, v in enumerate(rays):
        v = np.asarray(v, dtype=float)
        v = v / np.linalg.norm(v)
        lines.append(f"ray {i} " + " ".join(fmt(c) for c in v))
    for ctx in contexts:
        lines.append("context " + " ".join(str(i) for i in ctx))
    (OUT / f"{name}.ks").write_text("\n".join(lines) + "\n")
    print(f"wrote {name}: {len(rays)} rays, {len(contexts)} contexts")


def cabello():
    rays = []
    for ctx in CABELLO_CONTEXTS:
        for v in ctx:
            if v not in rays:
                rays.append(v)
    contexts = [[rays.index(v) for v in ctx] for ctx in CABELLO_CONTEXTS]
    write("cabello-18", 4, rays, contexts,
          ["Cabello-Estebaranz-Garcia-Alcaine 18 rays in dimension 4.",
           "Every ray lies in exactly two of the nine contexts."])


def canonical(v):
    # Fix the overall sign: first nonzero component positive.
    for c in v:
        if abs(c) > 1e-12:
            return tuple(x if c > 0 else -x for x in v)
    return tuple(v)


def peres():
    s = np.sqrt(2.0)
    patterns = [(0, 0, 1), (0, 1, 1), (0, 1, s), (1, 1, s)]
    seen = []
    for pat in patterns:
        for perm in itertools.permutations(pat):
            for signs in itertools.product((1, -1), repeat=3):
                v = canonical(tuple(a * b for a, b in zip(perm, signs)))
                if not any(np.allclose(v, w) for w in seen):
                    seen.append(v)
    assert len(seen) == 33, len(seen)
    rays = [np.array(v) / np.linalg.norm(v) for v in seen]
    contexts = []
    for i, j, k in itertools.combinations(range(33), 3):
        if (abs(rays[i] @ rays[j]) < 1e-9 and abs(rays[i] @ rays[k]) < 1e-9
                and abs(rays[j] @ rays[k]) < 1e-9):
            contexts.append([i, j, k])
    write("peres-33", 3, seen, contexts,
          ["Peres 33 rays in dimension 3; contexts are all orthogonal triads."])


if __name__ == "__main__":
    OUT.mkdir(parents=True, exist_ok=True)
    cabello()
    peres()
