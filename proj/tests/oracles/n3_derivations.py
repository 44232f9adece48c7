"""Independent oracle for Der(n3): solves D[x,y] = [Dx,y] + [x,Dy] with sympy
and writes the dimension and a basis to tests/golden/n3_derivations.json.

n3: [e1,e2] = e3, all other brackets of basis vectors zero.
"""
import itertools
import json
import pathlib

import sympy as sp

DIM = 3
C = {(0, 1): [0, 0, 1], (1, 0): [0, 0, -1]}


def bracket(x, y):
    out = sp.zeros(DIM, 1)
    for (i, j), v in C.items():
        out += x[i] * y[j] * sp.Matrix(v)
    return out


def main():
    d = sp.Matrix(DIM, DIM, sp.symbols(f"d0:{DIM * DIM}"))
    basis = [sp.eye(DIM)[:, k] for k in range(DIM)]
    equations = []
    for i, j in itertools.combinations(range(DIM), 2):
        x, y = basis[i], basis[j]
        equations.extend(d * bracket(x, y) - bracket(d * x, y) - bracket(x, d * y))
    system = sp.Matrix([[sp.diff(eq, s) for s in d] for eq in equations])
    null = system.nullspace()
    golden = {
        "algebra": "n3",
        "dim": len(null),
        "basis": [[[str(v.reshape(DIM, DIM)[r, c]) for c in range(DIM)] for r in range(DIM)]
                  for v in null],
    }
    out = pathlib.Path(__file__).resolve().parent.parent / "golden" / "n3_derivations.json"
    out.write_text(json.dumps(golden, indent=2) + "\n")
    print(f"Der(n3) has dimension {len(null)}; wrote {out}")


if __name__ == "__main__":
    main()
