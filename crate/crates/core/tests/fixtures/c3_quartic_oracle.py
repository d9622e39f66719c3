# Independent check of the quartic z1^4 + z2*z3^4 - z2^2*z3^2 on C^3.
# Faces are found by brute force over positive integer weights; torus
# critical points by a Groebner basis of the gradient with 1 - s*x*y*z.
import itertools
import json

import sympy as sp

x, y, z, s = sp.symbols("x y z s")
terms = {(4, 0, 0): 1, (0, 1, 4): 1, (0, 2, 2): -1}

faces = set()
for w in itertools.product(range(1, 9), repeat=3):
    vals = {e: sum(a * b for a, b in zip(w, e)) for e in terms}
    m = min(vals.values())
    faces.add(tuple(sorted(e for e in terms if vals[e] == m)))

result = {"faces": []}
any_critical = False
for face in sorted(faces):
    f = sum(terms[e] * x ** e[0] * y ** e[1] * z ** e[2] for e in face)
    eqs = [sp.diff(f, v) for v in (x, y, z)] + [1 - s * x * y * z]
    gb = sp.groebner(eqs, x, y, z, s, order="lex")
    critical = not (len(gb.exprs) == 1 and gb.exprs[0] == 1)
    any_critical |= critical
    result["faces"].append({"support": [list(e) for e in face], "torus_critical_point": critical})

segment = [f for f in result["faces"] if f["support"] == [[0, 1, 4], [0, 2, 2]]][0]
result["segment_has_torus_critical_point"] = segment["torus_critical_point"]
result["nondegenerate"] = not any_critical
print(json.dumps(result, indent=2))
