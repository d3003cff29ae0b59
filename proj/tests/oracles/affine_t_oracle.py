"""Symbolic evaluation of t(l) for oriented cycles, used to freeze test values.

t(l) = (prod_{j=l}^{l+d-2} sqrt(w_j) - sqrt(w_{l+d-1}))^2, indices mod d.
"""
import sympy as sp

CYCLES = [
    (1, 1, 1),
    (2, 1, 2),
    (4, 1, 1),
    (1, 2, 1, 2),
    (2, 2, 1),
    (1, 1, 1, 1, 1),
    (3, 1, 3),
    (2, 2, 2),
    (1, 1, 4, 1),
]


def t_values(ws):
    d = len(ws)
    out = []
    for l in range(d):
        prod = sp.Integer(1)
        for j in range(l, l + d - 1):
            prod *= sp.sqrt(ws[j % d])
        out.append(sp.nsimplify(sp.expand((prod - sp.sqrt(ws[(l + d - 1) % d])) ** 2)))
    return out


if __name__ == "__main__":
    for ws in CYCLES:
        print(ws, [str(v) for v in t_values(ws)])
