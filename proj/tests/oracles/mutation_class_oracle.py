#!/usr/bin/env python3
"""Brute-force oracle for mutation-class sizes.

Works on exchange matrices directly (matrix mutation formula) and
canonicalizes the resulting diagrams by trying every vertex permutation.
Shares no code with the C++ library; its output is frozen into
tests/test_diagram.cpp and tests/acceptance.cpp.
"""
import itertools
import sys


def mutate(B, k):
    n = len(B)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == k or j == k:
                out[i][j] = -B[i][j]
            else:
                out[i][j] = B[i][j] + (abs(B[i][k]) * B[k][j] + B[i][k] * abs(B[k][j])) // 2
    return out


def signed_weights(B):
    n = len(B)
    return [[(abs(B[i][j] * B[j][i]) if B[i][j] > 0 else -abs(B[i][j] * B[j][i])) for j in range(n)]
            for i in range(n)]


def canon(B):
    W = signed_weights(B)
    n = len(W)
    best = None
    for p in itertools.permutations(range(n)):
        key = tuple(W[p[i]][p[j]] for i in range(n) for j in range(n))
        if best is None or key < best:
            best = key
    return best


def mutation_class(B):
    seen = {canon(B): B}
    todo = [B]
    max_w = 0
    while todo:
        cur = todo.pop()
        for k in range(len(cur)):
            nxt = mutate(cur, k)
            max_w = max(max_w, max(abs(x) for x in sum(signed_weights(nxt), [])))
            c = canon(nxt)
            if c not in seen:
                seen[c] = nxt
                todo.append(nxt)
    return seen, max_w


FIXTURES = {
    "A2": [[0, 1], [-1, 0]],
    "A3": [[0, 1, 0], [-1, 0, 1], [0, -1, 0]],
    "A4": [[0, 1, 0, 0], [-1, 0, 1, 0], [0, -1, 0, 1], [0, 0, -1, 0]],
    "B2": [[0, 1], [-2, 0]],
    "B3": [[0, 1, 0], [-1, 0, 1], [0, -2, 0]],
    "D4": [[0, 1, 0, 0], [-1, 0, 1, 1], [0, -1, 0, 0], [0, -1, 0, 0]],
    "G2": [[0, 1], [-3, 0]],
}

if __name__ == "__main__":
    for name, B in FIXTURES.items():
        cls, max_w = mutation_class(B)
        print(f"{name}: class size {len(cls)}, max weight {max_w}")
    sys.exit(0)
