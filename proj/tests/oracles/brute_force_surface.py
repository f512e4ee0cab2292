#!/usr/bin/env python3
"""Brute-force colorings of the glued two-triple-point surface code over the
dihedral quandle of order 3.

For a dihedral quandle the sheet color is forced by its two region colors
(x * a = 2a - x, so a = (x + y) / 2), so enumerating all region colorings and
checking every double curve is exhaustive.
"""

import itertools
import numpy as np

N = 3


def surface():
    adjacency, curves = [], []
    for model in range(2):
        s0 = 12 * model

        def oct_(sx, sy, sz):
            i = sx + 2 * sy + 4 * sz
            if model == 0:
                return i
            return 7 if i == 0 else 7 + i

        B = lambda sy, sz: s0 + sy + 2 * sz
        M = lambda sx, sz: s0 + 4 + sx + 2 * sz
        T = lambda sx, sy: s0 + 8 + sx + 2 * sy
        for a, b in itertools.product(range(2), repeat=2):
            adjacency.append((B(a, b), oct_(0, a, b), oct_(1, a, b)))
            adjacency.append((M(a, b), oct_(a, 0, b), oct_(a, 1, b)))
            adjacency.append((T(a, b), oct_(a, b, 0), oct_(a, b, 1)))
        for s in range(2):
            curves.append((B(0, s), B(1, s), M(0, s), M(1, s)))
            curves.append((B(s, 0), B(s, 1), T(0, s), T(1, s)))
            curves.append((M(s, 0), M(s, 1), T(s, 0), T(s, 1)))
    return adjacency, curves


def main():
    adjacency, curves = surface()
    nregions = 15
    half = pow(2, -1, N)
    total = 0
    # 3^15 region colorings, processed in chunks over the first three regions
    rest = np.array(list(itertools.product(range(N), repeat=nregions - 3)), dtype=np.int64)
    for head in itertools.product(range(N), repeat=3):
        regs = np.hstack([np.tile(head, (len(rest), 1)), rest])
        sheet = {}
        for s, r1, r2 in adjacency:
            sheet[s] = ((regs[:, r1] + regs[:, r2]) * half) % N
        ok = np.ones(len(rest), dtype=bool)
        for u1, u2, o1, o2 in curves:
            ok &= sheet[u2] == (2 * sheet[o1] - sheet[u1]) % N
            ok &= sheet[o2] == sheet[o1]
        total += int(ok.sum())
    print(total)


if __name__ == '__main__':
    main()
