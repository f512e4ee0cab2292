#!/usr/bin/env python3
"""Standalone brute-force oracle for link-diagram colorings.

Exhaustively enumerates shadow-biquandle colorings (all semi-arc colors times
all region colors) and local-biquandle colorings (all pair assignments on
semi-arcs) for the dihedral shadow quandle, without any pruning. Values printed
here are frozen into the C++ acceptance suite.

Also builds the modified trefoil PD codes (extra Reidemeister I kink, extra
Reidemeister II pair) used for the invariance checks.
"""

import itertools
import json
import sys
from collections import Counter


def edge_darts(pd):
    darts = {}
    for c, xs in enumerate(pd):
        for p, e in enumerate(xs):
            darts.setdefault(e, []).append((c, p))
    for e, ds in darts.items():
        assert len(ds) == 2, (e, ds)
    return darts


def other(darts, pd, c, p):
    a, b = darts[pd[c][p]]
    return b if a == (c, p) else a


def orient(pd):
    """head[(c,p)] is True when the strand enters crossing c at position p."""
    darts = edge_darts(pd)
    head = {}
    stack = []
    for c in range(len(pd)):
        head[(c, 0)] = True
        head[(c, 2)] = False
        stack += [(c, 0), (c, 2)]
    while stack:
        c, p = stack.pop()
        o = other(darts, pd, c, p)
        if o not in head:
            head[o] = not head[(c, p)]
            stack.append(o)
        q = (o[0], (o[1] + 2) % 4)
        if q not in head:
            head[q] = not head[o]
            stack.append(q)
    assert len(head) == 4 * len(pd), "component without under passes"
    return head


def faces(pd):
    darts = edge_darts(pd)
    face_of = {}
    nf = 0
    for c in range(len(pd)):
        for p in range(4):
            if (c, p) in face_of:
                continue
            d = (c, p)
            while d not in face_of:
                face_of[d] = nf
                o = other(darts, pd, *d)
                d = (o[0], (o[1] + 3) % 4)
            nf += 1
    return face_of, nf


def structure(pd):
    """Semi-arcs with (right, left) faces and crossings with roles."""
    darts = edge_darts(pd)
    head = orient(pd)
    face_of, nf = faces(pd)
    assert len(pd) - len(darts) + nf == 2, "Euler check failed"
    labels = sorted(darts)
    index = {e: i for i, e in enumerate(labels)}
    sides = {}
    for e in labels:
        (c0, p0), (c1, p1) = darts[e]
        if head[(c0, p0)]:
            hd, tl = (c0, p0), (c1, p1)
        else:
            hd, tl = (c1, p1), (c0, p0)
        sides[index[e]] = (face_of[hd], face_of[tl])  # (right, left)
    crossings = []
    for c, xs in enumerate(pd):
        positive = head[(c, 3)]  # over strand enters at position 3
        if positive:
            u1, o1, u2, o2 = 0, 1, 2, 3
        else:
            u1, o1, u2, o2 = 2, 1, 0, 3

        def corner(p, q):
            return face_of[(c, p)] if (p + 1) % 4 == q else face_of[(c, q)]

        crossings.append(dict(
            sign=1 if positive else -1,
            u1=index[xs[u1]], o1=index[xs[o1]],
            u2=index[xs[u2]], o2=index[xs[o2]],
            r=corner(u1, o1), ry=corner(u1, o2),
            rz=corner(o1, u2), rw=corner(u2, o2)))
    return len(labels), nf, sides, crossings


def dihedral(n):
    under = lambda a, b: (2 * b - a) % n
    over = lambda a, b: a
    act = under
    return under, over, act


def mochizuki(n, x, y, z):
    num = (2 * z - y) ** n + y ** n - 2 * z ** n
    assert num % n == 0
    return ((x - y) * (num // n)) % n


def sb_colorings(pd, n):
    ne, nf, sides, crossings = structure(pd)
    under, over, act = dihedral(n)
    out = []
    for arcs in itertools.product(range(n), repeat=ne):
        if not all(arcs[k['u2']] == under(arcs[k['u1']], arcs[k['o1']]) and
                   arcs[k['o2']] == over(arcs[k['o1']], arcs[k['u1']])
                   for k in crossings):
            continue
        for regs in itertools.product(range(n), repeat=nf):
            if all(act(regs[r], arcs[s]) == regs[l] for s, (r, l) in sides.items()):
                out.append((arcs, regs))
    return out, crossings


def lb_colorings_pairs(pd, n):
    """Definition-level LB colorings: every pair assignment on semi-arcs."""
    ne, nf, sides, crossings = structure(pd)
    tri = lambda x, y, z: (x - y + z) % n
    count = 0
    pairs = [(x, y) for x in range(n) for y in range(n)]
    for col in itertools.product(pairs, repeat=ne):
        ok = True
        for k in crossings:
            (x1, y), (x2, z) = col[k['u1']], col[k['o1']]
            w = tri(x1, y, z)
            if x1 != x2 or col[k['u2']] != (z, w) or col[k['o2']] != (y, w):
                ok = False
                break
        if ok:
            count += 1
    return count


def phi(pd, n):
    cols, crossings = sb_colorings(pd, n)
    values = Counter()
    for arcs, regs in cols:
        total = 0
        for k in crossings:
            x, a, b = regs[k['r']], arcs[k['u1']], arcs[k['o1']]
            if a != b:
                total += k['sign'] * mochizuki(n, x, a, b)
        values[total % n] += 1
    return len(cols), dict(sorted(values.items()))


def relabel(pd):
    """Renumber edges 1..E consecutively along each component."""
    darts = edge_darts(pd)
    head = orient(pd)
    order = []
    seen = set()
    for start in sorted(darts, key=str):
        if start in seen:
            continue
        e = start
        while e not in seen:
            seen.add(e)
            order.append(e)
            (c0, p0), (c1, p1) = darts[e]
            hd = (c0, p0) if head[(c0, p0)] else (c1, p1)
            e = pd[hd[0]][(hd[1] + 2) % 4]
    new = {e: i + 1 for i, e in enumerate(order)}
    return [[new[e] for e in xs] for xs in pd]


def add_r2(pd, a, b, a_face_on_left):
    """Push edge a across edge b inside a face F that lies left of b."""
    a1, a2, a3 = (a, 'a'), (a, 'b'), (a, 'c')
    b1, b2, b3 = (b, 'a'), (b, 'b'), (b, 'c')
    out = [list(xs) for xs in pd]
    head = orient(pd)
    for c, xs in enumerate(out):
        for p, e in enumerate(xs):
            if e == a:
                xs[p] = a3 if head[(c, p)] else a1
            elif e == b:
                xs[p] = b3 if head[(c, p)] else b1
    if a_face_on_left:
        out.append([b2, a2, b3, a1])
        out.append([b1, a2, b2, a3])
    else:
        out.append([b1, a2, b2, a1])
        out.append([b2, a2, b3, a3])
    return relabel(out)


TREFOIL = [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]
FIGURE_EIGHT = [[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]]
TREFOIL_KINK = [[1, 4, 2, 5], [3, 8, 4, 1], [5, 2, 6, 3], [6, 7, 7, 8]]


def trefoil_r2():
    _, _, sides, _ = structure(TREFOIL)
    labels = sorted(edge_darts(TREFOIL))
    for ia, ib in itertools.permutations(range(len(labels)), 2):
        ra, la = sides[ia]
        rb, lb = sides[ib]
        if lb == la and lb != rb:
            return add_r2(TREFOIL, labels[ia], labels[ib], True)
        if lb == ra and lb != rb:
            return add_r2(TREFOIL, labels[ia], labels[ib], False)
    raise RuntimeError("no face pair")


def main():
    report = {}
    r2 = trefoil_r2()
    report['trefoil_r2_pd'] = r2
    for name, pd, n in [('trefoil_d3', TREFOIL, 3),
                        ('kink_d3', TREFOIL_KINK, 3),
                        ('r2_d3', r2, 3),
                        ('figure8_d3', FIGURE_EIGHT, 3),
                        ('figure8_d5', FIGURE_EIGHT, 5)]:
        ne, nf, _, _ = structure(pd)
        count, values = phi(pd, n)
        report[name] = dict(semi_arcs=ne, regions=nf, sb_count=count, phi=values)
    report['trefoil_d3']['lb_count_pairs'] = lb_colorings_pairs(TREFOIL, 3)
    json.dump(report, sys.stdout, indent=1, sort_keys=True)
    print()


if __name__ == '__main__':
    main()
