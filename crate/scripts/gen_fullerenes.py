#!/usr/bin/env python3
"""Generate small fullerene test graphs in planar_code.

Faces are wound up from ring spirals (pentagon positions chosen in
lexicographic order), the dual triangulation is converted into an embedded
cubic graph, and isomorphic duplicates are removed with networkx.

Outputs (written next to the core crate's integration tests):
  small_fullerenes.pc   every isomer with 20 <= n <= 28 vertices
  chamfer_seeds.pc      one isomer for each n in 20, 24, 26, ..., 40
  c60_ih.pc             buckminsterfullerene from its canonical spiral
"""
import itertools
import os
import sys

import networkx as nx

HEADER = b">>planar_code<<"


def windup(sizes):
    """Dual adjacency from a face spiral, or None if the spiral fails."""
    n = len(sizes)
    rem = list(sizes)
    adj = [set() for _ in range(n)]

    def connect(a, b):
        if b in adj[a] or rem[a] <= 0 or rem[b] <= 0:
            return False
        adj[a].add(b)
        adj[b].add(a)
        rem[a] -= 1
        rem[b] -= 1
        return True

    if not connect(0, 1):
        return None
    ring = [0, 1]
    for k in range(2, n - 1):
        if not connect(k, ring[-1]) or not connect(k, ring[0]):
            return None
        while rem[ring[0]] == 0:
            ring.pop(0)
            if not ring or not connect(k, ring[0]):
                return None
        while rem[ring[-1]] == 0:
            ring.pop()
            if not ring or not connect(k, ring[-1]):
                return None
        if rem[k] <= 0:
            return None
        ring.append(k)
    last = n - 1
    for f in ring:
        if not connect(last, f):
            return None
    if any(r != 0 for r in rem):
        return None
    return adj


def dual_to_cubic(adj):
    """Embedded cubic graph (0-based rotation lists) from a dual triangulation."""
    n_faces = len(adj)
    tris = sorted(
        {tuple(sorted((a, b, c)))
         for a in range(n_faces) for b in adj[a] for c in adj[a] & adj[b]}
    )
    index = {t: i for i, t in enumerate(tris)}
    # boundary of each fullerene face = link cycle of the dual vertex
    faces = []
    for f in range(n_faces):
        nbrs = adj[f]
        start = min(nbrs)
        cyc = [start]
        prev = None
        cur = start
        while True:
            if len(cyc) == len(nbrs):
                break
            cand = [g for g in adj[cur] & nbrs if g != prev and g not in cyc]
            if not cand:
                return None
            prev, cur = cur, min(cand)
            cyc.append(cur)
        if start not in adj[cyc[-1]]:
            return None
        faces.append([index[tuple(sorted((f, cyc[i], cyc[(i + 1) % len(cyc)])))]
                      for i in range(len(cyc))])
    # orient faces consistently: every edge used once in each direction
    orient = [None] * n_faces
    orient[0] = faces[0]
    # propagate breadth-first over dual adjacency
    order = [0]
    seen = {0}
    while order:
        f = order.pop(0)
        darts = {(orient[f][i], orient[f][(i + 1) % len(orient[f])]) for i in range(len(orient[f]))}
        for g in sorted(adj[f]):
            if g in seen:
                continue
            cyc = faces[g]
            gd = {(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))}
            # neighbouring faces traverse their shared edge in opposite directions
            if gd & darts:
                cyc = list(reversed(cyc))
            orient[g] = cyc
            seen.add(g)
            order.append(g)
    nxt = {}
    for cyc in orient:
        for i in range(len(cyc)):
            a, v, b = cyc[i - 1], cyc[i], cyc[(i + 1) % len(cyc)]
            nxt[(v, a)] = b
    rot = []
    for v in range(len(tris)):
        first = min(w for (x, w) in nxt if x == v)
        seq = [first]
        while True:
            w = nxt[(v, seq[-1])]
            if w == first:
                break
            seq.append(w)
        if len(seq) != 3:
            return None
        rot.append(seq)
    return rot


def spirals(n):
    n_faces = n // 2 + 2
    for pent in itertools.combinations(range(n_faces), 12):
        sizes = [6] * n_faces
        for p in pent:
            sizes[p] = 5
        yield sizes


def to_nx(rot):
    g = nx.Graph()
    for v, ns in enumerate(rot):
        for w in ns:
            g.add_edge(v, w)
    return g


def isomers(n, limit=None):
    found = []
    graphs = []
    for sizes in spirals(n):
        adj = windup(sizes)
        if adj is None:
            continue
        rot = dual_to_cubic(adj)
        if rot is None or len(rot) != n:
            continue
        g = to_nx(rot)
        if any(nx.is_isomorphic(g, h) for h in graphs):
            continue
        graphs.append(g)
        found.append(rot)
        if limit is not None and len(found) >= limit:
            break
    return found


def encode(rot):
    out = bytearray([len(rot)])
    for ns in rot:
        out.extend(w + 1 for w in ns)
        out.append(0)
    return bytes(out)


# canonical spiral of C60-Ih, pentagon positions 1-based
C60_IH_PENTAGONS = (1, 7, 9, 11, 13, 15, 18, 20, 22, 24, 26, 32)


def c60_ih():
    sizes = [6] * 32
    for p in C60_IH_PENTAGONS:
        sizes[p - 1] = 5
    return dual_to_cubic(windup(sizes))


def main():
    out_dir = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
        os.path.dirname(__file__), "..", "crates", "core", "tests", "data")
    small = []
    for n in (20, 22, 24, 26, 28):
        iso = isomers(n)
        print(f"n={n}: {len(iso)} isomers")
        small.extend(iso)
    with open(os.path.join(out_dir, "small_fullerenes.pc"), "wb") as fh:
        fh.write(HEADER + b"".join(encode(r) for r in small))
    seeds = []
    for n in (20, 24, 26, 28, 30, 32, 34, 36, 38, 40):
        iso = isomers(n, limit=1)
        print(f"seed n={n}: {'ok' if iso else 'missing'}")
        seeds.extend(iso)
    with open(os.path.join(out_dir, "chamfer_seeds.pc"), "wb") as fh:
        fh.write(HEADER + b"".join(encode(r) for r in seeds))
    with open(os.path.join(out_dir, "c60_ih.pc"), "wb") as fh:
        fh.write(HEADER + encode(c60_ih()))


if __name__ == "__main__":
    main()
