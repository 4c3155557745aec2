#!/usr/bin/env python3
"""Enumerates every connected simple graph on 2..8 nodes up to isomorphism.

Graphs on <= 7 nodes come from the networkx atlas. Every connected 8-node
graph has a non-cut vertex, so extending each connected 7-node graph by one
vertex attached to every non-empty neighbour subset reaches all of them;
duplicates are removed with a WL-hash bucket plus an exact isomorphism test.
Output is one graph6 string per line.
"""
import itertools
import sys
from pathlib import Path

import networkx as nx

EXPECTED = {2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("tests/data/connected_le8.g6")
    by_size = {k: [] for k in EXPECTED}
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if 2 <= n <= 7 and nx.is_connected(g):
            by_size[n].append(g)

    buckets = {}
    for base in by_size[7]:
        for r in range(1, 8):
            for subset in itertools.combinations(range(7), r):
                g = base.copy()
                g.add_edges_from((7, v) for v in subset)
                key = nx.weisfeiler_lehman_graph_hash(g, iterations=4)
                bucket = buckets.setdefault(key, [])
                if not any(nx.is_isomorphic(g, other) for other in bucket):
                    bucket.append(g)
    by_size[8] = [g for bucket in buckets.values() for g in bucket]

    for n, want in EXPECTED.items():
        if len(by_size[n]) != want:
            raise SystemExit(f"{n} nodes: found {len(by_size[n])}, expected {want}")

    lines = []
    for n in sorted(by_size):
        graphs = [nx.to_graph6_bytes(g, header=False).decode().strip() for g in by_size[n]]
        lines.extend(sorted(graphs))
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} graphs to {out}")


if __name__ == "__main__":
    main()
