#!/usr/bin/env python3
"""Brute-force overlapping NMI, written straight from the definition.

Every community is a binary indicator over the node universe. Joint
probabilities are counted node by node. Writes random cover pairs and their
NMI to tests/data/nmi_cases.json.
"""
import json
import math
import random
import sys
from pathlib import Path


def h(p):
    return 0.0 if p <= 0.0 else -p * math.log2(p)


def indicator(community, n):
    members = set(community)
    return [1 if v in members else 0 for v in range(n)]


def entropy_of(ind, n):
    ones = sum(ind)
    return h(ones / n) + h((n - ones) / n)


def conditional(xk, yl, n):
    """Returns (admissible, H(X_k | Y_l))."""
    counts = {(a, b): 0 for a in (0, 1) for b in (0, 1)}
    for v in range(n):
        counts[(xk[v], yl[v])] += 1
    p = {key: c / n for key, c in counts.items()}
    admissible = h(p[(1, 1)]) + h(p[(0, 0)]) >= h(p[(0, 1)]) + h(p[(1, 0)])
    joint = sum(h(q) for q in p.values())
    return admissible, joint - entropy_of(yl, n)


def normalized_conditional(x, y, n):
    if not x:
        return 1.0
    total = 0.0
    ys = [indicator(c, n) for c in y]
    for community in x:
        xk = indicator(community, n)
        hx = entropy_of(xk, n)
        best = None
        for yl in ys:
            ok, value = conditional(xk, yl, n)
            if ok and (best is None or value < best):
                best = value
        if best is None:
            term = 1.0
        elif hx == 0.0:
            term = 0.0
        else:
            term = best / hx
        total += term
    return total / len(x)


def nmi(x, y, n):
    if not x and not y:
        return 1.0
    if not x or not y:
        return 0.0
    value = 1.0 - 0.5 * (normalized_conditional(x, y, n) + normalized_conditional(y, x, n))
    return min(1.0, max(0.0, value))


def random_cover(rng, n):
    cover = []
    count = 0 if rng.random() < 0.03 else rng.randint(1, 5)
    for _ in range(count):
        size = rng.randint(1, n)
        cover.append(sorted(rng.sample(range(n), size)))
    return cover


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("tests/data/nmi_cases.json")
    rng = random.Random(20130607)
    cases = []
    while len(cases) < 1000:
        n = rng.randint(1, 12)
        x = random_cover(rng, n)
        y = random_cover(rng, n) if rng.random() < 0.8 else [list(c) for c in x]
        cases.append({"n": n, "x": x, "y": y, "nmi": nmi(x, y, n)})
    out.write_text(json.dumps({"cases": cases}, separators=(",", ":")) + "\n")
    print(f"wrote {len(cases)} cases to {out}")


if __name__ == "__main__":
    main()
