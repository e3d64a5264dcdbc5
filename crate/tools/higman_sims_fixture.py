"""Write the Higman-Sims graph as an edge list, built from the binary Golay code.

The octads of the extended Golay code form S(5,8,24). Octads through two
fixed points, with those points removed, form S(3,6,22). The graph has a
base vertex joined to the 22 points, each point joined to the 21 hexads
containing it, and two hexads joined when they are disjoint.

Usage: python3 tools/higman_sims_fixture.py > crates/core/tests/data/higman_sims.edges
"""

from itertools import combinations

N = 23
GENERATOR = (1 << 11) | (1 << 10) | (1 << 6) | (1 << 5) | (1 << 4) | (1 << 2) | 1


def golay_basis():
    rows = []
    for shift in range(12):
        word = GENERATOR << shift
        parity = bin(word).count("1") & 1
        rows.append(word | (parity << N))
    return rows


def octads():
    basis = golay_basis()
    found = []
    for mask in range(1 << 12):
        word = 0
        for i, row in enumerate(basis):
            if mask >> i & 1:
                word ^= row
        if bin(word).count("1") == 8:
            found.append(word)
    return found


def main():
    all_octads = octads()
    assert len(all_octads) == 759
    fixed = (1 << 22) | (1 << 23)
    hexads = sorted(o & ~fixed for o in all_octads if o & fixed == fixed)
    assert len(hexads) == 77
    for triple in combinations(range(22), 3):
        t = sum(1 << p for p in triple)
        assert sum(1 for h in hexads if h & t == t) == 1

    edges = [(0, 1 + p) for p in range(22)]
    for i, h in enumerate(hexads):
        edges.extend((1 + p, 23 + i) for p in range(22) if h >> p & 1)
    for i, j in combinations(range(77), 2):
        if hexads[i] & hexads[j] == 0:
            edges.append((23 + i, 23 + j))

    print("# Higman-Sims graph from Golay octads")
    print(100, len(edges))
    for u, v in edges:
        print(u, v)


if __name__ == "__main__":
    main()
