"""Build reference graph6 files of connected graphs with networkx.

n <= 7 comes straight from the networkx graph atlas. n = 8 is produced by
attaching a new vertex to every connected 7-vertex graph in every possible
way (every connected graph has a non-cut vertex) and removing isomorphic
duplicates with networkx's VF2 matcher.

    python3 tools/make_reference_graphs.py tests/data
"""
import itertools
import sys
from pathlib import Path

import networkx as nx


def atlas_connected(n):
    return [g for g in nx.graph_atlas_g() if g.number_of_nodes() == n and nx.is_connected(g)]


def extend(graphs, n):
    buckets = {}
    for base in graphs:
        for r in range(1, n):
            for nbrs in itertools.combinations(range(n - 1), r):
                g = base.copy()
                g.add_node(n - 1)
                g.add_edges_from((n - 1, u) for u in nbrs)
                key = nx.weisfeiler_lehman_graph_hash(g, iterations=3)
                bucket = buckets.setdefault(key, [])
                if not any(nx.is_isomorphic(g, h) for h in bucket):
                    bucket.append(g)
    return [g for b in buckets.values() for g in b]


def write(path, graphs):
    lines = sorted(nx.to_graph6_bytes(g, header=False).decode().strip() for g in graphs)
    path.write_text("".join(line + "\n" for line in lines))
    print(path, len(lines))


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else ".")
    seven = atlas_connected(7)
    write(out / "connected7.g6", seven)
    write(out / "connected8.g6", extend(seven, 8))


if __name__ == "__main__":
    main()
