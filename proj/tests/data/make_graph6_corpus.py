"""Regenerates graph6_corpus.tsv with networkx as the reference encoder.

Each line: graph6 <TAB> order <TAB> edge list ("u-v,u-v,..." or "-").
"""
import random

import networkx as nx


def line(g):
    enc = nx.to_graph6_bytes(g, header=False).decode().strip()
    edges = sorted((min(u, v), max(u, v)) for u, v in g.edges())
    body = ",".join(f"{u}-{v}" for u, v in edges) or "-"
    return f"{enc}\t{g.number_of_nodes()}\t{body}"


def main():
    rng = random.Random(62)
    graphs = []
    for n in range(1, 63):
        graphs.append(nx.empty_graph(n))
        graphs.append(nx.complete_graph(n))
        for _ in range(8):
            graphs.append(nx.gnp_random_graph(n, rng.random(), seed=rng.randrange(1 << 30)))
    for n in (63, 64, 100, 130, 300):
        graphs.append(nx.gnp_random_graph(n, 0.1, seed=n))
    with open("graph6_corpus.tsv", "w") as out:
        for g in graphs:
            out.write(line(g) + "\n")


if __name__ == "__main__":
    main()
