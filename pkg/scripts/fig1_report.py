"""Print what the library computes on the 20-vertex example graph, next to the caption's claims."""
from twinblocks.blocks import ALGORITHMS, oracle_two_twinless_blocks, two_twinless_blocks
from twinblocks.graph import fig1_fixture, induced_subgraph, remove_vertex
from twinblocks.strong import two_strong_blocks
from twinblocks.twinless import twinless_sccs

CAPTION_STRONG = [[2, 7], [12, 13, 17, 19]]
CAPTION_TWINLESS = [[2, 7]]


def names(G, sets):
    return sorted(sorted(int(G.labels[v]) for v in s) for s in sets)


def main():
    G = fig1_fixture()
    print(f"n={G.n} m={G.m}")
    print("twinless components:", names(G, twinless_sccs(G)))
    print("2-strong blocks:     ", names(G, two_strong_blocks(G)), " caption:", CAPTION_STRONG)
    for algo in ALGORITHMS:
        print(f"2-twinless ({algo:8s}):", names(G, two_twinless_blocks(G, algo)), " caption:", CAPTION_TWINLESS)

    upper = induced_subgraph(G, [G.vertex(k) for k in (11, 12, 13, 14, 16, 17, 18, 19, 20)])
    print("oracle on the upper component:", names(upper, oracle_two_twinless_blocks(upper)))

    H = remove_vertex(G, G.vertex(13))
    P = twinless_sccs(H).relabel(H.origin)
    print("12 and 17 separated in G - 13:", not P.same_class(G.vertex(12), G.vertex(17)))


if __name__ == "__main__":
    main()
