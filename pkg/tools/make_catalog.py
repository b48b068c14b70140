"""Write the connected-graph catalogs used by the test suite.

Source: the networkx Graph Atlas (all graphs up to 7 vertices, one per
isomorphism class). Encoding uses networkx's own graph6 writer so the files
are independent of skewspec.to_graph6.

    python tools/make_catalog.py tests/data
"""

import sys
from pathlib import Path

import networkx as nx


def main(outdir: str) -> None:
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    lines = []
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() == 0 or not nx.is_connected(g):
            continue
        lines.append(nx.to_graph6_bytes(g, header=False).decode("ascii").strip())
    (out / "connected_le7.g6").write_text("\n".join(lines) + "\n", encoding="ascii")
    print(f"wrote {len(lines)} graphs")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data")
