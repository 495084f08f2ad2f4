"""The ``route`` command line tool.

    route <dijkstra|floyd|prim|cpp|tsp> --graph FILE [options]
    route serve [--bind HOST:PORT] [--data-dir DIR]

Exit codes: 0 success, 2 bad usage, 3 graph file not found, 4 graph file
invalid, 5 algorithm error (disconnected graph, unknown node, ...).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from ..errors import GraphInvalid, RouteGraphError
from ..serialization import load_graph
from .runner import AlgorithmRequest, run_algorithm

EXIT_OK = 0
EXIT_BAD_USAGE = 2
EXIT_FILE_NOT_FOUND = 3
EXIT_GRAPH_INVALID = 4
EXIT_ALGORITHM_ERROR = 5

_CLI_TO_ALGORITHM = {
    "dijkstra": "dijkstra",
    "floyd": "floyd_route",
    "prim": "prim",
    "cpp": "chinese_postman",
    "tsp": "christofides",
}


def _waypoint_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated node ids, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("waypoint list is empty")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="route",
        description="Run routing algorithms on a graph file, or serve the HTTP API.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def algorithm_parser(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--graph", required=True, help="graph JSON file")
        p.add_argument("--json", action="store_true", help="print the result as JSON")
        p.add_argument("--out", help="also write the JSON result to this file")
        return p

    p = algorithm_parser("dijkstra", "single-source shortest paths")
    p.add_argument("--source", type=int, required=True, help="source node id")

    p = algorithm_parser("floyd", "route through waypoints in priority order")
    p.add_argument("--waypoints", type=_waypoint_list, required=True,
                   metavar="N,N,...", help="ordered stops, first to last")

    p = algorithm_parser("prim", "minimum spanning tree")
    p.add_argument("--source", type=int, help="root node id (default: smallest)")

    p = algorithm_parser("cpp", "Chinese Postman closed walk over all edges")
    p.add_argument("--depot", type=int, help="start/end node id (default: smallest)")

    p = algorithm_parser("tsp", "approximate tour through every node")
    p.add_argument("--start", type=int, help="tour start node id (default: smallest)")
    p.add_argument("--opt2", action="store_true", help="refine with 2-opt")
    p.add_argument("--opt3", action="store_true", help="refine with 3-opt")

    p = sub.add_parser("serve", help="serve the graph-editing HTTP API")
    p.add_argument("--bind", default=None, help="HOST:PORT (default: $ROUTE_BIND or 127.0.0.1:8000)")
    p.add_argument("--data-dir", default=None, help="store directory (default: $ROUTE_DATA_DIR or ./route-data)")

    return parser


def _format_number(x: float) -> str:
    return f"{x:g}"


def _print_text(result: dict) -> None:
    kind = result["kind"]
    out = []
    if kind == "tree" and result["algorithm"] == "dijkstra":
        out.append(f"source {result['source']}")
        out.append("node\tdist\tpred")
        preds = result["pred"]
        for node_id, dist in result["dist"].items():
            dist_text = "unreachable" if dist is None else _format_number(dist)
            pred_text = str(preds.get(node_id, "-"))
            out.append(f"{node_id}\t{dist_text}\t{pred_text}")
        out.append(f"tree_cost {_format_number(result['cost'])}")
    elif kind == "tree":
        out.append(f"root {result['root']}")
        out.append("edges: " + " ".join(str(e) for e in result["edge_ids"]))
        out.append(f"total_weight {_format_number(result['cost'])}")
    else:
        for field in ("waypoints", "depot", "start"):
            if field in result:
                value = result[field]
                if isinstance(value, list):
                    value = " ".join(str(v) for v in value)
                out.append(f"{field} {value}")
        out.append("nodes: " + " ".join(str(v) for v in result["node_sequence"]))
        if "edge_ids" in result:
            out.append("edges: " + " ".join(str(e) for e in result["edge_ids"]))
        out.append(f"cost {_format_number(result['cost'])}")
    print("\n".join(out))


def _run_algorithm_command(args: argparse.Namespace) -> int:
    try:
        g = load_graph(args.graph)
    except OSError as exc:
        print(f"error: cannot read {args.graph}: {exc}", file=sys.stderr)
        return EXIT_FILE_NOT_FOUND
    except GraphInvalid as exc:
        print(f"error: invalid graph file: {exc}", file=sys.stderr)
        return EXIT_GRAPH_INVALID

    request = AlgorithmRequest(
        algorithm=_CLI_TO_ALGORITHM[args.command],
        source=getattr(args, "source", None),
        waypoints=tuple(getattr(args, "waypoints", ()) or ()),
        depot=getattr(args, "depot", None),
        start=getattr(args, "start", None),
        opt2=getattr(args, "opt2", False),
        opt3=getattr(args, "opt3", False),
    )
    try:
        result = run_algorithm(g, request)
    except RouteGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ALGORITHM_ERROR

    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(result, fh, indent=2)
            fh.write("\n")
    if args.json:
        print(json.dumps(result, indent=2))
    else:
        _print_text(result)
    return EXIT_OK


def _run_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .api import DEFAULT_BIND, DEFAULT_DATA_DIR, create_app
    from .store import GraphStore

    bind = args.bind or os.environ.get("ROUTE_BIND", DEFAULT_BIND)
    data_dir = args.data_dir or os.environ.get("ROUTE_DATA_DIR", DEFAULT_DATA_DIR)
    host, _, port_text = bind.rpartition(":")
    if not host or not port_text.isdigit():
        print(f"error: --bind must look like HOST:PORT, got {bind!r}", file=sys.stderr)
        return EXIT_BAD_USAGE
    app = create_app(GraphStore(data_dir))
    uvicorn.run(app, host=host, port=int(port_text))
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        return _run_serve(args)
    return _run_algorithm_command(args)


if __name__ == "__main__":
    sys.exit(main())
