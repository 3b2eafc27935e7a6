"""
Graph JSON files

Format (UTF-8):
    {"n": int, "edges": [[i, j], ...], "phi": [x, ...], "labels": [...]}
"phi" and "labels" are optional. Unknown top-level keys are ignored with a warning.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Union

from utils.exceptions import GraphError, GraphFileError
from .graph import Graph, from_edge_list

logger = logging.getLogger(__name__)

KNOWN_KEYS = ('n', 'edges', 'phi', 'labels', 'name')


def graph_from_dict(data: Dict[str, Any]) -> Graph:
    """Validate a decoded graph document and build the Graph"""
    if not isinstance(data, dict):
        raise GraphFileError("Graph document must be a JSON object")

    unknown = sorted(set(data) - set(KNOWN_KEYS))
    if unknown:
        logger.warning(f"Ignoring unknown graph keys: {', '.join(unknown)}")

    if 'n' not in data or 'edges' not in data:
        raise GraphFileError("Graph document needs 'n' and 'edges'")

    n = data['n']
    if not isinstance(n, int) or isinstance(n, bool):
        raise GraphFileError(f"'n' must be an integer, got {n!r}")

    edges = data['edges']
    if not isinstance(edges, list) or any(not isinstance(e, list) or len(e) != 2 for e in edges):
        raise GraphFileError("'edges' must be a list of [i, j] pairs")

    return from_edge_list(
        n,
        edges,
        phi=data.get('phi'),
        labels=data.get('labels'),
        name=str(data.get('name', 'graph')),
    )


def graph_to_dict(g: Graph) -> Dict[str, Any]:
    """Normalized document: sorted edges, explicit phi"""
    doc: Dict[str, Any] = {
        'n': g.n,
        'edges': [[i, j] for i, j in g.edges],
        'phi': list(g.phi.phi),
    }
    if g.labels is not None:
        doc['labels'] = list(g.labels)
    return doc


def load_graph(path: Union[str, Path]) -> Graph:
    """Read and validate a graph JSON file"""
    try:
        with open(path, encoding='utf-8') as handle:
            data = json.load(handle)
    except (OSError, json.JSONDecodeError) as e:
        raise GraphFileError(f"Cannot read graph file {path}: {e}") from e

    try:
        graph = graph_from_dict(data)
    except GraphError:
        raise
    except (TypeError, ValueError) as e:
        raise GraphFileError(f"Malformed graph file {path}: {e}") from e

    logger.info(f"Loaded graph from {path}: n={graph.n}, m={graph.m}")
    return graph


def dumps_graph(g: Graph) -> str:
    return json.dumps(graph_to_dict(g), sort_keys=True, indent=2)


def save_graph(g: Graph, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps_graph(g) + "\n", encoding='utf-8')
