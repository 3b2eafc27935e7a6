"""
Graph generator catalog

Every family is built with networkx and keeps networkx's vertex numbering:

    cycle(n)              vertices 0..n-1 around the cycle
    path(n)               vertices 0..n-1 along the path
    complete(n)           vertices 0..n-1
    grid(p, q)            vertex (i, j) -> i*q + j, row-major
    circular_ladder(n)    outer cycle 0..n-1, inner cycle n..2n-1, rungs i -- i+n
    petersen              outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5
    house                 square 0 (bottom left), 1 (bottom right), 2 (top left),
                          3 (top right), roof 4
    house_x               house plus the diagonals (0, 3) and (1, 2)
    tetrahedral, cube, octahedral, dodecahedral, icosahedral
                          networkx's platonic skeletons
    complete_bipartite(p, q)  part V+ = 0..p-1, part V- = p..p+q-1
    star(k)               K_{1,k}: center 0, leaves 1..k
"""

import logging
from typing import Any, Callable, Dict, Optional, Sequence, Tuple

import networkx as nx

from utils.exceptions import BadParam, UnknownFamily
from .graph import Graph, from_edge_list

logger = logging.getLogger(__name__)


def _require_int(params: Dict[str, Any], key: str, minimum: int, family: str) -> int:
    value = params.get(key)
    if value is None:
        raise BadParam(f"{family} requires parameter '{key}'")
    if int(value) != value or int(value) < minimum:
        raise BadParam(f"{family}({key}={value}) needs an integer {key} >= {minimum}")
    return int(value)


def _cycle(params):
    n = _require_int(params, 'n', 3, 'cycle')
    return nx.cycle_graph(n), f"cycle_{n}"


def _path(params):
    n = _require_int(params, 'n', 2, 'path')
    return nx.path_graph(n), f"path_{n}"


def _complete(params):
    n = _require_int(params, 'n', 2, 'complete')
    return nx.complete_graph(n), f"complete_{n}"


def _grid(params):
    p = _require_int(params, 'p', 1, 'grid')
    q = _require_int(params, 'q', 1, 'grid')
    if p * q < 2:
        raise BadParam("grid needs at least 2 vertices")
    graph = nx.grid_2d_graph(p, q)
    mapping = {(i, j): i * q + j for i in range(p) for j in range(q)}
    return nx.relabel_nodes(graph, mapping), f"grid_{p}x{q}"


def _circular_ladder(params):
    n = _require_int(params, 'n', 3, 'circular_ladder')
    return nx.circular_ladder_graph(n), f"circular_ladder_{n}"


def _complete_bipartite(params):
    p = _require_int(params, 'p', 1, 'complete_bipartite')
    q = _require_int(params, 'q', 1, 'complete_bipartite')
    return nx.complete_bipartite_graph(p, q), f"complete_bipartite_{p}_{q}"


def _star(params):
    k = _require_int(params, 'n', 1, 'star')
    return nx.star_graph(k), f"star_{k}"


def _fixed(builder: Callable[[], nx.Graph], name: str):
    def build(params):
        return builder(), name
    return build


FAMILIES: Dict[str, Tuple[Callable, Tuple[str, ...]]] = {
    'cycle': (_cycle, ('n',)),
    'path': (_path, ('n',)),
    'complete': (_complete, ('n',)),
    'grid': (_grid, ('p', 'q')),
    'circular_ladder': (_circular_ladder, ('n',)),
    'complete_bipartite': (_complete_bipartite, ('p', 'q')),
    'star': (_star, ('n',)),
    'petersen': (_fixed(nx.petersen_graph, 'petersen'), ()),
    'house': (_fixed(nx.house_graph, 'house'), ()),
    'house_x': (_fixed(nx.house_x_graph, 'house_x'), ()),
    'tetrahedral': (_fixed(nx.tetrahedral_graph, 'tetrahedral'), ()),
    'cube': (_fixed(nx.cubical_graph, 'cube'), ()),
    'octahedral': (_fixed(nx.octahedral_graph, 'octahedral'), ()),
    'dodecahedral': (_fixed(nx.dodecahedral_graph, 'dodecahedral'), ()),
    'icosahedral': (_fixed(nx.icosahedral_graph, 'icosahedral'), ()),
}

ALIASES = {
    'house-x': 'house_x',
    'housex': 'house_x',
    'cubical': 'cube',
    'tetrahedron': 'tetrahedral',
    'circular-ladder': 'circular_ladder',
    'k': 'complete',
}


def family_names() -> Sequence[str]:
    return tuple(FAMILIES)


def generate(family: str, phi: Optional[Sequence[float]] = None, **params) -> Graph:
    """Build a catalog graph; parameters with value None are ignored"""
    key = family.strip().lower()
    key = ALIASES.get(key, key)
    if key not in FAMILIES:
        raise UnknownFamily(f"Unknown graph family '{family}'. Known: {', '.join(FAMILIES)}")

    builder, accepted = FAMILIES[key]
    given = {k: v for k, v in params.items() if v is not None}
    unexpected = sorted(set(given) - set(accepted))
    if unexpected:
        raise BadParam(f"{key} does not take parameter(s) {', '.join(unexpected)}")

    nx_graph, name = builder(given)
    nx_graph = nx.convert_node_labels_to_integers(nx_graph, ordering='sorted')
    # phi, when given, follows the sorted edge order
    edges = sorted((min(i, j), max(i, j)) for i, j in nx_graph.edges())
    graph = from_edge_list(nx_graph.number_of_nodes(), edges, phi=phi, name=name)
    logger.debug(f"Generated {name}: n={graph.n}, m={graph.m}")
    return graph
