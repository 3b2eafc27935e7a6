"""
Graph module
Graph types, incidence and Laplacian assembly, generator catalog and JSON files
"""

from .graph import (
    Graph, LengthSpec, SymMatrix, WeightVector, from_edge_list, incidence_matrix,
    laplacian, uniform_weights, edge_lengths_squared
)
from .generators import generate, family_names
from .graph_io import load_graph, save_graph, graph_from_dict, graph_to_dict, dumps_graph

__all__ = [
    'Graph', 'LengthSpec', 'SymMatrix', 'WeightVector', 'from_edge_list',
    'incidence_matrix', 'laplacian', 'uniform_weights', 'edge_lengths_squared',
    'generate', 'family_names', 'load_graph', 'save_graph', 'graph_from_dict',
    'graph_to_dict', 'dumps_graph',
]
