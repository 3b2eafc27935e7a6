"""
SVG figures of realizations

Conventions:
    - coordinates are scaled uniformly so the largest vertex norm is 1;
    - d = 1 realizations are drawn on a horizontal line;
    - 3-D drawings use an orthographic projection along the view direction
      (default (1, 1, 1)/sqrt(3)) with the configured up-vector (default e_z)
      pointing up on the page;
    - when d exceeds the drawing dimension the first coordinates are used and
      the figure is annotated "d=<d>: <dims>-D projection";
    - edge colors interpolate linearly in w from color_low (minimum weight)
      to color_high (maximum weight); zero-weight edges are dashed.
Output is deterministic: all numbers are printed with fixed precision.
"""

import logging
from pathlib import Path
from typing import Any, Dict, Optional, Sequence, Union

import numpy as np

from modules.certify.certificates import as_coordinates
from modules.graph import Graph
from utils.constants import PROJECTION_NOTE
from utils.exceptions import BadParam, DimensionMismatch, OutputError
from utils.template_renderer import render_figure

logger = logging.getLogger(__name__)

TEMPLATE = 'realization.svg.j2'

DEFAULT_STYLE = {
    'width': 480,
    'height': 480,
    'margin': 40,
    'vertex_radius': 6.0,
    'edge_width': 2.5,
    'color_low': '#2b6cb0',
    'color_high': '#c53030',
    'view_direction': (1.0, 1.0, 1.0),
    'view_up': (0.0, 0.0, 1.0),
}


def _hex_to_rgb(color: str) -> np.ndarray:
    color = color.lstrip('#')
    return np.array([int(color[i:i + 2], 16) for i in (0, 2, 4)], dtype=float)


def weight_color(value: float, low: float, high: float, color_low: str, color_high: str) -> str:
    """Linear blend between the endpoint colors; the midpoint when all weights are equal"""
    s = 0.5 if high - low <= 0 else (value - low) / (high - low)
    s = min(max(s, 0.0), 1.0)
    rgb = (1.0 - s) * _hex_to_rgb(color_low) + s * _hex_to_rgb(color_high)
    return '#' + ''.join(f'{int(round(c)):02x}' for c in rgb)


def orthographic_basis(view_direction: Sequence[float], view_up: Sequence[float]) -> np.ndarray:
    """3 x 2 matrix mapping 3-D points to (right, up) page coordinates"""
    view = np.asarray(view_direction, dtype=float)
    view = view / np.linalg.norm(view)
    right = np.cross(np.asarray(view_up, dtype=float), view)
    norm = np.linalg.norm(right)
    if norm < 1e-12:
        raise BadParam("view_up must not be parallel to view_direction")
    right = right / norm
    up = np.cross(view, right)
    return np.column_stack([right, up])


def project(X: np.ndarray, dims: int, style: Dict[str, Any]) -> np.ndarray:
    """Page coordinates (n x 2) of a realization, before scaling to the canvas"""
    n, d = X.shape
    if d == 1:
        return np.column_stack([X[:, 0], np.zeros(n)])
    if dims == 2 or d == 2:
        return X[:, :2].copy()
    return X[:, :3] @ orthographic_basis(style['view_direction'], style['view_up'])


def figure_context(X, w, g: Graph, dims: int = 2,
                   style: Optional[Dict[str, Any]] = None, weight_floor: float = 1e-7) -> Dict[str, Any]:
    """Everything the template needs, numbers already formatted"""
    if dims not in (2, 3):
        raise BadParam(f"dims must be 2 or 3, got {dims}")
    style = {**DEFAULT_STYLE, **(style or {})}
    X = as_coordinates(X)
    w = np.asarray(w, dtype=float)
    if X.shape[0] != g.n or w.shape != (g.m,):
        raise DimensionMismatch(f"Realization {X.shape} / weights {w.shape} do not fit {g!r}")

    n, d = X.shape
    norms = np.linalg.norm(X, axis=1)
    largest = float(np.max(norms)) if n else 0.0
    unit = X / largest if largest > 0 else X

    page = project(unit, dims, style)
    width, height, margin = int(style['width']), int(style['height']), int(style['margin'])
    radius = 0.5 * min(width, height) - margin
    px = width / 2.0 + radius * page[:, 0]
    py = height / 2.0 - radius * page[:, 1]

    low, high = float(np.min(w)), float(np.max(w))
    edges = []
    for k, (i, j) in enumerate(g.edges):
        edges.append({
            'tail': i,
            'head': j,
            'weight': f'{w[k]:.6g}',
            'x1': f'{px[i]:.3f}', 'y1': f'{py[i]:.3f}',
            'x2': f'{px[j]:.3f}', 'y2': f'{py[j]:.3f}',
            'color': weight_color(w[k], low, high, style['color_low'], style['color_high']),
            'zero': bool(w[k] <= weight_floor),
        })

    labels = g.labels or tuple(str(v) for v in range(n))
    vertices = [
        {'index': v, 'label': labels[v], 'x': f'{px[v]:.3f}', 'y': f'{py[v]:.3f}'}
        for v in range(n)
    ]

    drawn = 1 if d == 1 else (2 if dims == 2 else min(d, 3))
    note = PROJECTION_NOTE.format(d=d, dims=drawn) if d > drawn else ''
    if note:
        logger.warning(f"{g.name}: drawing the first {drawn} of {d} coordinates")

    return {
        'title': f'{g.name} (n={g.n}, m={g.m}, d={d})',
        'width': width,
        'height': height,
        'margin': margin,
        'radius': f"{float(style['vertex_radius']):.2f}",
        'edge_width': f"{float(style['edge_width']):.2f}",
        'edges': edges,
        'vertices': vertices,
        'note': note,
    }


def render_svg(realization, w, g: Graph, path: Optional[Union[str, Path]] = None,
               dims: int = 2, style: Optional[Dict[str, Any]] = None,
               weight_floor: float = 1e-7) -> str:
    """Render a realization; writes the SVG to path when given and returns the text"""
    svg = render_figure(TEMPLATE, **figure_context(realization, w, g, dims, style, weight_floor))
    if path is not None:
        try:
            Path(path).write_text(svg, encoding='utf-8')
        except OSError as e:
            raise OutputError(f"Cannot write figure {path}: {e}") from e
        logger.info(f"Figure written to {path}")
    return svg
