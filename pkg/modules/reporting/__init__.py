"""
Reporting module
Result JSON files, input readers, summary tables and SVG figures
"""

from .result_writer import (
    result_document, dumps_result, write_result_json, read_weights, read_coordinates,
    write_summary_csv
)
from .svg_renderer import render_svg, figure_context, weight_color, orthographic_basis, project

__all__ = [
    'result_document', 'dumps_result', 'write_result_json', 'read_weights',
    'read_coordinates', 'write_summary_csv', 'render_svg', 'figure_context',
    'weight_color', 'orthographic_basis', 'project',
]
