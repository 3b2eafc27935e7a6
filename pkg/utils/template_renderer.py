import os
from jinja2 import Environment, FileSystemLoader, StrictUndefined, select_autoescape

TEMPLATES_DIR = os.path.join(os.path.dirname(__file__), '..', 'templates', 'figures')

env = Environment(
    loader=FileSystemLoader(TEMPLATES_DIR),
    autoescape=select_autoescape(['svg', 'svg.j2']),
    undefined=StrictUndefined,
    keep_trailing_newline=True,
)

def render_figure(template_name: str, **context) -> str:
    """
    Renders templates/figures/<template_name>
    passing in all kwargs as context.
    Returns the full document as a string.
    """
    template = env.get_template(template_name)
    return template.render(**context)
