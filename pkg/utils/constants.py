"""Application constants for the extremal realization toolkit"""

# Optimization senses
SENSE = {
    'MAX': 'max',   # maximize lambda_2, maximal realization
    'MIN': 'min',   # minimize lambda_n, minimal realization
}

SENSES = tuple(SENSE.values())

# Process exit codes
EXIT_CODES = {
    'SUCCESS': 0,
    'ERROR': 1,
    'CERTIFICATE_FAILED': 2,
}

# CLI commands and the sense they solve in
COMMANDS = {
    'solve-max': 'max',
    'solve-min': 'min',
    'certify': None,
    'render': None,
    'sweep': None,
}

# Families solved by the catalog sweep, with their parameters
CATALOG = [
    {'family': 'cycle', 'params': {'n': 6}},
    {'family': 'path', 'params': {'n': 4}},
    {'family': 'complete', 'params': {'n': 4}},
    {'family': 'grid', 'params': {'p': 3, 'q': 3}},
    {'family': 'circular_ladder', 'params': {'n': 5}},
    {'family': 'complete_bipartite', 'params': {'p': 2, 'q': 3}},
    {'family': 'star', 'params': {'n': 3}},
    {'family': 'petersen', 'params': {}},
    {'family': 'house', 'params': {}},
    {'family': 'house_x', 'params': {}},
    {'family': 'tetrahedral', 'params': {}},
    {'family': 'cube', 'params': {}},
    {'family': 'octahedral', 'params': {}},
    {'family': 'dodecahedral', 'params': {}},
    {'family': 'icosahedral', 'params': {}},
]

# Result JSON top-level keys, in the order they are documented
RESULT_KEYS = [
    'sense',
    'lambda_star',
    'w',
    'zero_weight_edges',
    'd',
    'X',
    'total_variance',
    'certificate',
    'solver_trace',
    'graph',
    'phi',
    'unit_distance',
    'regular',
]

# Solver trace columns
TRACE_COLUMNS = ['outer', 't', 'mu', 'newton_steps', 'margin']

# Catalog summary CSV columns
SUMMARY_COLUMNS = [
    'family',
    'n',
    'm',
    'lambda_star',
    'd',
    'total_variance',
    'min_weight',
    'max_weight',
    'certificate',
]

# Figure annotation when coordinates are dropped for display
PROJECTION_NOTE = "d={d}: {dims}-D projection"
