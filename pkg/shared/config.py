"""Configuration constants, caps and registries' shared names"""

import os

# Enumeration is exhaustive; orders above the cap are refused (1.6M+ classes at 7)
ORDER_CAP = int(os.environ.get('SEMIGRAPH_ORDER_CAP', '6'))
CANONICAL_ORDER_CAP = 8       # n! relabelings; 40320 at n = 8
AUDIT_ORDER_CAP = 5

# Exact solvers
CHROMATIC_EXACT_LIMIT = int(os.environ.get('SEMIGRAPH_CHROMATIC_LIMIT', '25'))
BRUTE_FORCE_MIS_LIMIT = 16    # subset oracle in tests and audit cross-checks

# Default worker count for enumeration and audit
PARALLEL_WIDTH = int(os.environ.get('SEMIGRAPH_PARALLEL_WIDTH', '1'))

LOG_LEVEL = os.environ.get('SEMIGRAPH_LOG_LEVEL', 'INFO')

# CLI exit codes
EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_COUNTEREXAMPLES = 2
EXIT_RESOURCE_CAP = 3

# Graph kinds exposed on the command line (builders live in shared/epgraph.py)
GRAPH_KINDS = ['epg', 'power', 'cyclic', 'commuting']

# Command-line names for the dedup modes (see shared/enumeration.py)
DEDUP_ALIASES = {
    'labeled': 'labeled',
    'iso': 'up_to_iso',
    'iso-anti': 'up_to_iso_and_anti',
}

# Labels of the reconstructed six-element example, in index order
EXAMPLE_315_LABELS = ['a', 'x', 'y', 'z', 'b', 'c']
