"""
Test configuration and shared constants for the theta_graphs tests.

Exhaustive corpus tests stop at ``EXHAUSTIVE_MAX_N`` vertices; set
THETA_GRAPHS_EXHAUSTIVE=1 to run them up to seven vertices.
"""

import os

EXHAUSTIVE = os.environ.get("THETA_GRAPHS_EXHAUSTIVE", "") not in ("", "0")
EXHAUSTIVE_MAX_N = 7 if EXHAUSTIVE else 6

# Isomorphism classes of connected graphs, n = 1..7
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}

# Isomorphism classes of all graphs, n = 0..8
ALL_COUNTS = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}

# Θ̄ relation graphs of the two worked multipartite examples
WORKED_EXAMPLES = {
    (1, 2, 4): {"edges": 14, "class_sizes": [2, 4, 8]},
    (1, 1, 2, 3): {"edges": 17, "class_sizes": [5, 5, 7]},
}
