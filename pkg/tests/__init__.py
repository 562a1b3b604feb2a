"""
Test package for theta_graphs.

Unit tests for the graph core, graph6 and relation input, the Θ / Θ̄
relations, recognition, realizability, the property suite, the formatters
and the command-line interface.
"""
