"""
Tests for the graph core: model, distances, generators, isomorphism,
induced patterns and blocks.
"""
