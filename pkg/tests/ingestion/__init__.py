"""
Tests for graph6 and relation-graph ingestion.
"""
