"""
Tests for the output formatters.
"""
