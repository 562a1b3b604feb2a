"""
Tests for the relations, recognition and realizability modules.
"""
