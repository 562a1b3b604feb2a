"""
Tests for corpus enumeration, the claim registry and the suite runner.
"""
