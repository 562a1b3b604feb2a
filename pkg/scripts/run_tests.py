#!/usr/bin/env python3
"""
Test runner script for theta_graphs.

This script provides various options for running tests including:
- All tests
- Specific test modules
- The fast core tests (graph core, ingestion, relations)
- The exhaustive corpus tests up to seven vertices
"""

import os
import sys
import unittest
import argparse
from pathlib import Path

PROJECT_ROOT = Path(__file__).parent.parent

# Add project root to Python path
sys.path.insert(0, str(PROJECT_ROOT))

TEST_MODULES = [
    "tests.graph.test_graph_core",
    "tests.ingestion.test_graph6_parser",
    "tests.ingestion.test_relation_parser",
    "tests.analysis.test_relations",
    "tests.analysis.test_recognition",
    "tests.analysis.test_realizability",
    "tests.processing.test_enumerator",
    "tests.processing.test_claims",
    "tests.processing.test_suite_runner",
    "tests.formatters.test_formatters",
    "tests.test_cli",
]

CORE_MODULES = TEST_MODULES[:4]


def _run(suite: unittest.TestSuite) -> bool:
    runner = unittest.TextTestRunner(verbosity=2)
    return runner.run(suite).wasSuccessful()


def run_all_tests():
    """Run all tests in the tests directory."""
    print("🧪 Running all tests...")
    loader = unittest.TestLoader()
    suite = loader.discover(str(PROJECT_ROOT / 'tests'), pattern='test_*.py',
                            top_level_dir=str(PROJECT_ROOT))
    return _run(suite)


def run_modules(modules):
    """Run the named test modules."""
    try:
        suite = unittest.TestLoader().loadTestsFromNames(modules)
    except Exception as e:
        print(f"❌ Error loading test modules {modules}: {e}")
        return False
    return _run(suite)


def run_specific_test(test_module):
    """Run a specific test module."""
    print(f"🧪 Running tests from module: {test_module}")
    module_name = test_module if test_module.startswith('tests.') else f"tests.{test_module}"
    return run_modules([module_name])


def main():
    """Main test runner function."""
    parser = argparse.ArgumentParser(description='Run theta_graphs tests')
    parser.add_argument('--all', action='store_true', help='Run all tests')
    parser.add_argument('--core', action='store_true', help='Run the fast core tests only')
    parser.add_argument('--exhaustive', action='store_true',
                        help='Extend corpus tests to seven vertices')
    parser.add_argument('--module', type=str, help='Run specific test module')
    parser.add_argument('--list', action='store_true', help='List available test modules')

    args = parser.parse_args()

    if args.list:
        print("📋 Available test modules:")
        for module in TEST_MODULES:
            print(f"  - {module}")
        return

    if args.exhaustive:
        # read by tests/conftest.py at import time
        os.environ["THETA_GRAPHS_EXHAUSTIVE"] = "1"

    if args.module:
        success = run_specific_test(args.module)
    elif args.core:
        print("🧪 Running core tests...")
        success = run_modules(CORE_MODULES)
    else:
        success = run_all_tests()

    if success:
        print("\n✅ All tests passed!")
        sys.exit(0)
    else:
        print("\n❌ Some tests failed!")
        sys.exit(1)


if __name__ == "__main__":
    main()
