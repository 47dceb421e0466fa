"""
Main entry point for running epls from a source checkout.
"""
import sys

from epls.cli import main

if __name__ == '__main__':
    sys.exit(main())
