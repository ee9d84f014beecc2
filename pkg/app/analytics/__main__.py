"""
Analytics package main entry point
"""
import sys

from app.analytics.cli import main

if __name__ == '__main__':
    sys.exit(main())
