#!/usr/bin/env python3
"""
Fermionic Sums - Main Entry Point

Exact computation and verification of one-dimensional sums, Kostka-Foulkes
polynomials, mahonian statistics, p-group subgroup counts and
rigged-configuration polynomials.

Usage:
    python main.py compute p-poly --lambda 2,2,2 --mu 1,2,2,1
    python main.py stat DEN --word 2411213144321
    python main.py verify theorem-3.1 --jobs 4
    python main.py --help
"""

import asyncio
import sys
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent / "src"))

from src.cli import main


if __name__ == "__main__":
    try:
        sys.exit(asyncio.run(main()))
    except KeyboardInterrupt:
        print("\n\nInterrupted by user")
        sys.exit(1)
