"""
Quadsphere

Exact certificates for quadratic maps between spheres: sphericity,
harmonic / proper biharmonic classification, and the factorization of proper
biharmonic maps through the small hypersphere.

    python main.py catalog list
    python main.py catalog emit "F_lambda(0)" f0.json
    python main.py classify f0.json --verbose
"""

import sys

from src.cli import main

if __name__ == "__main__":
    sys.exit(main())
