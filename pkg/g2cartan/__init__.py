"""G2Cartan - Exact Cartan-theoretic computations for (2,3,5)-distributions."""

__version__ = "1.0.0"
__author__ = "G2Cartan Team"
__description__ = "Exact Cartan-theoretic computations for (2,3,5)-distributions and Lie(G2)"
