"""Exact combinatorics of rank-one Eisenstein cohomology for GL_N, N = n + n' odd."""

from .halfint import HalfInt
from .weights import Weight, validate
from .weyl import BlockPair, Perm
from .verifier import LemmaInstance, Verdict, verify_instance

__all__ = ["HalfInt", "Weight", "validate", "BlockPair", "Perm", "LemmaInstance", "Verdict", "verify_instance"]
__version__ = "0.1.0"
