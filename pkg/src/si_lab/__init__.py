"""Exact classification of selfadjoint-ideal matrix semigroups S(T, T*)."""
from .exact_arith import ExactMatrix, GaussianRational
from .classifier import Verdict, classify
from .oracle import generate_closure, check_si, check_simple

__all__ = ["ExactMatrix", "GaussianRational", "Verdict", "classify",
           "generate_closure", "check_si", "check_simple"]
