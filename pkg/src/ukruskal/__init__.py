"""Coded dilators, Kruskal fixed points and Bachmann-Howard notations on finite orders."""

from .dilator import Dilator, ExprDilator, TraceError, ValidationReport, validate
from .finposet import FinPoset, antichain, canonicalize, chain
from .kernels import BACKEND
from .kruskal import BoundError, TWTerm, TWUniverse, seq_fixed_point
from .sexpr import ParseError, parse_dilator, parse_poset
from .theta import OrderError, ThetaSystem, ThetaTerm
from .wd import Cnf, WDDilator, nu_canonical, theta_to_tw

__all__ = [
    "BACKEND", "BoundError", "Cnf", "Dilator", "ExprDilator", "FinPoset", "OrderError",
    "ParseError", "TWTerm", "TWUniverse", "ThetaSystem", "ThetaTerm", "TraceError",
    "ValidationReport", "WDDilator", "antichain", "canonicalize", "chain", "nu_canonical",
    "parse_dilator", "parse_poset", "seq_fixed_point", "theta_to_tw", "validate",
]
