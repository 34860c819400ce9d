"""Standard pairs, primary decompositions and A-graded monomial ideals."""
from .exponents import InputError, MonomialIdeal, contains_monomial, minimalize, staircase_bounds
from .standard_pairs import StandardPair, StandardPairBasis, compute_standard_pairs
from .decomposition import associated_primes, chain_check, primary_decomposition
from .grading import GradingMap, agraded_verify, is_pointed
from .binomial import BinomialIdeal
from .toric import TermOrder, toric_groebner

__all__ = [
    "InputError", "MonomialIdeal", "contains_monomial", "minimalize", "staircase_bounds",
    "StandardPair", "StandardPairBasis", "compute_standard_pairs",
    "associated_primes", "chain_check", "primary_decomposition",
    "GradingMap", "agraded_verify", "is_pointed",
    "BinomialIdeal", "TermOrder", "toric_groebner",
]
__version__ = "0.1.0"
