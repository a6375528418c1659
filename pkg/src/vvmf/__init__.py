"""Exact computations for vector valued modular forms on SL2(Z)."""
from .bundles import (
    Cert,
    ClassFlags,
    IntRange,
    RepData,
    Status,
    bundle,
    classify,
    cusp_generator_weights,
    dims,
    euler_char,
    generator_weights,
    hilbert,
    rep_data,
    resolve_x,
    resolve_y,
    splitting,
    subgroup_generators,
)
from .exact import CycMatrix, Cyclotomic, zeta
from .exponents import CUSP, STANDARD, Interval, TSpectrum, choose_exponents, t_spectrum
from .rep import Repn, build_rep, character, direct_sum, dual, from_permutations, tensor_char, trivial
from .wpline import P46, SplittingType, WeightedLine, euler_line, h0, h1

__version__ = "0.1.0"
