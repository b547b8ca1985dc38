"""Homological invariants of monomial ideals and stability of projective dimension."""
from .decomposition import (
    IrreducibleComponent,
    MonomialPrime,
    ass_equals_min,
    assh,
    associated_primes,
    dim_quotient,
    height,
    irreducible_decomposition,
    is_equidimensional,
    is_unmixed,
    minimal_primes,
)
from .errors import EmptyIdeal, NotProper, ParseError, RingMismatch, StablePDError, TooLarge, UnknownVariable
from .homology import BettiTable, SimplicialComplex, betti_table, depth, lcm_lattice, projective_dimension, reduced_homology_ranks
from .ideal import MonomialIdeal, colon, contains_monomial, intersect, minimize, power, product, radical, support
from .localization import LocalizedIdeal, contains, localize, primes_at_or_above
from .parser import evaluate, parse, render
from .polymatroidal import (
    ComponentGraph,
    TransversalSpec,
    VeroneseParams,
    component_graph,
    degree2_pure_power_stable,
    is_polymatroidal,
    transversal_ideal,
    transversal_pd,
    transversal_stability,
    veronese,
    veronese_pd,
)
from .ring import Monomial, Ring, mono_divides, mono_lcm, mono_quotient_saturating
from .stability import StabilityReport, classify, is_cohen_macaulay, is_generalized_cm, is_stable_pd, localized_pd

__version__ = "0.1.0"
