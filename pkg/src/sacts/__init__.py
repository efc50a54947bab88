"""Finite right acts over finite monoids."""
from .core import (
    Act, ActError, Hom, Lattice, Monoid, Subact, Subset,
    all_subacts, amalgam, coproduct, generated_subact, hom_queries, homomorphisms,
    lattice, rees_quotient, regular_act, theta, validate_act, validate_monoid,
)
from .catalog import MonoidSpec, catalog, parse_spec
from .enumeration import act_isomorphic, brute_force_count, count_acts, enumerate_acts

__version__ = "0.1.0"
