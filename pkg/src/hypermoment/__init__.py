"""Exact spectral moments, S-order comparison and family enumeration for
uniform hypergraphs."""

from __future__ import annotations

from .canon import CanonicalKey, canonical_form, canonical_key, isomorphic
from .census import Pattern, census, count_pattern
from .core import (
    FamilySpec,
    Hypergraph,
    HypergraphError,
    build,
    coalesce,
    degrees,
    distance,
    family_e,
    family_f,
    from_json,
    from_text,
    girth,
    hypercycle,
    hyperpath,
    hyperstar,
    is_linear,
    make_family,
    power,
    structure_class,
    to_json,
    to_text,
    zagreb,
)
from .enumerate import FamilyQuery, enumerate_family, filter_binary, hypertrees, unicyclic
from .moments import (
    MomentSequence,
    general_moment,
    matrix_oracle,
    moment_sequence,
    omega_cycle,
    tree_moment,
    unicyclic_s2m,
    unicyclic_s3m,
)
from .order import OrderOutcome, Relation, s_compare, sort_family
from .transform import TransformError, apply, find_sites, path_shift, reduce_to_extremal

__version__ = "0.1.0"

__all__ = [
    "CanonicalKey",
    "FamilyQuery",
    "FamilySpec",
    "Hypergraph",
    "HypergraphError",
    "MomentSequence",
    "OrderOutcome",
    "Pattern",
    "Relation",
    "TransformError",
    "apply",
    "build",
    "canonical_form",
    "canonical_key",
    "census",
    "coalesce",
    "count_pattern",
    "degrees",
    "distance",
    "enumerate_family",
    "family_e",
    "family_f",
    "filter_binary",
    "find_sites",
    "from_json",
    "from_text",
    "general_moment",
    "girth",
    "hypercycle",
    "hyperpath",
    "hyperstar",
    "hypertrees",
    "is_linear",
    "isomorphic",
    "make_family",
    "matrix_oracle",
    "moment_sequence",
    "omega_cycle",
    "path_shift",
    "power",
    "reduce_to_extremal",
    "s_compare",
    "sort_family",
    "structure_class",
    "to_json",
    "to_text",
    "tree_moment",
    "unicyclic",
    "unicyclic_s2m",
    "unicyclic_s3m",
    "zagreb",
]
