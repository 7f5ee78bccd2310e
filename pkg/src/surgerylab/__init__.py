"""Dehn surgery arithmetic, exceptional-surgery gates and changemaker
lattice enumeration for lens space surgeries."""

__version__ = "0.1.0"

from .slopes import (  # noqa: E402
    DegeneracyLocus,
    LensRelation,
    LensSpace,
    Slope,
    delta_distance,
    lens_equiv,
    neg_cf_eval,
    neg_cf_expand,
    reduce_locus,
)
from .lattices import (  # noqa: E402
    GramLattice,
    complement_basis,
    enumerate_changemakers,
    is_changemaker_bruteforce,
    is_changemaker_fast,
    lattice_isomorphic,
    linear_plumbing_gram,
    short_vectors,
)
from .invariants import (  # noqa: E402
    LaurentPoly,
    TorsionCoeffs,
    TorusKnot,
    alexander_from_torsion,
    cable_genus,
    genus_from_changemaker,
    torsion_from_alexander,
    torsion_from_changemaker,
    torus_alexander,
    torus_genus,
)
from .surgery import (  # noqa: E402
    MonodromyClass,
    classify_torus_surgery,
    exceptional_gate,
    characterizing_gate,
    satellite_slope_transfer,
    spherical_type,
)
from .realize import general_realization, lens_realization_candidates  # noqa: E402
