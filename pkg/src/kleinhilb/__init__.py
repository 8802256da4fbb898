"""Exact-arithmetic toolkit for framed McKay quivers, their stability
fan, corner modules over Kleinian singularities, and the integer
dimension-vector verifier."""

from .corner import (CornerModuleQ0, NonSplitSpectrumError, check_relations,
                     conjugate, corner_direct_sum, corner_from_monoid_staircase,
                     corner_ideal, corner_restriction, hilbert_chow,
                     is_corner_stable, wstar_vanishes)
from .linalg import (RMatrix, ShapeError, Subspace, closure_under,
                     kernel_basis, rank, rref)
from .mckay import (INF, DimensionVector, DynkinType, FramedMcKayQuiver,
                    HypersurfaceData, build_framed_quiver, dimension_vector,
                    hypersurface)
from .reps import (QuiverRepresentation, direct_sum, is_cyclic_at_infinity,
                   moment_residual, satisfies_relations, submodule_generated,
                   vertex_simple, vertex_stability_probe)
from .stability import (FaceLocation, FacePoset, StabilityParameter, classify,
                        corner_parameter, face_parameter, face_poset,
                        n1_edge_collapses)
from .staircase import (MonoidStaircase, Staircase, enumerate_monoid_staircases,
                        enumerate_regular_fixed_points, enumerate_staircases,
                        euler_characteristic_series, intersect_with_invariants,
                        rep_from_ideal, weight_profile)
from .verifier import (ConstraintSystem, UnboundedSystemError,
                       VerificationReport, build_system, integer_enumerate,
                       lp_max, verify_all, verify_bound)

__version__ = "0.1.0"
