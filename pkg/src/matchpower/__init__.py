"""Matching powers of edge ideals: exact homological invariants and

verification sweeps for the closed-form results about paths, cycles,
whiskered cycles, and whiskered forests."""

from ._kernels import backend_name
from .errors import (CapExceededError, ConsistencyCheckError,
                     EdgeListParseError, InvalidParameterError,
                     MatchPowerError)
from .graphs import (AdmissibleWitness, Graph, Matching,
                     admissible_matching_number, check_admissible_witness,
                     cycle, delete_vertices, enumerate_k_matchings,
                     from_descriptor, from_edges, induced_matching_number,
                     matching_number, multi_whiskered_cycle,
                     multi_whiskered_path, parse_edge_list, path, whisker)
from .ideals import (SqfIdeal, SqfMonomial, add, colon, edge_ideal, equals,
                     make_ideal, minimalize, sqf_power, unit_ideal,
                     zero_ideal)
from .simplicial import (DEFAULT_FIELD, RATIONAL_FIELD, FieldSpec,
                         HomologyProfile, SimplicialComplex,
                         complement_complex, complex_from_facets, exact_rank,
                         facet_complex, induced_subcomplex, reduced_homology,
                         stanley_reisner_complex)
from .homalg import (BettiTable, InvariantBundle, betti_facet_formula,
                     betti_hochster, betti_table, betti_taylor_oracle,
                     depth_quotient, has_linear_resolution, invariant_bundle,
                     is_cohen_macaulay, krull_dim_quotient, pd_quotient,
                     regularity)
from .formulas import (PredictionResult, predict_cm, predict_depth,
                       predict_linear_resolution, predict_regularity)

__version__ = "0.1.0"
