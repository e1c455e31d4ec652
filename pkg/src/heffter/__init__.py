"""Tight globally simple non-zero sum Heffter arrays, their decompositions and embeddings."""
from .constructions import NzsArray, closed_form_sums, construct, supported_t
from .decomposition import (check_orthogonal, check_partition, circuit_closure, circuits,
                            col_decomposition, row_decomposition)
from .embedding import embed, predicted_spectrum, predicted_spectrum_check
from .modcore import AnchoredSequence, ModulusContext, UnsupportedParameters, is_simple, partial_sums
from .verifier import (DirectedCyclicOrdering, NotFound, check_axioms, check_globally_simple,
                       find_compatible_orderings)

__all__ = [
    "AnchoredSequence", "DirectedCyclicOrdering", "ModulusContext", "NotFound", "NzsArray",
    "UnsupportedParameters", "check_axioms", "check_globally_simple", "check_orthogonal",
    "check_partition", "circuit_closure", "circuits", "closed_form_sums", "col_decomposition",
    "construct", "embed", "find_compatible_orderings", "is_simple", "partial_sums",
    "predicted_spectrum", "predicted_spectrum_check", "row_decomposition", "supported_t",
]
