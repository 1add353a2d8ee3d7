"""Exact matrix realisation of sl(n+1) and regular decompositions."""
from .construct import (construct_k1k, construct_k1k_beta, construct_kk,
                        decomposition_key, equivalent_decompositions,
                        extend_partition_to_decomposition, extend_two_block,
                        finest_sources, kk_admissibility)
from .decomposition import (DecompositionType, RegularDecomposition, RegularSubalgebra,
                            Verdict, cartan_basis_of, decomposition_type, direct_sum_defect,
                            is_regular_decomposition, is_subalgebra, move_root,
                            subalgebra_witness, verify_by_roots)
from .matrix import (H, RatMatrix, bracket, cartan_coeffs, cartan_element, entry_root_map,
                     h_alpha_coeffs, root_entry_map, root_vector, sl_basis)

__all__ = [
    "construct_k1k", "construct_k1k_beta", "construct_kk", "decomposition_key",
    "equivalent_decompositions", "extend_partition_to_decomposition", "extend_two_block",
    "finest_sources", "kk_admissibility",
    "DecompositionType", "RegularDecomposition", "RegularSubalgebra", "Verdict",
    "cartan_basis_of", "decomposition_type", "direct_sum_defect", "is_regular_decomposition",
    "is_subalgebra", "move_root", "subalgebra_witness", "verify_by_roots",
    "H", "RatMatrix", "bracket", "cartan_coeffs", "cartan_element", "entry_root_map",
    "h_alpha_coeffs", "root_entry_map", "root_vector", "sl_basis",
]
