"""circorder: exact computation with circular orderings on groups.

Finite groups are multiplication tables with the identity at index 0;
circular orderings come in arrangement, inhomogeneous-cocycle, and
homogeneous-cocycle forms; central extensions, integral second cohomology
(via Smith normal form), obstruction spectra, and the Promislow group round
out the toolkit.  Everything is integer-exact.
"""

from .errors import AxiomError, BoundExceeded, InvalidGroupError
from .groups import (FiniteGroup, GroupHom, all_subgroups, closure,
                     cyclic_group, dihedral_group, direct_product,
                     dump_group, find_isomorphism, group_from_json,
                     group_to_json, is_normal, is_subgroup, load_group,
                     quotient, subgroup_generated, symmetric_group,
                     trivial_group)
from .orders import (Arrangement, HomCircularOrder, InhomCircularOrder,
                     LeftOrderOracle, arrangement_from_sequence,
                     arrangement_to_hom, arrangement_to_inhom,
                     enumerate_circular_orders, hom_to_arrangement,
                     hom_to_inhom, inhom_to_hom, left_order_from_cone,
                     lexicographic_circular_order, lexicographic_order_finite,
                     ordering_from_json, ordering_to_json, standard_order_zn,
                     validate_hom, validate_inhom)
from .extensions import (CentralExtElement, CentralExtensionGroup,
                         NormalizedSection, build_extension, cone_compare,
                         cone_positive, extension_from_json,
                         extension_to_json, hat_ordering, is_cofinal_central,
                         minimal_generator, quotient_by_cyclic_central,
                         quotient_by_power)
from .cohomology import (CohomologyClass, H2Structure, IntMatrix, SNFResult,
                         class_of, coboundary_matrices, h2_structure,
                         is_n_divisible, is_trivial_mod_n, kernel_basis,
                         smith_normal_form, solve_int)
from .obstruction import (MAPPING_CLASS_GROUP_SPECTRUM, ObstructionSpectrum,
                          TorsionProfile, bico_product_decision,
                          cyclic_quotient_stats, exponent_facts,
                          iterated_nonco_bound, spectrum_finite,
                          spectrum_membership, spectrum_torsion_part)
from .promislow import (GEN_A, GEN_B, IDENTITY, PROMISLOW_SPECTRUM,
                        PromElement, abelianization_image, ball,
                        evaluate_word, kernel_is_positive, phi,
                        prom_inv, prom_mul, promislow_circular_order)

__version__ = "0.1.0"
