"""circforge: a workbench for circulant-based code constructions over
small finite fields, with exact structural verification."""

from .bounds import BoundQuery, entropy, entropy_inv, gv_targets
from .codes import (AdditiveCode, BudgetError, LinearCode, enumeration_budget,
                    index, interleave_blocks, is_additive_cyclic, is_cyclic,
                    is_extension_linear, is_quasi_cyclic, is_self_dual, shift,
                    split_blocks, weight)
from .constructions import (CirculantMatrix, circulant, double_circulant,
                            four_circulant, is_self_dual_dc, is_self_dual_fc,
                            module_code, one_generator_qc, random_qc,
                            search_dcsd, search_fcsd)
from .galois import (ExtensionTower, Field, FieldElement, extend, factorize,
                     field_create, field_from_parts, is_prime, is_square,
                     mult_order, prime_power)
from .kernels import BACKEND as kernel_backend
from .rings import (RingElement, artin_primes, factor_check, is_artin_pair,
                    monomial, reciprocal, ring_element, ring_mul, ring_one,
                    ring_zero)
from .transforms import (IndexMap, PipelineReport, StructuralViolation, TwoDCode,
                         antipodal_double, crt_map, flatten, is_ideal_2d,
                         lift_scalars, merge_pairs, pipeline_ell2,
                         pipeline_p1mod4, pipeline_p3mod4, to_additive,
                         to_grid)

__version__ = "0.1.0"

__all__ = [
    "AdditiveCode", "BoundQuery", "BudgetError", "CirculantMatrix",
    "ExtensionTower", "Field", "FieldElement", "IndexMap", "LinearCode",
    "PipelineReport", "RingElement", "StructuralViolation", "TwoDCode",
    "antipodal_double", "artin_primes", "circulant", "crt_map",
    "double_circulant", "entropy", "entropy_inv", "enumeration_budget",
    "extend", "factor_check", "factorize", "field_create", "field_from_parts",
    "flatten", "four_circulant", "gv_targets", "index", "interleave_blocks",
    "is_additive_cyclic", "is_artin_pair", "is_cyclic", "is_extension_linear",
    "is_ideal_2d", "is_prime", "is_quasi_cyclic", "is_self_dual",
    "is_self_dual_dc", "is_self_dual_fc", "is_square", "kernel_backend",
    "lift_scalars", "merge_pairs", "module_code", "monomial", "mult_order",
    "one_generator_qc", "pipeline_ell2", "pipeline_p1mod4", "pipeline_p3mod4",
    "prime_power", "random_qc", "reciprocal", "ring_element", "ring_mul",
    "ring_one", "ring_zero", "search_dcsd", "search_fcsd", "shift",
    "split_blocks", "to_additive", "to_grid", "weight",
]
