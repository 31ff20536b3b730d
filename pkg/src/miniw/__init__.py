"""Exact-arithmetic BRST reduction for minimal W-(super)algebras.

Everything is computed over the rationals on finite truncation windows:
the ghost complex and its differential, windowed cohomology with
stabilization flags, and graded characters of the reduced modules, for
the four built-in algebras sl2, sl3, spo21 and sl21.
"""

from .algebra import build_algebra, dual_coxeter, superdimension
from .brst import (chain_window, cohomology_dims, complex_basis,
                   differential, j_current, verify_nilpotency)
from .errors import (CriticalLevelError, MiniWError, NilpotencyError,
                     NotStabilizedError, WindowOverflowError,
                     WindowTooSmallError)
from .verma import (TruncationWindow, char_module, gram_rank,
                    sl2_f_homology, verma_basis, zero_mode_cohomology)
from .wchar import (central_charge, phi_map, s0_eigenvalue_check,
                    series_total, simple_w_character, w_verma_character)
from .weights import (alpha0_pairing, casimir_eigenvalue, make_weight,
                      parse_weight_spec, project_xi)

__version__ = "0.1.0"

__all__ = [
    "build_algebra", "dual_coxeter", "superdimension",
    "chain_window", "cohomology_dims", "complex_basis", "differential",
    "j_current", "verify_nilpotency",
    "CriticalLevelError", "MiniWError", "NilpotencyError",
    "NotStabilizedError", "WindowOverflowError", "WindowTooSmallError",
    "TruncationWindow", "char_module", "gram_rank", "sl2_f_homology",
    "verma_basis", "zero_mode_cohomology",
    "central_charge", "phi_map", "s0_eigenvalue_check", "series_total",
    "simple_w_character", "w_verma_character",
    "alpha0_pairing", "casimir_eigenvalue", "make_weight",
    "parse_weight_spec", "project_xi",
    "__version__",
]
