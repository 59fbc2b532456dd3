"""Central elements of U(gl_N), U(so_N) and U(g2) from invariant polynomials.

An m-invariant polynomial in the entries of a generic matrix is turned into a
central element by substituting the generator matrix ``L`` and symmetrizing
the products; everything is exact rational arithmetic.
"""

from .central import (
    CentralElementReport, casimir, det_family, double_determinant, g2_det_check, g2_G, pfaffian_family,
)
from .invariants import (
    act, c_k_poly, det_poly, g_poly, is_invariant, pf_full_poly, pfaffian_poly, sum_pf_sq_poly, trace_poly,
)
from .lie_algebras import LieAlgebra, LieVector, build_L, make_algebra, make_g2, make_gl, make_so
from .mpoly import MPolynomial
from .octonions import Octonion, omega3, omega_skew, table_fingerprint
from .uea import (
    UEAElement, brute_force_normalize, commutator, equivariance_check, is_central, pbw_normalize,
    sym_product, symmetrize_poly,
)
from .verdict import Verdict

__version__ = "0.1.0"
