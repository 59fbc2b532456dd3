"""Higher-order central elements of U(g2).

G(rows, cols) contracts products of L with omega tensors.  Order 3 gives
zero (g2 has no cubic Casimir), order 4 is a polynomial in the quadratic
Casimir, and the order-7 polynomial is a multiple of the determinant.

Run: python3 demos/03_g2_higher_orders.py
"""

import warnings

from invcentral.central import casimir, g2_det_check, g2_G
from invcentral.lie_algebras import make_g2

g2 = make_g2()
c = casimir(g2)
print(f"Casimir: {len(c.element)} terms, central={c.centrality.ok}")

for rows, cols in (([3], [3]), ([4], [4]), ([2, 2], [2, 2])):
    rep = g2_G(rows, cols)
    print(f"G({rows},{cols}): terms={len(rep.element)} central={rep.centrality.ok} "
          f"in span(1, C, C^2): {rep.metadata['casimir_coordinates']}")

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    print("G([5],[5]) is zero:", g2_G([5], [5]).element.is_zero())

v = g2_det_check()
print("G([7],[7]) = c * det M with c =", v.details["constant"])
print("det M is g2-invariant:", v.details["det_invariant"])
print("det of a 7x7 skew matrix vanishes:", v.details["skew_det_vanishes"])
