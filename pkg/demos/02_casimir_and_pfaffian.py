"""Central elements of U(so_N) and U(gl_N) from invariant polynomials.

An invariant polynomial in the entries of a generic matrix M becomes a central
element once M is replaced by the generator matrix L and every product is
symmetrized.  The check below commutes the result with every basis element.

Run: python3 demos/02_casimir_and_pfaffian.py
"""

from invcentral.central import casimir, det_family, pf_square_constant, pfaffian_family
from invcentral.invariants import is_invariant, pf_full_poly
from invcentral.lie_algebras import make_gl, make_so

so4 = make_so(4)
print("Pf M invariant under so_4 (skew pattern):", bool(is_invariant(so4, pf_full_poly(4), skew=True)))

for rep in (casimir(make_so(3)), pfaffian_family(so4, full=True), pfaffian_family(make_so(5), k=2),
            det_family(make_gl(2), 2), det_family(make_gl(3), 3)):
    alg = rep.element.algebra.name
    print(f"{rep.family:7s} {alg:4s} terms={len(rep.element):3d} central={rep.centrality.ok}")

print("Pf L over so_4:", pfaffian_family(so4, full=True).element)
print("gl_2 determinant:", det_family(make_gl(2), 2).element)

# symmetrized (Pf L)^2 equals symmetrized Det L, while the honest U(g) square differs
res = pf_square_constant(4)
print("sym((Pf L)^2) / sym(Det L) =", res["ratio"])
print("(sym Pf L)^2 - sym(Det L) =", res["product_square_difference"])
