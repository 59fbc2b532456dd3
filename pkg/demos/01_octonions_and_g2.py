"""Octonions, the omega tensors and g2 as derivations.

Run: python3 demos/01_octonions_and_g2.py
"""

from invcentral.lie_algebras import build_L, make_g2
from invcentral.octonions import Octonion, associator, fano_triples, omega3, omega_skew, table_fingerprint

e = Octonion.unit

print("oriented Fano lines:", fano_triples())
print("table fingerprint:", table_fingerprint())

# not associative, but alternative
print("(e1 e2) e4 - e1 (e2 e4) =", associator(e(1), e(2), e(4)))
print("(e1 e1) e4 - e1 (e1 e4) =", associator(e(1), e(1), e(4)))

# omega_k: antisymmetrized real part of iterated products
for k in range(3, 8):
    w = omega_skew(k)
    print(f"omega_{k}: {len(w.nonzero())} nonzero entries")
print("omega_3 entries (structure constants):", len(omega3().nonzero()))

g2 = make_g2()
print(g2, "basis:", " ".join(g2.basis_labels))

# the 21 generators G_ij obey 7 extra linear relations
L = build_L(g2)
for desc, residual in L.relation_residuals()[-7:]:
    print(f"  {desc}: {'holds' if residual.is_zero() else 'FAILS'}")
