"""Pfaffian and determinant identities on symbolic matrices.

Run: python3 demos/04_pfaffian_relations.py
"""

from invcentral.relations import charpoly_pfaffian_identity, relation_1, relation_2, relation_3, relation_4

print("(Pf M)^2 = det M, N = 4:", bool(relation_1(4)))
print("2x2 polarization of det:", bool(relation_2()))

v = relation_3()
print("Pf(M + M') polarization:", bool(v))
print("  three-term form misses:", v.details["printed_residual"])

for k, n in ((3, 4), (5, 4), (3, 2), (3, 6)):
    r = relation_4(k, n)
    print(f"Pf(M^{k}) / (Pf M)^{k} for N={n}: {r.details['ratio']}")

for n in (2, 4, 6):
    print(f"det(lam - M) = sum lam^(N-2k) sum (Pf M_I)^2, N={n}:", bool(charpoly_pfaffian_identity(n)))
