"""Compatibility three ways, incompatibility witnesses, and centers.

Two questions are compatible when they embed into a common Boolean (i.e.
distributive) sublattice.  On an orthomodular lattice that is equivalent to
the identity (a ^ b) v (~a ^ b) == b and to the existence of a mutually
orthogonal decomposition; this script evaluates all three on examples and
then computes the elements compatible with everything (the center).
"""

from orthologic import (
    catalog,
    center,
    check_incompatible_lemma,
    compatible_decomposition,
    compatible_via_definition,
    direct_product,
    incompatibility_witness,
    is_compatible,
    is_irreducible,
)

mo2 = catalog("MO2")
pairs = [("a", "a'"), ("a", "b"), ("a", "1")]
for left, right in pairs:
    i, j = mo2.index(left), mo2.index(right)
    routes = (
        compatible_via_definition(mo2, i, j),
        is_compatible(mo2, i, j),
        compatible_decomposition(mo2, i, j) is not None,
    )
    print(f"MO2 {left:2s} vs {right:2s}: definition={routes[0]} identity={routes[1]} decomposition={routes[2]}")

d = compatible_decomposition(mo2, mo2.index("a"), mo2.index("a'"))
print(
    "decomposition of (a, a'):",
    tuple(mo2.names[i] for i in (d.a_part, d.b_part, d.common)),
)
print()

# Eq-style incompatibility witness: the first element that splits q badly.
q = mo2.index("a")
w = incompatibility_witness(mo2, q)
print("first element incompatible with a:", mo2.names[w])
print("witness for the top:", incompatibility_witness(mo2, mo2.top))
print()

for name in ("B8", "MO2", "MO2xB2"):
    lat = catalog(name)
    report = center(lat)
    members = [lat.names[i] for i in report.members]
    print(f"center({name}) = {members}  trivial={report.is_trivial}  irreducible={is_irreducible(lat)}")
print()

# Upward propagation of incompatibility sounds plausible but is false:
# central elements (the top included) are compatible with everything yet
# sit above incompatible elements.
ok, witness = check_incompatible_lemma(mo2)
names = tuple(mo2.names[i] for i in witness)
print("does incompatibility propagate upward on MO2?", ok)
print("counterexample (a < b, a incompatible with c, b compatible with c):", names)

product = direct_product(catalog("MO2"), catalog("B2"))
ok, witness = check_incompatible_lemma(product)
print("on MO2xB2 the counterexample avoids the top entirely:",
      tuple(product.names[i] for i in witness))
