"""Tour of the built-in lattices and the structural property scanner.

The catalog holds the small lattices every check in this package is
exercised against: Boolean cubes B2/B4/B8, the "Chinese lantern" lattices
MO2/MO3 (orthomodular but not distributive), the benzene ring O6 (the
canonical failure of orthomodularity), and the product MO2xB2.
"""

from orthologic import CATALOG_NAMES, catalog, classify, parse_lattice, serialize_lattice

print("catalog:", ", ".join(CATALOG_NAMES))
print()

for name in CATALOG_NAMES:
    lat = catalog(name)
    report = classify(lat)
    flags = ", ".join(
        label
        for label, value in [
            ("lattice", report.is_lattice),
            ("bounded", report.is_bounded),
            ("orthocomplemented", report.is_orthocomplemented),
            ("orthomodular", report.is_orthomodular),
            ("distributive", report.is_distributive),
        ]
        if value
    )
    print(f"{name:7s} n={lat.n:2d}  {flags}")
    for prop, elems in report.witnesses:
        pretty = ", ".join(lat.names[i] for i in elems)
        print(f"        {prop} fails at ({pretty})")
print()

# O6 is where orthomodularity breaks: a < b but a v (~a ^ b) collapses to a.
o6 = catalog("O6")
a, b = o6.index("a"), o6.index("b")
lifted = o6.join[a, o6.meet[o6.oc(a), b]]
print("O6 check: a v (~a ^ b) =", o6.names[lifted], "(should be b for an OML)")
print()

# Lattices round-trip through a plain text document format.
doc = serialize_lattice(catalog("MO2"))
print("MO2 as a document:")
print(doc)
reparsed = parse_lattice(doc)
print("reparsed element names:", reparsed.names)
