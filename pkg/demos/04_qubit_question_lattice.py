"""From projectors to a question lattice and back, via probabilities alone.

Closing the qubit Z and X eigenprojectors under complement, intersection,
and span gives a six-element lattice shaped exactly like MO2.  Sequence
probabilities under projective (Luders) updates then let us measure the
disturbance incompatible questions cause, and even reconstruct the order
and the complement without ever looking at the matrices.
"""

import numpy as np

from orthologic import (
    born_state,
    catalog,
    detectability,
    infer_complement,
    infer_order,
    is_order_isomorphic,
    isolated_check,
    ket_projector,
    maximally_mixed,
    qubit_zx_lattice,
    sequence_probability,
)

pl = qubit_zx_lattice()
print("closure of {Z0, Z1, X+, X-}:", pl.lattice.names)
print("order-isomorphic to MO2:", is_order_isomorphic(pl.lattice, catalog("MO2")))
print()

# Born values form a lattice state; the maximally mixed preparation sits at
# 1/2 on every nontrivial question.
mu = born_state(pl, maximally_mixed(2))
print("born state of I/2:", {k: str(v) for k, v in mu.as_mapping(pl.lattice).items()})
print()

# Probabilities of answer sequences: ask Z, then X, then Z again.
rho = ket_projector([1, 0])  # prepared answering Z0 with certainty
z0, x_plus = pl.index("Z0"), pl.index("X+")
print("P(Z0=t)              =", sequence_probability(pl, rho, [(z0, "t")]))
print("P(Z0=t, X+=t, Z0=t)  =", sequence_probability(pl, rho, [(z0, "t"), (x_plus, "t"), (z0, "t")]))
print()

# Isolation test: two Z0 inquiries agree unless an incompatible inquiry
# happens in between, and that disturbance is detectable.
print("agreement, nothing in between:   ", isolated_check(pl, rho, z0))
print("agreement, X+ inquired between:  ", isolated_check(pl, rho, z0, x_plus))
print("agreement, Z1 inquired between:  ", isolated_check(pl, rho, z0, pl.index("Z1")))
print("detectability of X+ via Z0 probes:", detectability(pl, z0, x_plus))
print()

# Reconstruction: conditional certainty and sandwich stability recover the
# subspace order; the two complement clauses pin down I - P uniquely.
print("inferred order equals subspace inclusion:",
      np.array_equal(infer_order(pl), pl.lattice.leq))
print("inferred complement of X+:", pl.lattice.names[infer_complement(pl, x_plus)])
