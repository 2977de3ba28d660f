"""A friend measures a qubit; we treat friend plus qubit as one system.

The coupling is a pointer CNOT: the friend's memory flips exactly when the
measured question holds.  Carried across the interaction, the measured
class m sits below the plain joint question (a, 1), an incompatible probe
class n certifies that the interaction happened, and the punchline is
quantitative: reading the record first drops the certification probability
from 1 to 1/2.
"""

from orthologic import (
    class_m,
    class_n,
    cnot_scenario,
    identity_scenario,
    swap_scenario,
    tradeoff,
    verify_class_relations,
    verify_cross_implication,
)

for label, scenario in [
    ("cnot", cnot_scenario()),
    ("identity", identity_scenario()),
    ("swap", swap_scenario()),
]:
    print(f"{label:9s} cross-implication: {verify_cross_implication(scenario)}")
print()

scenario = cnot_scenario()
report = verify_class_relations(scenario)
print("m <= (a,1):", report.m_below_full_question)
print("||[n, (a,1)]|| =", round(report.n_full_commutator, 6))
print("||[n, m]||     =", round(report.n_m_commutator, 6))
print("n incompatible with (a,1) and with m:",
      report.n_incompatible_with_full and report.n_incompatible_with_m)
print()

# m is the entangled "measured and recorded" class; n the superposed probe.
print("rank of m:", int(round(class_m(scenario).trace().real)))
print("rank of n:", int(round(class_n(scenario).trace().real)))
print()

detect_only, know_then_detect = tradeoff(scenario)
print("certify isolation, nothing else asked:  ", round(detect_only, 9))
print("certify isolation after reading (a,1):  ", round(know_then_detect, 9))
print()
print("asking the joint measured question first destroys the certainty of")
print("the interaction test: knowing the result and certifying the")
print("interaction exclude each other.")
