"""
Sufficient conditions against a grid oracle
===========================================

A criterion either establishes a property or says nothing.  The grid oracle
samples the disk and looks for a counterexample.  Below, the criteria and
the oracle are run side by side for a few confluent functions.
"""

from wrightfn import Family, family_preset
from wrightfn.sweeps import format_table, verify_report

rows = []
for b in (1.2, 2.0, 2.5, 3.0, 3.7):
    for rep in family_preset(Family.CONFLUENT, b=b):
        if rep.theorem_id not in ("threshold_starlike", "kt4_starlike_half", "threshold_sp"):
            continue
        chk = verify_report(rep, Family.CONFLUENT, b=b)[0]
        rows.append([f"{b:g}", rep.theorem_id, rep.verdict.value, rep.conclusion.label,
                     f"{chk.margin:+.4f}", chk.verdict.value])
print(format_table(["b", "criterion", "verdict", "property", "oracle margin", "oracle"], rows))

# Note: NotEstablished says nothing either way.  At b = 2 the oracle finds no
# violation of starlikeness even though phi(1) = 5/2 is not reached, while at
# b = 1.2 it finds a real one.  Every Established row has a positive margin.
