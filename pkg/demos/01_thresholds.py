"""
Closed-form thresholds and where they come from
===============================================

Each threshold criterion compares ``b`` with a closed-form function of ``a``.
Here we print those functions, check them against a root finder, and show
how a sweep in ``b`` recovers them by bisection.
"""

import math

from scipy.optimize import brentq

from wrightfn import Family, SweepSpec, boundary_bisect
from wrightfn.criteria import phi, phi1, psi1, psi_eta, tau
from wrightfn.sweeps import format_table

# The starlikeness threshold phi(a) is where the modulus bound
# ((a+1)(b+1) + a) / (ab(a+b+ab) - (a+1)(b+1)) drops to 1.
def star_bound(a, b):
    return ((a + 1) * (b + 1) + a) - (a * b * (a + b + a * b) - (a + 1) * (b + 1))


rows = []
for a in (1.0, 1.5, 2.0, 5.0):
    root = brentq(lambda b: star_bound(a, b), 1e-9, 1e3)
    rows.append([f"{a:g}", f"{phi(a):.10f}", f"{root:.10f}", f"{tau(a):.6f}",
                 f"{phi1(a):.6f}", f"{psi1(a):.6f}"])
print(format_table(["a", "phi(a)", "root of bound", "tau", "phi1", "psi1"], rows))

# Starlikeness of order eta interpolates: eta = 0 is phi, eta = 1/2 is tau.
print()
for eta in (0.0, 0.25, 0.5, 0.75):
    print(f"psi(1, {eta}) = {psi_eta(1.0, eta)[0]:.6f}")

# For the confluent family (mu = nu = a = 1) a sweep in b finds the same
# boundaries by bisection.
print()
for cid, exact in (("threshold_starlike", phi(1)), ("threshold_sp", tau(1)),
                   ("threshold_th4_i", phi1(1)), ("threshold_convex_i", psi1(1))):
    spec = SweepSpec(Family.CONFLUENT, "b", 1.0, 5.0, 2, criteria=(cid,))
    b = boundary_bisect(cid, spec, (1.0, 5.0))
    print(f"{cid:20s} bisected {b:.7f}   closed form {exact:.7f}")

# Note: phi(1) = 5/2.  A stated value of 5/4 for the confluent starlike
# threshold cannot be reached by any criterion here.
print(f"\nphi(1) = {phi(1)}, sqrt(3) = {math.sqrt(3):.6f}")
