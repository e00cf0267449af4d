"""A guided tour of the sharp-constant registry.

Every constant in the registry is a closed gamma/digamma expression.  The
interesting part is how they interlock: the spectral weighted-norm
constant, the difference-energy normalization, and the ground-state
remainder constant satisfy exact algebraic identities, which this script
evaluates numerically across dimensions.

Run:  python3 demos/sharp_constants_tour.py
"""

import math

from fracsharp import constant_ids, cval, eval_constant

print("registry:", ", ".join(constant_ids()))
print()

print("A few reference values")
print("-" * 60)
rec = eval_constant("pitt_C", n=3, alpha=2.0)
print(f"pitt_C(3, 2)      = {rec.value:.12f}   (= 16 pi^2 = "
      f"{16 * math.pi ** 2:.12f})")
print(f"nagy_B(1/2)       = {cval('nagy_B', s=0.5):.12f}   (= 4/pi^2 = "
      f"{4 / math.pi ** 2:.12f})")
print(f"logu_D(4)         = {cval('logu_D', n=4):.12f}   "
      f"(= psi(1) - ln pi)")
print()

print("Interlocking identities (relative error)")
print("-" * 60)
for n in (1, 2, 3, 5, 8):
    for alpha in (0.5, 1.0, 1.5):
        if alpha >= min(2.0, n):
            continue
        pitt = cval("pitt_C", n=n, alpha=alpha)
        as_d = cval("as_D", n=n, alpha=alpha)
        gsr = cval("gsr_D", n=n, alpha=alpha)
        stein = cval("stein_E", n=n, alpha=alpha)
        e1 = abs(gsr * as_d / pitt - 1.0)
        e2 = abs(stein / as_d / (4.0 - 2.0 ** alpha) - 1.0)
        print(f"n={n} alpha={alpha:3.1f}:  gsr*as = pitt to {e1:.1e},  "
              f"stein/as = 4-2^a to {e2:.1e}")
print()

print("The second-difference constant has a removable singularity at "
      "alpha = 2:")
for da in (1e-3, 1e-6, 1e-9, 0.0):
    alpha = 2.0 - da
    print(f"  stein_E(3, 2 - {da:g}) = {cval('stein_E', n=3, alpha=alpha):.12f}")
