"""Property-style evidence: brute force on cyclic groups and sharpness probes.

Two of the library's claims are not single numbers but universally
quantified statements.  This script attacks them the way a skeptic would:

1. The discrete nonlinear convolution inequality
       sum_{x,y} |g(y-x) f(x) - g(x-y) f(y)|^p
           >= sum_y ||g(y)| - |g(-y)||^p * sum_x |f(x)|^p
   is tested on random complex vectors over random cyclic groups Z_m.

2. The sharp constant of the truncated-power difference inequality is
   approached by truncations of the critical power profile: the achieved
   fraction of the sharp constant must increase monotonically with the
   truncation window and never exceed 1.

Run:  python3 demos/discrete_and_probes.py
"""

from fracsharp import discrete_nsw_test, sharpness_probe

print("Discrete nonlinear inequality on random cyclic groups")
print("-" * 60)
for p in (1.0, 1.5, 2.0, 3.0):
    rep = discrete_nsw_test(None, p, 300, seed=7)
    w = rep.notes["worst_trial"]
    print(f"p={p}: worst margin {rep.margin:+.3e} "
          f"(m={w['m']}, lhs={w['lhs']:.4g}, rhs={w['rhs']:.4g}) "
          f"-> {'no violations' if rep.passed else 'VIOLATION'}")
print()

print("Sharpness probe: truncated critical powers (n=1, p=2, beta=0.3)")
print("-" * 60)
for entry in sharpness_probe("fs_thm8", "power_truncation", [1.0, 2.0, 4.0]):
    L = entry["config"]["L"]
    print(f"  window half-width L={L:g}: achieved fraction of the sharp "
          f"constant = {entry['ratio']:.4f}")
print("(monotone increase toward 1 from below: the constant is sharp but "
      "not attained)")
