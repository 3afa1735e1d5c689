"""Mean interval length against sample size for the five classical families."""

from monoci import CiFamily, monotonicity_scan
from monoci.cilength import one_sided_lower_mean, one_sided_upper_mean

families = [
    CiFamily.gamma_scale(1.0),
    CiFamily.normal_variance(),
    CiFamily.normal_mean(),
    CiFamily.pareto(2.0),
    CiFamily.uniform_scale(),
]

# %% A 95% interval for each family, n from the first finite length up to 12.
for fam in families:
    curve = monotonicity_scan(fam, 0.05, fam.n_min, 12)
    cells = " ".join("%.4g" % r.length for r in curve.records)
    print("%-16s n=%d..12  decreasing=%s" % (fam.name, fam.n_min, curve.monotone_decreasing))
    print("    " + cells)

# %% Where alpha* applies, the table also flags whether alpha sits below it.
curve = monotonicity_scan(CiFamily.gamma_scale(1.0), 0.7, 1, 5)
print("\ngamma scale at alpha = 0.7")
for r in curve.records:
    print("  n=%d  L_n=%.5f  alpha*=%.5f  below=%s"
          % (r.n, r.length, r.alpha_star, r.below_alpha_star))

# %% One-sided bounds behave differently.  The lower bound's mean rises with n
# only while 1 - alpha exceeds alpha*, so alpha = 0.3 already breaks it at n = 1.
print("\none-sided means, a = 1, alpha = 0.3")
for n in (1, 2, 3):
    print("  n=%d  lower=%.5f  upper=%.5f"
          % (n, one_sided_lower_mean(n, 1.0, 0.3), one_sided_upper_mean(n, 1.0, 0.3)))
