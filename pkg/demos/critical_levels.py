"""How the critical level alpha* moves with the sample size.

For the gamma scale family with known shape ``a`` the normalized sums for
samples of size n and n + 1 are Gamma(na) and Gamma((n+1)a) laws with mean
one.  Their CDFs cross once, at x*, and alpha* = F(x*) is the level at which
the order of their quantiles flips.
"""

import math

from monoci.crossing import gamma_scale_crossing, normal_variance_crossing

# %% The reference pair: one exponential observation against an Erlang-2 mean.
rep = gamma_scale_crossing(1, 1.0)
print("Gamma(1,1) vs Gamma(2,1/2)")
print("  density crossings c1=%.6f c2=%.6f" % (rep.c1, rep.c2))
print("  CDF crossing x*=%.10f  alpha*=%.10f" % (rep.x_star, rep.alpha_star))
# x* solves e^x = 1 + 2x, which is easy to confirm by hand
print("  check e^x - 1 - 2x at x*: %.2e" % (math.exp(rep.x_star) - 1 - 2 * rep.x_star))

# %% alpha* over n for three shapes.  It falls toward 1/2 as n grows, so the
# two-sided level bound 2 min(alpha*, 1 - alpha*) climbs toward 1.
print("\n   n   a=0.5     a=1       a=2       level bound (a=1)")
for n in (1, 2, 3, 5, 10, 20, 50):
    reps = [gamma_scale_crossing(n, a) for a in (0.5, 1.0, 2.0)]
    print("%4d   %.6f  %.6f  %.6f  %.6f" % ((n,) + tuple(r.alpha_star for r in reps)
                                          + (reps[1].level_bound,)))

# %% The normal variance interval uses chi-square laws, i.e. shape (n-1)/2.
print("\n   n   alpha* (normal variance)")
for n in (2, 3, 5, 10, 20, 50):
    print("%4d   %.6f" % (n, normal_variance_crossing(n).alpha_star))
