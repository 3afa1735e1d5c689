"""Quantile-inversion intervals in natural exponential families.

For a continuous generator the order-alpha quantile delta(n, alpha, theta)
of the sum T_n is monotone in theta, so inverting it at alpha/2 and
1 - alpha/2 gives a level 1 - alpha interval.  Whether its mean length falls
with n for every generator is open; this only gathers evidence.
"""

from monoci.mc import simulate_nef
from monoci.nef import exponential, gaussian, invert_delta, mean_length_scan, nef_interval

# %% Closed-form and bracketed inverses agree.
model = exponential()
for t in (0.5, 2.0, 10.0):
    closed = invert_delta(model, 3, 0.95, t)
    numeric = invert_delta(model, 3, 0.95, t, closed_form=False)
    print("t=%5.1f  closed=%.12f  numeric=%.12f" % (t, closed, numeric))

print("\nexponential interval, n=1, alpha=0.1, t=2:", nef_interval(model, 1, 0.1, 2.0))

# %% Coverage at theta = 0.5.
rep = simulate_nef(model, 0.5, 5, 0.1, 100_000, seed=7)
print("coverage at theta=0.5, n=5: %.5f (z = %.2f)" % (rep.coverage_hat, rep.coverage_z(0.9)))

# %% Mean length against n, simulated and exact.
for m, theta in ((gaussian(), 0.0), (exponential(), 0.0)):
    curve = mean_length_scan(m, theta, 0.05, 2, 10, 20_000, seed=11)
    print("\n%s: closed form decreasing=%s  simulated decreasing=%s"
          % (m.name, curve.closed_form_decreasing, curve.empirically_decreasing))
    for r in curve.records:
        print("  n=%2d  simulated=%.5f +- %.5f  exact=%.5f"
              % (r.n, r.mean_length, r.se, r.closed_form))
