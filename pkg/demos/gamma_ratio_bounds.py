"""The gamma ratio sandwich sqrt(x + 1/4) < G(x+1)/G(x+1/2) < sqrt(x + 1/2).

The Student interval's mean length carries the factor
E_n = G(n/2) / (G((n-1)/2) sqrt(n (n-1))); the sandwich shows it decreases.
"""

import math

from monoci.bounds import e_n, e_n_bound_comparison, gamma_ratio, lemma2_check

# %% The sandwich is tight: the relative gap on the lower side shrinks like x^-2.
print("      x     ratio            lower gap      upper gap")
for x in (0.5, 1.0, 10.0, 100.0, 1e4):
    c = lemma2_check(x)
    print("%8g  %.12f  %.3e  %.3e" % (x, c.ratio, c.lower_margin / c.ratio,
                                       c.upper_margin / c.ratio))

# %% E_2, E_3 and E_4 in closed form.
print("\nE_2 = %.12f  (1/sqrt(2 pi)     = %.12f)" % (e_n(2), 1 / math.sqrt(2 * math.pi)))
print("E_3 = %.12f  (sqrt(pi)/(2 sqrt 6) = %.12f)" % (e_n(3), math.sqrt(math.pi) / (2 * math.sqrt(6))))
print("E_4 = %.12f  (1/sqrt(3 pi)     = %.12f)" % (e_n(4), 1 / math.sqrt(3 * math.pi)))

# %% The bounds on E_n and E_{n+1} separate from n = 4 onward; E_n * sqrt(2n) -> 1.
for n in (2, 3, 4, 5, 100):
    c = e_n_bound_comparison(n)
    print("n=%3d  lower(E_n)=%.6f  upper(E_n+1)=%.6f  separated=%s"
          % (n, c.lower_bound_En, c.upper_bound_En1, c.separated))
print("E_n sqrt(2n) at n = 1e6: %.8f" % (e_n(10 ** 6) * math.sqrt(2e6)))
print("G(x+1)/G(x+1/2) at x = 2: %.12f" % gamma_ratio(2.0))
