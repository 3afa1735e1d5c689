"""Monte Carlo check of coverage and mean length against the exact values."""

from monoci import CiFamily, McConfig, coverage_curve, simulate

SEED = 123
REPS = 100_000

# %% One run per family at n = 5 and a 90% level.  The z scores measure the
# distance from the nominal coverage and the analytic length in standard errors.
print("family            coverage  z_cov   mean length  analytic   z_len")
for fam in (CiFamily.gamma_scale(2.0), CiFamily.normal_variance(), CiFamily.normal_mean(),
            CiFamily.pareto(2.0), CiFamily.uniform_scale()):
    rep = simulate(McConfig(fam, 5, 0.1, REPS, seed=SEED), workers=4)
    exact = fam.mean_length(5, 0.1)
    print("%-16s  %.5f  %6.2f   %9.5f  %9.5f  %6.2f"
          % (fam.name, rep.coverage_hat, rep.coverage_z(0.9), rep.mean_length_hat, exact,
             rep.length_z(exact)))

# %% Results are identical across worker counts because each 10^4 block owns
# its own stream, keyed by (seed, n, block index).
cfg = McConfig(CiFamily.uniform_scale(), 5, 0.1, REPS, seed=SEED)
print("\nworkers=1 equals workers=4:", simulate(cfg) == simulate(cfg, workers=4))

# %% Coverage stays at the nominal level for every n while the length shrinks.
fam = CiFamily.gamma_scale(1.0)
for n, rep in zip(range(1, 7), coverage_curve(fam, 0.05, list(range(1, 7)), REPS, seed=SEED)):
    print("n=%d  coverage=%.4f  mean length=%.4f (exact %.4f)"
          % (n, rep.coverage_hat, rep.mean_length_hat, fam.mean_length(n, 0.05)))
