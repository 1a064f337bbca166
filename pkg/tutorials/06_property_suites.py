"""Running the randomized exact property suites from Python."""
from nccov.ncmatrix import flipped_product_order
from nccov.suites import SuiteConfig, run_suite

#%% a small run of one suite
report = run_suite(SuiteConfig(suite="transform", dim=2, trials=20, seed=7, format="text"))
print(report.to_text())

#%% break the build on purpose: products with swapped factors
with flipped_product_order():
    broken = run_suite(SuiteConfig(suite="vspace", dim=2, trials=10, seed=7))
for p in broken.properties:
    if p.failures:
        print(p.name, "failed", p.failures, "times; first counterexample", p.counterexample)
