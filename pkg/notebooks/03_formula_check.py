# Closed forms versus exact values for G x P_n, G x C_n and G x K_n.
# The breakdown shows every term, so you can see which one wins.

from strongcut.formulas import FactorStats, lambda_prime_formula, witness_cuts
from strongcut.invariants import restricted_edge_connectivity_flow
from strongcut.products import family_factor, make_complete, make_path, strong_product
from strongcut.verify import generate_corpus, sweep

g = make_complete(3)
stats = FactorStats.of(g)
for family, n in [("path", 3), ("cycle", 4), ("complete", 4)]:
    b = lambda_prime_formula(family, stats, n)
    exact = restricted_edge_connectivity_flow(strong_product(g, family_factor(family, n))).value
    print(family, n, b.terms, "->", b.value, "argmin", b.argmin, "exact", exact)

# each term comes with a cut of the product that is no bigger than it
for label, cut in witness_cuts(make_path(3), "cycle", 3).items():
    print(f"{label:12} cut size {cut.size}")

# a small sweep; records with products above 20 vertices come back skipped
corpus = generate_corpus(("path", "cycle", "complete"), max_order=5)
res = sweep(corpus, ["path", "cycle", "complete"])
print(res.summary.to_dict())
print([r.skip_reason for r in res.records if r.skipped][:3])
