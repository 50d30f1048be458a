"""Sweeping whole graph corpora through every check at once.

The verification harness turns each graph into a verdict row: inertia,
matching, bounds, all four extremal classifiers, the unicyclic
prediction, deletion corollaries, the lemma suite, and the difference
bounds.  A row only counts as a counterexample if a proven statement
fails; the open conjecture is tracked but never asserted.

The same machinery backs the command line:
    inertia-bounds verify --corpus exhaustive:5 --out report.json
"""

from inertia_bounds import render_report, run_verification
from inertia_bounds.corpus import enumerate_labeled, sample_random
from inertia_bounds.verify import summarize

# Every labeled graph on 4 vertices, all checks.
report = run_verification(enumerate_labeled(4))
print(summarize(report))
print()

# The per-graph rows serialize to JSON or CSV; here are the first two
# CSV rows so the schema is visible.
csv_text = render_report(report, "csv")
for line in csv_text.splitlines()[:3]:
    print(line[:100] + ("..." if len(line) > 100 else ""))
print()

# Random corpora are seeded, so a run is reproducible end to end, and
# parallel workers cannot change a single byte of the report.
corpus = list(sample_random(n=9, edge_probability=0.3, count=200, seed=1))
serial = run_verification(corpus, workers=1)
parallel = run_verification(corpus, workers=2)
assert render_report(serial, "json") == render_report(parallel, "json")
print("200 random graphs on 9 vertices: serial and 2-worker reports identical")
print(summarize(parallel))
