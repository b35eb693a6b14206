"""
Running the identity catalog
============================

Every catalog entry over the default grid, summarised per id.  Entries in
the ``claim`` category are probes of doubtful statements and are reported
without failing the run.
"""

from collections import defaultdict

from altbases.precision import PrecisionContext
from altbases.identities import DEFAULT_GRID, run_all

ctx = PrecisionContext(60)
cases = run_all(DEFAULT_GRID, ctx)

worst = defaultdict(lambda: ctx.real(0))
verdicts = defaultdict(set)
for c in cases:
    worst[c.id] = max(worst[c.id], c.residual)
    verdicts[c.id].add(c.verdict)

for id_, res in worst.items():
    print(f"{id_:6s} worst residual {ctx.mp.nstr(res, 3):10s} {'/'.join(sorted(verdicts[id_]))}")
print("suite failures:", sum(c.counts_as_failure for c in cases))
