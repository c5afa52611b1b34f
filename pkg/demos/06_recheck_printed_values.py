"""
Rechecking a list of published observations
===========================================

`observations.recheck` recomputes every stored value, family, threshold
and pattern and lists where the computation disagrees with what was printed.
"""

from exconim.observations import recheck

result = recheck()
print(result.confirmed, "items confirmed")
for d in result.discrepancies:
    print(f"  {d.kind:9} {d.item}: printed {d.printed}, computed {d.computed}")
