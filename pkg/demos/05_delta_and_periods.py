"""
The gap u - G and its periodic tail
===================================

Along a row with fixed x0 and x1, the gap between the total u and the
value G tends to settle into a repeating pattern once x2 is large.
"""

from exconim import check_conjecture, delta_u, periodicity_detect, sg_table_n2, smallest_period

table = sg_table_n2(3, 32, 512)

print("gap along x0=1, x1=6:", [delta_u((1, 6, x2), table) for x2 in range(6, 40)])

rep = periodicity_detect(1, 6, 3, table)
print(rep.status, "after x2 =", rep.threshold, "pattern", rep.pattern)

# Sweep many rows at once; the report is plain JSON-ready data.
report = check_conjecture("C5", table, [1], range(2, 17), 512)
print(report.status, "rows checked:", report.checked)
for t in report.thresholds[:5]:
    print("  ", t)

# Some rows do not settle with period 2^k at all.
deep = sg_table_n2(1, 24, 1400)
print("x1=24 smallest period and start:", smallest_period(1, 24, deep, 256))
