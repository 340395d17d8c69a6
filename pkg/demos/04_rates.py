"""
Error-correction rate of balanced partitions
============================================

log_d f(k,...,k) / (d k) creeps toward 1 as k grows. Values of f run to
hundreds of digits, so logs are taken from the leading bits.
"""

import numpy as np

from qudit_ns import balanced_rate_series, code_rate, maximize

for d in (2, 3, 4):
    series = balanced_rate_series(d, 200)
    rates = np.array([e.rate for e in series.entries])
    print(f"d={d}: k=10 {rates[9]:.4f}  k=50 {rates[49]:.4f}  k=200 {rates[199]:.4f}  bits(f) at k=200: {series.entries[-1].f_bits}")

# The optimal partition does a little better than the balanced one.
for n in (30, 90, 300):
    opt = maximize(3, n)
    print(n, opt.partition, round(code_rate(opt.partition), 4), round(code_rate((n // 3,) * 3), 4))
