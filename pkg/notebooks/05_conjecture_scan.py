"""
Scanning every cycle type
=========================

For each partition of n, compute F_lambda and test log-concavity and
real-rootedness. Records also carry internal cross-checks.
"""

# %%
import sys
from collections import Counter

from cllc.scanner import scan, scan_status, format_table, write_jsonl

records = scan(1, 8)
print(len(records), "records, status", scan_status(records))

# %%
print(format_table([r for r in records if r.n == 6], timing=False))

# %%
print(Counter((r.log_concave, r.real_rooted) for r in records))

# %%
# JSON-lines form, as written by ``cllc scan --format json``.
write_jsonl(records[:3], sys.stdout, timing=False)
