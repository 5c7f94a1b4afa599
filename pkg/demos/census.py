"""Brute-force census next to the construction, with completions.

    python3 demos/census.py [N]
"""

import sys
import time

from hoffman.classify import verify_main_theorem

n = int(sys.argv[1]) if len(sys.argv) > 1 else 9
t0 = time.time()
rep = verify_main_theorem(n)
s = rep.summary()
print(f"trees up to {n} vertices, {time.time() - t0:.1f}s")
for key, value in s.items():
    print(f"  {key}: {value}")
short = [c.decode() for c in sorted(rep.slack_failures, key=len)[:3]]
if short:
    print("smallest trees with no host within the size slack:", short)
