"""Seeded fuzzing of every property, the same engine the CLI uses.

Runs are reproducible: the same target, dimension, n and seed always give
the same JSON summary.
"""
import json

from jacobson_drazin.fuzz import TARGETS, run_campaign

for target in TARGETS:
    summary = run_campaign(target, dim=3, n=2, trials=20, seed=1)
    print(f"{target:8s} passed={summary['passed']:3d} failed={summary['failed']} exhausted={summary['exhausted']}")

again = run_campaign("oracles", dim=3, n=2, trials=20, seed=1)
first = run_campaign("oracles", dim=3, n=2, trials=20, seed=1)
print("reproducible:", json.dumps(again, sort_keys=True) == json.dumps(first, sort_keys=True))
