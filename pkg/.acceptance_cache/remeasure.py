"""Re-measure shuffle control on saved snapshots with the fixed rotation."""
import glob
import json
import os
import re
import sys
import time

sys.path.insert(0, "/root/pkg/src")

from cyclotrack.data import Dataset
from cyclotrack.evaluation import evaluate_bundle, summarize
from cyclotrack.training import load_bundle

ROOT = "/root/pkg/.acceptance_cache"
ds = Dataset(os.path.join(ROOT, "world"))

rows = []
for path in sorted(glob.glob(os.path.join(ROOT, "long", "*_s*.ckpt"))):
    m = re.search(r"(\w+)_s(\d+)\.ckpt$", path)
    name, step = m.group(1), int(m.group(2))
    bundle = load_bundle(path)
    t0 = time.monotonic()
    base = summarize(evaluate_bundle(
        ds, bundle, split="test", channel="biased", n_members=8,
        base_seed=2027, limit=60), "ensemble")
    shuf = summarize(evaluate_bundle(
        ds, bundle, split="test", channel="biased", n_members=8,
        base_seed=2027, shuffle_physics=True, limit=60), "ensemble")
    b72 = base.per_lead_fde_km[11]
    s72 = shuf.per_lead_fde_km[11]
    rows.append(dict(name=name, step=step, base=b72, shuf=s72,
                     ratio=s72 / b72))
    print(f"{name} s{step}: base={b72:.1f} shuf={s72:.1f} "
          f"ratio={s72/b72:.3f} ({time.monotonic()-t0:.0f}s)", flush=True)

with open(os.path.join(ROOT, "remeasure.json"), "w") as f:
    json.dump(rows, f, indent=1)
