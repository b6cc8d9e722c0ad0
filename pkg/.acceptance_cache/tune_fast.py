"""Fast margin probe for the acceptance ablation: 800-step rows."""
import json
import os
import sys
import time

sys.path.insert(0, "/root/pkg/src")

from cyclotrack.data import Dataset
from cyclotrack.evaluation import evaluate_bundle, mean_bias_maps, summarize
from cyclotrack.training import (TrainConfig, build_spec, load_bundle,
                                 run_phase1, run_phase2)

ROOT = "/root/pkg/.acceptance_cache"
OUT = os.path.join(ROOT, "probe800")
STEPS = 800

ds = Dataset(os.path.join(ROOT, "world"))
g = ds.manifest.grid
spec = build_spec(g.n_lat, g.n_lon, ds.manifest.t_o, ds.manifest.t_f,
                  scale="compact")

t0 = time.monotonic()
p1 = run_phase1(ds, os.path.join(OUT, "phase1"), spec,
                TrainConfig(seed=1001, pretrain_steps=STEPS, batch_size=4))
print(f"[{time.monotonic()-t0:.0f}s] phase1 done", flush=True)

rows = {}
for name, cfg in [
    ("full", TrainConfig(seed=1002, train_steps=STEPS, batch_size=4)),
    ("frozen", TrainConfig(seed=1002, train_steps=STEPS, batch_size=4,
                           use_bias_correction=False)),
]:
    ck = run_phase2(ds, os.path.join(OUT, name), spec, cfg,
                    pretrained_path=p1)
    bundle = load_bundle(ck)
    sets = evaluate_bundle(ds, bundle, split="test", channel="biased",
                           n_members=20, base_seed=2027)
    rep = summarize(sets, "ensemble")
    rows[name] = {"bundle": ck, "fde72": rep.fde_at_hours(72.0),
                  "ade": rep.ade_km, "fde": rep.fde_km}
    print(f"[{time.monotonic()-t0:.0f}s] {name}: fde72={rows[name]['fde72']:.1f} "
          f"ade={rep.ade_km:.1f}", flush=True)

full = load_bundle(rows["full"]["bundle"])
maps = mean_bias_maps(ds, full, split="test")
print(f"bias map ratio: {maps['ratio']:.4f} "
      f"(raw {maps['uncorrected_l2']:.3f} corr {maps['corrected_l2']:.3f})",
      flush=True)

shuf = evaluate_bundle(ds, full, split="test", channel="biased",
                       n_members=20, base_seed=2027, shuffle_physics=True)
shuf_rep = summarize(shuf, "ensemble")
print(f"shuffled fde72: {shuf_rep.fde_at_hours(72.0):.1f} "
      f"vs base {rows['full']['fde72']:.1f} "
      f"ratio {shuf_rep.fde_at_hours(72.0)/rows['full']['fde72']:.3f}",
      flush=True)

margin = rows["frozen"]["fde72"] / rows["full"]["fde72"]
print(f"frozen/full fde72 ratio: {margin:.3f} (need >= 1.176 for 15%)",
      flush=True)
with open(os.path.join(OUT, "margins.json"), "w") as f:
    json.dump({"rows": rows, "maps": maps,
               "shuffled_fde72": shuf_rep.fde_at_hours(72.0)}, f, indent=1)
print(f"total {time.monotonic()-t0:.0f}s", flush=True)
