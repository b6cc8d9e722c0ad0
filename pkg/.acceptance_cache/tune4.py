"""Probe: does the locality readout engage physics on the full row?"""
import json
import os
import sys
import time

sys.path.insert(0, "/root/pkg/src")

from cyclotrack.data import Dataset
from cyclotrack.evaluation import evaluate_bundle, summarize
from cyclotrack.training import Phase2Trainer, TrainConfig, build_spec

ROOT = "/root/pkg/.acceptance_cache"
OUT = os.path.join(ROOT, "long4")
os.makedirs(OUT, exist_ok=True)
P2_STEPS = 6000
SNAP = 1000

ds = Dataset(os.path.join(ROOT, "world"))
g = ds.manifest.grid
spec = build_spec(g.n_lat, g.n_lon, ds.manifest.t_o, ds.manifest.t_f,
                  scale="compact")
p1 = os.path.join(ROOT, "long", "phase1", "encoder.ckpt")

t0 = time.monotonic()
from cyclotrack.training import load_bundle


def snapshot(trainer, name, step):
    path = os.path.join(OUT, f"{name}_s{step}.ckpt")
    trainer.save(path)
    bundle = load_bundle(path)
    base = summarize(evaluate_bundle(
        ds, bundle, split="test", channel="biased", n_members=8,
        base_seed=2027, limit=60), "ensemble")
    shuf = summarize(evaluate_bundle(
        ds, bundle, split="test", channel="biased", n_members=8,
        base_seed=2027, limit=60, shuffle_physics=True), "ensemble")
    b72, s72 = base.fde_at_hours(72.0), shuf.fde_at_hours(72.0)
    print(f"[{time.monotonic()-t0:.0f}s] {name} step {step}: "
          f"fde72={b72:.1f} shuffled={s72:.1f} ratio={s72/b72:.3f} "
          f"ade={base.ade_km:.1f}", flush=True)
    return {"step": step, "fde72": b72, "shuffled72": s72,
            "ade": base.ade_km}


history = {}
for name, cfg in [
    ("full", TrainConfig(seed=1002, train_steps=P2_STEPS, batch_size=4)),
]:
    trainer = Phase2Trainer(ds, spec, cfg, pretrained_path=p1)
    rows = []
    for step in range(P2_STEPS):
        trainer.step(step)
        if (step + 1) % SNAP == 0:
            rows.append(snapshot(trainer, name, step + 1))
    history[name] = rows

with open(os.path.join(OUT, "history.json"), "w") as f:
    json.dump(history, f, indent=1)
print(f"total {time.monotonic()-t0:.0f}s", flush=True)
