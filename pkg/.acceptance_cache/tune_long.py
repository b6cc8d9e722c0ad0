"""Long instrumented run: does physics uptake emerge with training?"""
import json
import os
import sys
import time

sys.path.insert(0, "/root/pkg/src")

from cyclotrack.data import Dataset
from cyclotrack.evaluation import evaluate_bundle, mean_bias_maps, summarize
from cyclotrack.training import (Phase2Trainer, TrainConfig, build_spec,
                                 load_bundle, run_phase1)

ROOT = "/root/pkg/.acceptance_cache"
OUT = os.path.join(ROOT, "long")
P1_STEPS = 4000
P2_STEPS = 10000
SNAP = 2000

ds = Dataset(os.path.join(ROOT, "world"))
g = ds.manifest.grid
spec = build_spec(g.n_lat, g.n_lon, ds.manifest.t_o, ds.manifest.t_f,
                  scale="compact")

t0 = time.monotonic()
p1 = os.path.join(OUT, "phase1", "encoder.ckpt")
if not os.path.exists(p1):
    p1 = run_phase1(ds, os.path.join(OUT, "phase1"), spec,
                    TrainConfig(seed=1001, pretrain_steps=P1_STEPS,
                                batch_size=4))
print(f"[{time.monotonic()-t0:.0f}s] phase1 ready", flush=True)


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
    ("frozen", TrainConfig(seed=1002, train_steps=P2_STEPS, batch_size=4,
                           use_bias_correction=False)),
]:
    trainer = Phase2Trainer(ds, spec, cfg, pretrained_path=p1)
    rows = []
    for step in range(P2_STEPS):
        trainer.step(step)
        if (step + 1) % SNAP == 0:
            rows.append(snapshot(trainer, name, step + 1))
    history[name] = rows
    if name == "full":
        bundle = load_bundle(os.path.join(OUT, f"full_s{P2_STEPS}.ckpt"))
        maps = mean_bias_maps(ds, bundle, split="test")
        print(f"bias map ratio: {maps['ratio']:.4f}", flush=True)
        history["maps"] = maps

with open(os.path.join(OUT, "history.json"), "w") as f:
    json.dump(history, f, indent=1)
print(f"total {time.monotonic()-t0:.0f}s", flush=True)
