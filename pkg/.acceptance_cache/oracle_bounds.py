"""Physical error floors: integrate test tracks with the world's own
steering-read operator on clean vs biased cubes."""
import sys

import numpy as np

sys.path.insert(0, "/root/pkg/src")

from cyclotrack.data import Dataset, load_shard
from cyclotrack.evaluation import fde_km, track_errors_km
from cyclotrack.geo import DomainError
from cyclotrack.world import advect_step, load_world, read_steering_from_cube

ROOT = "/root/pkg/.acceptance_cache/world"
ds = Dataset(ROOT)
cfg, _ = load_world(ROOT)
grid = ds.manifest.grid
t_o, t_f = ds.manifest.t_o, ds.manifest.t_f
sigma = cfg.filter_sigma_deg

def integrate(window, channel):
    entry = ds.entry(window.storm_id)
    track = entry.track
    clean = np.asarray(load_shard(ds.dir, entry.clean_shard))
    forecast = ds.window_physics(window, channel)
    k0 = window.anchor + t_o - 1
    lon, lat = track[k0]
    pts = []
    for j in range(t_f):
        cube = clean[k0] if j == 0 else forecast[j - 1]
        u, v = read_steering_from_cube(cube, grid, lon, lat, sigma)
        lon, lat = advect_step(lon, lat, u, v, grid.dt_hours)
        pts.append((lon, lat))
    truth = track[window.anchor + t_o:window.anchor + t_o + t_f]
    return np.asarray(pts), truth

wins = ds.windows("test", require_biased=True)[:80]
rows = {"clean": [], "biased": []}
skipped = 0
for w in wins:
    try:
        pc, truth = integrate(w, "clean")
        pb, _ = integrate(w, "biased")
    except DomainError:
        skipped += 1
        continue
    rows["clean"].append(track_errors_km(pc, truth))
    rows["biased"].append(track_errors_km(pb, truth))

for ch, errs in rows.items():
    arr = np.stack(errs)
    print(f"{ch}: n={len(errs)} fde72={arr[:, 11].mean():.1f} km "
          f"ade={arr.mean():.1f} km per-lead "
          f"{np.round(arr.mean(axis=0)[::3], 1).tolist()}")
print(f"skipped near-edge: {skipped}")

# persistence baseline: constant last-observed velocity
pers = []
for w in wins:
    entry = ds.entry(w.storm_id)
    track = entry.track
    k0 = w.anchor + t_o - 1
    vel = track[k0] - track[k0 - 1]
    pred = track[k0][None] + vel[None] * np.arange(1, t_f + 1)[:, None]
    truth = track[w.anchor + t_o:w.anchor + t_o + t_f]
    pers.append(track_errors_km(pred, truth))
arr = np.stack(pers)
print(f"persistence: fde72={arr[:, 11].mean():.1f} km ade={arr.mean():.1f} km")
