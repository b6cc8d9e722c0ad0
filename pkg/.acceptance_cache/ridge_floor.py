"""Linear floor: ridge from (track, pooled tokens, local tokens) to offsets.

Fits on train windows with corrected biased cubes, scores FDE@72h on the
same 60 test windows the probes use. Answers: is the generative model near
the one-shot readout floor, or leaving signal behind?
"""
import os
import sys

import numpy as np
import torch

sys.path.insert(0, "/root/pkg/src")

from cyclotrack.data import Dataset
from cyclotrack.geo import haversine_km_arrays
from cyclotrack.training import load_bundle

ROOT = "/root/pkg/.acceptance_cache"
ds = Dataset(os.path.join(ROOT, "world"))
bundle = load_bundle(os.path.join(ROOT, "long4", "full_s4000.ckpt"))
enc, cor = bundle.encoder, bundle.corrector
cfg = bundle.spec.predictor
t_f = ds.manifest.t_f


def feats(windows):
    xs, ys, anchors = [], [], []
    leads = torch.arange(1, t_f + 1)[None]
    for w in windows:
        batch = ds.make_batch([w], "biased")
        cube = torch.from_numpy(batch.physics)
        with torch.no_grad():
            cube = cor(cube, leads)
            tokens = enc.features(cube).tokens
        tok = tokens.reshape(1, cfg.latent_t, cfg.latent_h * cfg.latent_w,
                             cfg.d_model)
        uniform = tok.mean(dim=2).flatten(1)
        coords = torch.from_numpy(batch.coords.astype('float32'))
        anchor = coords[:, -1, :]
        rows = torch.arange(cfg.latent_h, dtype=torch.float32)
        cols = torch.arange(cfg.latent_w, dtype=torch.float32)
        cr = anchor[:, 1] * (cfg.latent_h - 1)
        cc = anchor[:, 0] * (cfg.latent_w - 1)
        d2 = ((rows[None, :, None] - cr[:, None, None]) ** 2
              + (cols[None, None, :] - cc[:, None, None]) ** 2)
        wgt = torch.exp(-d2 / (2.0 * 1.5 ** 2)).reshape(1, -1)
        wgt = wgt / wgt.sum(dim=1, keepdim=True)
        local = torch.einsum("bn,btnd->btd", wgt, tok).flatten(1)
        track = coords.flatten(1)
        xs.append(torch.cat([track, uniform, local], dim=1).numpy()[0])
        ys.append(batch.target[:, -1, :] - anchor.numpy()[0])
        anchors.append(anchor.numpy()[0])
    return np.array(xs), np.array(ys).reshape(len(ys), 2), np.array(anchors)


train_w = [w for w in ds.windows("train") if w.has_biased]
test_w = ds.windows("test", require_biased=True)[:60]
Xtr, Ytr, _ = feats(train_w)
Xte, Yte, Ate = feats(test_w)

mu, sd = Xtr.mean(0), Xtr.std(0) + 1e-8
Xtr = (Xtr - mu) / sd
Xte = (Xte - mu) / sd
lam = 10.0
A = Xtr.T @ Xtr + lam * np.eye(Xtr.shape[1])
W = np.linalg.solve(A, Xtr.T @ Ytr)
pred = Xte @ W

pu = Ate + pred
tu = Ate + Yte
pll = ds.denorm_coords(pu)
tll = ds.denorm_coords(tu)
d = haversine_km_arrays(pll[:, 0], pll[:, 1], tll[:, 0], tll[:, 1])
print(f"ridge floor FDE@72h over {len(test_w)} windows: {d.mean():.1f} km")
print(f"per-axis unit RMSE: {np.sqrt(((pred-Yte)**2).mean()):.4f} "
      f"(target std {Yte.std():.4f})")
