"""Linear-probe: how much future-displacement info survives token pooling?

Compares ridge regression targets (72h track offset in unit coords) from:
  A. track-only features (anchor position + last observed delta)
  B. A + uniform per-slice mean of physics tokens (the pooled readout path)
  C. A + the single token nearest the storm at each latent slice
"""
import sys

import numpy as np
import torch

sys.path.insert(0, "/root/pkg/src")

from cyclotrack.data import Dataset
from cyclotrack.training import load_encoder

ROOT = "/root/pkg/.acceptance_cache"
ds = Dataset(ROOT + "/world")
enc, _ = load_encoder(ROOT + "/probe800/phase1/encoder.ckpt")
enc.eval()
lt, lh, lw = enc.config.latent_shape

def feats(windows):
    A, B, C, Y = [], [], [], []
    for w in windows:
        batch = ds.make_batch([w], "clean")
        coords = batch.coords[0]
        anchor = coords[-1]
        delta = coords[-1] - coords[-2]
        with torch.no_grad():
            tokens = enc.features(torch.from_numpy(batch.physics)).tokens[0]
        tok = tokens.reshape(lt, lh, lw, -1)
        mean_pool = tok.mean(dim=(1, 2)).flatten().numpy()
        iy = int(round(anchor[1] * (lh - 1)))
        ix = int(round(anchor[0] * (lw - 1)))
        local = tok[:, iy, ix, :].flatten().numpy()
        A.append(np.concatenate([anchor, delta]))
        B.append(mean_pool)
        C.append(local)
        Y.append(batch.target[0][-1] - anchor)
    return (np.asarray(A), np.asarray(B), np.asarray(C), np.asarray(Y))

def ridge_rmse(X, Y, ntr):
    Xtr, Xte = X[:ntr], X[ntr:]
    Ytr, Yte = Y[:ntr], Y[ntr:]
    mu, sd = Xtr.mean(0), Xtr.std(0) + 1e-8
    Xtr = (Xtr - mu) / sd
    Xte = (Xte - mu) / sd
    Xtr = np.hstack([Xtr, np.ones((len(Xtr), 1))])
    Xte = np.hstack([Xte, np.ones((len(Xte), 1))])
    lam = 1e-3 * len(Xtr)
    Wm = np.linalg.solve(Xtr.T @ Xtr + lam * np.eye(Xtr.shape[1]), Xtr.T @ Ytr)
    return float(np.sqrt(((Xte @ Wm - Yte) ** 2).mean()))

rng = np.random.default_rng(5)
wins = ds.windows("train")
idx = rng.permutation(len(wins))[:500]
wins = [wins[i] for i in idx]
A, B, C, Y = feats(wins)
ntr = 400
print(f"target std: {Y[ntr:].std():.4f} (unit coords)")
print(f"A  track only:        rmse {ridge_rmse(A, Y, ntr):.4f}")
print(f"B  + uniform pool:    rmse {ridge_rmse(np.hstack([A, B]), Y, ntr):.4f}")
print(f"C  + local token:     rmse {ridge_rmse(np.hstack([A, C]), Y, ntr):.4f}")
print(f"BC + both:            rmse {ridge_rmse(np.hstack([A, B, C]), Y, ntr):.4f}")
