"""
Conditional density estimation on a 2-D toy joint
=================================================

End-to-end miniature of the conditional pipeline: draw (x, y) pairs from the
tanh benchmark, train a small conditional score network with denoising score
matching, sample x | y* through the probability-flow ODE, and compare the
samples against a band-conditioned reference with entropic optimal transport.

The sizes here are deliberately tiny so the script finishes in about a
minute; the full experiment suite lives in scripts/run_experiments.py.
"""

import numpy as np

from pdediff import toy
from pdediff.nets import Architecture, ScoreNet
from pdediff.ot import OTConfig, sinkhorn_distance
from pdediff.samplers import SamplerConfig, sample_ode
from pdediff.schedules import ve_schedule
from pdediff.training import TrainConfig, train

# --- data and model ---------------------------------------------------------
train_set = toy.gen_toy("tanh", n=2000, seed=0)
test_set = toy.gen_toy("tanh", n=20_000, seed=1)

sched = ve_schedule(sigma_max=12.0)
net = ScoreNet.init(
    Architecture(dim_x=1, dim_cond=1, hidden_layers=2, hidden_width=64), seed=0)
cfg = TrainConfig(epochs=400, batch_size=200, learning_rate=1e-3, seed=0)

net, history = train(net, train_set.x[:, None], train_set.y[:, None], sched, cfg)
print(f"trained {cfg.epochs} epochs: loss {history[0]:.3f} -> {history[-1]:.3f}")

# --- conditional sampling and OT scoring -------------------------------------
ot_cfg = OTConfig(regularization=0.01, marginal_tolerance=1e-6)
rng = np.random.Generator(np.random.Philox(key=42))

print("\n y*     model mean   ref mean    OT distance")
for y_star in toy.CONDITIONING_VALUES:
    sc = SamplerConfig(alpha=0.0, seed=10 + int(2 * y_star))
    xs = sample_ode(500, 1, net.forward, np.array([[y_star]]), sched, sc).ravel()
    ref = toy.band_reference(test_set, y_star)
    ref = ref if len(ref) <= 500 else rng.choice(ref, 500, replace=False)
    res = sinkhorn_distance(xs[:, None], ref[:, None], ot_cfg)
    print(f" {y_star:+.1f}    {xs.mean():+.4f}     {ref.mean():+.4f}     "
          f"{res.distance:.4f}")

# tanh truth: E[x | y] = tanh(y) + 0.3 (the Gamma noise mean)
print("\nclosed-form conditional means for comparison:")
for y_star in toy.CONDITIONING_VALUES:
    print(f" E[x | y={y_star:+.1f}] = {np.tanh(y_star) + 0.3:+.4f}")
