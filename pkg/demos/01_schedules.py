"""
Forward noising schedules: VE and the mu-family of VP processes
===============================================================

A forward SDE  dx = -(b(t)/2) x dt + sqrt(g(t)) dW  turns data into noise.
Two families are implemented:

* variance-exploding (VE): b = 0, g(t) = sigma_max^{2t}, so the marginal
  variance grows without bound;
* variance-preserving (VP) with shape parameter mu: the mean decays as
  m(t) = exp(-1/2 int beta) and the perturbation scale obeys the algebraic
  identity m^mu + sigma^mu = 1, so x(T) is (nearly) a standard Gaussian.

This script prints the kernel quantities along t and checks the VP identity
and the small-noise / terminal limits numerically.
"""

import numpy as np

from pdediff.schedules import ve_schedule, vp_schedule

t = np.linspace(0.0, 1.0, 11)

# --- VE: exponentially growing noise, identity mean ------------------------
ve = ve_schedule(sigma_max=12.0)
print("VE schedule (sigma_max = 12)")
print("  t      m(t)   sigma(t)")
for ti in t:
    print(f"  {ti:4.2f}  {float(ve.m(ti)):6.3f}  {float(ve.sigma(ti)):8.4f}")
print(f"  terminal sigma ~ sigma_max/sqrt(2 ln sigma_max) = "
      f"{12.0 / np.sqrt(2 * np.log(12.0)):.4f}\n")

# --- VP mu-family: m^mu + sigma^mu = 1 --------------------------------------
for mu in (0.5, 1.0, 2.0, 4.0):
    vp = vp_schedule(beta_min=0.001, beta_max=15.0, mu=mu)
    m = vp.m(t)
    s = vp.sigma(t)
    worst = float(np.max(np.abs(m**mu + s**mu - 1.0)))
    print(f"VP mu={mu}: max |m^mu + sigma^mu - 1| over t grid = {worst:.2e}")
    print(f"  m(1) = {float(vp.m(1.0)):.4e}  sigma(1) = {float(vp.sigma(1.0)):.6f}")

# --- the diffusion coefficient g(t) -----------------------------------------
# Variance transport d sigma^2/dt = g - b sigma^2 fixes g once m and sigma
# are chosen.  For mu = 2 this gives the classical g = beta; for mu != 2 the
# factor (1 - m^mu)^(2/mu - 1) appears.
print("\ng(t) at t = 0.5:")
print(f"  VE:        {float(ve.g(0.5)):.4f}")
for mu in (1.0, 2.0, 4.0):
    vp = vp_schedule(mu=mu)
    beta = vp.beta_min + (vp.beta_max - vp.beta_min) * 0.5
    print(f"  VP mu={mu}: {float(vp.g(0.5)):.4f}   (beta(0.5) = {beta:.4f})")

# Finite-difference check of the transport identity on the VE schedule.
h = 1e-6
lhs = (float(ve.sigma(0.5 + h))**2 - float(ve.sigma(0.5 - h))**2) / (2 * h)
rhs = float(ve.g(0.5))
print(f"\nVE transport check at t=0.5: d sigma^2/dt = {lhs:.6f}, g = {rhs:.6f}")
