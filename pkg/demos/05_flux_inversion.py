"""
Boundary-flux forward model: advection-diffusion in a channel
=============================================================

The inverse problem asks for 30 wall-flux values (15 bottom + 15 top segments
on a 16 x 4 channel) from 30 interior sensor readings.  This script walks the
forward model that generates training data:

1. draw flux profiles from a Gaussian-process prior (RBF kernel, shifted to a
   positive mean so injection dominates),
2. solve the steady advection-diffusion equation with a finite-volume scheme
   (parabolic inflow profile, zero Dirichlet at the left, outflow diagnostics
   at the right), linear or with a nonlinear u^2/(1+u) reaction sink,
3. read the concentration at the 30 sensor locations.

Conservation and symmetry checks at the end confirm the discretization.
"""

import numpy as np

from pdediff import pde

# --- GP prior over wall fluxes -----------------------------------------------
fluxes = pde.sample_flux_prior(5, seed=0)
print(f"5 prior draws, each {fluxes.shape[1]} segment values")
print(f"  mean {fluxes.mean():.3f} (prior mean shift is "
      f"{pde.GPPriorConfig().mean_shift}), std {fluxes.std():.3f}")

# --- forward solve and sensor readings ----------------------------------------
grid = pde.DomainGrid(160, 40)
lu, _ = pde.factorize_linear(grid)       # one factorization, many right-hand sides
sensors = pde.sensor_coordinates()

for k, flux in enumerate(fluxes[:2]):
    fld = pde.solve_linear(flux, grid, lu=lu)
    readings = pde.interpolate(fld, sensors)
    print(f"\ndraw {k}: field max {fld.u.max():.3f}, "
          f"sensor readings min/max {readings.min():.3f}/{readings.max():.3f}")

# the nonlinear variant consumes solute through a u^2/(1+u) reaction
fld_nl = pde.solve_nonlinear(fluxes[0], grid)
print(f"\nnonlinear solve: max {fld_nl.u.max():.3f} "
      f"(reaction rate r = {pde.NONLINEAR_R})")

# --- conservation: wall influx balances outflow --------------------------------
flux = fluxes[0]
fld = pde.solve_linear(flux, grid, lu=lu)
q_bottom, q_top = pde.flux_profile(flux, grid)
influx = float((q_bottom + q_top).sum() * grid.hx)
left, right = pde.boundary_outflux(fld, pde.LINEAR_A_MAX, pde.LINEAR_KAPPA)
print(f"\nflux balance: influx {influx:.6f} vs outflux {left + right:.6f} "
      f"(rel err {abs(influx - left - right) / influx:.1e})")

# --- symmetry: swapping bottom and top walls mirrors the field ------------------
swapped = np.concatenate([flux[15:], flux[:15]])
fld_sw = pde.solve_linear(swapped, grid, lu=lu)
print(f"mirror symmetry: max |u - flip(u_swapped)| = "
      f"{np.abs(fld.u - fld_sw.u[::-1, :]).max():.2e}")

# --- noisy, possibly masked measurements ----------------------------------------
mask = pde.sample_mask(0.7, seed=1)
y = pde.measure(fld, sigma_eps=0.02, mask=mask, seed=2)
print(f"\nmasked measurement: {int(mask.sum())}/30 sensors active, "
      f"dropped entries hold the sentinel {y[mask == 0][0] if (mask == 0).any() else 'n/a'}")
