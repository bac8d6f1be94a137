"""One short-pulse evolution and what the diagnostics see.

Evolves delta = 0.1 pulse data to t = 6, then prints the hyperbolicity
monitor, the cone energies against the initial energy, the coercivity
ratios of the multiplier energies and the fitted decay slopes.

    python demos/short_pulse_run.py
"""

import numpy as np

from faddeevlab import diagnose, evolve, pulse

delta, t_end = 0.1, 6.0
spec = pulse.PulseSpec(delta, 0.1, 0.1)
grid = evolve.RadialGrid.for_run(t_end, delta, n=2049)
hist = evolve.run(spec, grid, t_end)
print(f"grid n={grid.n}, dr=delta/{delta / grid.dr:.1f}; aborted: {hist.aborted}")
print(f"min det(M) = {hist.min_det:.6f}, max |Im speed| = {hist.max_imag_speed:.1e}, "
      f"region III sup = {hist.region3_sup:.1e}")

cfg = diagnose.DiagnosticsConfig(cones_ubar=(2.0, 3.0, 4.0), fit_window=(2.0, 4.5))
rep = diagnose.analyze(hist, cfg)

print("\nenergies on C_delta (E_<=2 + Ebar_<=2):")
for e in rep["energies"]:
    if abs(e["u"] - delta) < 1e-12:
        print(f"  ubar={e['ubar']:4.1f}  {e['E_le'][-1] + e['Ebar_le'][-1]:.4e}")
print(f"  initial {rep['initial_energy']['I_le']:.4e}; "
      f"max ratio {rep['energy_bound_ratio']:.3f}")

ratios = np.array([c["ratio"] for c in rep["coercivity"]])
print(f"\ncoercivity: {ratios.size} ratios in [{ratios.min():.3f}, {ratios.max():.3f}]")

print("\ndecay slopes in u-bar:")
for f in rep["decay_fits"]:
    if f["slope"] is not None:
        print(f"  {f['quantity']:45s} {f['slope']:+.2f}  ci [{f['ci'][0]:+.2f}, {f['ci'][1]:+.2f}]")
