"""Read a finished sweep and show how the pulse width sets the field size.

Run the sweep first (about 8 minutes on one core):

    faddeevlab sweep configs/sweep.toml --deltas 0.1 0.05 0.025
    python demos/delta_scaling.py [runs/sweep]
"""

import json
import sys
from pathlib import Path

import numpy as np

root = Path(sys.argv[1] if len(sys.argv) > 1 else "runs/sweep")
sweep = json.loads((root / "sweep.json").read_text())

for run in sweep["runs"]:
    rep = json.loads(Path(run["report"]).read_text())
    ub, v = (np.asarray(a) for a in rep["scaling_curves"]["sup|L theta| region II"])
    at = [float(np.interp(x, ub, v)) for x in (4.0, 8.0, 12.0)]
    print(f"delta={run['delta']:<6g} sup|L theta| at ubar 4, 8, 12: "
          + "  ".join(f"{a:.3e}" for a in at))

print("\nfitted exponents a in  Q ~ delta^a:")
for f in sweep["delta_scaling"]:
    print(f"  {f['quantity']:45s} {f.get('slope', float('nan')):+.3f}")
