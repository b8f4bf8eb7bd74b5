"""
Node size and entanglement rate sweeps
======================================

Ising on slow qubits across node sizes, then on fast qubits across Bell
generation rates. Numbers only; pipe the CLI's CSV into a plotter for
figures.
"""

import numpy as np

from distqre.catalog import NODE_SIZES, lookup, preset
from distqre.estimator import InfeasibleError, overhead, search

app = lookup("ising")

slow = preset("slow-optimistic")
base = slow.hardware(0.05, 5e3, 45000)
mono = search(app, base, monolithic=True).representative
print("node size   nodes   overhead")
for size in NODE_SIZES:
    r = search(app, base.with_(node_size=size)).representative
    print(f"{size:9d} {r.nodes:7d} {overhead(r, mono):10.2f}")

fast = preset("fast-optimistic")
base = fast.hardware(0.05, 1e7, 45000)
mono = search(app, base, monolithic=True).representative
print("\n     eta (Hz)   runtime (s)   overhead")
for eta in np.logspace(3, 8, 11):
    try:
        r = search(app, base.with_(eta=float(eta))).representative
    except InfeasibleError:
        print(f"{eta:13.3g}   infeasible")
        continue
    print(f"{eta:13.3g} {r.runtime:13.4g} {overhead(r, mono):10.2f}")
