"""
Monolithic vs distributed estimates for the benchmark suite
===========================================================

Fast qubits (50 ns, p=1e-4), 45K-qubit nodes, 10 MHz Bell generation and
1% Bell error. Published numbers are printed alongside.
"""

from distqre.catalog import lookup
from distqre.estimator import overhead, search
from distqre.validation import APP_ORDER, TABLE4_DIST_1, TABLE4_MONO, table4_hardware

hw = table4_hardware(0.01)
print(f"{'app':14s} {'mono Q':>10s} {'paper':>10s} {'mono T':>10s} {'paper':>10s}"
      f" {'dist Q':>10s} {'paper':>10s} {'dist T':>10s} {'paper':>10s} {'ovh':>6s}")
for key in APP_ORDER:
    app = lookup(key)
    mono = search(app, hw, monolithic=True).representative
    dist = search(app, hw).representative
    mq, mt = TABLE4_MONO[key]
    dq, dt = TABLE4_DIST_1[key]
    print(f"{key:14s} {mono.total_physical_qubits:10.3g} {mq:10.3g} {mono.runtime:10.3g}"
          f" {mt:10.3g} {dist.total_physical_qubits:10.3g} {dq:10.3g}"
          f" {dist.runtime:10.3g} {dt:10.3g} {overhead(dist, mono):6.2f}")

# where the qubits go
print("\nfractions (edf / msdf / data) and nodes:")
for key in APP_ORDER:
    r = search(lookup(key), hw).representative
    print(f"  {key:14s} {r.frac_edf:.2f} / {r.frac_msdf:.2f} / {r.frac_data:.2f}"
          f"   N={r.nodes} d={r.distance}")
