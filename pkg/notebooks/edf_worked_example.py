"""
Entanglement distillation, one level at a time
==============================================

Walks the four-level Bell-pair factory used as the running example:
2Q(Z) on bare qubits, then 5Q, 2Q(Z) and 2Q(X) on surface-code tiles.
"""

from distqre.distillation import UNITS, PauliErrorRates, UnitKind, evaluate_unit
from distqre.distillation.factory import compose_multilevel, search_factories
from distqre.distillation.factory import level_error_rate

K = UnitKind
raw = PauliErrorRates.depolarizing(0.05)
p = 1e-4
chain = [(K.REPETITION_Z, 1), (K.FIVE_QUBIT_PERFECT, 3),
         (K.REPETITION_Z, 7), (K.REPETITION_X, 9)]

# thread the error rates by hand first
rates = raw
for kind, d in chain:
    accept, rates = evaluate_unit(UNITS[kind], rates, level_error_rate(d, p))
    print(f"{kind.value:6s} d={d:<2d} accept={accept:.4f} "
          f"out=({rates.px:.2e}, {rates.py:.2e}, {rates.pz:.2e})")

f = compose_multilevel(chain, raw, p)
print("\nsequential schedule:")
print("  qubits     ", f.qubits)
print("  time steps ", round(f.time_steps))
print("  raw pairs  ", round(f.raw_inputs, 1))
print("  error      ", f"{f.output_error:.2e}")

g = compose_multilevel(chain, raw, p, schedule="pipelined")
print("pipelined copies per level:", [lv.copies for lv in g.levels],
      "qubits", g.qubits, "steps", round(g.time_steps))

# two bare repetition rounds: 5% in, well under 1% out
h = compose_multilevel([(K.REPETITION_Z, 1), (K.REPETITION_X, 1)], raw, p)
print(f"\nphysical 2Q(Z)+2Q(X): {h.physical_qubits} qubits, {h.op_layers} layers, "
      f"error {h.output_error:.4f}")

cat = search_factories(raw, p, 1e-9)
print(f"\n{len(cat.entries)} Pareto factories reach 1e-9; cheapest by qubits:")
for e in sorted(cat.entries, key=lambda e: e.qubits)[:5]:
    print("  ", [(k.value, d) for k, d in e.chain], e.schedule,
          e.qubits, round(e.time_steps), round(e.raw_inputs, 1))
