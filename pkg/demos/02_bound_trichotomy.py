"""How the two lower bounds compare, and where each one wins.

f(delta, Delta, alpha) uses both degree extremes; g(Delta, alpha) uses only
the maximum. Intuition says more information gives a sharper bound, and for
delta >= 2 (alpha strictly inside (0,1)) that is true: f > g. But the
comparison is exactly characterized, and it reverses for delta = 0: there
f < g, so the one-parameter bound wins. delta = 1 and the alpha endpoints
give exact ties.
"""

from aalpha import bound_f, bound_g, classify, summarize_sweep, sweep_grid

print("fixed Delta = 6, alpha = 0.4, delta sweeping 0..6:")
for delta in range(7):
    f = bound_f(delta, 6, 0.4)
    g = bound_g(6, 0.4)
    ordering, witness = classify(delta, 6, 0.4)
    print(f"  delta = {delta}: f = {f:.10f}  g = {g:.10f}  "
          f"{ordering.value:7s} ({witness.value})")

print("\nthe delta = 0 reversal across alpha (Delta = 3):")
for k in range(6):
    alpha = k / 5
    f = bound_f(0, 3, alpha)
    g = bound_g(3, alpha)
    ordering, _ = classify(0, 3, alpha)
    print(f"  alpha = {alpha:4}: f = {f:.10f}  g = {g:.10f}  {ordering.value}")

print("\nexhaustive grid check (delta, Delta <= 60, alpha in k/100):")
summary = summarize_sweep(sweep_grid(60, 60, 100))
print(f"  points = {summary.total}")
print(f"  f > g on {summary.greater}, f = g on {summary.equal}, "
      f"f < g on {summary.less}")
print(f"  symbolic/numeric disagreements = {summary.inconsistent}")
