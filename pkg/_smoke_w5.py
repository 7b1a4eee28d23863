import importlib.util
import sys
import time
import types

pkg = types.ModuleType("circuitpoly")
pkg.__path__ = ["/root/pkg/src/circuitpoly"]
sys.modules["circuitpoly"] = pkg
for name in ("graphs", "catalog", "poly"):
    spec = importlib.util.spec_from_file_location(
        f"circuitpoly.{name}", f"/root/pkg/src/circuitpoly/{name}.py"
    )
    mod = importlib.util.module_from_spec(spec)
    sys.modules[f"circuitpoly.{name}"] = mod
    spec.loader.exec_module(mod)
    setattr(pkg, name, mod)

from circuitpoly.poly import (
    MultiPoly, determinant, resultant, stats, strip_monomial_content,
    predicted_resultant_degree,
)

x = MultiPoly.var

def k4_poly(labels):
    rows = [[MultiPoly.zero()] + [MultiPoly.one()] * 4]
    for i in labels:
        rows.append([MultiPoly.one()] + [(x(i, j) if i != j else MultiPoly.zero()) for j in labels])
    return determinant(rows).normalized()

# W4 as resultant of K4{2345} and K4{1245} eliminating (2,4)
t0 = time.perf_counter()
w4_a = k4_poly([2, 3, 4, 5])
w4_b = k4_poly([1, 2, 4, 5])
w4 = resultant(w4_a, w4_b, (2, 4))
w4n = w4.normalized()
red, mono = strip_monomial_content(w4n)
t1 = time.perf_counter()
print("w4 terms:", len(w4n), "hom:", w4n.homogeneous_degree(),
      "degs:", set(w4n.per_var_degrees().values()),
      "mono:", mono, f"{t1-t0:.2f}s")
print("w4 support:", sorted(w4n.support()))

# W5 root: A = wheel rim {2,3,4,5} hub 6 (relabel W4), B = K4{1,2,5,6}, eliminate (2,5)
# A's polynomial: W4 above is the wheel with rim 1,2,3,4 hub 5? labeling check:
# my w4 here was built on vertex sets {2,3,4,5} and {1,2,4,5}; union {1..5} minus edge (2,4).
# wheel4 catalog = rim(1,2,3,4) hub 5. The A node for w5 is rim{2,3,4,5} hub 6.
# Simplest: compute A directly as resultant of K4{3,4,5,6} and K4{2,3,5,6} elim (3,5)
t0 = time.perf_counter()
a1 = k4_poly([3, 4, 5, 6])
a2 = k4_poly([2, 3, 5, 6])
wheelA = resultant(a1, a2, (3, 5)).normalized()
t1 = time.perf_counter()
print("wheelA terms:", len(wheelA), "hom:", wheelA.homogeneous_degree(), f"{t1-t0:.2f}s")

b = k4_poly([1, 2, 5, 6])
print("deg wheelA in (2,5):", wheelA.degree_in((2, 5)), "deg b:", b.degree_in((2, 5)))
print("predicted w5 deg:", predicted_resultant_degree(8, 3, 4, 2))
t0 = time.perf_counter()
w5 = resultant(wheelA, b, (2, 5))
t1 = time.perf_counter()
print(f"w5 resultant: {t1-t0:.2f}s, raw terms: {len(w5)}")
t0 = time.perf_counter()
w5n = w5.normalized()
red, mono = strip_monomial_content(w5n)
t1 = time.perf_counter()
print("w5 terms:", len(w5n), "hom:", w5n.homogeneous_degree(),
      "content time:", f"{t1-t0:.2f}s", "mono:", mono)
print("w5 degs:", set(w5n.per_var_degrees().values()))
print("w5 support size:", len(w5n.support()))
