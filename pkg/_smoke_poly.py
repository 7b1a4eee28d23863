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
    MultiPoly, coeffs_in, determinant, exact_divide, poly_from_json_obj,
    poly_from_text, poly_to_json_obj, poly_to_text, predicted_resultant_degree,
    resultant, stats, strip_monomial_content, sylvester,
)

x = MultiPoly.var

# basic arithmetic
p = (x(1, 2) + x(3, 4)) * (x(1, 2) - x(3, 4))
q = x(1, 2) ** 2 - x(3, 4) ** 2
print("diff-of-squares:", p == q)

# k4-style bordered determinant via cofactor path
def cm_entry(i, j):
    if i == j:
        return MultiPoly.zero()
    return x(i, j)

labels = [1, 2, 3, 4]
rows = [[MultiPoly.zero()] + [MultiPoly.one()] * 4]
for i in labels:
    rows.append([MultiPoly.one()] + [cm_entry(i, j) for j in labels])
t0 = time.perf_counter()
k4 = determinant(rows).normalized()
t1 = time.perf_counter()
print("k4 terms:", len(k4), "hom:", k4.homogeneous_degree(),
      "degs:", set(k4.per_var_degrees().values()), f"{(t1-t0)*1e3:.2f}ms")
print("k4 lead:", k4.leading_term())
print("k4 text head:", poly_to_text(k4)[:80])

# round trips
assert poly_from_text(poly_to_text(k4)) == k4
assert poly_from_json_obj(poly_to_json_obj(k4)) == k4
print("round trips ok")

# exact divide
prod = k4 * p
assert exact_divide(prod, k4) == p
assert exact_divide(prod, p) == k4
assert exact_divide(k4 + MultiPoly.one(), k4) is None
print("exact divide ok")

# resultant of two univariatized polys vs known: res(x^2-1, x^2-4) in t=x12
t = x(1, 2)
f = t * t - 1
g = t * t - 4
r = resultant(f, g, (1, 2))
print("res(x^2-1,x^2-4) =", poly_to_text(r), "(expect 9)")

# banana: resultant of two K4 polynomials sharing edge (1,4)
def k4_poly(labels):
    rows = [[MultiPoly.zero()] + [MultiPoly.one()] * 4]
    for i in labels:
        rows.append([MultiPoly.one()] + [cm_entry(i, j) for j in labels])
    return determinant(rows).normalized()

a = k4_poly([1, 2, 3, 4])
b = k4_poly([1, 4, 5, 6])
sy = sylvester(a, b, (1, 4))
print("sylvester dim:", sy.dimension, "r,s:", sy.x_degree_f, sy.x_degree_g)
t0 = time.perf_counter()
ban = resultant(a, b, (1, 4))
t1 = time.perf_counter()
ban_n = ban.normalized()
red, mono = strip_monomial_content(ban_n)
print("banana terms:", len(ban_n), "hom:", ban_n.homogeneous_degree(),
      "mono content:", mono, f"{t1-t0:.2f}s")
print("banana degs:", set(ban_n.per_var_degrees().values()))
print("predicted deg:", predicted_resultant_degree(3, 3, 2, 2))
st = stats(ban_n)
print("stats:", st.term_count, st.homogeneous_degree)
