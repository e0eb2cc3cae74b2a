"""
Fixed-set cohomology of a circle action with two fixed components
=================================================================

Pick the Betti numbers of one fixed component and the two normal ranks,
solve for the rest, then run every consistency check on the result.
"""
from hamedge.errors import NotDivisible, NotSymplectic
from hamedge.polyalg import cp_poincare, gauss_binomial
from hamedge.simpleham import grassmann_triple, quadric_triple, solve_triple, suite_check

# A copy of CP^1 with normal rank 2 forces the other side and the total space.
t = solve_triple([1, 0, 1], 2, 2)
print("P1 =", t.p1, "  P =", t.p)
print("looks like CP^3:", t.p == cp_poincare(3))

# Not every choice divides out.
try:
    solve_triple([1], 2, 3)
except NotDivisible as exc:
    print("rejected:", exc)

# Some choices divide out but cannot be symplectic: a point with rank 2 on both
# sides gives the Betti numbers of S^4.
try:
    solve_triple([1], 2, 2)
except NotSymplectic as exc:
    print("rejected:", exc)
shell = solve_triple([1], 2, 2, symplectic=False)
print("without positivity the bound fails:", suite_check(shell)["dim_bound"].detail)

# Grassmannians: the fixed sets are smaller Grassmannians.
g = grassmann_triple(5, 2)
print(g.label, "P =", g.p, " equals [5,2]_q:", g.p == gauss_binomial(5, 2))
for check in suite_check(g):
    print(f"  {check.name:18s} {check.status}")

# Quadrics reach the dimension bound without being CP^m.
for m in (3, 4, 5):
    q = quadric_triple(m)
    print(f"quadric m={m}: P0 = {q.p0}, r = {q.r0}, extremal flag: {suite_check(q)['extremal_flag'].status}")
