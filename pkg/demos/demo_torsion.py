"""
Subgroup covers in bounded-torsion groups
=========================================

"""

from addcomb import GSet, TorsionGroup, difference_set, subgroup_generated, torsion_cover

# In (Z/r)^n the right structural container is a coset of a subgroup,
# not a progression.  Start from three basis-ish vectors in (Z/2)^5.
g = TorsionGroup(2, 5)
A = GSet(g, [(0, 0, 0, 0, 0), (1, 1, 0, 0, 0), (0, 1, 1, 0, 0), (0, 0, 0, 1, 1)])

# gen(X) is the additive closure; over Z/2 it is the GF(2) span.
H = subgroup_generated(difference_set(A, A))
print("|gen(A - A)| =", len(H))

# The certificate wraps the closure with explicit verifiable claims:
# containment in a coset, the covering-translate inclusion, and two
# size bounds in terms of the doubling ratio.
cert = torsion_cover(A)
print("subgroup size:", cert.subgroup_size, " coset rep:", cert.coset_rep)
print("A inside the coset:", cert.contains_a)
print("doubling ratio:", cert.doubling)
print("|H| <= bound (a):", cert.bound_a, " holds:", cert.bound_a_holds)
print("|H| <= bound (b):", cert.bound_b, " holds:", cert.bound_b_holds)
print("translate route:", cert.route, " |T| =", len(cert.covering.translates))

# Tightness check: a full basis plus the origin generates everything,
# and the bounds must absorb that worst case too.
basis = [tuple(int(i == j) for i in range(5)) for j in range(5)]
full = GSet(g, [(0,) * 5] + basis)
cert = torsion_cover(full)
print("basis example: |H| =", cert.subgroup_size, "of", 2 ** 5, "elements")
print("size factor holds:", cert.size_factor_holds)
