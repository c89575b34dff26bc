"""Independent brute-force reference implementations for the test suite.

Everything here is deliberately naive: plain loops, plain sets, no numpy,
no shared code with the library under test.  Slow is fine; wrong is not.
"""

import cmath
import itertools
import math
from fractions import Fraction


def naive_sumset_mod(A, B, N):
    return sorted({(a + b) % N for a in A for b in B})


def naive_sumset_int(A, B):
    return sorted({a + b for a in A for b in B})


def naive_sumset_vec(A, B, r):
    out = set()
    for a in A:
        for b in B:
            out.add(tuple((x + y) % r for x, y in zip(a, b)))
    return sorted(out)


def naive_iterated_mod(A, k, N):
    cur = sorted(set(a % N for a in A))
    for _ in range(k - 1):
        cur = naive_sumset_mod(cur, A, N)
    return cur


def brute_diameter(A, N):
    """Least l with A inside {a, a+d, ..., a+l*d}, minimized over all (d, a).

    Only invertible d can cover a set of more than one residue with fewer
    than N terms, so d ranges over the units.
    """
    A = sorted(set(x % N for x in A))
    if len(A) == 1:
        return 0
    best = N - 1
    for d in range(1, N):
        if math.gcd(d, N) != 1:
            continue
        inv = pow(d, -1, N)
        for a in A:
            positions = [((x - a) * inv) % N for x in A]
            best = min(best, max(positions))
    return best


def brute_j_count(k, m):
    count = 0
    for t in itertools.product(range(-m, m + 1), repeat=k):
        pos = sum(x for x in t if x > 0)
        neg = -sum(x for x in t if x < 0)
        if pos == neg and pos <= m:
            count += 1
    return count


def dft_coefficient(B, N, r):
    return sum(cmath.exp(2j * math.pi * b * r / N) for b in B)


def dirichlet_magnitude(length, r, N):
    """|B^(r)| for the interval {0, ..., length-1} in Z/N, in closed form."""
    if r % N == 0:
        return float(length)
    num = math.sin(math.pi * length * r / N)
    den = math.sin(math.pi * r / N)
    return abs(num / den)


def brute_freiman(A, mapping, k, add_domain, add_image):
    """Quadratic check over all pairs of k-multisets from A.

    True when domain sums agree exactly where image sums agree.  This is
    the definition, with none of the partition bookkeeping the library uses.
    """
    combos = list(itertools.combinations_with_replacement(sorted(A), k))

    def dsum(c):
        s = c[0]
        for x in c[1:]:
            s = add_domain(s, x)
        return s

    def isum(c):
        s = mapping[c[0]]
        for x in c[1:]:
            s = add_image(s, mapping[x])
        return s

    for c1, c2 in itertools.combinations(combos, 2):
        if (dsum(c1) == dsum(c2)) != (isum(c1) == isum(c2)):
            return False
    return True


def naive_subgroup(gens, r, n):
    """Closure of gens under addition mod r, coordinatewise, as a sorted list."""
    zero = (0,) * n
    members = {zero}
    frontier = {zero}
    gens = [tuple(x % r for x in g) for g in gens]
    while frontier:
        nxt = set()
        for f in frontier:
            for g in gens:
                s = tuple((a + b) % r for a, b in zip(f, g))
                if s not in members:
                    members.add(s)
                    nxt.add(s)
        frontier = nxt
    return sorted(members)


def naive_doubling(A, N):
    return Fraction(len(naive_sumset_mod(A, A, N)), len(set(x % N for x in A)))
