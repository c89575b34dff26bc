"""Instance generation: exhaustive sweeps, seeded random sets, structured families."""

from __future__ import annotations

import itertools
import math
import random
from typing import Iterator, List, Optional, Sequence, Tuple

from .groups import (
    CyclicGroup,
    Element,
    GSet,
    Group,
    IntegerWindow,
    TorsionGroup,
)
from .torsion import subgroup_generated

__all__ = [
    "exhaustive_sets",
    "random_sets",
    "progression",
    "union_progressions",
    "subspace_coset",
    "canonical_affine_form",
    "parse_group",
    "parse_elements",
    "parse_shape",
]


def _pool(group: Group) -> Sequence:
    if group.kind == "window":
        return range(group.lo, group.hi + 1)
    return range(group.order)


def _from_index(group: Group, i: int):
    if group.kind == "window":
        return i
    return group.element_at(i)


def exhaustive_sets(
    group: Group, max_size: int, min_size: int = 1, normalize: bool = False
) -> Iterator[GSet]:
    """All subsets with min_size <= |A| <= max_size, smallest first.

    With normalize=True (cyclic groups only) only the canonical
    representative of each translation/dilation orbit is yielded.
    """
    if max_size < min_size or min_size < 0:
        raise ValueError(f"bad size range [{min_size}, {max_size}]")
    if normalize and group.kind != "cyclic":
        raise ValueError("orbit normalization is defined for cyclic groups only")
    pool = _pool(group)
    for size in range(min_size, max_size + 1):
        for combo in itertools.combinations(pool, size):
            s = GSet(group, tuple(_from_index(group, i) for i in combo))
            if normalize and size > 0 and s != canonical_affine_form(s):
                continue
            yield s


def canonical_affine_form(A: GSet) -> GSet:
    """Lexicographically least image of A under x -> u*x + c with u a unit."""
    g = A.group
    if g.kind != "cyclic":
        raise ValueError("affine canonical form is defined for cyclic groups only")
    N = g.modulus
    if not A.elements:
        return A
    best: Optional[Tuple[int, ...]] = None
    for u in range(1, N):
        if math.gcd(u, N) != 1:
            continue
        vals = [(u * x) % N for x in A.elements]
        # the lex-least translate always sends some element to 0
        for v in vals:
            cand = tuple(sorted((x - v) % N for x in vals))
            if best is None or cand < best:
                best = cand
    return GSet(g, best)


def random_sets(group: Group, size: int, count: int, seed: int) -> List[GSet]:
    """count sets of the given size, reproducible from the seed."""
    pool = _pool(group)
    if size < 0 or size > len(pool):
        raise ValueError(f"cannot sample {size} distinct elements from {len(pool)}")
    rng = random.Random(seed)
    return [
        GSet(group, tuple(_from_index(group, i) for i in rng.sample(pool, size)))
        for _ in range(count)
    ]


def progression(group: Group, start: Element, step: Element, length: int) -> GSet:
    """{start, start+step, ..., start+(length-1)*step}; duplicates collapse."""
    if length < 1:
        raise ValueError(f"need length >= 1, got {length}")
    cur = group.normalize(start)
    step = group.normalize(step)
    out = [cur]
    for _ in range(length - 1):
        cur = group.add(cur, step)
        out.append(cur)
    return GSet(group, out)


def union_progressions(
    group: Group, parts: Sequence[Tuple[Element, Element, int]]
) -> GSet:
    """Union of progressions given as (start, step, length) triples."""
    if not parts:
        raise ValueError("need at least one progression")
    elems: list = []
    for start, step, length in parts:
        elems.extend(progression(group, start, step, length).elements)
    return GSet(group, elems)


def subspace_coset(
    group: TorsionGroup, basis: Sequence[Element], shift: Optional[Element] = None
) -> GSet:
    """shift + span(basis) inside (Z/rZ)^n."""
    span = subgroup_generated(GSet(group, basis))
    if shift is None:
        return span
    s = group.normalize(shift)
    return GSet(group, tuple(group.add(x, s) for x in span.elements))


def parse_group(spec: str) -> Group:
    """Parse "cyclic:N", "window:lo:hi", or "torsion:r:n"."""
    parts = spec.split(":")
    try:
        if parts[0] == "cyclic" and len(parts) == 2:
            return CyclicGroup(int(parts[1]))
        if parts[0] == "window" and len(parts) == 3:
            return IntegerWindow(int(parts[1]), int(parts[2]))
        if parts[0] == "torsion" and len(parts) == 3:
            return TorsionGroup(int(parts[1]), int(parts[2]))
    except ValueError as exc:
        raise ValueError(f"bad group spec {spec!r}: {exc}") from exc
    raise ValueError(f"bad group spec {spec!r}")


def parse_elements(spec: str, group: Group) -> GSet:
    """Parse "0,1,3" (cyclic/window) or "0,0,1;1,0,1" (torsion tuples)."""
    spec = spec.strip()
    if not spec:
        raise ValueError("empty element list")
    if group.kind == "torsion":
        elems: list = [
            tuple(int(c) for c in chunk.split(",")) for chunk in spec.split(";")
        ]
    else:
        elems = [int(c) for c in spec.split(",")]
    return GSet(group, elems)


def parse_shape(spec: str, group: Group, seed: int = 0) -> Iterator[GSet]:
    """Generator specs for the enumerate command.

    exhaustive:<max_size>[:normalize]  random:<size>:<count>
    progression:<start>:<step>:<length>  union:<a:d:l>;<a:d:l>...
    coset:<basis elements, ';'-separated>
    """
    head, _, rest = spec.partition(":")
    if head == "exhaustive":
        parts = rest.split(":")
        normalize = len(parts) > 1 and parts[1] == "normalize"
        return exhaustive_sets(group, int(parts[0]), normalize=normalize)
    if head == "random":
        size, count = rest.split(":")
        return iter(random_sets(group, int(size), int(count), seed))
    if head == "progression":
        a, d, l = rest.split(":")
        return iter([progression(group, _parse_one(a, group), _parse_one(d, group), int(l))])
    if head == "union":
        parts = []
        for chunk in rest.split(";"):
            a, d, l = chunk.split(":")
            parts.append((_parse_one(a, group), _parse_one(d, group), int(l)))
        return iter([union_progressions(group, parts)])
    if head == "coset":
        if group.kind != "torsion":
            raise ValueError("coset shapes need a torsion group")
        basis = [tuple(int(c) for c in chunk.split(",")) for chunk in rest.split(";")]
        return iter([subspace_coset(group, basis)])
    raise ValueError(f"unknown shape {head!r}")


def _parse_one(token: str, group: Group) -> Element:
    if group.kind == "torsion":
        return tuple(int(c) for c in token.split(","))
    return int(token)
