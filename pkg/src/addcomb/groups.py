"""Ambient groups, finite subsets, and exact sumset arithmetic.

Three ambient groups are supported: Z/NZ, a window of Z, and (Z/rZ)^n.
Elements are plain ints for the first two and coordinate tuples for the
third.  All set arithmetic is exact; floats never enter this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import ClassVar, Iterable, Iterator, Sequence, Tuple, Union

import numpy as np

__all__ = [
    "CyclicGroup",
    "IntegerWindow",
    "TorsionGroup",
    "Group",
    "Element",
    "GSet",
    "GroupMismatchError",
    "BudgetError",
    "sumset",
    "difference_set",
    "iterated_sum",
    "dilate",
    "translate",
    "negate",
    "is_subset",
    "doubling_ratio",
    "difference_ratio",
    "min_growth_ratio",
]

Element = Union[int, Tuple[int, ...]]

# Above this order the dense cyclic representation (one bit per residue) is
# not built and sumsets fall back to pairwise enumeration.
DENSE_ORDER_LIMIT = 1 << 24

# Cap on |A|*|B| for a single pairwise-enumeration block; larger products are
# processed in chunks to bound memory.
_OUTER_BLOCK = 1 << 22


class GroupMismatchError(ValueError):
    """Operands live in different ambient groups."""


class BudgetError(RuntimeError):
    """A search or enumeration exceeded its configured budget."""


@dataclass(frozen=True)
class CyclicGroup:
    """The cyclic group Z/NZ with elements 0..N-1."""

    modulus: int
    kind: ClassVar[str] = "cyclic"

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")

    @property
    def order(self) -> int:
        return self.modulus

    def ambient(self) -> tuple:
        return ("cyclic", self.modulus)

    def normalize(self, x: Element) -> int:
        if isinstance(x, bool) or not isinstance(x, (int, np.integer)):
            raise ValueError(f"cyclic element must be an integer, got {x!r}")
        return int(x) % self.modulus

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.modulus

    def neg(self, a: int) -> int:
        return (-a) % self.modulus

    def index(self, x: int) -> int:
        return x

    def element_at(self, i: int) -> int:
        return i

    def elements(self) -> Iterator[int]:
        return iter(range(self.modulus))


@dataclass(frozen=True)
class IntegerWindow:
    """A window [lo, hi] of the integers; the ambient group is Z itself."""

    lo: int
    hi: int
    kind: ClassVar[str] = "window"

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"window requires lo <= hi, got [{self.lo}, {self.hi}]")
        # int64 headroom for vectorized sums of two window elements
        if max(abs(self.lo), abs(self.hi)) > (1 << 61):
            raise ValueError("window bounds exceed the representable range")

    @property
    def order(self) -> None:
        return None

    def ambient(self) -> tuple:
        return ("window",)

    def normalize(self, x: Element) -> int:
        if isinstance(x, bool) or not isinstance(x, (int, np.integer)):
            raise ValueError(f"window element must be an integer, got {x!r}")
        x = int(x)
        if not self.lo <= x <= self.hi:
            raise ValueError(f"element {x} outside window [{self.lo}, {self.hi}]")
        return x

    def add(self, a: int, b: int) -> int:
        return a + b

    def neg(self, a: int) -> int:
        return -a


@dataclass(frozen=True)
class TorsionGroup:
    """The product (Z/rZ)^n; every element has order dividing r."""

    exponent: int
    rank: int
    kind: ClassVar[str] = "torsion"

    def __post_init__(self) -> None:
        if self.exponent < 2:
            raise ValueError(f"exponent must be >= 2, got {self.exponent}")
        if self.rank < 1:
            raise ValueError(f"rank must be >= 1, got {self.rank}")
        if self.exponent ** self.rank > DENSE_ORDER_LIMIT:
            raise ValueError("torsion group order exceeds the supported range")

    @property
    def order(self) -> int:
        return self.exponent ** self.rank

    def ambient(self) -> tuple:
        return ("torsion", self.exponent, self.rank)

    def normalize(self, x: Element) -> Tuple[int, ...]:
        if isinstance(x, (int, np.integer)) and not isinstance(x, bool) and self.rank == 1:
            x = (int(x),)
        if not isinstance(x, (tuple, list)) or len(x) != self.rank:
            raise ValueError(
                f"torsion element must have {self.rank} coordinates, got {x!r}"
            )
        return tuple(int(c) % self.exponent for c in x)

    def add(self, a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
        r = self.exponent
        return tuple((x + y) % r for x, y in zip(a, b))

    def neg(self, a: Tuple[int, ...]) -> Tuple[int, ...]:
        r = self.exponent
        return tuple((-x) % r for x in a)

    def index(self, x: Tuple[int, ...]) -> int:
        i = 0
        for c in x:
            i = i * self.exponent + c
        return i

    def element_at(self, i: int) -> Tuple[int, ...]:
        coords = []
        for _ in range(self.rank):
            i, c = divmod(i, self.exponent)
            coords.append(c)
        return tuple(reversed(coords))

    def elements(self) -> Iterator[Tuple[int, ...]]:
        return (self.element_at(i) for i in range(self.order))


Group = Union[CyclicGroup, IntegerWindow, TorsionGroup]


def _require_same_ambient(a: "GSet", b: "GSet") -> None:
    if a.group.ambient() != b.group.ambient():
        raise GroupMismatchError(
            f"incompatible groups {a.group!r} and {b.group!r}"
        )


class GSet:
    """An immutable finite subset of an ambient group.

    Elements are stored sorted (lexicographically for tuples), which is also
    the canonical serialization order.  Dense views (a bitmask over the index
    space, a numpy index array) are built lazily and cached.
    """

    __slots__ = ("group", "elements", "_set", "_packed", "_mask")

    def __init__(self, group: Group, elements: Iterable[Element] = ()):
        norm = {group.normalize(x) for x in elements}
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "elements", tuple(sorted(norm)))
        object.__setattr__(self, "_set", None)
        object.__setattr__(self, "_packed", None)
        object.__setattr__(self, "_mask", None)

    def __setattr__(self, name, value):
        raise AttributeError("GSet is immutable")

    @classmethod
    def _from_sorted(cls, group: Group, elements: tuple) -> "GSet":
        # internal fast path: elements already normalized, deduped, sorted
        obj = object.__new__(cls)
        object.__setattr__(obj, "group", group)
        object.__setattr__(obj, "elements", elements)
        object.__setattr__(obj, "_set", None)
        object.__setattr__(obj, "_packed", None)
        object.__setattr__(obj, "_mask", None)
        return obj

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Element]:
        return iter(self.elements)

    def __contains__(self, x: object) -> bool:
        try:
            x = self.group.normalize(x)  # type: ignore[arg-type]
        except ValueError:
            return False
        return x in self.as_set()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GSet):
            return NotImplemented
        return (
            self.group.ambient() == other.group.ambient()
            and self.elements == other.elements
        )

    def __hash__(self) -> int:
        return hash((self.group.ambient(), self.elements))

    def __repr__(self) -> str:
        shown = ", ".join(map(str, self.elements[:8]))
        if len(self.elements) > 8:
            shown += f", ... ({len(self.elements)} elements)"
        return f"GSet({self.group!r}, {{{shown}}})"

    def __add__(self, other: "GSet") -> "GSet":
        return sumset(self, other)

    def __sub__(self, other: "GSet") -> "GSet":
        return difference_set(self, other)

    def __neg__(self) -> "GSet":
        return negate(self)

    def as_set(self) -> frozenset:
        if self._set is None:
            object.__setattr__(self, "_set", frozenset(self.elements))
        return self._set

    def packed(self) -> np.ndarray:
        """Element indices as a sorted int64 array (not for windows with huge spread)."""
        if self._packed is None:
            g = self.group
            if g.kind == "torsion":
                arr = np.fromiter(
                    (g.index(x) for x in self.elements), dtype=np.int64, count=len(self)
                )
            else:
                arr = np.asarray(self.elements, dtype=np.int64)
            object.__setattr__(self, "_packed", arr)
        return self._packed

    def bitmask(self) -> int:
        """Indicator of the set as a python int over the group's index space."""
        g = self.group
        if g.kind == "window":
            raise ValueError("bitmask is only defined for finite groups")
        if g.order > DENSE_ORDER_LIMIT:
            raise BudgetError(f"group order {g.order} too large for a dense bitmask")
        if self._mask is None:
            m = 0
            if g.kind == "cyclic":
                for x in self.elements:
                    m |= 1 << x
            else:
                for x in self.elements:
                    m |= 1 << g.index(x)
            object.__setattr__(self, "_mask", m)
        return self._mask

    def indicator(self) -> np.ndarray:
        """Dense 0/1 indicator array (cyclic: length N; torsion: shape (r,)*n)."""
        g = self.group
        if g.kind == "window":
            raise ValueError("indicator is only defined for finite groups")
        if g.order > DENSE_ORDER_LIMIT:
            raise BudgetError(f"group order {g.order} too large for an indicator")
        ind = np.zeros(g.order, dtype=np.uint8)
        ind[self.packed()] = 1
        if g.kind == "torsion":
            return ind.reshape((g.exponent,) * g.rank)
        return ind


def _mask_to_gset(group: Group, mask: int) -> GSet:
    n = group.order
    nbytes = (n + 7) // 8
    raw = np.frombuffer(mask.to_bytes(nbytes, "little"), dtype=np.uint8)
    bits = np.unpackbits(raw, bitorder="little")[:n]
    idx = np.nonzero(bits)[0]
    if group.kind == "cyclic":
        elems = tuple(int(i) for i in idx)
    else:
        elems = tuple(group.element_at(int(i)) for i in idx)
    return GSet._from_sorted(group, elems)


def _rotl(mask: int, shift: int, n: int, full: int) -> int:
    shift %= n
    if shift == 0:
        return mask
    return ((mask << shift) | (mask >> (n - shift))) & full


def _torsion_index_add(a: np.ndarray, b: np.ndarray, r: int, n: int) -> np.ndarray:
    """Digitwise (mod r) sum of packed torsion indices; shapes broadcast."""
    out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
    place = r ** (n - 1)
    for _ in range(n):
        da = (a // place) % r
        db = (b // place) % r
        out += ((da + db) % r) * place
        place //= r
    return out


def _unique_int64(chunks: list) -> np.ndarray:
    if not chunks:
        return np.empty(0, dtype=np.int64)
    return np.unique(np.concatenate(chunks))


def _sumset_cyclic(A: GSet, B: GSet) -> GSet:
    g: CyclicGroup = A.group  # type: ignore[assignment]
    N = g.modulus
    small, large = (A, B) if len(A) <= len(B) else (B, A)
    pair_cost = len(A) * len(B)
    mask_cost = len(small) * (N // 64 + 1)
    if N <= DENSE_ORDER_LIMIT and mask_cost < pair_cost:
        full = (1 << N) - 1
        lm = large.bitmask()
        acc = 0
        for x in small.elements:
            acc |= _rotl(lm, x, N, full)
        return _mask_to_gset(g, acc)
    pa, pb = large.packed(), small.packed()
    chunks = []
    step = max(1, _OUTER_BLOCK // max(1, len(pa)))
    for i in range(0, len(pb), step):
        s = (pa[None, :] + pb[i : i + step, None]) % N
        chunks.append(np.unique(s.ravel()))
    idx = _unique_int64(chunks)
    return GSet._from_sorted(g, tuple(int(i) for i in idx))


def _sumset_window(A: GSet, B: GSet) -> GSet:
    pa, pb = A.packed(), B.packed()
    chunks = []
    step = max(1, _OUTER_BLOCK // max(1, len(pa)))
    for i in range(0, len(pb), step):
        s = pa[None, :] + pb[i : i + step, None]
        chunks.append(np.unique(s.ravel()))
    vals = _unique_int64(chunks)
    elems = tuple(int(v) for v in vals)
    win = IntegerWindow(int(vals[0]), int(vals[-1]))
    return GSet._from_sorted(win, elems)


def _sumset_torsion(A: GSet, B: GSet) -> GSet:
    g: TorsionGroup = A.group  # type: ignore[assignment]
    r, n = g.exponent, g.rank
    pa, pb = A.packed(), B.packed()
    chunks = []
    step = max(1, _OUTER_BLOCK // max(1, len(pa)))
    for i in range(0, len(pb), step):
        s = _torsion_index_add(pa[None, :], pb[i : i + step, None], r, n)
        chunks.append(np.unique(s.ravel()))
    idx = _unique_int64(chunks)
    elems = tuple(g.element_at(int(i)) for i in idx)
    return GSet._from_sorted(g, elems)


def sumset(A: GSet, B: GSet) -> GSet:
    """Minkowski sum {a + b : a in A, b in B}."""
    _require_same_ambient(A, B)
    if not A.elements or not B.elements:
        if A.group.kind == "window":
            lo = A.group.lo + B.group.lo  # type: ignore[union-attr]
            hi = A.group.hi + B.group.hi  # type: ignore[union-attr]
            return GSet._from_sorted(IntegerWindow(lo, hi), ())
        return GSet._from_sorted(A.group, ())
    kind = A.group.kind
    if kind == "cyclic":
        return _sumset_cyclic(A, B)
    if kind == "window":
        return _sumset_window(A, B)
    return _sumset_torsion(A, B)


def negate(A: GSet) -> GSet:
    """The set {-a : a in A}."""
    g = A.group
    if g.kind == "window":
        win = IntegerWindow(-g.hi, -g.lo)  # type: ignore[union-attr]
        return GSet._from_sorted(win, tuple(-x for x in reversed(A.elements)))
    return GSet._from_sorted(g, tuple(sorted(g.neg(x) for x in A.elements)))


def difference_set(A: GSet, B: GSet) -> GSet:
    """Minkowski difference {a - b : a in A, b in B}."""
    return sumset(A, negate(B))


def iterated_sum(A: GSet, k: int) -> GSet:
    """The k-fold sumset A + A + ... + A."""
    if k < 1:
        raise ValueError(f"fold count must be >= 1, got {k}")
    acc = A
    order = A.group.order
    for _ in range(k - 1):
        if order is not None and len(acc) == order:
            break  # saturated; further sums cannot grow (0-free groups aside, A+G=G)
        acc = sumset(acc, A)
    return acc


def translate(A: GSet, c: Element) -> GSet:
    """The set A + c."""
    g = A.group
    if g.kind == "window":
        c = int(c)
        win = IntegerWindow(g.lo + c, g.hi + c)  # type: ignore[union-attr]
        return GSet._from_sorted(win, tuple(x + c for x in A.elements))
    c = g.normalize(c)
    return GSet._from_sorted(g, tuple(sorted(g.add(x, c) for x in A.elements)))


def dilate(A: GSet, lam: int, require_unit: bool = False) -> GSet:
    """The set lam*A = {lam*a : a in A}."""
    lam = int(lam)
    g = A.group
    if g.kind == "cyclic":
        if require_unit and math.gcd(lam, g.modulus) != 1:
            raise ValueError(f"{lam} is not invertible mod {g.modulus}")
        return GSet._from_sorted(
            g, tuple(sorted({(lam * x) % g.modulus for x in A.elements}))
        )
    if g.kind == "window":
        if require_unit and lam == 0:
            raise ValueError("dilation by 0 is not injective on Z")
        if not A.elements:
            b1, b2 = sorted((lam * g.lo, lam * g.hi))
            return GSet._from_sorted(IntegerWindow(b1, b2), ())
        vals = sorted({lam * x for x in A.elements})
        return GSet._from_sorted(IntegerWindow(vals[0], vals[-1]), tuple(vals))
    if require_unit and math.gcd(lam, g.exponent) != 1:
        raise ValueError(f"{lam} is not invertible mod {g.exponent}")
    r = g.exponent
    return GSet._from_sorted(
        g, tuple(sorted({tuple((lam * c) % r for c in x) for x in A.elements}))
    )


def is_subset(A: GSet, B: GSet) -> bool:
    """True when every element of A lies in B."""
    _require_same_ambient(A, B)
    return A.as_set() <= B.as_set()


def doubling_ratio(A: GSet) -> Fraction:
    """|A+A| / |A| as an exact rational."""
    if not A.elements:
        raise ValueError("doubling ratio of the empty set is undefined")
    return Fraction(len(sumset(A, A)), len(A))


def difference_ratio(A: GSet) -> Fraction:
    """|A-A| / |A| as an exact rational."""
    if not A.elements:
        raise ValueError("difference ratio of the empty set is undefined")
    return Fraction(len(difference_set(A, A)), len(A))


def min_growth_ratio(A: GSet) -> Fraction:
    """min(|A+A|, |A-A|) / |A|, the ratio the structure theorems key on."""
    return min(doubling_ratio(A), difference_ratio(A))
