"""Arrangements: restrictions of signed permutations to a row subset.

An arrangement places signed values with distinct absolute parts on an
ordered slot set I* inside {1, ..., n}.  Its parity sigma underpins the
rectangular determinant and the component character.  Two conventions are
exposed:

* canonical -- a total closed form: inversions among the values that lie
  in the slot set, plus the number of values from outside the slot set,
  plus the number of negative values, mod 2.  Each elementary move applied
  to the identity arrangement comes out odd.
* bfs-oracle -- breadth-first distance parity from the identity arrangement
  in the elementary-move graph (in-slot transposition, one-element
  replacement from the complement, single sign flip).  This notion is only
  well defined when the move graph is bipartite; the audit below measures
  exactly that.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Union

from .errors import (
    ConventionNotTotal,
    DimensionMismatch,
    IndexOutOfRange,
    SizeExceeded,
)
from .partitions import Partition
from .perms import Parity, SignedPermutation
from .rational import RationalMatrix


class ParityConvention(Enum):
    CANONICAL = "canonical"
    BFS_ORACLE = "bfs-oracle"


class IllDefinedType:
    """Report value for a parity the move graph cannot assign consistently."""

    _instance: Optional["IllDefinedType"] = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "IllDefined"


ILL_DEFINED = IllDefinedType()

ArrangementParity = Union[Parity, IllDefinedType]


@dataclass(frozen=True, slots=True)
class SignedArrangement:
    """Signed values with distinct absolute parts on an ascending slot set."""

    n: int
    slots: tuple[int, ...]
    values: tuple[int, ...]

    def __post_init__(self):
        slots = tuple(self.slots)
        values = tuple(self.values)
        if not slots:
            raise ValueError("slot set must be nonempty")
        if any(not 1 <= s <= self.n for s in slots):
            raise IndexOutOfRange(f"slots {slots} outside 1..{self.n}")
        if any(a >= b for a, b in zip(slots, slots[1:])):
            raise ValueError("slots must be strictly increasing")
        if len(values) != len(slots):
            raise ValueError("one value per slot required")
        absolutes = [abs(v) for v in values]
        if any(v == 0 or abs(v) > self.n for v in values):
            raise IndexOutOfRange(f"values {values} outside +-1..+-{self.n}")
        if len(set(absolutes)) != len(absolutes):
            raise ValueError("absolute values must be pairwise distinct")
        object.__setattr__(self, "slots", slots)
        object.__setattr__(self, "values", values)


def identity_arrangement(n: int, slots: Iterable[int]) -> SignedArrangement:
    slots = tuple(sorted(slots))
    return SignedArrangement(n, slots, slots)


def restrict(p: SignedPermutation, subset: Iterable[int]) -> SignedArrangement:
    """Restriction of a signed permutation to the given row subset."""
    slots = tuple(sorted(set(subset)))
    if any(not 1 <= s <= p.n for s in slots):
        raise IndexOutOfRange(f"subset {slots} outside 1..{p.n}")
    return SignedArrangement(p.n, slots, tuple(p(s) for s in slots))


def canonical_parity_bits(slots: tuple[int, ...], values: tuple[int, ...]) -> int:
    """Canonical sigma as a bit: in-slot inversions + displacements + sign flips."""
    slot_set = set(slots)
    in_slot = [abs(v) for v in values if abs(v) in slot_set]
    inv = sum(
        1
        for i in range(len(in_slot))
        for j in range(i + 1, len(in_slot))
        if in_slot[i] > in_slot[j]
    )
    displaced = len(values) - len(in_slot)
    negatives = sum(1 for v in values if v < 0)
    return (inv + displaced + negatives) & 1


def canonical_parity(a: SignedArrangement) -> Parity:
    return Parity.of_count(canonical_parity_bits(a.slots, a.values))


# -- the elementary-move graph -------------------------------------------


def _perm_count(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= n - i
    return out


class ArrangementGraph:
    """Exhaustive elementary-move graph over all signed arrangements on a slot set.

    Moves: swap two entries, flip one sign, or replace one entry's absolute
    value by an unused one (the sign stays on the slot).  Built breadth-first
    from the identity arrangement; the graph is connected.
    """

    def __init__(self, n: int, slots: Iterable[int], node_cap: int = 10**6):
        slots = tuple(sorted(set(slots)))
        if not slots:
            raise ValueError("slot set must be nonempty")
        if any(not 1 <= s <= n for s in slots):
            raise IndexOutOfRange(f"slots {slots} outside 1..{n}")
        self.n = n
        self.slots = slots
        k = len(slots)
        self.node_count = _perm_count(n, k) * (2**k)
        if self.node_count > node_cap:
            raise SizeExceeded(
                f"{self.node_count} arrangements exceed the node cap {node_cap}"
            )
        self._dist: dict[tuple[int, ...], int] = {}
        self._parent: dict[tuple[int, ...], Optional[tuple[int, ...]]] = {}
        self.odd_cycle: Optional[tuple[tuple[int, ...], ...]] = None
        self._explore()

    def _neighbors(self, values: tuple[int, ...]):
        k = len(values)
        # in-slot transpositions
        for i in range(k):
            for j in range(i + 1, k):
                out = list(values)
                out[i], out[j] = out[j], out[i]
                yield tuple(out)
        # single sign flips
        for i in range(k):
            out = list(values)
            out[i] = -out[i]
            yield tuple(out)
        # one-element replacements from the complement of the used values
        used = {abs(v) for v in values}
        for w in range(1, self.n + 1):
            if w in used:
                continue
            for i in range(k):
                out = list(values)
                out[i] = w if values[i] > 0 else -w
                yield tuple(out)

    def _explore(self) -> None:
        start = self.slots
        self._dist[start] = 0
        self._parent[start] = None
        frontier = [start]
        while frontier:
            nxt: list[tuple[int, ...]] = []
            for node in frontier:
                d = self._dist[node]
                for nb in self._neighbors(node):
                    if nb not in self._dist:
                        self._dist[nb] = d + 1
                        self._parent[nb] = node
                        nxt.append(nb)
                    elif self._dist[nb] == d and self.odd_cycle is None:
                        self.odd_cycle = self._close_cycle(node, nb)
            frontier = nxt
        if len(self._dist) != self.node_count:
            raise AssertionError("arrangement move graph failed to connect")

    def _close_cycle(
        self, u: tuple[int, ...], v: tuple[int, ...]
    ) -> tuple[tuple[int, ...], ...]:
        path_u = self._path_to_root(u)
        path_v = self._path_to_root(v)
        common = set(path_u) & set(path_v)
        iu = next(i for i, x in enumerate(path_u) if x in common)
        iv = next(i for i, x in enumerate(path_v) if x in common)
        # path_u[iu] == path_v[iv] is the meeting point; glue an odd cycle
        return tuple(path_u[: iu + 1][::-1] + path_v[:iv])

    def _path_to_root(self, node: tuple[int, ...]) -> list[tuple[int, ...]]:
        out = [node]
        while self._parent[out[-1]] is not None:
            out.append(self._parent[out[-1]])  # type: ignore[arg-type]
        return out

    @property
    def bipartite(self) -> bool:
        return self.odd_cycle is None

    def parity_of(self, values: tuple[int, ...]) -> ArrangementParity:
        if not self.bipartite:
            return ILL_DEFINED
        return Parity.of_count(self._dist[tuple(values)])

    def canonical_agreement(self) -> Optional[tuple[bool, Optional[tuple[int, ...]]]]:
        """(agrees, first disagreeing node) when bipartite, else None."""
        if not self.bipartite:
            return None
        for node, d in sorted(self._dist.items()):
            if (d & 1) != canonical_parity_bits(self.slots, node):
                return False, node
        return True, None


def arrangement_parity(
    a: SignedArrangement,
    convention: ParityConvention = ParityConvention.CANONICAL,
    node_cap: int = 10**6,
) -> ArrangementParity:
    """Parity of an arrangement under the chosen convention."""
    if convention is ParityConvention.CANONICAL:
        return canonical_parity(a)
    graph = ArrangementGraph(a.n, a.slots, node_cap=node_cap)
    return graph.parity_of(a.values)


@dataclass(frozen=True, slots=True)
class WellDefinednessReport:
    """Audit of distance parity on one slot set's elementary-move graph."""

    n: int
    slots: tuple[int, ...]
    node_count: int
    bipartite: bool
    odd_cycle: Optional[tuple[tuple[int, ...], ...]]
    canonical_agrees: Optional[bool]
    disagreement: Optional[tuple[int, ...]]


def parity_well_definedness_report(
    n: int, subset: Iterable[int], node_cap: int = 10**6
) -> WellDefinednessReport:
    """Build the full move graph and report bipartiteness and agreement."""
    subset = tuple(sorted(set(subset)))
    if not subset:
        raise ValueError("subset must be nonempty")
    graph = ArrangementGraph(n, subset, node_cap=node_cap)
    agrees: Optional[bool] = None
    witness: Optional[tuple[int, ...]] = None
    agreement = graph.canonical_agreement()
    if agreement is not None:
        agrees, witness = agreement
    return WellDefinednessReport(
        n=n,
        slots=graph.slots,
        node_count=graph.node_count,
        bipartite=graph.bipartite,
        odd_cycle=graph.odd_cycle,
        canonical_agrees=agrees,
        disagreement=witness,
    )


# -- rectangular determinant and component character ----------------------


class _SigmaOracle:
    """Parity provider for unsigned arrangements under a fixed convention."""

    def __init__(self, convention: ParityConvention, n: int, node_cap: int = 10**6):
        self.convention = convention
        self.n = n
        self.node_cap = node_cap
        self._graphs: dict[tuple[int, ...], ArrangementGraph] = {}

    def bit(self, slots: tuple[int, ...], values: tuple[int, ...]) -> int:
        if self.convention is ParityConvention.CANONICAL:
            return canonical_parity_bits(slots, values)
        graph = self._graphs.get(slots)
        if graph is None:
            graph = ArrangementGraph(self.n, slots, node_cap=self.node_cap)
            self._graphs[slots] = graph
        p = graph.parity_of(values)
        if p is ILL_DEFINED:
            raise ConventionNotTotal(
                f"bfs-oracle parity is ill-defined on slots {slots} of degree {self.n}"
            )
        return int(p)


def rect_det(
    M: RationalMatrix,
    rows: Iterable[int],
    convention: ParityConvention = ParityConvention.CANONICAL,
) -> Fraction:
    """Determinant of a row subset: signed sum over injective column choices.

    Sums (-1)^sigma(s) times the entry product over all injective
    assignments s of columns to the chosen rows; with all rows selected this
    is the ordinary determinant.
    """
    n = M.n
    row_list = tuple(sorted(set(rows)))
    if not row_list:
        raise ValueError("row subset must be nonempty")
    if any(not 1 <= r <= n for r in row_list):
        raise IndexOutOfRange(f"rows {row_list} outside 1..{n}")
    sigma = _SigmaOracle(convention, n)
    total = Fraction(0)
    for cols in itertools.permutations(range(1, n + 1), len(row_list)):
        prod = Fraction(1)
        for r, c in zip(row_list, cols):
            entry = M.rows[r - 1][c - 1]
            if entry == 0:
                prod = Fraction(0)
                break
            prod *= entry
        if prod == 0:
            continue
        sign = -1 if sigma.bit(row_list, cols) else 1
        total += sign * prod
    return total


def component_character(
    p: SignedPermutation,
    partition: "Partition",
    convention: ParityConvention = ParityConvention.CANONICAL,
) -> Fraction:
    """Product over partition blocks of the block-row rectangular determinants.

    For a signed permutation matrix each block has a single surviving column
    assignment, so the value is always +1 or -1.
    """
    if partition.n != p.n:
        raise DimensionMismatch(
            f"partition of {partition.n} does not match degree {p.n}"
        )
    q = p.inverse()
    sigma = _SigmaOracle(convention, p.n)
    out = Fraction(1)
    for block in partition.blocks():
        values = tuple(abs(q(r)) for r in block)
        entry_sign = 1
        for r in block:
            if q(r) < 0:
                entry_sign = -entry_sign
        sign = -1 if sigma.bit(block, values) else 1
        out *= sign * entry_sign
    return out


def matrix_component_character(
    M: RationalMatrix,
    partition: "Partition",
    convention: ParityConvention = ParityConvention.CANONICAL,
) -> Fraction:
    """Block-wise rectangular determinant product evaluated on a raw matrix."""
    out = Fraction(1)
    for block in partition.blocks():
        out *= rect_det(M, block, convention)
    return out


from .subgroups import Partition  # noqa: E402  (cycle broken: subgroups imports lazily)
