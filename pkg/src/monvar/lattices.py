"""Finite lattices given by cover relations, and element-wise special properties.

Provides brute-force (but vectorized) tests for modular, cancellable and
costandard elements, whole-lattice modularity/distributivity with witness
triples, partition lattices under refinement, and the bundled example
lattices shipped as data files.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

import numpy as np

from .words import ParseError


class NotALattice(ValueError):
    """The given order lacks a meet or join for some pair."""


class CycleError(ValueError):
    """The cover relation or order matrix is not antisymmetric."""


@dataclass(frozen=True)
class Check:
    """Boolean verdict plus a counterexample (names) when the answer is no."""

    ok: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.ok


class FiniteLattice:
    """A finite lattice over named elements.

    `leq` is the full reflexive-transitive order matrix; meet and join
    tables are derived on construction, raising NotALattice with the
    offending pair if either is missing somewhere.
    """

    def __init__(self, names, leq):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("element names must be distinct")
        n = len(names)
        leq = np.array(leq, dtype=bool)
        if leq.shape != (n, n):
            raise ValueError("order matrix shape does not match element count")
        if not leq.diagonal().all():
            raise ValueError("order matrix must be reflexive")
        both = leq & leq.T & ~np.eye(n, dtype=bool)
        if both.any():
            i, j = map(int, np.argwhere(both)[0])
            raise CycleError(f"{names[i]} and {names[j]} are mutually below each other")
        closed = _transitive_closure(leq)
        if not np.array_equal(closed, leq):
            raise ValueError("order matrix must be transitively closed")
        self.names = names
        self.leq = leq
        self.meet, self.join = _meet_join_tables(names, leq)
        self._index = {name: i for i, name in enumerate(names)}

    @classmethod
    def from_covers(cls, names, covers):
        """Build from a cover list of (lower, upper) name pairs."""
        names = tuple(names)
        idx = {name: i for i, name in enumerate(names)}
        n = len(names)
        rel = np.eye(n, dtype=bool)
        for lo, hi in covers:
            if lo not in idx or hi not in idx:
                missing = lo if lo not in idx else hi
                raise ValueError(f"cover mentions unknown element {missing!r}")
            if lo == hi:
                raise CycleError(f"cover {lo} < {hi} relates an element to itself")
            rel[idx[lo], idx[hi]] = True
        leq = _transitive_closure(rel)
        both = leq & leq.T & ~np.eye(n, dtype=bool)
        if both.any():
            i, j = map(int, np.argwhere(both)[0])
            raise CycleError(f"covers create a cycle through {names[i]} and {names[j]}")
        return cls(names, leq)

    def __len__(self):
        return len(self.names)

    def __repr__(self):
        return f"FiniteLattice({len(self)} elements)"

    def index(self, element) -> int:
        if isinstance(element, (int, np.integer)):
            if not 0 <= element < len(self):
                raise KeyError(f"element index {element} out of range")
            return int(element)
        try:
            return self._index[element]
        except KeyError:
            raise KeyError(f"no element named {element!r}") from None

    def le(self, a, b) -> bool:
        return bool(self.leq[self.index(a), self.index(b)])

    def meet_of(self, a, b) -> str:
        return self.names[self.meet[self.index(a), self.index(b)]]

    def join_of(self, a, b) -> str:
        return self.names[self.join[self.index(a), self.index(b)]]

    @property
    def bottom(self) -> str:
        return self.names[int(np.argmax(self.leq.all(axis=1)))]

    @property
    def top(self) -> str:
        return self.names[int(np.argmax(self.leq.all(axis=0)))]


def _transitive_closure(rel):
    closed = rel.copy()
    while True:
        nxt = closed | (closed @ closed)
        if np.array_equal(nxt, closed):
            return closed
        closed = nxt


def _meet_join_tables(names, leq):
    n = len(names)
    leq_dn = leq.astype(np.int32)  # leq_dn[k, g]: k below g
    meet = np.empty((n, n), dtype=np.int32)
    join = np.empty((n, n), dtype=np.int32)
    for i in range(n):
        for j in range(i, n):
            low = leq[:, i] & leq[:, j]
            hits = low @ leq_dn  # hits[g] counts lower bounds below g
            cand = np.flatnonzero(low & (hits == low.sum()))
            if len(cand) != 1:
                raise NotALattice(f"{names[i]} and {names[j]} have no meet")
            meet[i, j] = meet[j, i] = cand[0]
            up = leq[i, :] & leq[j, :]
            hits = leq_dn @ up  # hits[g] counts upper bounds above g
            cand = np.flatnonzero(up & (hits == up.sum()))
            if len(cand) != 1:
                raise NotALattice(f"{names[i]} and {names[j]} have no join")
            join[i, j] = join[j, i] = cand[0]
    return meet, join


# ---------------------------------------------------------------------------
# element properties


def is_modular_element(lat: FiniteLattice, element) -> Check:
    """a <= b must force (x v a) ^ b == (x ^ b) v a; witness is a bad (a, b)."""
    x = lat.index(element)
    mx = lat.meet[x]  # row: x ^ b over b
    jx = lat.join[:, x]  # column: a v x over a
    lhs = lat.join[:, mx]  # [a, b] -> a v (x ^ b)
    rhs = lat.meet[jx]  # [a, b] -> (a v x) ^ b
    bad = (lhs != rhs) & lat.leq
    if not bad.any():
        return Check(True)
    a, b = map(int, np.argwhere(bad)[0])
    return Check(False, (lat.names[a], lat.names[b]))


def is_cancellable_element(lat: FiniteLattice, element) -> Check:
    """Joining and meeting with the element must separate distinct elements."""
    x = lat.index(element)
    jx = lat.join[x]
    mx = lat.meet[x]
    same = (jx[:, None] == jx[None, :]) & (mx[:, None] == mx[None, :])
    same &= ~np.eye(len(lat), dtype=bool)
    if not same.any():
        return Check(True)
    a, b = map(int, np.argwhere(same)[0])
    return Check(False, (lat.names[a], lat.names[b]))


def is_costandard_element(lat: FiniteLattice, element) -> Check:
    """a v (x ^ b) == (a v x) ^ (a v b) for all a, b; witness is a bad (a, b)."""
    x = lat.index(element)
    mx = lat.meet[x]
    jx = lat.join[:, x]
    lhs = lat.join[:, mx]  # [a, b] -> a v (x ^ b)
    rhs = lat.meet[jx[:, None], lat.join]  # [a, b] -> (a v x) ^ (a v b)
    bad = lhs != rhs
    if not bad.any():
        return Check(True)
    a, b = map(int, np.argwhere(bad)[0])
    return Check(False, (lat.names[a], lat.names[b]))


@dataclass(frozen=True)
class ElementReport:
    element: str
    modular: Check
    cancellable: Check
    costandard: Check


def classify_element(lat: FiniteLattice, element) -> ElementReport:
    return ElementReport(
        element=lat.names[lat.index(element)],
        modular=is_modular_element(lat, element),
        cancellable=is_cancellable_element(lat, element),
        costandard=is_costandard_element(lat, element),
    )


def is_modular_lattice(lat: FiniteLattice) -> Check:
    """Witness on failure is a triple (a, x, b) with a <= b breaking the law."""
    for a in range(len(lat)):
        lhs = lat.join[a][lat.meet]  # [x, b] -> a v (x ^ b)
        rhs = lat.meet[lat.join[a]]  # [x, b] -> (a v x) ^ b
        bad = (lhs != rhs) & lat.leq[a][None, :]
        if bad.any():
            x, b = map(int, np.argwhere(bad)[0])
            return Check(False, (lat.names[a], lat.names[x], lat.names[b]))
    return Check(True)


def is_distributive_lattice(lat: FiniteLattice) -> Check:
    """Witness on failure is (x, y, z) with x ^ (y v z) != (x ^ y) v (x ^ z)."""
    for x in range(len(lat)):
        mx = lat.meet[x]
        lhs = mx[lat.join]  # [y, z] -> x ^ (y v z)
        rhs = lat.join[mx[:, None], mx[None, :]]  # [y, z] -> (x^y) v (x^z)
        bad = lhs != rhs
        if bad.any():
            y, z = map(int, np.argwhere(bad)[0])
            return Check(False, (lat.names[x], lat.names[y], lat.names[z]))
    return Check(True)


# ---------------------------------------------------------------------------
# partition lattices


@dataclass(frozen=True)
class Partition:
    """A set partition of {1, ..., k}, labelled like 12|3|4."""

    blocks: frozenset

    @classmethod
    def of(cls, blocks) -> "Partition":
        blocks = frozenset(frozenset(b) for b in blocks)
        seen = sorted(e for b in blocks for e in b)
        if not blocks or any(not b for b in blocks):
            raise ValueError("blocks must be nonempty")
        if seen != list(range(1, len(seen) + 1)):
            raise ValueError("blocks must partition 1..k without repeats or gaps")
        return cls(blocks)

    @property
    def ground_size(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def label(self) -> str:
        parts = sorted(sorted(b) for b in self.blocks)
        return "|".join("".join(str(e) for e in b) for b in parts)

    def refines(self, other: "Partition") -> bool:
        return all(any(b <= c for c in other.blocks) for b in self.blocks)

    def __str__(self):
        return self.label


def all_partitions(k: int) -> list[Partition]:
    """Every partition of {1, ..., k}, in restricted-growth order."""
    if k < 1:
        raise ValueError("need k >= 1")
    out = []

    def grow(assign, used):
        i = len(assign) + 1
        if i > k:
            blocks = [[] for _ in range(used)]
            for e, b in enumerate(assign, start=1):
                blocks[b].append(e)
            out.append(Partition.of(blocks))
            return
        for b in range(used + 1):
            grow(assign + [b], max(used, b + 1))

    grow([], 0)
    return out


def partition_lattice(k: int) -> FiniteLattice:
    """Partitions of {1..k} ordered by refinement (finer below coarser)."""
    if not 1 <= k <= 6:
        raise ValueError("partition lattices are supported for 1 <= k <= 6")
    parts = all_partitions(k)
    n = len(parts)
    leq = np.zeros((n, n), dtype=bool)
    for i, p in enumerate(parts):
        for j, q in enumerate(parts):
            leq[i, j] = p.refines(q)
    return FiniteLattice([p.label for p in parts], leq)


def jezek_modular(p: Partition) -> bool:
    """Closed-form test for modular elements of a partition lattice:
    at most one block may have more than one point."""
    return sum(1 for b in p.blocks if len(b) > 1) <= 1


# ---------------------------------------------------------------------------
# file format and bundled examples


def parse_lattice(text: str) -> FiniteLattice:
    """Parse the cover-list format::

        elems: 0 a b 1
        cover: 0 < a
        cover: a < 1
        cover: 0 < b
        cover: b < 1

    Blank lines and # comments are skipped."""
    names = None
    covers = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("elems:"):
            if names is not None:
                raise ParseError("duplicate elems: line")
            names = line[len("elems:"):].split()
            if not names:
                raise ParseError("elems: line lists no elements")
        elif line.startswith("cover:"):
            body = line[len("cover:"):]
            sides = [s.strip() for s in body.split("<")]
            if len(sides) != 2 or not all(sides):
                raise ParseError(f"cover line must read 'cover: a < b': {raw.strip()!r}")
            covers.append((sides[0], sides[1]))
        else:
            raise ParseError(f"unrecognized line: {raw.strip()!r}")
    if names is None:
        raise ParseError("missing elems: line")
    try:
        return FiniteLattice.from_covers(names, covers)
    except (NotALattice, CycleError):
        raise
    except ValueError as exc:  # unknown element names and the like
        raise ParseError(str(exc)) from None


def load_lattice(path) -> FiniteLattice:
    with open(path, encoding="utf-8") as fh:
        return parse_lattice(fh.read())


_FIXTURE_FILES = {"fig1": "fig1.lat", "fig2": "fig2.lat", "chainD": "chain_d.lat"}


@lru_cache(maxsize=None)
def fixtures() -> dict:
    """The bundled example lattices, keyed fig1 / fig2 / chainD."""
    out = {}
    data = resources.files("monvar") / "data"
    for key, fname in _FIXTURE_FILES.items():
        out[key] = parse_lattice((data / fname).read_text(encoding="utf-8"))
    return out
