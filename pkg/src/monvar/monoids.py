"""Finite monoids: presentations, Cayley tables, products, model checking.

Elements are indices 0..n-1 with display names; tables are numpy int
matrices.  Presentations with zero use factor-exclusion normal forms
(a word is zero iff it contains a relator factor); general relations
are oriented length-lexicographically and applied to a fixpoint, with
loud failure when that does not produce a closed associative table.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass

import numpy as np

from .words import Identity, ParseError, format_word, initial_part, parse_word


class InvalidTable(ValueError):
    """Table fails associativity/neutrality/absorption, with witness."""


class UnsupportedPresentation(ValueError):
    """Presentation's oriented rules do not yield a closed normal-form table."""


class LikelyInfinite(RuntimeError):
    """Normal-form enumeration exceeded the element cap."""


class SearchCapExceeded(RuntimeError):
    """Brute-force assignment space beyond the desk-scale ceiling."""


@dataclass(frozen=True)
class Presentation:
    """Monoid presentation; a relation right side of None means zero."""

    generators: tuple[str, ...]
    relations: tuple[tuple[str, str | None], ...]

    def __post_init__(self):
        gens = set(self.generators)
        if len(self.generators) != len(gens):
            raise ParseError("repeated generator")
        for lhs, rhs in self.relations:
            used = set(lhs) | set(rhs or "")
            if not used <= gens:
                bad = "".join(sorted(used - gens))
                raise ParseError(f"relation uses letters outside the generators: {bad}")

    @property
    def has_zero(self) -> bool:
        return any(rhs is None for _, rhs in self.relations)


def presentation(gens: str, *rels: str) -> Presentation:
    """Convenience builder: presentation("a b", "a2=0", "ab=ba")."""
    parsed = []
    for rel in rels:
        if rel.count("=") != 1:
            raise ParseError(f"relation needs exactly one '=': {rel!r}")
        lhs, rhs = (side.strip() for side in rel.split("="))
        parsed.append((parse_word(lhs), None if rhs == "0" else parse_word(rhs)))
    return Presentation(tuple(gens.split()), tuple(parsed))


@dataclass(frozen=True)
class IndexPeriod:
    index: int
    period: int


class FiniteMonoid:
    """Validated multiplication table with named elements."""

    def __init__(self, names, table, one: int, zero: int | None = None,
                 check: bool = True):
        self.names = tuple(names)
        self.table = np.asarray(table, dtype=np.int32)
        self.one = one
        self.zero = zero
        self._index = {nm: i for i, nm in enumerate(self.names)}
        if len(self._index) != len(self.names):
            raise InvalidTable("element names are not distinct")
        if check:
            self.validate()

    def __len__(self):
        return len(self.names)

    def __repr__(self):
        return f"<FiniteMonoid of order {len(self)}, one={self.names[self.one]!r}>"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"no element named {name!r}") from None

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def power(self, i: int, k: int) -> int:
        acc = self.one
        for _ in range(k):
            acc = self.mul(acc, i)
        return acc

    def validate(self):
        n = len(self.names)
        t = self.table
        if t.shape != (n, n):
            raise InvalidTable(f"table shape {t.shape} does not match {n} elements")
        if n and (t.min() < 0 or t.max() >= n):
            raise InvalidTable("table entry out of range")
        ident = np.arange(n, dtype=t.dtype)
        if not (np.array_equal(t[self.one], ident) and np.array_equal(t[:, self.one], ident)):
            bad = next(i for i in range(n)
                       if t[self.one, i] != i or t[i, self.one] != i)
            raise InvalidTable(
                f"{self.names[self.one]!r} is not a two-sided identity "
                f"(witness {self.names[bad]!r})")
        if self.zero is not None:
            z = self.zero
            if not ((t[z] == z).all() and (t[:, z] == z).all()):
                bad = next(i for i in range(n) if t[z, i] != z or t[i, z] != z)
                raise InvalidTable(
                    f"{self.names[z]!r} is not absorbing (witness {self.names[bad]!r})")
        for a in range(n):  # chunked associativity: (a*b)*c vs a*(b*c)
            left = t[t[a], :]
            right = t[a][t]
            if not np.array_equal(left, right):
                b, c = map(int, np.argwhere(left != right)[0])
                raise InvalidTable(
                    "associativity fails at "
                    f"({self.names[a]!r}, {self.names[b]!r}, {self.names[c]!r})")


# ---------------------------------------------------------------------------
# constructors


def from_table(names, table, identity_name: str) -> FiniteMonoid:
    """Build from a table of element names (or indices) and validate it."""
    index = {nm: i for i, nm in enumerate(names)}
    if len(index) != len(names):
        raise InvalidTable("element names are not distinct")
    if identity_name not in index:
        raise InvalidTable(f"identity element {identity_name!r} not among the names")
    rows = []
    for row in table:
        rows.append([entry if isinstance(entry, int) else _lookup(index, entry)
                     for entry in row])
    m = FiniteMonoid(names, rows, index[identity_name], zero=None, check=True)
    m.zero = _find_zero(m)
    return m


def _lookup(index, name):
    if name not in index:
        raise InvalidTable(f"table entry {name!r} is not an element name")
    return index[name]


def _find_zero(m: FiniteMonoid) -> int | None:
    t = m.table
    for z in range(len(m)):
        if (t[z] == z).all() and (t[:, z] == z).all():
            return z
    return None


def from_presentation(pres: Presentation, cap: int = 10000) -> FiniteMonoid:
    """Enumerate normal forms breadth-first and tabulate multiplication."""
    zero_relators = [lhs for lhs, rhs in pres.relations if rhs is None]
    rules = []
    for lhs, rhs in pres.relations:
        if rhs is None or lhs == rhs:
            continue
        big, small = sorted((lhs, rhs), key=lambda w: (len(w), w), reverse=True)
        rules.append((big, small))

    def reduce(word):
        while True:
            if any(r in word for r in zero_relators):
                return None  # the zero element
            for big, small in rules:
                k = word.find(big)
                if k >= 0:
                    word = word[:k] + small + word[k + len(big):]
                    break
            else:
                return word

    elems = [""]
    seen = {""}
    queue = deque([""])
    while queue:
        base = queue.popleft()
        for g in pres.generators:
            nf = reduce(base + g)
            if nf is None or nf in seen:
                continue
            if len(elems) >= cap:
                raise LikelyInfinite(
                    f"presentation produced more than {cap} normal forms")
            seen.add(nf)
            elems.append(nf)
            queue.append(nf)

    names = [format_word(w) for w in elems]
    zero = None
    if pres.has_zero:
        names.append("0")
        zero = len(names) - 1
    pos = {w: i for i, w in enumerate(elems)}
    n = len(names)
    table = np.empty((n, n), dtype=np.int32)
    if zero is not None:
        table[zero, :] = zero
        table[:, zero] = zero
    for i, u in enumerate(elems):
        for j, v in enumerate(elems):
            nf = reduce(u + v)
            if nf is None:
                table[i, j] = zero
            elif nf in pos:
                table[i, j] = pos[nf]
            else:
                raise UnsupportedPresentation(
                    f"normal forms are not closed under product ({u!r}*{v!r} -> {nf!r});"
                    " the oriented rules are not confluent")
    try:
        return FiniteMonoid(names, table, one=0, zero=zero, check=True)
    except InvalidTable as exc:
        if pres.has_zero and not rules:
            raise  # factor exclusion is exact; a failure here is a real bug
        raise UnsupportedPresentation(
            f"oriented rules give a non-associative table: {exc}") from exc


def direct_product(m: FiniteMonoid, n: FiniteMonoid) -> FiniteMonoid:
    names = [f"({a},{b})" for a in m.names for b in n.names]
    nn = len(n)
    table = (m.table[:, None, :, None].astype(np.int64) * nn
             + n.table[None, :, None, :]).reshape(len(names), len(names))
    one = m.one * nn + n.one
    zero = None
    if m.zero is not None and n.zero is not None:
        zero = m.zero * nn + n.zero
    return FiniteMonoid(names, table, one, zero, check=False)


def opposite(m: FiniteMonoid) -> FiniteMonoid:
    return FiniteMonoid(m.names, m.table.T.copy(), m.one, m.zero, check=False)


_INJECTIVE_LETTERS = "xyztabcd"


def free_lrb_monoid(k: int) -> FiniteMonoid:
    """Words with all-distinct letters over k letters; u*v = initial_part(uv)."""
    if not 1 <= k <= 8:
        raise ValueError("free_lrb_monoid needs 1 <= k <= 8")
    letters = _INJECTIVE_LETTERS[:k]
    elems = [""]
    for r in range(1, k + 1):
        elems.extend("".join(p) for p in itertools.permutations(letters, r))
    pos = {w: i for i, w in enumerate(elems)}
    n = len(elems)
    table = np.empty((n, n), dtype=np.int32)
    for i, u in enumerate(elems):
        for j, v in enumerate(elems):
            table[i, j] = pos[initial_part(u + v)]
    return FiniteMonoid(["1"] + elems[1:], table, one=0, check=False)


def cyclic_counter(n: int) -> FiniteMonoid:
    """The n+1 element monoid 1, a, ..., a^(n-1), 0 with a^n = 0."""
    if n < 1:
        raise ValueError("cyclic_counter needs n >= 1")
    names = ["1"] + [format_word("a" * i) for i in range(1, n)] + ["0"]
    size = n + 1
    zero = n
    table = np.empty((size, size), dtype=np.int32)
    for i in range(size):
        for j in range(size):
            if i == zero or j == zero or i + j >= n:
                table[i, j] = zero
            else:
                table[i, j] = i + j
    return FiniteMonoid(names, table, one=0, zero=zero, check=False)


def cyclic_group(m: int) -> FiniteMonoid:
    if m < 1:
        raise ValueError("cyclic_group needs m >= 1")
    names = ["1"] + [f"g{i}" if i > 1 else "g" for i in range(1, m)]
    table = np.fromfunction(lambda i, j: (i + j) % m, (m, m), dtype=np.int64)
    return FiniteMonoid(names, table, one=0, check=False)


# ---------------------------------------------------------------------------
# identity checking by exhaustive assignment


def _guard(m: FiniteMonoid, letters, allow_large: bool):
    n = max(len(m), 1)
    if allow_large:
        return
    if len(letters) > 6 and len(m) > 20:
        raise SearchCapExceeded(
            f"{len(letters)} letters over {len(m)} elements is past the desk-scale"
            " ceiling; pass allow_large=True to force the search")
    if n ** len(letters) > 2 * 10**8:
        raise SearchCapExceeded(
            f"assignment space {n}^{len(letters)} is too large;"
            " pass allow_large=True to force the search")


def _eval_word(m: FiniteMonoid, word: str, letters: list[str]):
    if not word:
        return np.asarray(m.one, dtype=m.table.dtype)
    n = len(m)
    axis = {c: k for k, c in enumerate(letters)}
    shape = [1] * len(letters)
    acc = None
    for c in word:
        shape_c = list(shape)
        shape_c[axis[c]] = n
        e = np.arange(n, dtype=m.table.dtype).reshape(shape_c)
        acc = e if acc is None else m.table[acc, e]
    return acc


def find_counterexample(m: FiniteMonoid, ident: Identity,
                        allow_large: bool = False) -> dict[str, str] | None:
    """First violating assignment (letters sorted, elements in table order)."""
    letters = sorted(ident.letters())
    if not letters:
        return None
    _guard(m, letters, allow_large)
    lhs = _eval_word(m, ident.lhs, letters)
    rhs = _eval_word(m, ident.rhs, letters)
    # every letter occurs on some side, so the comparison broadcasts to the
    # full assignment cube and argwhere rows index all the letters
    diff = np.argwhere(lhs != rhs)
    if diff.size == 0:
        return None
    first = diff[0]
    return {c: m.names[int(first[k])] for k, c in enumerate(letters)}


def satisfies_identity(m: FiniteMonoid, ident: Identity,
                       allow_large: bool = False) -> bool:
    return find_counterexample(m, ident, allow_large) is None


# ---------------------------------------------------------------------------
# structural predicates


def _element_index_period(m: FiniteMonoid, x: int) -> tuple[int, int]:
    seen = {}
    cur = x
    k = 1
    while cur not in seen:
        seen[cur] = k
        cur = m.mul(cur, x)
        k += 1
    return seen[cur], k - seen[cur]


def monoid_index_period(m: FiniteMonoid) -> IndexPeriod:
    """Least (n, m) with x^n = x^(n+m) for every element x."""
    idx, per = 1, 1
    for x in range(len(m)):
        i, p = _element_index_period(m, x)
        idx = max(idx, i)
        per = math.lcm(per, p)
    return IndexPeriod(idx, per)


def is_completely_regular(m: FiniteMonoid) -> bool:
    """Every x has some k >= 1 with x^(k+1) = x."""
    return all(_element_index_period(m, x)[0] == 1 for x in range(len(m)))


def is_commutative(m: FiniteMonoid) -> bool:
    return bool(np.array_equal(m.table, m.table.T))


# ---------------------------------------------------------------------------
# file formats


def parse_presentation(text: str) -> Presentation:
    """Lines 'gens: a b' then 'rel: <word> = <word|0>'; '#' comments."""
    gens = None
    rels = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("gens:"):
            if gens is not None:
                raise ParseError("duplicate gens: line")
            gens = line[len("gens:"):].strip()
        elif line.startswith("rel:"):
            rels.append(line[len("rel:"):].strip())
        else:
            raise ParseError(f"unrecognized presentation line: {raw!r}")
    if gens is None:
        raise ParseError("presentation file needs a gens: line")
    return presentation(gens, *rels)


def parse_table(text: str) -> FiniteMonoid:
    """Names line, n rows of n names, 'one: <name>', optional 'zero: <name>'."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("empty table file")
    names = lines[0].split()
    n = len(names)
    if len(lines) < n + 2:
        raise ParseError(f"table file needs {n} rows plus a one: line")
    rows = []
    for ln in lines[1:n + 1]:
        row = ln.split()
        if len(row) != n:
            raise ParseError(f"table row has {len(row)} entries, expected {n}")
        rows.append(row)
    one_name = None
    zero_name = None
    for ln in lines[n + 1:]:
        if ln.startswith("one:"):
            one_name = ln[len("one:"):].strip()
        elif ln.startswith("zero:"):
            zero_name = ln[len("zero:"):].strip()
        else:
            raise ParseError(f"unrecognized table line: {ln!r}")
    if one_name is None:
        raise ParseError("table file needs a one: line")
    m = from_table(names, rows, one_name)
    if zero_name is not None:
        z = m.index(zero_name)
        if m.zero != z:
            raise InvalidTable(f"declared zero {zero_name!r} is not absorbing")
    return m


def load_monoid(path) -> FiniteMonoid:
    """Load a presentation or table file, sniffing the format."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("gens:"):
            return from_presentation(parse_presentation(text))
        break
    return parse_table(text)
