"""Catalog of named monoid varieties and their decision procedures.

Each entry carries a defining identity basis and/or a generating finite
monoid, plus a decision rule tag.  Rule-based entries (content, occurrence,
capped occurrence, modular occurrence, initial part) decide their word
problem exactly; finite-model entries are decided by exhaustive model
checking; the rest fall back to bounded deduction plus a registered list
of refutation models, answering unknown honestly when both are silent.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import lru_cache

from .deduction import (
    NO,
    YES,
    Derivation,
    IdentitySystem,
    derivable,
    expand,
    system,
)
from .monoids import (
    FiniteMonoid,
    cyclic_counter,
    cyclic_group,
    direct_product,
    find_counterexample,
    free_lrb_monoid,
    from_presentation,
    from_table,
    opposite,
    presentation,
)
from .words import Identity, initial_part, occ, parse_word, iter_words

HOLDS = "holds"
FAILS = "fails"
UNKNOWN = "unknown"

RULE_LRB = "LRB-ini"
RULE_COM = "COM-occ"
RULE_SL = "SL-content"
RULE_CN = "Cn-cappedocc"
RULE_AM = "Am-modocc"
RULE_MODEL = "finite-model"
RULE_DEDUCTION = "deduction-only"


@dataclass(frozen=True)
class Bounds:
    max_len: int = 24
    max_depth: int = 48
    max_candidates: int = 100_000


DEFAULT_BOUNDS = Bounds()


@dataclass
class Verdict:
    value: str  # HOLDS, FAILS or UNKNOWN
    witness: object = None  # assignment dict or Derivation, when one exists
    reason: str = ""

    def __bool__(self):
        return self.value == HOLDS


@dataclass
class VarietySpec:
    name: str
    basis: IdentitySystem | None = None
    model: FiniteMonoid | None = None
    rule: str = RULE_DEDUCTION
    param: int | None = None
    refutation_models: tuple[FiniteMonoid, ...] = ()

    def __post_init__(self):
        if self.basis is None and self.model is None:
            raise ValueError(f"variety {self.name} needs a basis or a model")


# ---------------------------------------------------------------------------
# the two structure words generating K, and the surrounding family W

K_LHS = parse_word("y2xt2z2y2t2xz2")
K_RHS = parse_word("y2xt2z2xy2t2xz2")
K_IDENTITY = Identity(K_LHS, K_RHS)

# run shapes: (letter, exact) with exact=1 pinning single occurrences
_W1_SHAPE = (("y", 0), ("x", 1), ("t", 0), ("z", 0), ("y", 0), ("t", 0), ("x", 1), ("z", 0))
_W2_SHAPE = (("y", 0), ("x", 1), ("t", 0), ("z", 0), ("x", 1), ("y", 0), ("t", 0), ("x", 1), ("z", 0))

W1 = "W1"
W2 = "W2"
OUTSIDE = "outside"


def membership_in_W(word: str) -> str:
    """Classify into the two-sided family around the K identity."""
    runs = [(c, len(list(g))) for c, g in itertools.groupby(word)]
    for label, shape in ((W1, _W1_SHAPE), (W2, _W2_SHAPE)):
        if len(runs) != len(shape):
            continue
        ok = all(c == sc and (n == 1 if exact else n >= 2)
                 for (c, n), (sc, exact) in zip(runs, shape))
        if ok:
            return label
    return OUTSIDE


def enumerate_W(exponents=(2, 3)):
    """All family members whose run exponents come from the given set."""
    out = []
    for shape in (_W1_SHAPE, _W2_SHAPE):
        slots = [i for i, (_, exact) in enumerate(shape) if not exact]
        for combo in itertools.product(exponents, repeat=len(slots)):
            exps = {}
            for i, e in zip(slots, combo):
                exps[i] = e
            out.append("".join(c * (1 if exact else exps[i])
                               for i, (c, exact) in enumerate(shape)))
    return out


# ---------------------------------------------------------------------------
# catalog


@lru_cache(maxsize=None)
def _trivial_monoid():
    return from_table(["1"], [["1"]], "1")


@lru_cache(maxsize=None)
def _semilattice_2():
    return from_table(["1", "e"], [["1", "e"], ["e", "e"]], "1")


@lru_cache(maxsize=None)
def _counter(n):
    return cyclic_counter(n)


@lru_cache(maxsize=None)
def _group(m):
    return cyclic_group(m)


@lru_cache(maxsize=None)
def _d2_monoid():
    return from_presentation(presentation("a b", "a2=0", "b2=0", "bab=0"))


@lru_cache(maxsize=None)
def _r_monoid():
    return from_presentation(presentation("a b", "a3=0", "b2=0", "ba=0"))


@lru_cache(maxsize=None)
def _rop_monoid():
    return opposite(_r_monoid())


@lru_cache(maxsize=None)
def _rxrop_monoid():
    return direct_product(_r_monoid(), _rop_monoid())


D2_BASIS = ("x3=x2", "x3yzt=yxzxtx", "xyzxty=yxzxty", "xzxyty=xzyxty", "xtyzxy=xtyzyx")
RVROP_BASIS = ("x4=x3", "x3yzt=yxzxtx", "xyzxty=yxzxty", "xzxyty=xzyxty", "xtyzxy=xtyzyx")
D_BASIS = ("x2=x3", "x2y=xyx", "xyx=yx2")
E_BASIS = ("x2=x3", "x2y=xyx", "x2y2=y2x2")


def model_contains_basis(m: FiniteMonoid, basis: IdentitySystem) -> bool:
    return all(find_counterexample(m, ident) is None for ident in basis)


def _refuters(basis: IdentitySystem) -> tuple[FiniteMonoid, ...]:
    """Registered members of the variety, for refuting identities."""
    pool = (_semilattice_2(), _counter(2), _counter(3), _group(2), _group(3))
    return tuple(m for m in pool if model_contains_basis(m, basis))


@lru_cache(maxsize=None)
def _fixed_entries() -> dict[str, VarietySpec]:
    entries = {}

    def add(spec):
        entries[spec.name] = spec

    add(VarietySpec("T", basis=system("x=1"), model=_trivial_monoid(), rule=RULE_MODEL))
    add(VarietySpec("SL", basis=system("x2=x", "xy=yx"), model=_semilattice_2(),
                    rule=RULE_SL))
    add(VarietySpec("COM", basis=system("xy=yx"), rule=RULE_COM))
    mon_basis = IdentitySystem(frozenset(), "MON")
    add(VarietySpec("MON", basis=mon_basis, rule=RULE_DEDUCTION))
    d_basis = system(*D_BASIS, name="D")
    add(VarietySpec("D", basis=d_basis, rule=RULE_DEDUCTION,
                    refutation_models=_refuters(d_basis)))
    add(VarietySpec("D2", basis=system(*D2_BASIS, name="D2"), model=_d2_monoid(),
                    rule=RULE_MODEL))
    e_basis = system(*E_BASIS, name="E")
    add(VarietySpec("E", basis=e_basis, rule=RULE_DEDUCTION,
                    refutation_models=_refuters(e_basis)))
    k_basis = IdentitySystem(frozenset([K_IDENTITY]), "K")
    add(VarietySpec("K", basis=k_basis, rule=RULE_DEDUCTION,
                    refutation_models=_refuters(k_basis)))
    add(VarietySpec("LRB", basis=system("xy=xyx"), model=free_lrb_monoid(3),
                    rule=RULE_LRB))
    q_basis = system("yxyzxy=yxzxyxz", name="Q")
    add(VarietySpec("Q", basis=q_basis, rule=RULE_DEDUCTION,
                    refutation_models=_refuters(q_basis)))
    add(VarietySpec("R", model=_r_monoid(), rule=RULE_MODEL))
    add(VarietySpec("Rop", model=_rop_monoid(), rule=RULE_MODEL))
    add(VarietySpec("RvRop", basis=system(*RVROP_BASIS, name="RvRop"),
                    model=_rxrop_monoid(), rule=RULE_MODEL))
    return entries


def variety_C(n: int) -> VarietySpec:
    """Commutative counter varieties: x^n = x^(n+1) with commutation."""
    if n < 2:
        raise ValueError("variety_C needs n >= 2")
    basis = system(f"x{n}=x{n + 1}", "xy=yx", name=f"C{n}")
    return VarietySpec(f"C{n}", basis=basis, model=_counter(n), rule=RULE_CN, param=n)


def variety_B(n: int) -> VarietySpec:
    if n < 1:
        raise ValueError("variety_B needs n >= 1")
    basis = system(f"x{n}=x{n + 1}", name=f"B{n}")
    return VarietySpec(f"B{n}", basis=basis, rule=RULE_DEDUCTION, param=n,
                       refutation_models=_refuters(basis))


def variety_A(m: int) -> VarietySpec:
    """Abelian groups of exponent m (as monoids)."""
    if m < 1:
        raise ValueError("variety_A needs m >= 1")
    basis = system("xy=yx", Identity("x" * m, ""), name=f"A{m}")
    return VarietySpec(f"A{m}", basis=basis, model=_group(m), rule=RULE_AM, param=m)


def variety_Z(n: int, v: str) -> VarietySpec:
    """Two-identity stabilizer family: x^(n+1)=x^(n+2) and x^n v = x^(n+1) v."""
    if n < 1:
        raise ValueError("variety_Z needs n >= 1")
    basis = IdentitySystem(frozenset([
        Identity("x" * (n + 1), "x" * (n + 2)),
        Identity("x" * n + v, "x" * (n + 1) + v),
    ]), name=f"Z:{n}:{v}")
    return VarietySpec(f"Z:{n}:{v}", basis=basis, rule=RULE_DEDUCTION, param=n,
                       refutation_models=_refuters(basis))


_FAMILY = re.compile(r"([CBA])(\d+)$")


def lookup(name: str) -> VarietySpec:
    """Resolve a catalog or family name (C7, B2, A5, Z:2:xy, underscores ok)."""
    key = name.replace("_", "").strip()
    fixed = _fixed_entries()
    if key in fixed:
        return fixed[key]
    m = _FAMILY.match(key)
    if m:
        fam, num = m.group(1), int(m.group(2))
        if fam == "C":
            return variety_C(num)
        if fam == "B":
            return variety_B(num)
        return variety_A(num)
    if key.startswith("Z:"):
        parts = key.split(":")
        if len(parts) != 3:
            raise KeyError(f"Z family names look like Z:<n>:<word>, got {name!r}")
        return variety_Z(int(parts[1]), parse_word(parts[2]))
    raise KeyError(f"unknown variety {name!r}")


def catalog() -> dict[str, VarietySpec]:
    """All fixed named entries plus the smallest family instances."""
    out = dict(_fixed_entries())
    for spec in (variety_C(2), variety_C(3), variety_B(2), variety_A(2)):
        out[spec.name] = spec
    return dict(sorted(out.items()))


# ---------------------------------------------------------------------------
# the word problem


def _occ_vector(word, letters):
    return tuple(occ(word, c) for c in letters)


def decide_identity(v: VarietySpec, ident: Identity,
                    bounds: Bounds = DEFAULT_BOUNDS) -> Verdict:
    lhs, rhs = ident.lhs, ident.rhs
    letters = sorted(ident.letters())

    if v.rule == RULE_LRB:
        li, ri = initial_part(lhs), initial_part(rhs)
        if li == ri:
            return Verdict(HOLDS, reason=f"equal initial parts ({li or '1'})")
        return _rule_failure(v, ident, f"initial parts differ: {li or '1'} vs {ri or '1'}")

    if v.rule == RULE_SL:
        lc, rc = sorted(set(lhs)), sorted(set(rhs))
        if lc == rc:
            return Verdict(HOLDS, reason="equal contents")
        return _rule_failure(v, ident,
                             f"contents differ: {''.join(lc) or '1'} vs {''.join(rc) or '1'}")

    if v.rule == RULE_COM:
        if _occ_vector(lhs, letters) == _occ_vector(rhs, letters):
            return Verdict(HOLDS, reason="equal occurrence counts")
        bad = next(c for c in letters if occ(lhs, c) != occ(rhs, c))
        witness_model = _counter(max(occ(lhs, bad), occ(rhs, bad)) + 1)
        return Verdict(FAILS, witness=find_counterexample(witness_model, ident),
                       reason=f"occurrence counts differ at {bad}")

    if v.rule == RULE_CN:
        n = v.param
        lv = tuple(min(occ(lhs, c), n) for c in letters)
        rv = tuple(min(occ(rhs, c), n) for c in letters)
        if lv == rv:
            return Verdict(HOLDS, reason=f"occurrence counts agree capped at {n}")
        return _rule_failure(v, ident, f"occurrence counts differ capped at {n}")

    if v.rule == RULE_AM:
        mparam = v.param
        lv = tuple(occ(lhs, c) % mparam for c in letters)
        rv = tuple(occ(rhs, c) % mparam for c in letters)
        if lv == rv:
            return Verdict(HOLDS, reason=f"occurrence counts agree mod {mparam}")
        return _rule_failure(v, ident, f"occurrence counts differ mod {mparam}")

    if v.rule == RULE_MODEL:
        cx = find_counterexample(v.model, ident)
        if cx is None:
            return Verdict(HOLDS, reason=f"holds in the generating monoid of order {len(v.model)}")
        return Verdict(FAILS, witness=cx, reason="fails in the generating monoid")

    # deduction plus refutation models
    res = derivable(lhs, rhs, v.basis, bounds.max_len, bounds.max_depth)
    if res.status == YES:
        return Verdict(HOLDS, witness=res.derivation,
                       reason=f"derived from the basis in {len(res.derivation)} steps")
    if res.status == NO:
        return Verdict(FAILS, reason="rewrite closure exhausted without reaching the"
                                     " other side (not derivable)")
    for m in v.refutation_models:
        cx = find_counterexample(m, ident)
        if cx is not None:
            return Verdict(FAILS, witness=cx,
                           reason=f"fails in a member monoid of order {len(m)}")
    return Verdict(UNKNOWN, reason="derivation search truncated by bounds and no"
                                   " refutation model applies")


def _rule_failure(v: VarietySpec, ident: Identity, reason: str) -> Verdict:
    witness = None
    if v.model is not None and len(v.model) ** len(ident.letters()) <= 10**6:
        witness = find_counterexample(v.model, ident)
    return Verdict(FAILS, witness=witness, reason=reason)


# ---------------------------------------------------------------------------
# isoterms


def is_isoterm_power(v: VarietySpec, n: int) -> bool:
    """Is x^n an isoterm for the variety of the registered generating monoid?

    Criterion: some element's index exceeds n, equivalently the monoid
    violates x^n = x^(n+m) for every positive m."""
    if v.model is None:
        raise ValueError(f"variety {v.name} has no registered generating monoid")
    from .monoids import monoid_index_period

    return monoid_index_period(v.model).index > n


def isoterm_witness_search(v: VarietySpec, word: str,
                           bounds: Bounds = DEFAULT_BOUNDS) -> str | None:
    """A word w' != word with decide_identity(v, word=w') holding, searched in
    (length, lex) order up to the bounds; None means nothing found (no proof)."""
    limit = min(bounds.max_len, len(word) + 2)
    if v.rule == RULE_DEDUCTION:
        # any word one step away already answers; if the only successor is the
        # word itself the closure is a singleton and nothing else is provably equal
        succ, _ = expand(word, v.basis, limit)
        for tgt in sorted(succ, key=lambda s: (len(s), s)):
            if tgt != word:
                return tgt
        return None
    examined = 0
    for cand in iter_words(sorted(set(word)), limit):
        if cand == word:
            continue
        examined += 1
        if examined > bounds.max_candidates:
            return None
        if decide_identity(v, Identity(word, cand), bounds).value == HOLDS:
            return cand
    return None
