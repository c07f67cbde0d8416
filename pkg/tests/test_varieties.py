"""Catalog entries, decision rules and isoterm helpers."""

import random

import pytest

from monvar.deduction import Derivation
from monvar.monoids import (
    cyclic_counter,
    cyclic_group,
    find_counterexample,
    free_lrb_monoid,
    satisfies_identity,
)
from monvar.varieties import (
    FAILS,
    HOLDS,
    K_IDENTITY,
    K_LHS,
    K_RHS,
    UNKNOWN,
    Bounds,
    catalog,
    decide_identity,
    enumerate_W,
    is_isoterm_power,
    isoterm_witness_search,
    lookup,
    membership_in_W,
    model_contains_basis,
    variety_Z,
)
from monvar.words import Identity, initial_part, occ, parse_identity


def _decide(name, ident_text, **kw):
    return decide_identity(lookup(name), parse_identity(ident_text), **kw)


def test_catalog_contents():
    cat = catalog()
    for name in ("T", "SL", "COM", "MON", "D", "D2", "E", "K", "LRB",
                 "Q", "R", "Rop", "RvRop", "C2", "C3", "B2", "A2"):
        assert name in cat, name
    assert list(cat) == sorted(cat)


def test_lookup_families_and_normalization():
    assert lookup("C7").param == 7
    assert lookup("B2").name == "B2"
    assert lookup("A5").param == 5
    assert lookup("C_2").name == "C2"
    z = lookup("Z:2:xy")
    assert z.param == 2 and len(z.basis) == 2
    with pytest.raises(KeyError):
        lookup("nosuch")
    with pytest.raises(KeyError):
        lookup("Z:2")
    with pytest.raises(ValueError):
        lookup("C1")


def test_k_identity_words():
    assert K_LHS == "yyxttzzyyttxzz"
    assert K_RHS == "yyxttzzxyyttxzz"
    assert occ(K_RHS, "x") == 3 and occ(K_LHS, "x") == 2
    assert lookup("K").basis == type(lookup("K").basis)(frozenset([K_IDENTITY]), "K")


def test_membership_in_w():
    assert membership_in_W(K_LHS) == "W1"
    assert membership_in_W(K_RHS) == "W2"
    assert membership_in_W("yyxttzzyyttxz") == "outside"  # final z run too short
    assert membership_in_W("xy") == "outside"
    assert membership_in_W("") == "outside"
    assert membership_in_W("y3xt2z4y2t5xz2") != "W1"  # not parsed, raw letters only
    assert membership_in_W("yyyx" + "tt" + "zzzz" + "yy" + "ttttt" + "x" + "zz") == "W1"


def test_enumerate_w():
    words = enumerate_W((2, 3))
    assert len(words) == 128
    assert len(set(words)) == 128
    assert K_LHS in words and K_RHS in words
    for w in words:
        assert membership_in_W(w) in ("W1", "W2")


def test_sl_rule():
    assert _decide("SL", "xyx=xy")
    v = _decide("SL", "xy=x")
    assert v.value == FAILS and v.witness is not None


def test_com_rule_and_witness():
    assert _decide("COM", "xy=yx")
    v = _decide("COM", "x2y=xy")
    assert v.value == FAILS
    assert v.witness == {"x": "a", "y": "1"} or v.witness["x"] != "0"
    # the witness really violates the identity in a counter monoid
    m = cyclic_counter(3)
    names = set(m.names)
    if set(v.witness.values()) <= names:
        i = m.index(v.witness["x"])
        j = m.index(v.witness["y"])
        lhs = m.mul(m.mul(i, i), j)
        rhs = m.mul(i, j)
        assert lhs != rhs


def test_lrb_rule_matches_model():
    assert _decide("LRB", "xy=xyx")
    assert _decide("LRB", "x=x2")
    assert _decide("LRB", "xyzy=xyz")
    assert _decide("LRB", "xy=yx").value == FAILS


def test_lrb_rule_vs_free_model_sampled():
    lrb3 = free_lrb_monoid(3)
    v = lookup("LRB")
    rng = random.Random(2024)
    for _ in range(200):
        u = "".join(rng.choice("xyz") for _ in range(rng.randrange(1, 8)))
        w = "".join(rng.choice("xyz") for _ in range(rng.randrange(1, 8)))
        ident = Identity(u, w)
        assert bool(decide_identity(v, ident)) == satisfies_identity(lrb3, ident)
        assert bool(decide_identity(v, ident)) == (initial_part(u) == initial_part(w))


def test_cn_rule_vs_counter_sampled():
    rng = random.Random(3001)
    for n in (2, 3):
        v = lookup(f"C{n}")
        model = cyclic_counter(n)
        for _ in range(150):
            u = "".join(rng.choice("xy") for _ in range(rng.randrange(1, 8)))
            w = "".join(rng.choice("xy") for _ in range(rng.randrange(1, 8)))
            ident = Identity(u, w)
            assert bool(decide_identity(v, ident)) == satisfies_identity(model, ident)


def test_am_rule_vs_group_sampled():
    rng = random.Random(3002)
    for m in (2, 3):
        v = lookup(f"A{m}")
        model = cyclic_group(m)
        for _ in range(150):
            u = "".join(rng.choice("xy") for _ in range(rng.randrange(1, 8)))
            w = "".join(rng.choice("xy") for _ in range(rng.randrange(1, 8)))
            ident = Identity(u, w)
            assert bool(decide_identity(v, ident)) == satisfies_identity(model, ident)


def test_com_rule_one_directional_against_any_counter():
    # commutativity proves an identity only if occurrence counts agree;
    # a counter monoid is a one-sided check: COM holds => counter(4) satisfies
    rng = random.Random(3003)
    v = lookup("COM")
    model = cyclic_counter(4)
    for _ in range(200):
        u = "".join(rng.choice("xy") for _ in range(rng.randrange(1, 7)))
        w = "".join(rng.choice("xy") for _ in range(rng.randrange(1, 7)))
        verdict = decide_identity(v, Identity(u, w))
        if verdict:
            assert satisfies_identity(model, Identity(u, w))


def test_model_rule_entries():
    assert _decide("D2", "x3=x2")
    assert _decide("D2", "x2=x").value == FAILS
    assert _decide("R", "x3=x4")
    assert _decide("RvRop", "x3yzt=yxzxtx")
    v = _decide("RvRop", "x2=x3")
    assert v.value == FAILS and v.witness is not None
    assert _decide("T", "xy=z2")  # everything holds in the trivial monoid


def test_deduction_rule_d_facts():
    v = _decide("D", "x3yz=yxzx", bounds=Bounds(max_len=8, max_depth=8))
    assert v.value == HOLDS
    assert isinstance(v.witness, Derivation)
    assert _decide("D", "xy=yx", bounds=Bounds(max_len=10, max_depth=6)).value != HOLDS


def test_deduction_basis_members_derive_in_one_step():
    for name in ("D", "E", "Q", "K"):
        spec = lookup(name)
        for ident in spec.basis:
            verdict = decide_identity(spec, ident, Bounds(max_len=20, max_depth=2))
            assert verdict.value == HOLDS, (name, ident)


def test_mon_is_exact():
    assert _decide("MON", "xyx=xyx")
    v = _decide("MON", "x=y")
    assert v.value == FAILS
    assert "closure" in v.reason


def test_refuters_settle_some_non_derivable_identities():
    # the closure of xy under Q's identity keeps growing, but the two-element
    # semilattice separates the sides by content
    v = _decide("Q", "xy=x", bounds=Bounds(max_len=10, max_depth=4))
    assert v.value == FAILS
    assert v.witness is not None


def test_unknown_when_bounds_truncate_and_no_refuter():
    v = _decide("K", "y2xy2=xy4", bounds=Bounds(max_len=6, max_depth=2))
    assert v.value == UNKNOWN
    assert "truncated" in v.reason


def test_model_contains_basis():
    assert model_contains_basis(cyclic_counter(2), lookup("C2").basis)
    assert not model_contains_basis(cyclic_group(2), lookup("C2").basis)
    assert model_contains_basis(free_lrb_monoid(3), lookup("LRB").basis)


def test_chain_sl_c2_d():
    # SL < C2 < D: identities flow down the chain, and strictly
    sl, c2 = lookup("SL"), lookup("C2")
    for ident in lookup("C2").basis:
        assert decide_identity(sl, ident), ident
    for ident in lookup("D").basis:
        assert decide_identity(c2, ident), ident
    assert _decide("SL", "x=x2").value == HOLDS
    assert _decide("C2", "x=x2").value == FAILS  # separates SL from C2
    assert _decide("C2", "xy=yx").value == HOLDS
    assert _decide("D", "xy=yx", bounds=Bounds(max_len=8, max_depth=6)).value == FAILS


def test_variety_z_basis_words():
    z = variety_Z(1, "y")
    texts = {str(i) for i in z.basis}
    assert texts == {"x2=x3", "xy=x2y"} or texts == {"x3=x2", "x2y=xy"}


def test_is_isoterm_power():
    assert is_isoterm_power(lookup("C3"), 2)
    assert not is_isoterm_power(lookup("C2"), 2)
    assert not is_isoterm_power(lookup("C3"), 3)
    assert is_isoterm_power(lookup("D2"), 1)
    with pytest.raises(ValueError):
        is_isoterm_power(lookup("K"), 2)


def test_isoterm_witness_search_com():
    assert isoterm_witness_search(lookup("COM"), "xy") == "yx"


def test_isoterm_witness_search_lrb():
    w = isoterm_witness_search(lookup("LRB"), "xy")
    assert w is not None and w != "xy"
    assert initial_part(w) == "xy"


def test_isoterm_witness_search_k():
    w = isoterm_witness_search(lookup("K"), K_LHS)
    assert w is not None and w != K_LHS
    assert membership_in_W(w) in ("W1", "W2")


def test_isoterm_witness_search_none_for_singleton():
    assert isoterm_witness_search(lookup("MON"), "xy") is None
