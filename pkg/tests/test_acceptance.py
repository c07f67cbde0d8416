"""Acceptance gate: twelve end-to-end criteria with pinned time budgets.

Each test prints one pass/fail line (run with -s or -rA to see them all).
"""

import itertools
import random
import time

from monvar import cli
from monvar.deduction import check_derivation, one_step_rewrites, system
from monvar.lattices import (
    all_partitions,
    fixtures,
    is_cancellable_element,
    is_distributive_lattice,
    is_modular_element,
    is_modular_lattice,
    jezek_modular,
    partition_lattice,
)
from monvar.monoids import (
    cyclic_counter,
    cyclic_group,
    free_lrb_monoid,
    satisfies_identity,
)
from monvar.varieties import (
    D2_BASIS,
    D_BASIS,
    RVROP_BASIS,
    enumerate_W,
    lookup,
    membership_in_W,
)
from monvar.verify import commutation_chain
from monvar.words import (
    Identity,
    Substitution,
    delete_letters,
    initial_part,
    occ,
    parse_identity,
)

K_SYSTEM = system("y2xt2z2y2t2xz2=y2xt2z2xy2t2xz2", name="K")


def _report(num, label, limit, fn):
    t0 = time.perf_counter()
    try:
        detail = fn() or ""
    except BaseException:
        dt = time.perf_counter() - t0
        print(f"ACCEPTANCE {num:02d} FAIL ({dt:.2f}s, limit {limit}s) {label}")
        raise
    dt = time.perf_counter() - t0
    status = "pass" if dt <= limit else "FAIL"
    suffix = f" [{detail}]" if detail else ""
    print(f"ACCEPTANCE {num:02d} {status} ({dt:.2f}s, limit {limit}s) {label}{suffix}")
    assert dt <= limit, f"criterion {num} took {dt:.2f}s, over its {limit}s budget"


def test_criterion_01_fig1_cancellable_elements():
    def body():
        lat = fixtures()["fig1"]
        assert is_cancellable_element(lat, "x")
        assert is_cancellable_element(lat, "y")
        chk = is_cancellable_element(lat, "xvy")
        assert not chk
        assert chk.witness == ("a", "c")
        return "witness (a, c)"

    _report(1, "fig1: x and y cancellable, their join not", 1.0, body)


def test_criterion_02_fig2_modular_not_distributive():
    def body():
        lat = fixtures()["fig2"]
        assert is_modular_lattice(lat)
        dist = is_distributive_lattice(lat)
        assert not dist
        x, y, z = dist.witness
        lhs = lat.meet_of(x, lat.join_of(y, z))
        rhs = lat.join_of(lat.meet_of(x, y), lat.meet_of(x, z))
        assert lhs != rhs
        return f"distributivity fails at ({x}, {y}, {z})"

    _report(2, "fig2: modular but not distributive", 1.0, body)


def test_criterion_03_partition_modular_rule():
    def body():
        for k in (3, 4, 5):
            lat = partition_lattice(k)
            for p in all_partitions(k):
                assert bool(is_modular_element(lat, p.label)) == jezek_modular(p), p
        lat4 = partition_lattice(4)
        count = sum(bool(is_modular_element(lat4, p.label))
                    for p in all_partitions(4))
        assert count == 12 and len(lat4) == 15
        return "k=3,4,5 exhaustive; 12 of 15 at k=4"

    _report(3, "closed-form modular rule on partition lattices", 10.0, body)


def test_criterion_04_lrb_rule_vs_free_model():
    def body():
        v = lookup("LRB")
        lrb3 = free_lrb_monoid(3)
        rng = random.Random(20260401)
        from monvar.varieties import decide_identity

        for _ in range(200):
            u = "".join(rng.choice("xyz") for _ in range(rng.randrange(1, 9)))
            w = "".join(rng.choice("xyz") for _ in range(rng.randrange(1, 9)))
            ident = Identity(u, w)
            rule = bool(decide_identity(v, ident))
            model = satisfies_identity(lrb3, ident)
            assert rule == model, ident
            assert rule == (initial_part(u) == initial_part(w))
        return "200 random identities, 3 letters, length <= 8"

    _report(4, "initial-part rule matches the rank-3 free model", 30.0, body)


def test_criterion_05_abelian_rule_vs_groups():
    def body():
        from monvar.varieties import decide_identity

        rng = random.Random(20260402)
        for m in (2, 3):
            v = lookup(f"A{m}")
            g = cyclic_group(m)
            for _ in range(200):
                u = "".join(rng.choice("xy") for _ in range(rng.randrange(1, 9)))
                w = "".join(rng.choice("xy") for _ in range(rng.randrange(1, 9)))
                ident = Identity(u, w)
                assert bool(decide_identity(v, ident)) == satisfies_identity(g, ident)
        return "200 identities against each of group:2 and group:3"

    _report(5, "occurrence-mod-m rule matches cyclic groups", 10.0, body)


def test_criterion_06_basis_identities_hold_in_models():
    def body():
        d2 = lookup("D2").model
        rxr = lookup("RvRop").model
        # at most 4 distinct letters, so the search guard never fires
        for text in D2_BASIS:
            assert satisfies_identity(d2, parse_identity(text)), text
        for text in RVROP_BASIS:
            assert satisfies_identity(rxr, parse_identity(text)), text
        return "5 identities each, up to 4 letters over 49 elements"

    _report(6, "finite models satisfy their five-identity bases", 60.0, body)


def test_criterion_07_single_identity_basis_for_d():
    def body():
        from monvar.deduction import YES, derivable

        sigma = system("x3yz=yxzx")
        for text in D_BASIS:
            ident = parse_identity(text)
            res = derivable(ident.lhs, ident.rhs, sigma, max_len=8, max_depth=4)
            assert res.status == YES, text
            assert check_derivation(res.derivation, sigma), text
        back = derivable("xxxyz", "yxzx", system(*D_BASIS), max_len=8, max_depth=6)
        assert back.status == YES
        assert check_derivation(back.derivation, system(*D_BASIS))
        return "three identities within depth 4, converse within depth 6"

    _report(7, "one identity derives the three-identity basis and back", 30.0, body)


def test_criterion_08_transcribed_commutation_chain():
    def body():
        deriv = commutation_chain()
        assert deriv.words[0] == "yyxttzzyyttxzz"
        assert deriv.words[-1] == "yyxttzzxyyttxzz"
        assert len(deriv) == 16
        assert check_derivation(deriv, system("x2=x3", "x2y=yx2"), strict=True)
        return "16 steps, checked strictly"

    _report(8, "hand-transcribed derivation of the structure identity", 30.0, body)


def test_criterion_09_w_family_closed_under_one_step():
    def body():
        words = enumerate_W((2, 3))
        assert len(words) == 128
        images = 0
        for u in words:
            for v in one_step_rewrites(u, K_SYSTEM, 21):
                if v != u:
                    images += 1
                    assert membership_in_W(v) != "outside", (u, v)
        assert images > 0
        return f"{images} one-step images of 128 family members stay inside"

    _report(9, "the W family is closed under one-step rewriting", 120.0, body)


def test_criterion_10_isoterm_power_criterion():
    def body():
        for k in (2, 3, 4, 5):
            v = lookup(f"C{k}")
            m = cyclic_counter(k)
            for n in (1, 2, 3, 4):
                collapses = any(
                    satisfies_identity(m, Identity("x" * n, "x" * (n + j)))
                    for j in (1, 2, 3, 4))
                from monvar.varieties import is_isoterm_power

                assert is_isoterm_power(v, n) == (not collapses), (k, n)
        return "counters 2..5, powers and gaps up to 4"

    _report(10, "index criterion matches exhaustive power checks", 5.0, body)


def test_criterion_11_word_algebra_laws():
    def body():
        rng = random.Random(20260403)
        letters = "abxyz"
        for _ in range(1000):
            w = "".join(rng.choice(letters) for _ in range(rng.randrange(0, 12)))
            assert initial_part(initial_part(w)) == initial_part(w)
        for _ in range(1000):
            w = "".join(rng.choice(letters) for _ in range(rng.randrange(0, 12)))
            xs = {c for c in letters if rng.random() < 0.4}
            ys = {c for c in letters if rng.random() < 0.4}
            assert delete_letters(delete_letters(w, xs), ys) == delete_letters(w, xs | ys)
        for _ in range(1000):
            w = "".join(rng.choice("xyz") for _ in range(rng.randrange(0, 8)))
            xi = Substitution({c: "".join(rng.choice("ab") for _ in range(rng.randrange(0, 4)))
                               for c in "xyz"})
            for b in "ab":
                expect = sum(occ(w, a) * occ(xi.image(a), b) for a in "xyz")
                assert occ(xi(w), b) == expect
        return "1000 randomized cases per law"

    _report(11, "idempotence, deletion and occurrence laws", 10.0, body)


def test_criterion_12_verify_paper_command(capsys):
    def body():
        code = cli.main(["verify-paper"])
        out = capsys.readouterr().out
        checks = [ln for ln in out.splitlines() if ln.startswith("CHECK ")]
        assert code == 0
        assert len(checks) == 11
        assert all(ln.endswith(" pass") for ln in checks)
        return "exit 0, all 11 checks pass"

    _report(12, "the verify-paper command reruns every check", 300.0, body)
