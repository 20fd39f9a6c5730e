"""One test per acceptance criterion; each prints a single PASS/FAIL line."""

import random

from g2so4 import cayley as ca
from g2so4 import g2
from g2so4 import parabolic as pb
from g2so4 import symmetric as sy
from g2so4.checks import ROOT_ACTION_TABLE, random_cayley, random_ratfunc
from g2so4.g2 import SUPPORTED_ROOTS, TWO_ALPHA_BETA, THREE_ALPHA_BETA, THREE_ALPHA_TWO_BETA
from g2so4.ratfunc import ONE, sym


def verdict(n, title, ok, detail=""):
    print(f"\n[criterion {n:2d}] {'PASS' if ok else 'FAIL'}  {title}" + (f"  ({detail})" if detail else ""))
    assert ok, detail


def test_01_automorphism_battery():
    t = sym("t")
    mats = {"torus": g2.torus_embed(sym("l1"), sym("l2")).mat,
            "n_alpha": g2.n_alpha().mat, "n_beta": g2.n_beta().mat, "w_G": g2.longest_element().mat}
    mats.update({f"u[{r.name}]": g2.root_unipotent(r, t).mat for r in SUPPORTED_ROOTS})
    bad = [name for name, m in mats.items() if not ca.is_automorphism(m)]
    verdict(1, "automorphism battery", len(mats) == 12 and not bad, f"{len(mats)} maps, failing {bad}")


def test_02_weyl_structure():
    elts = g2.enumerate_weyl()
    inv = [w for w in elts if w.is_involution and g2.in_order2_torus(w.square)]
    na, nb = g2.n_alpha().mat, g2.n_beta().mat
    squares = na * na == g2.torus_embed(-1, -1).mat and nb * nb == g2.torus_embed(1, -1).mat
    verdict(2, "Weyl structure", len(elts) == 12 and len(inv) == 7 and squares,
            f"{len(elts)} classes, {len(inv)} involutions, squares {squares}")


def test_03_root_action():
    bad, factors = [], []
    for (w, root), claimed in ROOT_ACTION_TABLE.items():
        image, c = g2.root_action(w, root)
        factors.append(f"w_{w}.{root.name}:{c}")
        if image != claimed:
            bad.append((w, root.name, image.name))
    verdict(3, "root action table", len(ROOT_ACTION_TABLE) == 12 and not bad,
            f"mismatches {bad}; factors {' '.join(factors)}")


def test_04_commutator_relations():
    res = g2.check_relations()
    mism = [rc.describe() for rc in res if rc.status == "mismatch"]
    listed = [rc for rc in res if rc.claimed]
    unlisted_ok = all(rc.status == "exact" and not rc.realized for rc in res if not rc.claimed)
    signs = [f"{rc.pair[0].name},{rc.pair[1].name}" for rc in res if rc.status == "sign"]
    verdict(4, "commutator relations", len(listed) == 5 and not mism and unlisted_ok,
            f"structural mismatches {len(mism)}; sign deviations in {signs}")


def test_05_modular_characters():
    got = {}
    for P in (pb.BOREL, pb.P_ALPHA, pb.P_BETA):
        oracle = pb.modular_character_by_conjugation(P)
        got[P.name] = (oracle, pb.root_sum(P.radical_roots), pb.modular_character(P))
    agree = all(a == b == c for a, b, c in got.values())
    pinned = {k: v[0] for k, v in got.items()} == {"B": (4, 2), "P_alpha": (3, 3), "P_beta": (5, 0)}
    verdict(5, "modular characters", agree and pinned, str({k: v[0] for k, v in got.items()}))


def test_06_tau_triviality():
    res = {i: sy.borel_stable(i)[0] for i in range(3)}
    verdict(6, "theta preserves the Borel pattern", all(res.values()), str(res))


def test_07_orbit_identities():
    split = all(sy.is_theta_split(i, sy.x_of(k, i)) for k in range(1, 12) for i in range(3))
    m2 = sy.compare_up_to_torus(sy.x_of(2, 2).mat, sy.involution(2))
    m7 = sy.compare_up_to_torus(sy.x_of(7, 0).mat, sy.involution(0))
    ok = split and m2 != "different" and m7 != "different"
    verdict(7, "orbit identities", ok, f"all 33 theta-split: {split}; x2 vs t2: {m2}; x7 vs t0: {m7}")


def test_08_matching():
    rows = {k: sy.match_double_coset(k, 0) for k in range(1, 12)}
    failed = [k for k, m in rows.items() if m.status == "Failed"]
    unverified = [k for k, m in rows.items() if m.status != "Verified" and m.status != "Failed"]
    verdict(8, "double coset matching", not failed and not unverified,
            f"failed rows {failed}; unverified rows {unverified}")


def test_09_admissibility_table():
    got = {(k, i) for k in range(1, 12) for i in range(3) if sy.strict_admissible(k, i)[0]}
    expected = {(7, 0), (10, 0), (2, 1), (2, 2), (5, 2)}
    verdict(9, "admissibility table", got == expected,
            f"extra {sorted(got - expected)}; missing {sorted(expected - got)}")


def test_10_geometry():
    g7, g5, g2_ = sy.orbit_geometry(7, 0), sy.orbit_geometry(5, 2), sy.orbit_geometry(2, 1)
    ok7 = g7.kind == "Closed" and set(g7.surviving) == set(pb.P_BETA.radical_roots)
    ok5 = g5.kind == "Neither" and g5.levi_contained and set(g5.surviving) == {TWO_ALPHA_BETA}
    ok2 = (g2_.kind == "Neither" and g2_.levi_contained
           and set(g2_.surviving) == {THREE_ALPHA_BETA, THREE_ALPHA_TWO_BETA})
    wa = {c: sy.weyl_admissible(c, 0)[0] for c in sy.DOUBLE_COSETS}
    okw = wa["w0"] and not wa["w_a"] and not wa["w_aw_bw_a"]
    verdict(10, "orbit geometry", ok7 and ok5 and ok2 and okw,
            f"(7,0) {g7.kind}; (5,2) {g5.description}; (2,1) {g2_.kind}; weyl-admissible {wa}")


def test_11_levi_table():
    table = {"e": ("M", True), "w_a": ("T", False), "w_aw_bw_a": ("T", True), "w0": ("M", True)}
    got = {c: (r.kind, r.literal_symmetric) for c, r in ((c, sy.levi_L(c)) for c in table)}
    verdict(11, "Levi intersection table", got == table, str(got))


def test_12_representative_identities():
    moves = sy.verify_representative_moves()
    stab = sy.open_orbit_stabilizer_check()
    bad = [c.name for c in moves + stab if not c.ok]
    verdict(12, "representative identities", not bad, f"failing {bad}")


def test_13_property_suites():
    rng = random.Random(0)
    axioms = 0
    for _ in range(200):
        a, b, c = (random_ratfunc(rng) for _ in range(3))
        axioms += ((a + b) + c == a + (b + c) and (a * b) * c == a * (b * c)
                   and a * (b + c) == a * b + a * c and a + b == b + a and a * b == b * a
                   and (a.is_zero() or a * a.inverse() == ONE))
    norms = 0
    for _ in range(200):
        c, d = random_cayley(rng), random_cayley(rng)
        norms += ca.norm(ca.cayley_mul(c, d)) == ca.norm(c) * ca.norm(d)
    p, q = ca.generic_element("p"), ca.generic_element("q")
    pairing = ca.pairing(p, q) == ca.trace(ca.cayley_mul(p, ca.cayley_conj(q)))
    s, t = sym("s"), sym("t")
    additive = all(g2.root_unipotent(r, s).mat * g2.root_unipotent(r, t).mat
                   == g2.root_unipotent(r, s + t).mat for r in SUPPORTED_ROOTS)
    verdict(13, "property suites", axioms == 200 and norms == 200 and pairing and additive,
            f"axioms {axioms}/200, norm {norms}/200, pairing {pairing}, additivity {additive}")
