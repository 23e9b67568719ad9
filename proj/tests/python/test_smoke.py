"""Smoke tests for the pygzl module: a few frozen values and the
cross-method identities at desk scale."""

import pygzl


def test_reference_values():
    lam = [3, 2, 0]
    s1_op = pygzl.lascoux("s1", lam)
    s1_cells = pygzl.lascoux("s1", lam, method="cells")
    assert str(s1_op) == "x1^2*x2^3 + x1^3*x2^2 + b*x1^3*x2^3"
    assert s1_op == s1_cells


def test_grothendieck_both_methods():
    for lam in ([1, 0], [2, 1, 0], [2, 2, 0]):
        assert pygzl.grothendieck(lam) == pygzl.grothendieck(lam, method="cells")


def test_key_is_lascoux_at_beta_zero():
    lam = [2, 1, 0]
    for w in ("213", "231", "321"):
        key = pygzl.key_polynomial(w, lam)
        assert key == pygzl.lascoux(w, lam).specialize_beta(0)


def test_counts():
    assert pygzl.weyl_dimension([2, 1, 0]) == 8
    assert pygzl.count_gz_patterns([3, 2, 0]) == 15
    assert pygzl.count_reduced_faces(3) == 7
    assert pygzl.count_enhanced([2, 1, 0]) == 29
    assert pygzl.count_enhanced([2, 1, 0], efficient_only=True) == 27
    assert pygzl.euler_characteristic([3, 2, 0]) == 1


def test_schur_symmetry():
    s = pygzl.schur([2, 1, 0])
    js = s.to_json()
    assert js["n"] == 3
    total = sum(int(t["coeff"]) for t in js["terms"])
    assert total == 8


def test_locate():
    rec = pygzl.locate([9, 7, 3, 1], "5/2,31/10,9;5/2,19/5;37/10")
    assert rec["base"]["rows"] == [[3, 4, 9], [3, 5], [4]]
    assert rec["rank"] == 2
    assert rec["efficient"] is True


def test_verify_small():
    reports = pygzl.verify("main1", max_n=3, max_part=2)
    assert all(not r["failures"] for r in reports)
