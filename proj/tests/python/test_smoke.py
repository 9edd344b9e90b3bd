import wschub


def test_permutation_basics():
    assert wschub.length("1,4,2,3") == 2
    assert wschub.inversions("1,4,2,3") == [(2, 3), (2, 4)]
    assert wschub.length("s2*s1") == 2
    assert wschub.bruhat_leq("id", "3,2,1")
    assert not wschub.bruhat_leq("2,1,3", "1,3,2")


def test_cosets_and_betti():
    reps = wschub.cosets(4, [1, 3])
    assert len(reps) == 12
    assert reps[0] == "1,2,3,4"
    dim, betti = wschub.betti(4, [1, 3])
    assert dim == 5
    assert betti == [1, 2, 3, 3, 2, 1]


def test_tableaux():
    rows = wschub.tableaux(3, [1, 2])
    assert len(rows) == 8
    assert rows[0]["tableau"] == "[[1,1],[2]]"
    assert rows[0]["weight"] == "t1^2*t2"
    assert sum(1 for r in rows if r["sl_weight"] == "1") == 2
    assert wschub.tableau_of_perm("1,4,2,3", 4, [1, 2, 3]) == "[[1,1,1],[2,4],[4]]"
    assert wschub.min_admissible_u([-3, 5], 2, [1]) == 4


def test_polynomials():
    assert wschub.schubert_poly("id") == "1"
    assert wschub.schubert_poly("s1") == "x1"
    assert wschub.schubert_poly("3,2,1") == "x1^2*x2"
    assert wschub.double_schubert("s1") == "x1 - b1"
    assert wschub.double_schubert("3,1,2", route="sum") == wschub.double_schubert("3,1,2")
    # b1 -> -(w1/u) x_id with x_id = x1 for the projective line
    assert wschub.weighted_schubert("s1", 2, [1], [1, 2], 3) == "4/3*x1"


def test_restrictions_and_verification():
    table = wschub.restriction_table(2, [1], flavor="straight")
    assert table["2,1"]["2,1"] == "-y1 + y2"
    assert table["2,1"]["1,2"] == "0"
    ok, detail = wschub.verify_gkm(3, [1, 2], [1, 2, 3], 7, "weighted")
    assert ok, detail


def test_product_formulas():
    res = wschub.chevalley_check(3, [1, 2], [1, 2, 3], 7, "s1", 1)
    assert res["ok"]
    assert res["covers"] == ["3,1,2"]
    ok, residual = wschub.monk_check(2, [1], [], 1, "s1", 1)
    assert ok and residual == "0"


def test_selftest():
    results = wschub.selftest()
    assert len(results) == 10
    assert all(r["pass"] for r in results), [r for r in results if not r["pass"]]
