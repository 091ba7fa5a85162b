import stallings


def test_fold_and_membership():
    g = stallings.subgroup_graph(["aa", "ab"])
    assert g.vertices == 2
    assert g.edges == 3
    assert g.rank == 2
    assert g.chi0 == 1
    assert g.membership("aa")
    assert g.membership("abAA")
    assert not g.membership("a")
    assert g.basis() == ["aa", "ab"]
    assert "digraph" in g.to_dot()
    assert g == stallings.subgroup_graph(["ab", "aa"])


def test_census():
    c = stallings.subgroup_graph(["aa", "ab"]).census()
    assert c["valence3_total"] == 2
    assert c["by_signature"] == {"(2,1)": 1, "(1,2)": 1}
    assert c["missing_slot"]["b_out"] == 1
    assert c["missing_slot"]["b_in"] == 1


def test_reduce():
    assert stallings.reduce("aA") == ""
    assert stallings.reduce("abBA") == ""
    assert stallings.reduce("a^-2") == "AA"


def test_shnc_equality_instance():
    res = stallings.shnc_check(["aa", "b"], ["aa", "b"], witnesses=True)
    assert res["verdict"] == {"lhs": 1, "rhs": 1, "holds": True, "margin": 0}
    comps = res["pullback"]["components"]
    assert [c["chi0"] for c in comps] == [1, 0]
    assert comps[0]["contains_bases"]
    assert res["witnesses"][0]["x"] == ""
    assert res["witnesses"][0]["generators"]


def test_positivize():
    assert stallings.positivize(["a", "b"]) == ["aa", "ab"]
    assert stallings.positivize(["a"], rank=1) == ["aaab"]


def test_balance_theorem():
    rep = stallings.check_balance_theorem(["a", "b"])
    assert rep["balanced"]
    assert rep["only_two_types"]
    assert not rep["dominance"]
    assert rep["images"] == ["aa", "ab"]


def test_screen():
    rep = stallings.screen_pair(["aa", "b"], ["aa", "b"])
    assert not rep["not_excluded"]


def test_random_subgroup_deterministic():
    a = stallings.random_subgroup(42)
    b = stallings.random_subgroup(42)
    assert a == b
    assert a  # non-empty
    assert all(w for w in a)


def test_run_search():
    rep = stallings.run_search(mode="balance_theorem", trials=20, seed=3)
    assert rep["violations"] == 0
    assert rep["trials"] == 20
    again = stallings.run_search(mode="balance_theorem", trials=20, seed=3, threads=4)
    assert again == rep
