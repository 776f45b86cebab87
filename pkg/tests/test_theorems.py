import json

import pytest

from vtwin.errors import NotApplicable
from vtwin.theorems import (
    SUITES, VerificationReport, check_identity, commutator_generators, lcs_identities, run_all,
    run_suite, s_from_s1, verify_commutator_presentation, verify_graph_claims,
    verify_lcs_stabilization, verify_pvt4_tables, verify_reduced_presentation, verify_semidirect,
    verify_vt_abelianization,
)
from vtwin.rewriting import vt_equal, vt_is_identity
from vtwin.words import commutator, word


@pytest.mark.parametrize("n", [3, 4, 5])
@pytest.mark.parametrize("fn", [verify_reduced_presentation, verify_commutator_presentation,
                                verify_lcs_stabilization, verify_vt_abelianization,
                                verify_graph_claims, verify_semidirect])
def test_suites_pass(fn, n):
    rep = fn(n)
    assert rep.ok, [c.to_dict() for c in rep.failures]
    assert rep.claims


def test_n3_reduced_relations_present():
    ids = {c.id for c in verify_reduced_presentation(3).claims}
    assert {"rel.s1-involution", "rel.r-involution.1", "rel.r-involution.2", "rel.r-braid.1", "elim.s2"} <= ids


def test_s4_elimination_n5():
    assert vt_equal(word(5, "s4"), s_from_s1(5, 4))
    assert str(s_from_s1(3, 2)) == "r1 r2 s1 r2 r1"


def test_quartic_relator():
    assert vt_is_identity(word(4, "s1 r2 r1 r3 r2") ** 4)
    assert not vt_is_identity(word(4, "s1 r2 r1 r3 r2") ** 2)


def test_commutator_n2_and_n3():
    rep2 = verify_commutator_presentation(2)
    assert rep2.ok and {c.id for c in rep2.claims} == {"gen.z.even", "z.nontrivial"}
    g = commutator_generators(3)
    assert vt_is_identity(g["x2"] ** 3) and vt_is_identity(g["y"] ** 3)


def test_alternating_generation():
    rep = verify_commutator_presentation(5)
    (c,) = [c for c in rep.claims if c.id == "alt.generation"]
    assert c.passed


def test_perturbed_identity_fails_with_witness():
    n = 4
    ri, rj = word(n, "r1"), word(n, "r2")
    rep = VerificationReport("perturbed", n)
    # drop the outer commutator from the rho identity
    check_identity(rep, "rho.dropped", "r2 = r1 [r1, r2]", rj, ri * commutator(ri, rj))
    (c,) = rep.claims
    assert not c.passed and c.witness
    (a, b), _ = lcs_identities(n, 1)
    assert vt_equal(a, b)


def test_abelianization_n2():
    assert verify_vt_abelianization(2).ok


def test_not_applicable():
    with pytest.raises(NotApplicable):
        verify_reduced_presentation(2)
    with pytest.raises(NotApplicable):
        verify_graph_claims(7)
    with pytest.raises(NotApplicable):
        verify_semidirect(2)


def test_graph_claim_values():
    four = {c.id: c for c in verify_graph_claims(4).claims}
    assert four["aut.count"].passed and four["domination.six"].passed and four["pc.two-components"].passed
    five = {c.id for c in verify_graph_claims(5).claims}
    assert {"domination.none", "pc.connected", "aut.first-column"} <= five


def test_pvt4_tables():
    rep = verify_pvt4_tables()
    assert rep.ok, [c.to_dict() for c in rep.failures]
    assert len(rep.claims) > 40


def test_report_schema_and_determinism():
    rep = run_suite("semidirect", 4, seed=123)
    doc = json.loads(rep.to_json())
    assert set(doc) == {"suite", "n", "seed", "claims"}
    assert doc["seed"] == 123
    for c in doc["claims"]:
        assert set(c) <= {"id", "anchor", "status", "witness", "seed"}
        assert c["status"] in ("pass", "fail")
        assert c["anchor"]
    ids = [c["id"] for c in doc["claims"]]
    assert ids == sorted(ids) and len(ids) == len(set(ids))
    assert rep.to_json() == run_suite("semidirect", 4, seed=123).to_json()
    assert "claims pass" in rep.to_text()


def test_run_all_prefixes_suites():
    rep = run_all(4)
    assert rep.ok
    prefixes = {c.id.split("/")[0] for c in rep.claims}
    assert prefixes == set(SUITES)
