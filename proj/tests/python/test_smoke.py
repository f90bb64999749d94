import pathlib
import re

import pytest

import cra

GOLDEN = pathlib.Path(__file__).resolve().parent.parent / "golden"


def test_skip_par_nil():
    r = cra.equal("skip || nil = nil", states=2, depth=4)
    assert r == {"holds": True, "failed": None, "witness": None}


def test_counterexample_has_one_step():
    r = cra.check("nil [= pi{id}", depth=2)
    assert not r["holds"]
    assert r["failed"] == "lhs [= rhs"
    assert re.fullmatch(r"s\d -pi:\d->\d-> s\d : (TERM|ABORT|TRUNC)", r["witness"])


def test_traces_of_nil():
    assert cra.traces("nil", states=2) == ["s0 : TERM", "s1 : TERM"]


def test_normal_form_is_equal():
    term = "(pi{(0,1)} |~| eps{id}) ; skip"
    n = cra.normalize(term, states=2, depth=3)
    assert cra.equal(f"{term} = {n}", states=2, depth=3)["holds"]


def test_event_models():
    q = "events a,abar; complement a~abar; res{a,abar} (ev(a) || ev(abar)) = ev(tau)"
    assert cra.equal(q, model="ccs")["holds"]
    assert cra.check("particles a; bound 2; ev(a) || ev(a^-1) [= ev(1)", model="sccs",
                     depth=4)["holds"]


def test_errors():
    with pytest.raises(cra.ParseError):
        cra.check("nil [= [= nil")
    with pytest.raises(cra.ParseError):
        cra.normalize("nil |~| nil /\\ nil")
    with pytest.raises(cra.Error):
        cra.laws(law="no-such-law")
    with pytest.raises(cra.Error):
        cra.check("nil = nil")


def test_law_suite_small():
    names = cra.law_names("rel")
    assert "atomic-interchange" in names and "par-assoc" not in names
    assert "ccs-sync-or-interleave" in cra.law_names()
    results = cra.laws(states=2, depth=4, trials=10)
    assert [r["law"] for r in results] == names
    assert all(r["status"] == "PASS" and r["witness"] is None for r in results)


@pytest.mark.parametrize("law", ["corrupt-atomic-interchange", "corrupt-omega-unfold",
                                 "corrupt-conj-abort"])
def test_corrupted_law_matches_golden(law):
    [r] = cra.laws(law=law, states=2, depth=3, trials=50, seed=1)
    golden = (GOLDEN / f"{law}.txt").read_text().splitlines()
    assert r["status"] == "FAIL"
    assert golden[0] == f"{law} corrupted FAIL trials={r['trials']}"
    assert golden[-1] == f"  witness: {r['witness']}"
