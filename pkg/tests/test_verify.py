from fractions import Fraction

import pytest

from commenergy import verify as V
from commenergy.formulas import QUANTITIES


def statuses(rec):
    return {q: rec.status_of(q).kind for q in QUANTITIES}


def test_dihedral3_f6():
    r = V.verify_group("dihedral:m=3", "F6")
    assert r.status_of("LE").kind == "ExactMatch"
    assert r.computed.laplacian_energy.value == Fraction(16, 5)
    e = r.status_of("E")
    assert e.kind == "Mismatch" and e.delta == 1


def test_gl23_f11():
    r = V.verify_group("gl2:p=3,n=1", "F11")
    s = r.status_of("E")
    assert s.kind == "Mismatch"
    assert r.predicted_of("E") == Fraction(21, 2)
    assert r.computed.energy.value == 66
    assert s.delta == Fraction(21, 2) - 66
    assert r.decomposition == "3K6 + 4K4 + 6K2"


def test_q8_f7():
    assert set(statuses(V.verify_group("dicyclic:m=2", "F7")).values()) == {"ExactMatch"}


def test_s4_interval_status():
    r = V.verify_group("s4", "F19")
    assert r.status_of("E").kind == "IntervalMatch"
    assert r.status_of("LE").kind == "Mismatch" and r.status_of("LE").approx is not None
    check = r.spectrum_check
    assert check.multiplicity_sums == (23, 23, 24)
    assert check.equal_to_computed[:2] == (True, True)
    # energies recomputed from the printed spectra agree with the computed ones
    assert check.energies_from_printed[0].encloses(r.computed.energy) or \
        not check.energies_from_printed[0].disjoint(r.computed.energy)


def test_hypotheses_checked():
    with pytest.raises(V.InapplicablePairing):
        V.verify_group("dihedral:m=3", "F13")
    with pytest.raises(V.InapplicablePairing):
        V.verify_group("frobenius:p=3,q=7", "F18")
    with pytest.raises(V.InapplicablePairing):
        V.verify_group("s4", "F20")
    with pytest.raises(V.InapplicablePairing):
        V.verify_group("a4", "F6")
    assert V.verify_group("dihedral:m=4", "F13").params == (("z", 2),)
    assert V.verify_group("dihedral:m=3", "F15").params == (("quotient", "D6"), ("z", 1))
    assert V.verify_group("hanakiV:p=3", "F15").params == (("quotient", "Z3xZ3"), ("z", 3))
    assert V.verify_group("a5", "F10").params == (("k", 2),)


def test_f13_triple_on_d8():
    r = V.verify_group("dihedral:m=4", "F13")
    assert set(statuses(r).values()) == {"ExactMatch"}


def test_f18_membership():
    r = V.verify_group("dihedral:m=3", "F18")
    assert r.status_of("LE").kind == "ExactMatch"


def test_scan_dihedral():
    recs = V.scan_family("dihedral", {"m": range(3, 11)})
    assert [dict(r.params)["m"] for r in recs] == list(range(3, 11))
    assert all(r.formula == "F6" for r in recs)
    odd = [r for r in recs if dict(r.params)["m"] % 2]
    assert all(r.status_of("E").delta == 1 for r in odd)


def test_scan_elementary_all_match():
    recs = V.scan_family("elementary:p=3", {"z": [3, 6, 9]})
    assert len(recs) == 3
    for r in recs:
        assert set(statuses(r).values()) == {"ExactMatch"}


def test_scan_suzuki_products():
    recs = V.scan_family("product", {"k": [1, 2, 3, 5]})
    kinds = [r.status_of("LEplus").kind for r in recs]
    assert kinds == ["ExactMatch", "Mismatch", "Mismatch", "Mismatch"]
    for r in recs[1:]:
        c = dict(r.params)["z"]
        # the proof's own term sum carries +530c
        assert r.computed.signless_energy.value == Fraction(120 * c * c + 530 * c - 190, 19)


def test_scan_skips_cap():
    recs = V.scan_family("dihedral", {"m": [3, 5000]})
    assert len(recs) == 1


def test_errata_report_contents():
    run = V.run_pairs([("gl2:p=3,n=1", "F11"), ("gl2:q=4", "F11"), ("frobenius:p=3,q=7", "F8")])
    rep = V.errata_report(run.records)
    keys = {(m["formula"], m["quantity"]) for m in rep["mismatches"]}
    assert ("F11", "E") in keys
    f11 = next(m for m in rep["mismatches"] if (m["formula"], m["quantity"]) == ("F11", "E"))
    assert [w["group"] for w in f11["witnesses"]] == ["gl2:p=3,n=1", "gl2:p=2,n=2"]
    assert f11["witnesses"][0]["evidence"]["decomposition"] == "3K6 + 4K4 + 6K2"
    notes = {n["formula"]: n for n in rep["spectrumNotes"]}
    assert "F8" in notes
    assert "sum to 21" in notes["F8"]["witnesses"][0]["note"]


def test_errata_empty_for_consistent_formulas():
    pairs = V.plan_pairs(["F2", "F13", "F17"])
    run = V.run_pairs(pairs)
    assert run.records and not V.errata_report(run.records)["mismatches"]


def test_census():
    rows = {r.group: r for r in V.super_integral_census(["sl23", "s4", "suzuki2"])}
    assert rows["sl23"].super_integral
    assert not rows["s4"].super_integral and rows["s4"].flags[0] is False
    assert rows["suzuki2"].super_integral


def test_cross_check_detects_disagreement(monkeypatch):
    from commenergy import energies
    from commenergy.groups import build, parse_descriptor

    real = energies.clique_union_spectrum

    def broken(sizes, kind):
        return real([s + 1 for s in sizes], kind)

    monkeypatch.setattr(energies, "clique_union_spectrum", broken)
    spec = parse_descriptor("dihedral:m=5")
    with pytest.raises(V.InternalInconsistency):
        V.cross_check(spec, build(spec))


def test_cross_check_routes():
    comp, _, _ = V.compute("psl2:k=2")
    assert comp.routes == ("exact", "clique", "float")
    assert comp.float_deviation < 1e-8
    comp, _, _ = V.compute("s4")
    assert comp.routes == ("exact", "float")


def test_records_deterministic():
    a = V.run_pairs(V.plan_pairs(["F6", "F19"]), threads=1).to_json()
    b = V.run_pairs(V.plan_pairs(["F6", "F19"]), threads=4).to_json()
    assert a == b
    c = V.run_pairs(V.plan_pairs(["F6"])).to_csv()
    assert c.splitlines()[0] == "group,formula,params,quantity,case,predicted,computed,status,delta"


def test_spectra_equal_detects_difference():
    comp, _, _ = V.compute("s4")
    SA, SL, SQ = comp.spectra
    assert V.spectra_equal(SA, SA)
    assert not V.spectra_equal(SA, SL)
