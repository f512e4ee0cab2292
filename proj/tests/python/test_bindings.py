import json

import pytest

import tknots


def test_dihedral_structure():
    sb = tknots.dihedral(3)
    assert sb.biquandle_size == 3 and sb.bset_size == 3
    assert sb.strongly_connected
    assert sb.under(0, 1) == 2
    assert sb.over(0, 1) == 0


def test_corresponding_tribracket_is_dihedral():
    t = tknots.corresponding_tribracket(tknots.dihedral(5))
    assert t == tknots.dihedral_tribracket(5)
    assert t(1, 2, 4) == (1 - 2 + 4) % 5


def test_structure_round_trip(data):
    sb = tknots.structure(data / "dihedral3.json")
    again = tknots.structure(json.loads(sb.to_json()))
    assert json.loads(again.to_json()) == json.loads(sb.to_json())


def test_check_and_homology(data):
    assert tknots.check(data / "dihedral3.json") == {"passed": True}
    h = tknots.homology(data / "dihedral3.json", theory="sb", degree=2, mod=3)
    assert h["torsion"] == [3] or h.get("group")


def test_invariant_accepts_dicts(data):
    pd = json.loads((data / "trefoil.json").read_text())
    st = json.loads((data / "dihedral3.json").read_text())
    r = tknots.invariant(pd, st, "mochizuki:3")
    assert r["coloring_count"] == 27
    assert r["phi"] == [[0, 9], [1, 18]]


def test_compare_surface(data):
    r = tknots.compare(data / "two-triple-points.json", data / "dihedral3.json", "mochizuki:3")
    assert r["sb"]["coloring_count"] == r["lb"]["coloring_count"] == 2187
    assert r["phi_equal"]


def test_jobs_deterministic(data):
    a = tknots.colorings(data / "two-triple-points.json", data / "dihedral3.json", jobs=1)
    b = tknots.colorings(data / "two-triple-points.json", data / "dihedral3.json", jobs=3)
    assert a == b


def test_mochizuki_value():
    n = 3
    for x in range(n):
        for y in range(n):
            for z in range(n):
                num = (2 * z - y) ** n + y ** n - 2 * z ** n
                assert tknots.mochizuki_value(n, x, y, z) == ((x - y) * (num // n)) % n


def test_smith_normal_form():
    s = tknots.smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert s["diagonal"] == [2, 6, 12]
    assert s["rank"] == 3


def test_errors_carry_codes(data, tmp_path):
    with pytest.raises(tknots.TknotsError) as e:
        tknots.check(tmp_path / "missing.json")
    assert e.value.args[0] == "malformed_input"
    with pytest.raises(tknots.TknotsError) as e:
        tknots.alexander(4, [2])
    assert e.value.args[0] in ("axiom_violation", "malformed_input", "contract_violation")


def test_run_reports_status(data):
    report, status = tknots.run("homology", data / "nope.json")
    assert status == 2 and report["error"]["code"] == "malformed_input"
