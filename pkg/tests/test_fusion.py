from __future__ import annotations

from admfusion.fusion import FusionTable, from_rows


def z2():
    return FusionTable(("0", "1"), {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1, (1, 1, 0): 1})


def test_lookups():
    t = z2()
    assert t.N(1, 1, 0) == 1 and t.N(1, 1, 1) == 0
    assert t.product("1", "1") == {"0": 1}
    assert t.row(0, 1) == {1: 1}


def test_structure_checks_pass_on_group_ring():
    t = z2()
    assert not t.unit_violations()
    assert not t.symmetry_violations()
    assert not t.associativity_violations()


def test_structure_checks_flag_bad_tables():
    bad = FusionTable(("0", "1"), {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 0): 1, (1, 1, 0): 1})
    assert bad.unit_violations()
    assert bad.symmetry_violations()


def test_zero_entries_dropped_and_equality():
    t = FusionTable(("a",), {(0, 0, 0): 1, (0, 0, 0 + 0): 1})
    assert t == FusionTable(("a",), {(0, 0, 0): 1})
    assert FusionTable(("a",), {(0, 0, 0): 0}).mult == {}


def test_serialization():
    t = from_rows(["0", "1"], {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {0: 1}})
    assert t == z2()
    assert t.to_csv().splitlines() == ["i,j,k,N", "0,0,0,1", "0,1,1,1", "1,0,1,1", "1,1,0,1"]
    data = t.to_json(str, algebra="A1")
    assert data == {"algebra": "A1", "simples": ["0", "1"], "entries": [[0, 0, 0, 1], [0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1]]}
    assert "1 x 1 = 0" in t.to_text()
