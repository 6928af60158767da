import json

import pytest
from hypothesis import given

from wreathlab.algebra import cyclic_group_algebra, diagonal_algebra, dual_numbers
from wreathlab.cells import check_wdl_onecell, identity_wdl_cell
from wreathlab.errors import SchemaError
from wreathlab.gallery.bialgebra import pair_groupoid
from wreathlab.gallery.frobenius import diagonal_frobenius, validate_frobenius
from wreathlab.io import (SCHEMAS, detect_kind, dump, from_bundle, load_bundle, save_bundle, to_bundle,
                          validate_schema)
from wreathlab.linalg import Mat
from wreathlab.ore import OrePoly, triangular_pqqd, validate_pqqd
from wreathlab.wdl import check_wdl, flip_law, weak_wreath

from conftest import matrices


def roundtrip(value):
    data = to_bundle(value)
    text = dump(data)
    again = from_bundle(json.loads(text))
    assert to_bundle(again) == data
    return again


@given(matrices(2, 3))
def test_matrix_roundtrip(m):
    assert roundtrip(m) == m


def test_value_roundtrips(triangle):
    fact, w = triangle
    values = [cyclic_group_algebra(3), dual_numbers(), w, fact, triangular_pqqd(),
              OrePoly(3, ((1, 0, 0), (0, "1/2", 0))), pair_groupoid(2), diagonal_frobenius(2), weak_wreath(w)]
    for v in values:
        roundtrip(v)


def test_loaded_values_are_usable(triangle):
    _, w = triangle
    w2 = roundtrip(w)
    assert check_wdl(w2.A, w2.B, w2.psi).ok
    assert validate_pqqd(roundtrip(triangular_pqqd())).ok
    assert validate_frobenius(roundtrip(diagonal_frobenius(3))).ok


def test_kind_detection_without_tag(triangle):
    _, w = triangle
    data = to_bundle(w)
    del data["kind"]
    assert detect_kind(data) == "wdl"
    assert detect_kind({"rows": 1, "cols": 1, "entries": [["1"]]}) == "mat"


def test_every_kind_has_a_schema():
    assert set(SCHEMAS) >= {"mat", "algebra", "wdl", "fact", "cell", "pqqd", "orepoly", "weak_bialgebra",
                            "frobenius", "wreath"}


def test_bad_rational_points_at_entry():
    data = to_bundle(flip_law(cyclic_group_algebra(2), diagonal_algebra(2)))
    data["A"]["mult"][0][3] = "1.5"
    with pytest.raises(SchemaError) as e:
        from_bundle(data)
    assert e.value.pointer == "/A/mult/0/3"


def test_short_row_points_at_row():
    data = to_bundle(flip_law(cyclic_group_algebra(2), cyclic_group_algebra(2)))
    data["psi"]["entries"][1] = data["psi"]["entries"][1][:3]
    with pytest.raises(SchemaError) as e:
        from_bundle(data)
    assert e.value.pointer == "/psi/entries/1"
    assert "expected 4 entries" in str(e.value)


def test_missing_field():
    with pytest.raises(SchemaError) as e:
        validate_schema("pqqd", {"p": ["1"]})
    assert "required" in e.value.message


def test_mismatched_psi_shape():
    data = to_bundle(flip_law(cyclic_group_algebra(2), cyclic_group_algebra(2)))
    data["psi"] = Mat([[1]]).to_json()
    with pytest.raises(SchemaError):
        from_bundle(data)


def test_tampered_wreath_is_rejected(triangle):
    _, w = triangle
    data = to_bundle(weak_wreath(w))
    data["psibar"]["entries"][0][0] = "7"
    with pytest.raises(SchemaError) as e:
        from_bundle(data)
    assert e.value.pointer == "/psibar"


def test_invalid_json_file(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    with pytest.raises(SchemaError):
        load_bundle(p)
    with pytest.raises(SchemaError):
        load_bundle(tmp_path / "missing.json")


def test_cell_bundle_resolves_paths(tmp_path, triangle):
    _, w = triangle
    save_bundle(w, tmp_path / "law.json")
    cell = identity_wdl_cell(w)
    save_bundle(cell, tmp_path / "cells" / "id.json", ("../law.json", "../law.json"))
    loaded = load_bundle(tmp_path / "cells" / "id.json")
    assert check_wdl_onecell(loaded).ok
    with pytest.raises(ValueError):
        to_bundle(cell)
