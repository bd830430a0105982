import json

import pytest

from arlab.field import QQ, PrimeField
from arlab.fixtures import build_fixtures, data_dir, dump
from arlab.specfile import SpecError, load_ring_spec, ring_spec_from_dict

BASE = {"field": {"type": "fp", "p": 32003}, "vars": [{"name": "x"}, {"name": "y"}],
        "order": "grevlex", "relations": ["x^2*y"], "ideals": {"m": ["x", "y"]}}


def write(tmp_path, data, name="ring.json"):
    path = tmp_path / name
    path.write_text(data if isinstance(data, str) else json.dumps(data), encoding="utf-8")
    return path


def test_load_x2y_model(tmp_path):
    spec = load_ring_spec(write(tmp_path, BASE))
    assert spec.ring.names == ("x", "y")
    assert spec.presentation.is_zero(spec.ring.parse("x^2*y"))
    assert spec.ideal("m") == spec.presentation.maximal_ideal()
    assert spec.ring.field == PrimeField(32003)


def test_empty_relations_give_polynomial_ring():
    spec = ring_spec_from_dict({**BASE, "relations": []})
    assert spec.presentation.defining.is_zero()


def test_unknown_variable_is_named(tmp_path):
    data = {**BASE, "ideals": {"bad": ["x + w"]}}
    with pytest.raises(SpecError, match="'w'") as info:
        load_ring_spec(write(tmp_path, data))
    assert "ideals.bad[0]" in str(info.value)


@pytest.mark.parametrize("change, fragment", [
    ({"order": "revlex"}, "order"),
    ({"field": {"type": "fp", "p": 15}}, "field"),
    ({"vars": []}, "vars"),
    ({"vars": [{"name": "x", "weight": 0}]}, "weight"),
    ({"relations": "x"}, "relations"),
    ({"relations": ["1"]}, "relations"),
    ({"decompositions": {"d": [{"q": ["x"]}]}}, "decompositions.d[0]"),
])
def test_invalid_specs_report_the_field(change, fragment):
    with pytest.raises(SpecError, match=fragment.replace("[", r"\[").replace("]", r"\]")):
        ring_spec_from_dict({**BASE, **change})


def test_malformed_json_reports_line(tmp_path):
    with pytest.raises(SpecError, match="line 2"):
        load_ring_spec(write(tmp_path, '{"vars": ["x"],\n  "order": }'))


def test_missing_file():
    with pytest.raises(SpecError):
        load_ring_spec("/nonexistent/ring.json")


def test_field_override():
    spec = ring_spec_from_dict(BASE, field_override={"type": "qq"})
    assert spec.ring.field is QQ


def test_builtin_and_unknown_ideals():
    spec = ring_spec_from_dict(BASE)
    assert spec.ideal("0").is_zero()
    assert spec.ideal("1").is_unit()
    with pytest.raises(SpecError, match="defined: m"):
        spec.ideal("nope")
    with pytest.raises(SpecError):
        spec.decomposition("nope")


def test_decompositions_and_embedded_flag():
    spec = ring_spec_from_dict({**BASE, "decompositions": {"d": [
        {"q": ["x^2"], "p": ["x"]}, {"q": ["y"], "p": ["y"]},
        {"q": ["x^2", "y"], "p": ["x", "y"], "embedded": True}]}})
    d = spec.decomposition("d")
    assert len(d.components) == 3 and d.embedded == [2]


def test_bundled_fixtures_match_generator():
    expected = build_fixtures()
    on_disk = {p.stem: p.read_text(encoding="utf-8") for p in data_dir().glob("*.json")}
    assert set(on_disk) == set(expected)
    for name, spec in expected.items():
        assert on_disk[name] == dump(spec), name


@pytest.mark.parametrize("name", sorted(build_fixtures()))
def test_bundled_fixtures_load(name):
    spec = load_ring_spec(data_dir() / f"{name}.json")
    for ideal_name in spec.ideals:
        spec.ideal(ideal_name)


@pytest.mark.parametrize("name, relation_degree", [("semigroup1", 6), ("semigroup2", 8)])
def test_toric_fixtures_are_weighted_homogeneous(bundled, name, relation_degree):
    A = bundled(name).presentation
    assert A.is_graded()
    assert min(g.degree() for g in A.defining) == relation_degree
