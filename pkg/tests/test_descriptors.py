import pytest

from matroidunion.core import make_uniform, same_family
from matroidunion.descriptors import SchemaError, canonical_json, load_json, matroid_from_descriptor

U = {"type": "uniform", "k": 1, "ground": ["a", "b", "c"]}


@pytest.mark.parametrize("desc", [
    U,
    {"type": "circuit", "ground": ["a", "b"]},
    {"type": "free", "ground": ["a"]},
    {"type": "loops", "ground": []},
    {"type": "graphic", "vertices": ["u", "v"], "edges": [["e", "u", "v"], ["f", "u", "u"]]},
    {"type": "dual", "of": U},
    {"type": "sum", "parts": [U, {"type": "free", "ground": ["d"]}]},
    {"type": "restrict", "of": U, "set": ["a", "c"]},
    {"type": "contract", "of": U, "set": ["a", "b"]},
    {"type": "union", "parts": [U, U]},
    {"type": "mk", "of": U, "k": 1},
])
def test_every_type_loads_and_round_trips(desc):
    M = matroid_from_descriptor(desc)
    assert same_family(matroid_from_descriptor(M.descriptor), M)


def test_union_descriptor_behaviour():
    M = matroid_from_descriptor({"type": "union", "parts": [U, U]})
    assert same_family(M, make_uniform(2, ["a", "b", "c"]))


@pytest.mark.parametrize("desc, pointer", [
    ({"type": "uniform", "k": 1, "ground": ["a", "a"]}, "/ground/1"),
    ({"type": "uniform", "k": -1, "ground": ["a"]}, "/k"),
    ({"type": "uniform", "ground": ["a"]}, "/"),
    ({"type": "bogus"}, "/type"),
    ({"type": "circuit", "ground": []}, "/ground"),
    ({"type": "graphic", "vertices": ["u"], "edges": [["e", "u", "w"]]}, "/edges/0/2"),
    ({"type": "graphic", "vertices": ["u"], "edges": [["e", "u", "u"], ["e", "u", "u"]]}, "/edges/1/0"),
    ({"type": "sum", "parts": [U, U]}, "/parts"),
    ({"type": "restrict", "of": U, "set": ["z"]}, "/set/0"),
    ({"type": "dual", "of": {"type": "free", "ground": ["a b"]}}, "/of/ground/0"),
    ({"type": "mk", "of": U, "k": 2}, "/k"),
    ({"type": "union", "parts": [U, {"type": "free", "ground": ["x"]}]}, "/parts"),
])
def test_schema_errors_point_at_the_problem(desc, pointer):
    with pytest.raises(SchemaError) as exc:
        matroid_from_descriptor(desc)
    assert exc.value.pointer == pointer


def test_load_json_errors(tmp_path):
    with pytest.raises(SchemaError, match="file not found"):
        load_json(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("[1,")
    with pytest.raises(SchemaError, match="malformed JSON"):
        load_json(bad)


def test_canonical_json_is_sorted():
    assert canonical_json({"b": 1, "a": [2, 1]}) == '{"a":[2,1],"b":1}'
