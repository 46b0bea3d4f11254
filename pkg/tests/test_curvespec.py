import json

import pytest

from frontal_helicoid import load_spec
from frontal_helicoid.curvespec import CurveSpec, SpecError, bundled_names, bundled_text
from frontal_helicoid.helicoid import Kind

GOOD = {"name": "c", "kind": 1, "lambda": 1.0, "domain": [-1, 1],
        "x1": "u^2/2", "x2": "u^3/3", "a": "1", "b": "0"}


class TestFromDict:
    def test_good(self):
        s = CurveSpec.from_dict(GOOD)
        assert s.kind is Kind.TYPE1 and s.domain == (-1.0, 1.0) and s.lam == 1.0

    @pytest.mark.parametrize("patch", [
        {"kind": 3}, {"kind": "1"}, {"lambda": 0}, {"lambda": True}, {"lambda": "1"},
        {"domain": [1, -1]}, {"domain": [0]}, {"domain": "[-1,1]"}, {"domain": [0, True]},
        {"x1": 3}, {"name": None},
    ])
    def test_rejects(self, patch):
        with pytest.raises(SpecError):
            CurveSpec.from_dict({**GOOD, **patch})

    @pytest.mark.parametrize("key", ["name", "kind", "lambda", "domain", "x1", "x2", "a", "b"])
    def test_missing_key(self, key):
        d = dict(GOOD)
        del d[key]
        with pytest.raises(SpecError, match=key):
            CurveSpec.from_dict(d)

    def test_not_an_object(self):
        with pytest.raises(SpecError):
            CurveSpec.from_dict([GOOD])


class TestLoading:
    def test_bundled_names(self):
        names = bundled_names()
        assert {"example-5.1", "example-5.2"} <= set(names)
        assert names == sorted(names)

    def test_bundled_text_is_json(self):
        for name in bundled_names():
            assert json.loads(bundled_text(name))["name"]

    def test_example_path_falls_back_to_bundled(self):
        assert load_spec("examples/example-5.1.json") == load_spec("example-5.1")

    def test_file_on_disk(self, tmp_path):
        p = tmp_path / "c.json"
        p.write_text(json.dumps(GOOD))
        assert load_spec(p).x2 == "u^3/3"

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_spec(tmp_path / "nope.json")

    def test_invalid_json(self, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text("{")
        with pytest.raises(SpecError, match="invalid JSON"):
            load_spec(p)

    @pytest.mark.parametrize("name, kind, delta", [("example-5.1", 1, 1), ("example-5.2", 2, -1)])
    def test_examples(self, name, kind, delta):
        s = load_spec(name)
        assert s.kind == kind and s.curve().delta == delta
