import json
import pathlib

import numpy as np
import pytest

import kac

DATA = pathlib.Path(__file__).resolve().parents[2] / "tests" / "data"


def all_pass(entries):
    return all(e["pass"] for e in entries)


@pytest.mark.parametrize("name", ["Z2", "Z3", "Z4", "Z2xZ2", "S3"])
def test_builders_are_hopf(name):
    g = kac.named_group(name)
    for H in (kac.function_algebra(g), kac.group_algebra(g)):
        for A in (H, kac.dual(H)):
            entries = kac.validate_hopf(A)
            assert len(entries) == 9
            assert all_pass(entries)
            assert kac.span_dimension(A) == A.N**2


def test_haar_of_group_algebra():
    H = kac.group_algebra(kac.cyclic_group(4))
    e = kac.haar_element(H)
    assert np.allclose(e, 0.25)
    assert np.allclose(H.mul(e, e), e)


def test_comatrix_and_crossed_base():
    H = kac.group_algebra(kac.symmetric_group3())
    assert all_pass(kac.check_comatrix(H))
    assert kac.crossed_base_blocks(H) == [6]


def test_tower_level():
    H = kac.group_algebra(kac.cyclic_group(2))
    entries = kac.tower_report(H, 2)
    assert all_pass(entries)
    names = [e["name"] for e in entries]
    assert "e.p - 1/N" in names


def test_L_constants():
    s, m = kac.L_constants(kac.function_algebra(kac.cyclic_group(2)))
    assert s == pytest.approx(2.0)
    assert m == pytest.approx(4.0)


def test_json_round_trip(tmp_path):
    H = kac.group_algebra(kac.symmetric_group3())
    p = tmp_path / "h.json"
    p.write_text(kac.to_json(H))
    H2 = kac.load(str(p))
    assert np.array_equal(H2.comult, H.comult)


def test_cli_run():
    code, out, _ = kac.run(["span-check", str(DATA / "s3.json")])
    assert code == 0
    assert out.splitlines()[0] == "36"
    code, out, _ = kac.run(["validate", str(DATA / "f2.json"), "--format", "json"])
    assert code == 0
    assert len(json.loads(out)["entries"]) == 9
    code, _, err = kac.run(["validate", str(DATA / "bad_group.json")])
    assert code == 3
    assert "NotAGroup" in err


def test_errors_are_raised():
    with pytest.raises(kac.KacError):
        kac.group_algebra([[0, 1], [0, 1]])
