import json
from importlib import resources

import pytest

from germlab.cli import main

DATA = resources.files("germlab").joinpath("data")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    report = json.loads(out.out) if out.out.strip() else None
    return code, report, out.err


def test_classify(capsys):
    code, rep, _ = run(capsys, "classify-pn", "--n", "2", "--gens", "1/e", "--bound", "4")
    assert code == 0
    assert rep["m"] == 1 and rep["verdict"] is True
    assert rep["command"] == "classify-pn"
    assert rep["bounds"] == {"length": 4}
    assert "wall_clock" in rep


def test_correspondence(capsys):
    code, rep, _ = run(capsys, "correspondence", str(DATA / "i2_action.json"))
    assert code == 0
    assert rep["counts"]["subgroupoids"] == 2 and rep["counts"]["subsemigroups"] == 2


def test_spectrum(capsys):
    code, rep, _ = run(capsys, "spectrum", "--family", "orthogonal", "--N", "5", "--with-unit")
    assert code == 0
    assert rep["characters"] == 6 and rep["ultra"] == 5


def test_spectrum_from_file(capsys, tmp_path):
    from germlab.semigroup import orthogonal_semilattice

    f = tmp_path / "e.json"
    f.write_text(orthogonal_semilattice(3).dumps())
    code, rep, _ = run(capsys, "spectrum", "--semilattice", str(f))
    assert code == 0 and rep["ultra"] == 3


def test_characterize(capsys):
    code, rep, _ = run(capsys, "characterize", str(DATA / "i2_action.json"))
    assert code == 0
    code, rep, _ = run(capsys, "characterize", str(DATA / "empty_domain_action.json"))
    assert code == 1 and rep["verdict"] is False


def test_groupoid_commands(capsys):
    for cmd in ("reconstruct", "bisect-correspondence"):
        code, rep, _ = run(capsys, cmd, str(DATA / "pair2_groupoid.json"))
        assert code == 0, cmd


def test_validate(capsys, tmp_path):
    code, rep, _ = run(capsys, "validate-semigroup", str(DATA / "i2_semigroup.json"))
    assert code == 0 and rep["size"] == 7
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"names": ["0", "a", "b"], "mult": [[0, 0, 0], [0, 2, 0], [0, 1, 2]], "zero": 0}))
    code, rep, _ = run(capsys, "validate-semigroup", str(bad))
    assert code == 1 and rep["checks"]["valid"] is False


def test_closedness_and_cover_lemma(capsys):
    code, rep, _ = run(capsys, "closedness", "--n", "2", "--subsemigroup", "Pnm:2", "--bound", "3")
    assert code == 0 and rep["checks"]["cocycle_preimage"] is True
    code, rep, _ = run(capsys, "closedness", "--n", "2", "--subsemigroup", "gens:1/22", "--bound", "2")
    assert code == 0
    code, rep, _ = run(capsys, "cover-lemma", "--n", "2", "--seed", "3", "--trials", "40")
    assert code == 0 and rep["agreements"] == 40


def test_usage_errors(capsys):
    assert run(capsys, "classify-pn", "--n", "2", "--gens", "3/e")[0] == 2
    assert run(capsys, "classify-pn", "--n", "2", "--gens", "1x")[0] == 2
    assert run(capsys, "correspondence", "/no/such/file.json")[0] == 2
    assert run(capsys, "closedness", "--n", "2", "--subsemigroup", "what")[0] == 2
    assert run(capsys, "spectrum")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["cover-lemma", "--trials", "0"])
    assert exc.value.code == 2


def test_pretty_output(capsys):
    code, rep, _ = run(capsys, "spectrum", "--family", "orthogonal", "--N", "2", "--pretty")
    assert code == 0 and rep["characters"] == 2


def test_selftest_is_deterministic(capsys):
    code, a, _ = run(capsys, "selftest", "--trials", "30")
    code2, b, _ = run(capsys, "selftest", "--trials", "30")
    assert code == code2 == 0
    a.pop("wall_clock")
    b.pop("wall_clock")
    assert a == b
