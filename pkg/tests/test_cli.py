import json

import jsonschema
import pytest

from eulerian2.cli import main
from eulerian2.formats import REPORT_SCHEMA, read_bfile, write_bfile
from eulerian2.special import stirling2_row


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["row", "3"], "1 8 6\n"),
        (["row", "1"], "1\n"),
        (["row", "4", "--format", "csv"], "1,22,58,24\n"),
        (["seq", "bernoulli", "4"], "1, -1/2, 1/6, 0, -1/30\n"),
        (["seq", "harmonic", "3"], "0, 1, 3/2, 11/6\n"),
        (["seq", "cauchy2", "2"], "1, 1/2, 5/6\n"),
        (["norlund", "2", "--method", "egf"], "0, -1/12, 1/4\n"),
        (["norlund", "2", "--eval", "1"], "1/6\n"),
        (["norlund", "3", "--eval", "3"], "-9/4\n"),
        # value from an independent sympy expansion of sqrt((e^x-1)/x)
        (["norlund", "4", "--method", "interp", "--eval=-1/2"], "79/3840\n"),
        (["enumerate", "2"], "1122\n1221\n2211\n"),
        (["enumerate", "2", "--histogram"], "k=1:1 k=2:2 (recurrence: 1 2) MATCH\n"),
    ],
)
def test_outputs(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    if expected is not None:
        assert out == expected


@pytest.mark.parametrize(
    "argv",
    [
        ["row", "0"],
        ["seq", "nope", "3"],
        ["seq", "bernoulli", "3", "--format", "bfile"],
        ["norlund", "0", "--method", "theorem1"],
        ["enumerate", "9"],
        ["enumerate", "3", "--cap", "11"],
        ["verify", "--identity", "nope"],
        ["verify", "--n-max", "0"],
    ],
)
def test_usage_errors(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    capsys.readouterr()
    assert code == 2


def test_verify_exit_codes(capsys):
    assert run(capsys, "verify", "--all", "--n-max", "10")[0] == 0
    assert run(capsys, "verify", "--identity", "theorem4", "--sign-mode", "as-printed", "--n-max", "5")[0] == 1


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "theorem3", "--n-max", "1", "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data) == 1 and data[0]["holds"] is True
    jsonschema.validate(data[0], REPORT_SCHEMA)


def test_verify_json_schema_full(capsys):
    code, out, _ = run(capsys, "verify", "--n-max", "6", "--format", "json")
    data = json.loads(out)
    for item in data:
        jsonschema.validate(item, REPORT_SCHEMA)
    notes = [d for d in data if not d["holds"]]
    assert notes and all("documented exception" in d["note"] for d in notes)


def test_verify_csv_header(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "miki", "--n-max", "4", "--format", "csv", "--header")
    lines = out.splitlines()
    assert lines[0] == "identity,params,lhs,rhs,holds,note"
    assert len(lines) == 4


def test_bfile_round_trip(capsys):
    code, out, _ = run(capsys, "row", "6", "--format", "bfile")
    assert read_bfile(out) == (1, [1, 114, 1452, 4400, 3708, 720])
    code, out, _ = run(capsys, "seq", "stirling2", "5", "--format", "bfile")
    assert read_bfile(out) == (0, [v for n in range(6) for v in stirling2_row(n)])


def test_bfile_rejects_rationals():
    with pytest.raises(ValueError):
        write_bfile([1, 0.5])
    assert read_bfile(write_bfile([3, -4, 5], offset=2)) == (2, [3, -4, 5])
