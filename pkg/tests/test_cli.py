from __future__ import annotations

import json

import jsonschema
import pytest

from jtkit.cli import run
from jtkit.schemas import SCHEMAS


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def check_json(capsys, name, *argv):
    code, out, err = invoke(capsys, name, *argv)
    assert code == 0, err
    payload = json.loads(out)
    jsonschema.validate(payload, SCHEMAS[name])
    return payload


def test_pf_check(capsys):
    payload = check_json(capsys, "pf-check", "--seq", "quadric:3", "--order", "3", "--window", "4")
    assert payload["verdict"] == "positive-up-to-bounds"
    assert payload["witness"] is None


def test_pf_check_negative_is_still_success(capsys):
    payload = check_json(
        capsys, "pf-check", "--seq", "hadamard:quadric:2,squares", "--order", "3", "--window", "6"
    )
    assert payload["verdict"] == "negative"
    assert payload["witness"]["lambda"] == [2, 2, 2]
    assert payload["witness"]["value"] == -60


def test_jt_minor(capsys):
    payload = check_json(capsys, "jt-minor", "--seq", "quadric:3", "--lambda", "2,1")
    assert payload["value"] == 8
    payload = check_json(capsys, "jt-minor", "--seq", "quadric:3", "--lambda", "3,2", "--mu", "1")
    assert payload["value"] == 16
    payload = check_json(capsys, "jt-minor", "--seq", "poly:2", "--lambda", "1,1")
    assert payload["value"] == [{"partitions": [[1, 1]], "coeff": 1}]


def test_lr(capsys):
    payload = check_json(capsys, "lr", "--lambda", "2,1", "--mu", "1", "--nu", "2")
    assert payload["coefficient"] == 1
    payload = check_json(capsys, "lr", "--lambda", "4,2", "--mu", "2,1", "--nu", "2,1")
    assert payload["coefficient"] == 1


def test_skew_expand(capsys):
    payload = check_json(capsys, "skew-expand", "--lambda", "2,1", "--mu", "1")
    got = {tuple(t["partitions"][0]): t["coeff"] for t in payload["terms"]}
    assert got == {(2,): 1, (1, 1): 1}


def test_dim_variants(capsys):
    payload = check_json(capsys, "dim", "gl", "--lambda", "2,1", "--m", "3")
    assert payload["value"] == 8
    payload = check_json(capsys, "dim", "super", "--lambda", "2,1", "--r", "2", "--s", "1")
    assert payload["value"] == 8
    for method in ("jt", "vertical_strip", "super"):
        payload = check_json(
            capsys, "dim", "quadric", "--lambda", "2,1", "--m", "3", "--method", method
        )
        assert payload["value"] == 8


def test_veronese(capsys):
    payload = check_json(capsys, "veronese", "--seq", "quadric:3", "--d", "2", "--lambda", "1,1")
    assert payload["value"] == 16
    assert payload["identity_ok"] is True


def test_tensor_and_segre(capsys):
    payload = check_json(capsys, "tensor", "--a", "quadric:2", "--b", "quadric:2", "--lambda", "2")
    assert payload["identity_ok"] is True
    payload = check_json(capsys, "segre", "--a", "quadric:2", "--b", "squares", "--lambda", "2,2,2")
    assert payload["value"] == -60


def test_e_class(capsys):
    payload = check_json(capsys, "e-class", "--seq", "quadric:2", "--d", "2")
    assert payload["value"] == 2


def test_schur_profile(capsys):
    payload = check_json(capsys, "schur-profile", "--seq", "quadric:3")
    assert payload["profile"] == [2, 1]
    payload = check_json(capsys, "schur-profile", "--seq", "heisenberg")
    assert payload["profile"] is None


def test_ortho_decomp(capsys):
    payload = check_json(capsys, "ortho-decomp", "--m", "4", "--lambda", "1,1")
    assert payload["entries"] == [{"mu": [], "mult": 1}, {"mu": [1, 1], "mult": 1}]
    assert payload["dimension"] == 7
    assert payload["schur_dim"] == 7


def test_hs_check(capsys):
    payload = check_json(capsys, "hs-check", "--m", "3", "--n", "2", "--trunc", "6")
    assert payload["ok"] is True


def test_efw(capsys):
    payload = check_json(capsys, "efw", "--shifts", "2,1,2,3", "--dim", "5", "--count", "5")
    assert payload["partitions"] == [
        [3, 3, 2],
        [5, 3, 2],
        [5, 4, 2],
        [5, 4, 4],
        [5, 4, 4, 3],
    ]
    payload = check_json(capsys, "efw", "--shifts", "1,2", "--dim", "2")
    assert payload["table"]["rows"] == []


def test_resolve_json(capsys):
    payload = check_json(capsys, "resolve", "quadric", "--m", "3", "--shifts", "1,1,1", "--tail", "2")
    ranks = [r["rank"] for r in payload["table"]["rows"]]
    assert ranks == [1, 3, 4, 4, 4]
    assert payload["table"]["tail"]["start"] == 2
    payload = check_json(capsys, "resolve", "rnc", "--d", "3", "--shifts", "1,1,1", "--tail", "2")
    assert payload["table"]["tail"]["ratio"] == 2
    payload = check_json(capsys, "resolve", "poly", "--dim", "2", "--shifts", "1,1,2")
    assert [r["rank"] for r in payload["table"]["rows"]] == [1, 2, 1]


def test_resolve_csv_golden(capsys):
    code, out, err = invoke(
        capsys, "resolve", "quadric", "--m", "3", "--shifts", "1,1,2", "--format", "csv"
    )
    assert code == 0
    assert out.splitlines() == [
        "index,twist,rank,label",
        '0,0,4,"(1,1)"',
        '1,1,8,"(2,1)"',
        '2,2,4,"(2,2)"',
    ]


def test_validate(capsys):
    payload = check_json(capsys, "validate", "quadric", "--m", "3", "--shifts", "1,1,2")
    assert payload["purity"]["is_polynomial"] is True
    assert payload["purity"]["coefficients"] == [4, 4]
    assert payload["purity"]["dimension"] == 8


def test_hk_solve(capsys):
    payload = check_json(capsys, "hk-solve", "--twists", "0,1,2")
    assert payload["tail"] == [1, 3, 4]
    assert payload["finite"] == [1, 2, 1]
    assert payload["tail_raw"] == ["1/4", "3/4", "1"]


def test_zelevinsky(capsys):
    payload = check_json(capsys, "zelevinsky", "--seq", "quadric:3", "--lambda", "2,2")
    assert payload["euler"] == 4
    assert payload["minor"] == 4
    assert payload["ok"] is True
    assert payload["degrees"][1]["terms"][0]["weight"] == [3, 1]


def test_usage_errors_exit_2(capsys):
    assert invoke(capsys, "no-such-command")[0] == 2
    assert invoke(capsys, "jt-minor", "--seq", "quadric:3")[0] == 2
    assert invoke(capsys, "jt-minor", "--seq", "what:1", "--lambda", "1")[0] == 2
    code, out, err = invoke(capsys, "dim", "gl", "--lambda", "2,1")
    assert code == 2
    assert "needs --m" in err
    code, out, err = invoke(capsys, "jt-minor", "--seq", "quadric:3", "--lambda", "1", "--format", "csv")
    assert code == 2


def test_domain_errors_exit_1(capsys):
    code, out, err = invoke(capsys, "ortho-decomp", "--m", "3", "--lambda", "2,2")
    assert code == 1
    assert err.startswith("error:")
    assert invoke(capsys, "hs-check", "--m", "2", "--n", "2", "--trunc", "13")[0] == 1
    assert invoke(capsys, "resolve", "quadric", "--m", "3", "--shifts", "1,1")[0] == 1
    big = ",".join(str(9 - i) for i in range(9))
    code, out, err = invoke(capsys, "jt-minor", "--seq", "poly:2", "--lambda", big)
    assert code == 1
    assert "--max-cost" in err


def test_max_cost_is_a_budget_cap(capsys):
    lam = "2,2,1,1,1,1"
    code, out, err = invoke(
        capsys, "jt-minor", "--seq", "poly:2", "--lambda", lam, "--max-cost", "5"
    )
    assert code == 1
    assert "--max-cost" in err
    payload = check_json(capsys, "jt-minor", "--seq", "poly:2", "--lambda", lam)
    assert isinstance(payload["value"], list)
    # raising the flag past the expansion engine's own bound still fails fast
    big = ",".join(str(9 - i) for i in range(9))
    code, out, err = invoke(
        capsys, "jt-minor", "--seq", "poly:2", "--lambda", big, "--max-cost", "9"
    )
    assert code == 1


def test_repeat_invocations_byte_identical(capsys):
    args = ("resolve", "rnc", "--d", "3", "--shifts", "1,2,1")
    first = invoke(capsys, *args)
    second = invoke(capsys, *args)
    assert first == second
    assert first[0] == 0


def test_text_format(capsys):
    code, out, err = invoke(
        capsys, "jt-minor", "--seq", "quadric:3", "--lambda", "2,1", "--format", "text"
    )
    assert code == 0
    assert "value" in out and "8" in out
    code, out, err = invoke(
        capsys, "resolve", "quadric", "--m", "3", "--shifts", "1,1,1", "--format", "text"
    )
    assert code == 0
    assert "tail" in out


def test_every_schema_has_a_subcommand():
    from jtkit.cli import _build_parser

    parser = _build_parser()
    sub = next(
        a for a in parser._actions if a.__class__.__name__ == "_SubParsersAction"
    )
    assert set(SCHEMAS) == set(sub.choices)
