import json
import pathlib

import pytest

import ftc

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


def load(rel):
    return json.loads((DATA / rel).read_text())


def test_field_spec_round_trip():
    assert ftc.field_spec("Fp:7") == "Fp:7"
    assert ftc.field_spec("ext:Q:x^2+x+1") == "ext:Q:x^2+x+1"
    with pytest.raises(ftc.SchemaError):
        ftc.field_spec("Fp:8")


def test_validate_fusion_and_hopf():
    assert ftc.validate(load("fusion/rep_s3_fusion.json"))["valid"]
    bad = ftc.validate(load("bad/rep_s3_tampered.json"))
    assert not bad["valid"] and any(v.startswith("associativity") for v in bad["violations"])
    assert ftc.validate(load("hopf/taft3_f7.json")) == {"kind": "hopf", "valid": True, "violations": []}


def test_lambda_group_orders():
    z6 = load("fusion/z6_fusion.json")
    assert ftc.lambda_group(z6)["order"] == "6"
    assert ftc.lambda_group(z6, char_p=3)["order"] == "2"
    table = ftc.lambda_group(z6, field="Fp:7")["table"]
    assert len(table) == 6 and all(len(r["values"]) == 6 for r in table)
    with pytest.raises(ftc.InfiniteGroupError):
        ftc.lambda_group(load("fusion/free_rank_demo.json"))


def test_invariants_sweedler_and_s3():
    sw = ftc.invariants(ftc.gen("sweedler", "Fp:5"))
    assert (sw["grouplikes"], sw["central_grouplikes"], sw["pivotal"]) == (2, 1, 1)
    s3 = ftc.invariants(load("hopf/s3_f7.json"))
    assert s3["simple_dims"] == [1, 1, 2]
    assert len(s3["fusion"]["blocks"]) == 3
    with pytest.raises(ftc.SplittingError, match="extend to F_4"):
        ftc.invariants(load("bad/z3_f2.json"))


def test_gen_rejects_bad_taft_parameter():
    assert len(ftc.gen("taft", "Fp:7", n=3, q=2)["basis"]) == 9
    with pytest.raises(ValueError):
        ftc.gen("taft", "Fp:7", n=3, q=3)


def test_certify_is_deterministic():
    h = load("hopf/z3_f3.json")
    a = ftc.certify(h, "z3_f3", seed=11)
    assert a == ftc.certify(h, "z3_f3", seed=11)
    assert all(c["status"] == "pass" for c in a["checks"])
    kernel = next(c for c in a["checks"] if c["name"] == "kernel")
    assert kernel["witness"]["kernel_size"] == 3
