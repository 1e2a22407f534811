import json
import pathlib
import subprocess
import sys

import pytest

from twocheck.dsl import elaborate, parse, print_document
from twocheck.dsl.cli import main as cli_main
from twocheck.errors import ElaborationError, ParseError, UnresolvedReference

CORPUS = sorted((pathlib.Path(__file__).parent.parent / "fixtures").glob("*.tc"))


def test_corpus_exists():
    assert CORPUS, "fixture corpus missing"


@pytest.mark.parametrize("path", CORPUS, ids=[p.name for p in CORPUS])
def test_corpus_parses_and_roundtrips(path):
    text = path.read_text()
    doc = parse(text)
    printed = print_document(doc)
    assert parse(printed) == doc


@pytest.mark.parametrize("path", CORPUS, ids=[p.name for p in CORPUS])
def test_corpus_elaborates(path):
    env = elaborate(parse(path.read_text()))
    assert env.order


def test_minimal_twocat_declaration():
    doc = parse("twocat K { objects A }")
    assert doc.declarations[0].kind == "twocat"
    env = elaborate(doc)
    assert env.twocats["K"].objects == ("A",)


def test_unclosed_block_reports_expected():
    with pytest.raises(ParseError) as err:
        parse("twocat K { objects A ")
    assert "}" in err.value.expected or "identifier" in err.value.expected


def test_syntax_error_position():
    with pytest.raises(ParseError) as err:
        parse("twocat K {\n  objects A\n  ?\n}")
    assert err.value.line == 3


def test_unresolved_reference():
    with pytest.raises(ElaborationError) as err:
        elaborate(parse("family S on Nowhere arrows { }"))
    assert isinstance(err.value.cause, UnresolvedReference)


def test_identities_auto_inserted():
    env = elaborate(parse("""
twocat K {
  objects X Y
  onecell f : X -> Y
  onecell g : X -> Y
  twocell al : f => g
}
"""))
    K = env.twocats["K"]
    assert len(K.objects) == 2
    assert len(K.one_cells) == 4
    assert len(K.two_cells) == 5


def test_family_identities_injected():
    env = elaborate(parse("""
twocat K {
  objects X Y
  onecell f : X -> Y
}
family S on K arrows { f }
family O on K cells { }
"""))
    S = env.families["S"]
    K = env.twocats["K"]
    assert {K.id1("X"), K.id1("Y"), "f"} == set(S.members)
    assert len(env.families["O"].members) == len(K.one_cells)


def test_missing_composite_is_elaboration_error():
    with pytest.raises(ElaborationError):
        elaborate(parse("""
fincat C {
  objects a b c
  arrow u : a -> b
  arrow v : b -> c
}
"""))


def test_explicit_composites_accepted():
    env = elaborate(parse("""
fincat C {
  objects a b c
  arrow u : a -> b
  arrow v : b -> c
  arrow w : a -> c
  v . u = w
}
"""))
    assert env.fincats["C"].compose("v", "u") == "w"


# ---------------------------------------------------------------------------
# CLI contract


BASIC = str(pathlib.Path(__file__).parent.parent / "fixtures" / "basic.tc")


def test_cli_validate_exit_zero(capsys):
    assert cli_main(["validate", BASIC]) == 0


def test_cli_unknown_task_exit_two(capsys):
    assert cli_main(["limit", BASIC, "--task", "nope"]) == 2


def test_cli_parse_error_exit_two(tmp_path, capsys):
    bad = tmp_path / "bad.tc"
    bad.write_text("twocat K {")
    assert cli_main(["validate", str(bad)]) == 2
    assert "syntax error" in capsys.readouterr().err


def test_cli_suite_and_json_determinism(tmp_path, capsys):
    out1 = tmp_path / "r1.json"
    out2 = tmp_path / "r2.json"
    assert cli_main(["suite", BASIC, "--json", str(out1)]) == 0
    assert cli_main(["suite", BASIC, "--json", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    payload = json.loads(out1.read_text())
    assert payload["summary"]["fail"] == 0
    assert all("transcript" in r for r in payload["reports"])


def test_cli_limit_task_passes(capsys):
    assert cli_main(["limit", BASIC, "--task", "limit_point"]) == 0
    assert cli_main(["limit", BASIC, "--task", "check_limit"]) == 0  # expects not-found


def test_cli_lift_task_passes(capsys):
    assert cli_main(["lift", BASIC, "--task", "lift_f"]) == 0


def test_cli_enumerate_monads(capsys):
    assert cli_main(["enumerate-monads", BASIC, "--twocat", "K_CELL"]) == 0
    out = capsys.readouterr().out
    assert "monads=1" in out


def test_cli_failing_check_exit_one(tmp_path, capsys):
    source = pathlib.Path(BASIC).read_text() + """
task wrong_count {
  kind enumerate-monads
  twocat K_CELL
  expect 7
}
"""
    path = tmp_path / "wrong.tc"
    path.write_text(source)
    assert cli_main(["suite", str(path)]) == 1


def test_report_witnesses_are_qualified(tmp_path, capsys):
    # the subset-gate failure carries its message through the report
    source = pathlib.Path(BASIC).read_text() + """
family OmS on K_CELL cells { }

task gated {
  kind lift-weighted
  monad Tid
  weight W_ins
  sigma SigPair
  omega OmS
  morphisms l
  map a = AX
  map b = AY
  map u = mf
  map v = mf
}
"""
    path = tmp_path / "gated.tc"
    path.write_text(source)
    code = cli_main(["lift", str(path), "--task", "gated"])
    out = capsys.readouterr().out
    assert code == 1
    assert "SubsetFailure" in out
