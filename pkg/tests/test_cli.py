import json

import pytest

from semitrio import corpus as C
from semitrio import documents
from semitrio.oracle import cross_check

from cli_matrix import FIXTURES, grid, run


@pytest.mark.parametrize("argv,code", list(grid()), ids=lambda x: " ".join(x) if isinstance(x, list) else str(x))
def test_exit_codes(argv, code):
    assert run(argv)[0] == code


def test_parikh_output_is_a_semilinear_document():
    code, out, _ = run(["parikh", "anbn.cfg.json"])
    doc = json.loads(out)
    assert code == 0 and doc["kind"] == "semilinear" and doc["letters"] == ["a", "b"]
    assert doc["parts"] == [{"constant": [0, 0], "periods": [[1, 1]]}]


def test_enumerate_lists_shortest_first():
    code, out, err = run(["enumerate", "anbn.ncm.json", "--max-len", "4"])
    assert out.split() == ["λ", "ab", "aabb"] and not err
    _, out, err = run(["enumerate", "doubling.indexed-grammar.json", "--max-steps", "30"])
    assert out.split() == ["a", "aa", "aaaa", "aaaaaaaa"]
    assert "incomplete" in err


def test_unknown_names_the_bounds():
    _, out, _ = run(["decide", "infinite", "doubling.indexed-grammar.json", "--max-len", "5"])
    assert out.strip() == "unknown(max-len=5, max-steps=30)"


def test_multi_letter_words_are_space_separated():
    assert run(["decide", "member", "balanced-equal.npcm.json", "( a b )"])[0] == 0
    assert run(["decide", "member", "empty.nfa.json", "λ"])[0] == 1


def test_convert_round_trip(tmp_path):
    code, out, _ = run(["convert", "grammar", "anbncn.npcm.json"])
    assert code == 0
    grammar_file = tmp_path / "g.json"
    grammar_file.write_text(out)
    code, out, _ = run(["convert", "npcm", str(grammar_file)])
    assert code == 0
    machine = documents.loads(out)
    assert cross_check(C.anbncn_npcm(), machine, 6).agree


def test_convert_split_writes_three_documents():
    _, out, _ = run(["convert", "split", "equal-ab.counter-indexed-grammar.json"])
    kinds = [documents.to_document(x)["kind"] for x in documents.loads_all(out)]
    assert kinds == ["indexed-grammar", "ncm", "homomorphism"]


def test_convert_product(tmp_path):
    universal = tmp_path / "u.json"
    universal.write_text(documents.dumps(C.universal_ncm(("a", "b"))))
    code, out, _ = run(["convert", "product", "equal-ab.counter-indexed-grammar.json", str(universal)])
    assert code == 0 and json.loads(out)["kind"] == "counter-indexed-grammar"


def test_oracle_check_prints_disagreements():
    code, out, _ = run(["oracle-check", "anbn.cfg.json", "ab-star.nfa.json", "--max-len", "4"])
    assert code == 1
    assert out.splitlines()[1:] == ["  only first:  aabb", "  only second: abab"]
    _, out, _ = run(["oracle-check", "--seed", "4"])
    assert out.splitlines()[0] == "seed 4"


def test_bad_document_reports_error(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"kind": "nfa", "version": "1"}))
    code, _, err = run(["parikh", str(bad)])
    assert code == 2 and err.startswith("semitrio: missing fields")


def test_fixture_directory_is_complete():
    assert len(list(FIXTURES.glob("*.json"))) == 20
