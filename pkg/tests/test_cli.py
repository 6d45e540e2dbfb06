import io
import subprocess
import sys

import pytest

from setoidkan.cli import EXIT_FAIL, EXIT_INPUT, EXIT_INVARIANT, EXIT_PASS, main
from setoidkan.corpus import default_corpus
from setoidkan.formats import dump

BAD_SQUARE = """category SQ
object 00
object 01
object 10
object 11
arrow a 00 01
arrow b 00 10
arrow c 01 11
arrow d 10 11
arrow e 00 11
compose c a e
compose d b a
end
"""


def _run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def _rows(text):
    return [line.split("\t") for line in text.splitlines()]


def test_equiv_set_pair_to_one_passes():
    code, out, _ = _run("check-equiv", "--theory", "set", "--functor", "PAIR_ONE")
    assert code == EXIT_PASS
    assert all(r[2] == "pass" for r in _rows(out))


def test_equiv_set_disc2_to_one_fails_with_sizes():
    code, out, _ = _run("check-equiv", "--theory", "set", "--functor", "disc2_ONE")
    assert code == EXIT_FAIL
    failing = [r for r in _rows(out) if r[2] == "fail"]
    assert failing and all(r[0] == "equiv-set" for r in failing)
    assert "pi0 sizes 2 vs 1" in failing[0][3]
    assert "[reproduce: setoidkan check-equiv --theory set --functor disc2_ONE]" in failing[0][3]


def test_empty_file_is_input_error(tmp_path):
    p = tmp_path / "empty.corpus"
    p.write_text("")
    code, _, err = _run("check-axioms", "--corpus", str(p))
    assert code == EXIT_INPUT and "empty" in err


def test_corrupted_composition_is_invariant_error(tmp_path):
    p = tmp_path / "bad.corpus"
    p.write_text(BAD_SQUARE)
    code, _, err = _run("check-axioms", "--corpus", str(p))
    assert code == EXIT_INVARIANT
    assert "d . b = a" in err


@pytest.mark.parametrize("argv", [
    ("check-equiv", "--functor", "nope"),
    ("check-equiv", "--theory", "bogus"),
    ("check-axioms", "--theory", "set"),
    ("check-universality", "--theory", "sex"),
    ("kan", "--functor", "PAIR_ONE", "--diagram", "TERM_PAIR"),
    ("kan", "--left", "--functor", "PAIR_ONE", "--diagram", "TERM_ONE"),
    ("check-cocontinuity", "--functor", "PAIR_ARROW"),
    ("nosuchcommand",),
])
def test_input_errors(argv):
    assert _run(*argv)[0] == EXIT_INPUT


def test_missing_file_is_input_error(tmp_path):
    assert _run("check-axioms", "--corpus", str(tmp_path / "missing.corpus"))[0] == EXIT_INPUT


def test_report_file_and_determinism(tmp_path):
    p = tmp_path / "r.tsv"
    code, out, _ = _run("check-equiv", "--functor", "SPAN_ONE", "--report", str(p))
    assert code == EXIT_PASS and out == ""
    again = _run("check-equiv", "--functor", "SPAN_ONE")[1]
    assert p.read_text() == again
    rows = _rows(again)
    assert rows == sorted(rows, key=lambda r: (r[0], r[1]))
    assert all(len(r) == 4 for r in rows)


def test_dumped_corpus_loads_through_cli(tmp_path):
    p = tmp_path / "c.corpus"
    p.write_text(dump(default_corpus()))
    code, out, _ = _run("quotient", "--corpus", str(p), "--setoid", "REL3")
    assert code == EXIT_PASS
    assert "3 points, 2 classes: {0,1} {2}" in out


@pytest.mark.parametrize("argv,expect", [
    (("kan", "--left", "--functor", "pt0", "--diagram", "TERM_ONE"), "kan-left"),
    (("kan", "--right", "--functor", "disc2_ONE", "--diagram", "REL3_disc2"), "4 classes"),
    (("limit", "--diagram", "REL3_disc2"), "4 classes"),
    (("colimit", "--diagram", "TERM_PAIR"), "1 classes"),
    (("quotient", "--category", "disc2"), "2 classes, 2 components"),
    (("tilde", "--diagram", "TERM_ONE"), "2 objects, 4 arrows"),
    (("odot", "--diagram", "REL3_ONE", "--setoid", "TERM"), "2 classes"),
])
def test_constructions(argv, expect):
    code, out, _ = _run(*argv)
    assert code == EXIT_PASS
    assert expect in out


def test_tilde_dump_is_category_text():
    out = _run("tilde", "--diagram", "TERM_ONE", "--dump")[1]
    assert out.startswith("category TERM_ONE~*")


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "setoidkan", "quotient", "--setoid", "CHAIN3"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert "1 classes" in res.stdout
