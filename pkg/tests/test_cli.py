"""Command-line interface: subcommands, formats, and exit codes."""

import json

import pytest

from bandbraid import cli, from_cycles, left_canonical_form, parse_word, to_band_word
from bandbraid.words import BraidWord, delta_word, invert_word


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def json_lines(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


class TestNormalize:
    def test_text_output(self, capsys):
        code, out, _ = run(capsys, "-n", "3", "normalize", "s1 s2 s1")
        assert code == 0
        assert out.splitlines() == ["D^1 . (3,2)", "inf=1 sup=2 len=1"]

    def test_json_output(self, capsys):
        code, out, _ = run(
            capsys, "-n", "4", "--format", "json-lines", "normalize", "D D a(3,1)^-1"
        )
        assert code == 0
        (rec,) = json_lines(out)
        assert rec == {
            "n": 4,
            "u": 1,
            "factors": [[[4, 3], [2, 1]]],
            "inf": 1,
            "sup": 2,
            "len": 1,
        }

    def test_structured_output_round_trips(self, capsys):
        source = "a(4,2) a(3,1)^-1 s2 D^-2"
        code, out, _ = run(
            capsys, "-n", "4", "--format", "json-lines", "normalize", source
        )
        assert code == 0
        (rec,) = json_lines(out)
        word = BraidWord(4)
        d = delta_word(4)
        prefix = invert_word(d) if rec["u"] < 0 else d
        for _ in range(abs(rec["u"])):
            word = word * prefix
        for cycles in rec["factors"]:
            word = word * to_band_word(from_cycles(4, [tuple(c) for c in cycles]))
        nf = left_canonical_form(word)
        assert nf.key() == left_canonical_form(parse_word(source, 4)).key()

    def test_parse_error_exit_code(self, capsys):
        code, _, err = run(capsys, "-n", "3", "normalize", "a(5,1)")
        assert code == 2
        assert "out of range" in err


class TestEqual:
    def test_true_exit_zero(self, capsys):
        code, out, _ = run(capsys, "-n", "3", "equal", "s1 s2 s1", "s2 s1 s2")
        assert code == 0 and out.strip() == "true"

    def test_false_exit_one(self, capsys):
        code, out, _ = run(capsys, "-n", "3", "equal", "a(2,1)", "a(3,2)")
        assert code == 1 and out.strip() == "false"


class TestConjugate:
    def test_conjugate_pair_with_certificate(self, capsys):
        code, out, _ = run(
            capsys,
            "--format", "json-lines",
            "conjugate", "a(2,1) a(4,3)", "a(3,2)^-1 a(2,1) a(4,3) a(3,2)",
        )
        assert code == 0
        (rec,) = json_lines(out)
        assert rec["verdict"] is True
        z = parse_word(rec["certificate"], 4)
        w = parse_word("a(2,1) a(4,3)", 4)
        v = parse_word("a(3,2)^-1 a(2,1) a(4,3) a(3,2)", 4)
        from bandbraid import equal

        assert equal(invert_word(z) * w * z, v)

    def test_non_conjugate_exit_one(self, capsys):
        code, out, _ = run(capsys, "conjugate", "a(2,1)", "a(2,1) a(2,1)")
        assert code == 1
        assert "not conjugate" in out

    def test_undecided_exit_three(self, capsys):
        code, _, err = run(
            capsys, "--cap-cycling", "0",
            "conjugate", "a(2,1) a(3,2) a(2,1) a(4,1)^-1", "a(2,1)",
        )
        assert code == 3
        assert "undecided" in err


class TestSss:
    def test_invariants_reported(self, capsys):
        code, out, _ = run(
            capsys, "--format", "json-lines", "sss", "a(2,1) a(3,2) a(2,1)"
        )
        assert code == 0
        (rec,) = json_lines(out)
        assert rec["cardinality"] >= 1
        assert sum(rec["cycling_orbits"]) == rec["cardinality"]

    def test_elements_listing(self, capsys):
        code, out, _ = run(
            capsys, "--format", "json-lines", "sss", "--elements", "a(2,1)"
        )
        (rec,) = json_lines(out)
        assert len(rec["elements"]) == rec["cardinality"]


class TestFactors:
    def test_count_is_catalan(self, capsys):
        code, out, _ = run(capsys, "--format", "json-lines", "factors")
        (rec,) = json_lines(out)
        assert code == 0
        assert rec["count"] == 14
        assert len(rec["factors"]) == 14


class TestRandom:
    def test_seed_reproducibility(self, capsys):
        _, first, _ = run(capsys, "--seed", "11", "random", "12")
        _, second, _ = run(capsys, "--seed", "11", "random", "12")
        _, third, _ = run(capsys, "--seed", "12", "random", "12")
        assert first == second
        assert first != third

    def test_word_parses_back(self, capsys):
        code, out, _ = run(capsys, "-n", "5", "--seed", "3", "random", "9")
        assert code == 0
        assert len(parse_word(out.strip(), 5)) == 9


class TestVerify:
    def test_clean_report(self, capsys):
        code, out, _ = run(
            capsys, "-n", "3", "--format", "json-lines", "verify", "--bound", "2"
        )
        assert code == 0
        (rec,) = json_lines(out)
        assert rec["counterexamples"] == []
        assert rec["checked"] > 0


class TestEntryPoint:
    def test_console_script_is_wired(self):
        import importlib.metadata as md

        eps = md.entry_points()
        group = eps.select(group="console_scripts")
        assert any(ep.name == "bandbraid" for ep in group)
