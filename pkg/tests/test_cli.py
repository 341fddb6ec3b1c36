"""Command-line interface tests: document parsing and each subcommand."""

import io
import json
import subprocess
import sys

import pytest

from safesep.cli import ParseError, main, parse_graph, serialize_graph
from safesep.graph_core import WeightedGraph
from safesep.oracle import gen_interval

P5_DOC = "n=5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\n"
P5_WEIGHTED_DOC = "n=5\nw 1 5 2 9 1\ne 0 1\ne 1 2\ne 2 3\ne 3 4\n"
C6_DOC = "n=6\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 0 5\n"
CLAW_DOC = "n=4\ne 0 1\ne 0 2\ne 0 3\nset A 1 2\nset B 3\n"


def run_cli(capsys, *argv):
    """Run main() in process; return (exit code, stdout, stderr)."""
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_doc(tmp_path, text, name="graph.txt"):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


class TestParseGraph:
    def test_round_trip_through_serialize(self):
        g = WeightedGraph(5, [(0, 1), (1, 2), (2, 3), (0, 4)], [3, 1, 4, 1, 5])
        named = {"A": frozenset({0, 4}), "B": frozenset({2})}
        parsed, parsed_named = parse_graph(serialize_graph(g, named))
        assert parsed.n == g.n
        assert tuple(parsed.edges()) == tuple(g.edges())
        assert [parsed.weight(v) for v in range(5)] == [3, 1, 4, 1, 5]
        assert parsed_named == named

    def test_comments_blanks_and_split_weight_lines(self):
        doc = (
            "# header comment\n"
            "n=3\n"
            "\n"
            "w 2 7   # two of three weights\n"
            "w 1\n"
            "e 0 1\n"
            "e 1 2  # trailing comment\n"
        )
        g, named = parse_graph(doc)
        assert [g.weight(v) for v in range(3)] == [2, 7, 1]
        assert tuple(g.edges()) == ((0, 1), (1, 2))
        assert named == {}

    def test_weights_default_to_one(self):
        g, _ = parse_graph(P5_DOC)
        assert all(g.weight(v) == 1 for v in range(5))

    def test_named_empty_set_is_allowed(self):
        _, named = parse_graph("n=2\ne 0 1\nset A\nset B 0 1\n")
        assert named == {"A": frozenset(), "B": frozenset({0, 1})}

    @pytest.mark.parametrize(
        "doc, line_no",
        [
            ("", 1),  # missing header entirely
            ("e 0 1\n", 1),  # directive before the header
            ("n=3\nn=3\n", 2),
            ("n=abc\n", 1),
            ("n=0\n", 1),
            ("n=3\nw 1 2\n", 1),  # weight total checked at end of document
            ("n=2\nw 1 2 3\n", 2),
            ("n=2\nw 1 x\n", 2),
            ("n=2\nw 1 0\n", 2),
            ("n=3\ne 0\n", 2),
            ("n=3\ne 0 1 2\n", 2),
            ("n=3\ne 0 3\n", 2),
            ("n=3\ne 1 1\n", 2),
            ("n=3\ne 1 0\n", 2),  # endpoints must be ordered
            ("n=3\ne 0 1\ne 0 1\n", 3),
            ("n=3\nset\n", 2),
            ("n=3\nset A 0\nset A 1\n", 3),
            ("n=3\nset A 9\n", 2),
            ("n=3\nq 0 1\n", 2),
        ],
    )
    def test_errors_carry_the_offending_line(self, doc, line_no):
        with pytest.raises(ParseError) as exc_info:
            parse_graph(doc)
        assert exc_info.value.line_no == line_no
        assert f"line {line_no}:" in str(exc_info.value)


class TestCheckAtfree:
    def test_path_is_atfree(self, capsys, tmp_path):
        code, out, _ = run_cli(capsys, "check-atfree", write_doc(tmp_path, P5_DOC))
        assert code == 0
        assert out == "atfree\n"

    def test_six_cycle_witness(self, capsys, tmp_path):
        code, out, _ = run_cli(capsys, "check-atfree", write_doc(tmp_path, C6_DOC))
        assert code == 1
        assert out == "asteroidal triple: 0 2 4\n"

    def test_witness_payload(self, capsys, tmp_path):
        path = write_doc(tmp_path, C6_DOC)
        code, out, _ = run_cli(capsys, "--json", "check-atfree", path)
        assert code == 1
        payload = json.loads(out)
        assert payload["status"] == "witness"
        assert payload["witness"]["triple"] == [0, 2, 4]
        for key in ("path_ab", "path_ac", "path_bc"):
            path_list = payload["witness"][key]
            assert isinstance(path_list, list) and path_list


class TestMinSafeSep:
    def test_path_answer(self, capsys, tmp_path):
        path = write_doc(tmp_path, P5_DOC)
        code, out, _ = run_cli(
            capsys, "min-safe-sep", path, "--A", "0", "--B", "4"
        )
        assert code == 0
        assert out == "separator 1\nweight 1\n"

    def test_json_payload_shape(self, capsys, tmp_path):
        path = write_doc(tmp_path, P5_WEIGHTED_DOC)
        code, out, _ = run_cli(
            capsys, "--json", "min-safe-sep", path, "--A", "0", "--B", "4"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["status"] == "ok"
        assert payload["separator"] == [2]
        assert payload["weight"] == 2
        assert payload["family"] is None
        assert payload["runtime_ms"] >= 0.0
        assert list(payload) == sorted(payload)  # sort_keys output

    def test_named_sets_from_the_document(self, capsys, tmp_path):
        path = write_doc(tmp_path, CLAW_DOC)
        code, out, _ = run_cli(
            capsys, "min-safe-sep", path, "--A", "A", "--B", "B"
        )
        assert code == 2
        assert out == "none\n"

    def test_comma_separated_ids(self, capsys, tmp_path):
        path = write_doc(tmp_path, P5_DOC)
        code, out, _ = run_cli(
            capsys, "min-safe-sep", path, "--A", "0,1", "--B", "3,4"
        )
        assert code == 0
        assert out == "separator 2\nweight 1\n"

    def test_fast_mode_matches_default_on_an_atfree_graph(self, capsys, tmp_path):
        path = write_doc(tmp_path, P5_WEIGHTED_DOC)
        code, out, _ = run_cli(
            capsys, "min-safe-sep", path, "--A", "0", "--B", "4", "--fast"
        )
        assert code == 0
        assert out == "separator 2\nweight 2\n"

    def test_verified_mode_refuses_a_graph_with_an_asteroidal_triple(
        self, capsys, tmp_path
    ):
        path = write_doc(tmp_path, C6_DOC)
        code, _, err = run_cli(
            capsys, "min-safe-sep", path, "--A", "0", "--B", "3"
        )
        assert code == 64
        assert "usage error" in err

    def test_fast_and_verified_are_mutually_exclusive(self, capsys, tmp_path):
        path = write_doc(tmp_path, P5_DOC)
        code, _, err = run_cli(
            capsys,
            "min-safe-sep", path, "--A", "0", "--B", "4", "--fast", "--verified",
        )
        assert code == 64
        assert "usage error" in err

    def test_unknown_set_name_is_a_usage_error(self, capsys, tmp_path):
        path = write_doc(tmp_path, P5_DOC)
        code, _, err = run_cli(
            capsys, "min-safe-sep", path, "--A", "left", "--B", "4"
        )
        assert code == 64
        assert "left" in err


class TestCloseTo:
    def test_default_anchor_set_is_empty(self, capsys, tmp_path):
        path = write_doc(tmp_path, P5_DOC)
        code, out, _ = run_cli(capsys, "close-to", path, "--s", "0", "--t", "4")
        assert code == 0
        assert out == "family 1\n1\n"

    def test_anchor_set_moves_the_family(self, capsys, tmp_path):
        path = write_doc(tmp_path, P5_DOC)
        code, out, _ = run_cli(
            capsys, "close-to", path, "--s", "0", "--t", "4", "--A", "2"
        )
        assert code == 0
        assert out == "family 1\n3\n"

    def test_empty_family_still_succeeds(self, capsys, tmp_path):
        c4 = "n=4\ne 0 1\ne 1 2\ne 2 3\ne 0 3\n"
        path = write_doc(tmp_path, c4)
        code, out, _ = run_cli(
            capsys, "close-to", path, "--s", "0", "--t", "2", "--A", "1"
        )
        assert code == 0
        assert out == "family 0\n"

    def test_empty_separator_member_renders_as_a_marker(self, capsys, tmp_path):
        path = write_doc(tmp_path, "n=4\ne 0 1\ne 2 3\n")
        code, out, _ = run_cli(
            capsys, "close-to", path, "--s", "0", "--t", "3", "--A", "1"
        )
        assert code == 0
        assert out == "family 1\n(empty)\n"

    def test_json_family(self, capsys, tmp_path):
        path = write_doc(tmp_path, P5_DOC)
        code, out, _ = run_cli(
            capsys, "--json", "close-to", path, "--s", "0", "--t", "4", "--A", "2"
        )
        assert code == 0
        assert json.loads(out)["family"] == [[3]]

    def test_equal_terminals_are_a_usage_error(self, capsys, tmp_path):
        path = write_doc(tmp_path, P5_DOC)
        code, _, err = run_cli(capsys, "close-to", path, "--s", "0", "--t", "0")
        assert code == 64
        assert "usage error" in err


class TestMinSep:
    def test_weighted_path(self, capsys, tmp_path):
        path = write_doc(tmp_path, P5_WEIGHTED_DOC)
        code, out, _ = run_cli(capsys, "min-sep", path, "--s", "0", "--t", "4")
        assert code == 0
        assert out == "separator 2\nweight 2\n"

    def test_adjacent_terminals_have_no_separator(self, capsys, tmp_path):
        path = write_doc(tmp_path, "n=2\ne 0 1\n")
        code, out, _ = run_cli(capsys, "min-sep", path, "--s", "0", "--t", "1")
        assert code == 2
        assert out == "none\n"

    def test_already_disconnected_pair(self, capsys, tmp_path):
        path = write_doc(tmp_path, "n=2\n")
        code, out, _ = run_cli(
            capsys, "--json", "min-sep", path, "--s", "0", "--t", "1"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["separator"] == []
        assert payload["weight"] == 0

    def test_reads_the_document_from_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO(P5_WEIGHTED_DOC))
        code, out, _ = run_cli(capsys, "min-sep", "-", "--s", "0", "--t", "4")
        assert code == 0
        assert out == "separator 2\nweight 2\n"


class TestEnumMinimal:
    def test_path_family(self, capsys, tmp_path):
        path = write_doc(tmp_path, P5_DOC)
        code, out, _ = run_cli(capsys, "enum-minimal", path, "--s", "0", "--t", "4")
        assert code == 0
        assert out == "family 3\n1\n2\n3\n"

    def test_oversize_scan_is_refused(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("SAFESEP_SUBSET_CAP", "4")
        p8 = "n=8\n" + "".join(f"e {i} {i + 1}\n" for i in range(7))
        path = write_doc(tmp_path, p8)
        code, _, err = run_cli(capsys, "enum-minimal", path, "--s", "0", "--t", "7")
        assert code == 64
        assert err.startswith("refused")


class TestGen:
    def test_interval_output_is_deterministic_and_parseable(self, capsys):
        code, first, _ = run_cli(
            capsys, "gen", "--family", "interval", "--n", "8", "--wmax", "5",
            "--seed", "3",
        )
        assert code == 0
        code, second, _ = run_cli(
            capsys, "gen", "--family", "interval", "--n", "8", "--wmax", "5",
            "--seed", "3",
        )
        assert code == 0
        assert first == second
        g, _ = parse_graph(first)
        expected = gen_interval(8, 5, 3)
        assert tuple(g.edges()) == tuple(expected.edges())
        assert [g.weight(v) for v in range(8)] == [
            expected.weight(v) for v in range(8)
        ]

    def test_default_wmax_gives_unit_weights(self, capsys):
        code, out, _ = run_cli(
            capsys, "gen", "--family", "reject", "--n", "6", "--seed", "1"
        )
        assert code == 0
        g, _ = parse_graph(out)
        assert all(g.weight(v) == 1 for v in range(6))

    def test_rejection_family_caps_the_size(self, capsys):
        code, _, err = run_cli(
            capsys, "gen", "--family", "reject", "--n", "13"
        )
        assert code == 64
        assert "usage error" in err


class TestVerify:
    def test_small_batch_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--seeds", "4", "--n", "6")
        assert code == 0
        assert out.startswith("verified ")
        assert out.rstrip().endswith("/4 instances")

    def test_json_batch_report(self, capsys):
        code, out, _ = run_cli(
            capsys, "--json", "verify", "--seeds", "3", "--n", "5"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["status"] == "ok"
        assert payload["instances"] == 3
        assert payload["mismatches"] == []
        assert 0 <= payload["checked"] <= 3

    def test_oversize_instances_are_refused(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--seeds", "1", "--n", "13")
        assert code == 64
        assert "usage error" in err


class TestErrorPaths:
    def test_parse_error_exit_code(self, capsys, tmp_path):
        path = write_doc(tmp_path, "n=3\ne 0 9\n")
        code, _, err = run_cli(capsys, "check-atfree", path)
        assert code == 65
        assert err.startswith("parse error: line 2:")

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run_cli(
            capsys, "check-atfree", str(tmp_path / "nope.txt")
        )
        assert code == 64
        assert "usage error" in err

    def test_unknown_subcommand(self, capsys):
        code, _, err = run_cli(capsys, "frobnicate")
        assert code == 64
        assert "usage error" in err


def test_help_runs_as_a_program():
    proc = subprocess.run(
        [sys.executable, "-m", "safesep.cli", "--help"],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 0
    assert "min-safe-sep" in proc.stdout
