import json

import pytest

from rowmotion.cli import main

P2_FILE = """\
# three bottoms, three middles, one top; the first middle is a dead end
a1 < b1
a1 < b2
a2 < b2
a2 < b3
a3 < b3
b2 < c
b3 < c
"""


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_orbits_rank_two(capsys):
    code, out, _ = run(capsys, "orbits", "A2")
    assert code == 0
    sizes = [int(line.split()[0]) for line in out.splitlines()[:-1]]
    assert sorted(sizes) == [2, 3]
    assert out.splitlines()[-1] == "#AN=5 ord=6 expected=5"


def test_orbits_f4_paper_convention(capsys):
    code, out, _ = run(
        capsys, "orbits", "F4", "--variant", "full", "--convention", "paper-f4"
    )
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 12
    assert lines[-1] == "#AN=105 ord=12 expected=105"
    # the standard orbit's canonical representative is the empty antichain,
    # and the 2-orbit representative matches the recorded one
    assert "{}" in out
    assert "{1000,0010}" in out


def test_orbits_custom_poset(capsys, tmp_path):
    path = tmp_path / "p2.poset"
    path.write_text(P2_FILE, encoding="utf-8")
    code, out, _ = run(capsys, "orbits", "--custom", str(path))
    assert code == 0
    sizes = sorted(int(line.split()[0]) for line in out.splitlines()[:-1])
    assert sizes == [7, 16]
    assert out.splitlines()[-1] == "#AN=23 ord=112"


def test_orbits_json_schema(capsys):
    code, out, _ = run(capsys, "orbits", "A2", "--format", "json")
    assert code == 0
    lines = out.splitlines()
    rows = [json.loads(line) for line in lines[:-1]]
    for row in rows:
        assert set(row) == {"mean", "representative", "size"}
        assert isinstance(row["representative"], list)
    summary = json.loads(lines[-1])
    assert summary == {"antichains": 5, "expected": 5, "order": 6}


def test_verify_single_claim(capsys):
    code, out, _ = run(capsys, "verify", "--claim", "conj-2.1", "--type", "F4")
    assert code == 0
    assert out == "conj-2.1 F4: PASS\n"


def test_verify_appendix(capsys):
    code, out, _ = run(capsys, "verify", "--claim", "appendix-f4")
    assert code == 0
    assert "appendix-f4 F4: PASS" in out


def test_verify_unknown_claim(capsys):
    code, _, err = run(capsys, "verify", "--claim", "nonsense")
    assert code == 2
    assert "conj-2.1" in err


def test_verify_exit_code_tracks_failures(capsys):
    code, out, _ = run(capsys, "verify", "--claim", "weighted-oy-cn", "--rank", "2")
    statuses = [line.split()[-1] for line in out.splitlines() if ":" in line]
    expected = 0 if all(s == "PASS" for s in statuses) else 1
    assert code == expected


def test_oy_command(capsys):
    assert run(capsys, "oy", "3", "1-1,3-3") == (0, "2\n", "")
    assert run(capsys, "oy", "4", "1-1,2-2,3-3,4-4")[1] == "0\n"
    assert run(capsys, "oy", "5", "")[1] == "0\n"
    assert run(capsys, "oy", "3", "1-1,3-3", "--form", "difference")[1] == "2\n"


def test_oy_rejects_non_antichain(capsys):
    code, _, err = run(capsys, "oy", "3", "1-1,1-2")
    assert code == 2
    # the violating pair is named by its coefficient-string labels
    assert "100" in err and "110" in err


def test_star_command(capsys):
    assert run(capsys, "star", "3", "1-1") == (0, "2-2,3-3\n", "")
    assert run(capsys, "star", "4", "1-1,2-2,3-3,4-4")[1] == "\n"


def test_rowmotion_command(capsys):
    # three applications reach the simple roots below the top; one more
    # leaves only the last simple root
    assert run(capsys, "rowmotion", "A3", "1-1", "--power", "3")[1] == "1-1,2-2\n"
    assert run(capsys, "rowmotion", "A3", "1-1", "--power", "4")[1] == "3-3\n"
    assert (
        run(capsys, "rowmotion", "F4", "--empty", "--convention", "paper-f4")[1]
        == "2432\n"
    )
    assert run(capsys, "rowmotion", "A3", "1-1", "--power", "-1")[1] == "2-2,3-3\n"
    assert run(capsys, "rowmotion", "3", "1-1")[1] == "2-3\n"


def test_rowmotion_argument_errors(capsys):
    assert run(capsys, "rowmotion", "A3")[0] == 2
    assert run(capsys, "rowmotion", "A3", "1-1", "--empty")[0] == 2
    assert run(capsys, "rowmotion", "Q9", "--empty")[0] == 2


def test_antichains_command(capsys):
    code, out, _ = run(capsys, "antichains", "F4", "--variant", "short")
    assert code == 0
    assert out == "#AN=21 expected=21\n"
    code, out, _ = run(capsys, "antichains", "F4", "--variant", "short-no-simple")
    assert out == "#AN=16\n"
    code, out, _ = run(capsys, "antichains", "A2", "--list")
    lines = out.splitlines()
    assert len(lines) == 6
    assert lines[0] == "" and lines[-1] == "#AN=5 expected=5"


def test_isomorphic_command(capsys, tmp_path):
    code, out, _ = run(capsys, "isomorphic", "B3", "C3")
    assert code == 0 and out.splitlines()[0] == "isomorphic"
    code, out, _ = run(capsys, "isomorphic", "A4:no-simple", "A3")
    assert code == 0
    path = tmp_path / "chain.poset"
    path.write_text("a < b\nb < c\n", encoding="utf-8")
    code, out, _ = run(capsys, "isomorphic", "A2", f"@{path}")
    assert code == 1 and out == "not isomorphic\n"


def test_file_errors_exit_three(capsys, tmp_path):
    assert run(capsys, "orbits", "--custom", str(tmp_path / "nope"))[0] == 3
    bad = tmp_path / "bad.poset"
    bad.write_text("a < b < c\n", encoding="utf-8")
    code, _, err = run(capsys, "orbits", "--custom", str(bad))
    assert code == 3
    assert "line 1" in err


def test_argument_errors_exit_two(capsys):
    assert run(capsys, "orbits", "Z9")[0] == 2
    assert run(capsys, "orbits")[0] == 2
    assert run(capsys, "orbits", "A2", "--variant", "bogus")[0] == 2
    assert run(capsys, "orbits", "A2", "--badflag")[0] == 2
    assert run(capsys, "antichains", "A3", "--variant", "short")[0] == 2


def test_variant_rejected_for_custom(capsys, tmp_path):
    path = tmp_path / "p.poset"
    path.write_text("a < b\n", encoding="utf-8")
    code, _, err = run(
        capsys, "orbits", "--custom", str(path), "--variant", "short"
    )
    assert code == 2
    assert "custom" in err


@pytest.mark.parametrize(
    "argv",
    [
        ("orbits", "F4", "--convention", "paper-f4", "--format", "json"),
        ("verify", "--claim", "appendix-f4", "--format", "json"),
        ("antichains", "C3", "--variant", "short", "--list", "--format", "tsv"),
    ],
)
def test_byte_identical_output(capsys, argv):
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
