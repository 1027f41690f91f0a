import pytest

from main import EXIT_CONSTRAINT, EXIT_IO, EXIT_OK, EXIT_USAGE, main


@pytest.fixture
def edge_file(tmp_path):
    path = tmp_path / "graph.txt"
    # two triangles sharing vertex 3, plus a pendant vertex
    path.write_text("# demo\n1 2\n2 3\n1 3\n3 4\n4 5\n3 5\n5 6\n")
    return path


def output_rows(text):
    return [tuple(map(int, line.split())) for line in text.splitlines()]


def test_lists_cliques(edge_file, capsys):
    assert main(["--input", str(edge_file), "--k", "1", "--sorted"]) == EXIT_OK
    out, err = capsys.readouterr()
    assert output_rows(out) == [(1, 2, 3), (3, 4, 5), (5, 6)]
    assert err.strip().splitlines()[-1].startswith("plexes=3 max_size=3 elapsed_ms=")


def test_rows_are_ascending(edge_file, capsys):
    assert main(["--input", str(edge_file), "--k", "2"]) == EXIT_OK
    rows = output_rows(capsys.readouterr().out)
    assert rows and all(list(row) == sorted(row) for row in rows)


def test_sorted_output_is_identical_across_thread_counts(edge_file, capsys):
    outputs = []
    for threads in ("1", "4"):
        assert main(["--input", str(edge_file), "--k", "2", "--sorted", "--threads", threads]) == EXIT_OK
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]


def test_count_only_matches_full_listing(edge_file, capsys):
    main(["--input", str(edge_file), "--k", "2"])
    out, err = capsys.readouterr()
    listed = len(out.splitlines())
    assert main(["--input", str(edge_file), "--k", "2", "--count-only"]) == EXIT_OK
    out, err = capsys.readouterr()
    assert out == ""
    assert f"plexes={listed} " in err


def test_min_size_filters_small_plexes(edge_file, capsys):
    main(["--input", str(edge_file), "--k", "2", "--sorted"])
    everything = output_rows(capsys.readouterr().out)
    assert main(["--input", str(edge_file), "--k", "2", "--min-size", "3", "--sorted"]) == EXIT_OK
    rows = output_rows(capsys.readouterr().out)
    assert rows == [row for row in everything if len(row) >= 3]
    assert len(rows) < len(everything)


def test_output_file(edge_file, tmp_path, capsys):
    target = tmp_path / "out.txt"
    assert main(["--input", str(edge_file), "--k", "1", "--sorted", "--output", str(target)]) == EXIT_OK
    assert capsys.readouterr().out == ""
    assert target.read_text() == "1 2 3\n3 4 5\n5 6\n"


def test_oracle_agrees_with_the_engine(edge_file, capsys):
    main(["--input", str(edge_file), "--k", "2", "--sorted"])
    engine = capsys.readouterr().out
    assert main(["--input", str(edge_file), "--k", "2", "--sorted", "--oracle"]) == EXIT_OK
    assert capsys.readouterr().out == engine


def test_stats(edge_file, capsys):
    assert main(["--input", str(edge_file), "--k", "1", "--stats"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "n=6 m=7 max_degree=4 degeneracy=2"


# ── failures ──────────────────────────────────────────────
def test_min_size_below_the_bound_is_a_constraint_violation(edge_file, caplog):
    assert main(["--input", str(edge_file), "--k", "2", "--min-size", "2"]) == EXIT_CONSTRAINT
    assert "2k-1" in caplog.text


@pytest.mark.parametrize(
    "argv",
    [
        ["--k", "2"],
        ["--input", "g.txt"],
        ["--input", "g.txt", "--k", "0"],
        ["--input", "g.txt", "--k", "two"],
        ["--input", "g.txt", "--k", "2", "--threads", "0"],
        ["--input", "g.txt", "--k", "2", "--backend", "gpu"],
    ],
)
def test_usage_errors(argv, capsys):
    assert main(argv) == EXIT_USAGE


def test_missing_input_file(tmp_path):
    assert main(["--input", str(tmp_path / "absent.txt"), "--k", "2"]) == EXIT_IO


def test_malformed_input_file(tmp_path, caplog):
    path = tmp_path / "bad.txt"
    path.write_text("1 2\n3\n")
    assert main(["--input", str(path), "--k", "2"]) == EXIT_IO
    assert f"{path}:2" in caplog.text


def test_unwritable_output(edge_file, tmp_path):
    target = tmp_path / "missing-dir" / "out.txt"
    assert main(["--input", str(edge_file), "--k", "1", "--output", str(target)]) == EXIT_IO


def test_oracle_refuses_large_graphs(tmp_path):
    path = tmp_path / "big.txt"
    path.write_text("".join(f"{i} {i + 1}\n" for i in range(30)))
    assert main(["--input", str(path), "--k", "1", "--oracle", "--count-only"]) == EXIT_CONSTRAINT
