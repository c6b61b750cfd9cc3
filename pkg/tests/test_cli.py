import json

from rfva.cli import EXIT_COMPUTE, EXIT_OK, EXIT_USAGE, load_rep_file, run


def test_k_d4(capsys):
    assert run(["k", "catalog:d4_paper"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "k = 2" in out
    assert "17 41 73" in out


def test_char_with_table(capsys):
    assert run(["char", "catalog:d4_paper", "--table"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "(1, 0, 0, 0, 1)" in out
    assert "(3, 1, -1, 1, 1)" in out
    assert "k = 2" in out


def test_decompose_fields(capsys):
    assert run(["decompose", "catalog:quaternion_paper"]) == EXIT_OK
    assert "(4,)" in capsys.readouterr().out
    assert run(["decompose", "catalog:quaternion_paper", "--field", "fp:17"]) == EXIT_OK
    assert "(2, 2)" in capsys.readouterr().out


def test_rf_csv_stdout(capsys):
    assert run(["rf", "z:1", "--rmax", "6", "--csv", "-"]) == EXIT_OK
    out = capsys.readouterr().out
    lines = out.strip().split("\n")
    assert lines[0] == "r,rf,witness_vector,witness_index"
    assert lines[-1].startswith("6,4,")


def test_rf_csv_deterministic(tmp_path):
    argv = ["rf", "catalog:rot(4)", "--family", "inv", "--rmax", "3", "--csv"]
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run(argv + [str(p1)]) == EXIT_OK
    assert run(argv + [str(p2)]) == EXIT_OK
    assert p1.read_bytes() == p2.read_bytes()
    assert p1.read_bytes().endswith(b"\n")


def test_witness_command(capsys):
    assert run(["witness", "catalog:d4_paper", "--vector", "1,0,0"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "prime: 17" in out


def test_verify_lemmas(capsys):
    assert run(["verify", "catalog:quaternion_paper"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "FAIL" not in out
    assert "commutant certificate" in out


def test_verify_lowerbound(capsys):
    argv = [
        "verify", "catalog:quaternion_paper",
        "--suite", "lowerbound", "--smax", "2", "--samples", "10",
    ]
    assert run(argv) == EXIT_OK
    assert "FAIL" not in capsys.readouterr().out


def test_catalog_list(capsys):
    assert run(["catalog", "list"]) == EXIT_OK
    assert "d4_paper" in capsys.readouterr().out


def test_catalog_dump_roundtrip(tmp_path, capsys):
    out_path = tmp_path / "d4.json"
    assert run(["--output", str(out_path), "catalog", "dump", "d4_paper"]) == EXIT_OK
    rf = load_rep_file(str(out_path))
    from rfva.catalog import catalog_rep
    from rfva.grouprep import close_group

    original = catalog_rep("d4_paper")
    reloaded = close_group(rf.generators)
    assert reloaded.elements == original.elements
    assert rf.character_table is not None
    # and the reloaded file drives the same answers through the CLI
    assert run(["k", str(out_path)]) == EXIT_OK
    assert "k = 2" in capsys.readouterr().out


def test_exit_codes():
    assert run(["k", "catalog:not_a_thing"]) == EXIT_USAGE
    assert run(["rf", "z:1", "--family", "com", "--rmax", "2"]) == EXIT_USAGE
    assert run(["nonsense"]) == EXIT_USAGE
    assert run(["--index-budget", "-1", "k", "catalog:d4_paper"]) == EXIT_USAGE


def test_compute_failure_exit(tmp_path):
    doc = {
        "name": "shear",
        "degree": 2,
        "generators": [[[1, 1], [0, 1]]],
    }
    path = tmp_path / "shear.json"
    path.write_text(json.dumps(doc))
    assert run(["k", str(path)]) == EXIT_COMPUTE


def test_malformed_rep_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{\"degree\": 2}")
    assert run(["k", str(path)]) == EXIT_USAGE
    path.write_text("not json")
    assert run(["k", str(path)]) == EXIT_USAGE
