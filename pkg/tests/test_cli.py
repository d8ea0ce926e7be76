import json

from kncross.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_generate_and_analyze_cylindrical(tmp_path, capsys):
    out = tmp_path / "k11.map"
    code, stdout, _ = run(capsys, "generate", "cylindrical", "--n", "11",
                          "-o", str(out))
    assert code == 0
    assert "cr=100 H=100" in stdout
    code, stdout, _ = run(capsys, "analyze", str(out))
    assert code == 0
    assert "identity PASS" in stdout
    assert "cr=100" in stdout


def test_analyze_json(tmp_path, capsys):
    out = tmp_path / "k5.pts"
    run(capsys, "generate", "convex", "--n", "5", "-o", str(out))
    code, stdout, _ = run(capsys, "analyze", str(out), "--json")
    assert code == 0
    payload = json.loads(stdout)
    assert payload["crossings"] == 5
    assert payload["k_edge_vector"] == [5, 5]
    assert payload["identity_pass"] is True
    assert payload["k4_crossed"] == 5


def test_analyze_planar_k4_values(tmp_path, capsys):
    # map file of the planar K4; reference face is the outer triangle
    blob = (
        "kncross v1\nformat map\nn 4\nc 0\n"
        "rot 0 : 1 3 2\nrot 1 : 2 3 0\nrot 2 : 0 3 1\nrot 3 : 2 0 1\n"
        "e 0 1 :\ne 0 2 :\ne 0 3 :\ne 1 2 :\ne 1 3 :\ne 2 3 :\n"
        "ref 1 0\n")
    path = tmp_path / "k4.map"
    path.write_text(blob)
    code, stdout, _ = run(capsys, "analyze", str(path))
    assert code == 0
    assert "cr=0" in stdout and "H=0" in stdout and "E=[3,3]" in stdout
    assert "identity PASS" in stdout


def test_malformed_file_exit_2(tmp_path, capsys):
    path = tmp_path / "bad.pts"
    path.write_text("kncross v1\nformat points\nn 3\nv 0 oops 1/1\n")
    code, _, err = run(capsys, "analyze", str(path))
    assert code == 2
    assert "error" in err


def test_check_and_verify_round_trip(tmp_path, capsys):
    drawing = tmp_path / "k8.pts"
    run(capsys, "generate", "convex", "--n", "8", "-o", str(drawing))
    witness = tmp_path / "k8.wit"
    code, stdout, _ = run(capsys, "check", str(drawing), "--mode", "bishell",
                          "--witness-out", str(witness))
    assert code == 0
    assert "bishell" in stdout
    code, stdout, _ = run(capsys, "verify", str(drawing),
                          "--witness", str(witness))
    assert code == 0
    assert "verifies" in stdout


def test_check_shell_with_explicit_s(tmp_path, capsys):
    drawing = tmp_path / "k8.pts"
    run(capsys, "generate", "convex", "--n", "8", "-o", str(drawing))
    code, stdout, _ = run(capsys, "check", str(drawing), "--mode", "shell",
                          "--s", "4")
    assert code == 0
    assert "shell" in stdout


def test_check_s_out_of_range_exit_2(tmp_path, capsys):
    drawing = tmp_path / "k5.pts"
    run(capsys, "generate", "convex", "--n", "5", "-o", str(drawing))
    code, _, err = run(capsys, "check", str(drawing), "--mode", "shell",
                       "--s", "6")
    assert code == 2


def test_verify_rejects_bad_witness(tmp_path, capsys):
    drawing = tmp_path / "k6.pts"
    run(capsys, "generate", "convex", "--n", "6", "-o", str(drawing))
    witness = tmp_path / "bad.wit"
    witness.write_text(
        "kncross-witness v1\nbishell\nface 0 5\na: 0 1\nb: 0 2\n")
    code, stdout, _ = run(capsys, "verify", str(drawing),
                          "--witness", str(witness))
    assert code == 1
    assert "condition (3)" in stdout


def test_verify_witness_vertex_out_of_range_exit_2(tmp_path, capsys):
    drawing = tmp_path / "k6.pts"
    run(capsys, "generate", "convex", "--n", "6", "-o", str(drawing))
    witness = tmp_path / "oob.wit"
    witness.write_text(
        "kncross-witness v1\nbishell\nface 0 5\na: 0 6\nb: 1 2\n")
    code, _, err = run(capsys, "verify", str(drawing),
                       "--witness", str(witness))
    assert code == 2


def test_generate_random_deterministic_bytes(tmp_path, capsys):
    a, b = tmp_path / "a.pts", tmp_path / "b.pts"
    run(capsys, "generate", "random", "--n", "5", "--seed", "7", "-o", str(a))
    run(capsys, "generate", "random", "--n", "5", "--seed", "7", "-o", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_generate_twopage_with_spec(tmp_path, capsys):
    spec = tmp_path / "spec.2p"
    run(capsys, "generate", "twopage", "--n", "4", "-o", str(spec))
    out = tmp_path / "echo.2p"
    code, stdout, _ = run(capsys, "generate", "twopage", "--n", "4",
                          "--spec", str(spec), "-o", str(out))
    assert code == 0
    assert out.read_bytes() == spec.read_bytes()


def test_hunt_reports_and_exit_zero(tmp_path, capsys):
    code, stdout, _ = run(capsys, "hunt", "--n", "5", "--trials", "12",
                          "--seed", "3", "--target", "optimal")
    assert code == 0
    assert "matches=" in stdout
    # h(5)=1 is reachable rectilinearly, so a dozen trials usually find it
    code, stdout, _ = run(capsys, "hunt", "--n", "4", "--trials", "6",
                          "--target", "non-bishellable")
    assert code == 0
    assert "matches=0" in stdout


def test_hunt_zero_trials(capsys):
    code, stdout, _ = run(capsys, "hunt", "--n", "5", "--trials", "0")
    assert code == 0
    assert "trials=0" in stdout


def test_export_svg_cli(tmp_path, capsys):
    drawing = tmp_path / "k5.pts"
    run(capsys, "generate", "convex", "--n", "5", "-o", str(drawing))
    svg = tmp_path / "k5.svg"
    code, stdout, _ = run(capsys, "export-svg", str(drawing), "-o", str(svg))
    assert code == 0
    assert svg.read_text().startswith("<svg")


def test_export_svg_map_format_exit_2(tmp_path, capsys):
    drawing = tmp_path / "k6.map"
    run(capsys, "generate", "cylindrical", "--n", "6", "-o", str(drawing))
    code, _, err = run(capsys, "export-svg", str(drawing), "-o",
                       str(tmp_path / "k6.svg"))
    assert code == 2


def test_generate_with_svg_option(tmp_path, capsys):
    drawing = tmp_path / "k6.map"
    svg = tmp_path / "k6.svg"
    code, _, _ = run(capsys, "generate", "cylindrical", "--n", "6",
                     "-o", str(drawing), "--svg", str(svg))
    assert code == 0
    assert svg.read_text().startswith("<svg")
