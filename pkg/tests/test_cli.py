import pytest

from pathcycle.cli import run
from pathcycle.families import gen_prop1_odd, write_instance
from pathcycle.graphs import serialize_graph, serialize_terminals

from .conftest import complete_graph, cycle_graph


@pytest.fixture()
def files(tmp_path):
    def make(name: str, text: str) -> str:
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return make


@pytest.fixture()
def c6(files):
    return files("c6.graph", serialize_graph(cycle_graph(6)))


@pytest.fixture()
def c5(files):
    return files("c5.graph", serialize_graph(cycle_graph(5)))


@pytest.fixture()
def empty_w(files):
    return files("empty.terminals", "\n")


@pytest.fixture()
def w02(files):
    return files("w02.terminals", serialize_terminals((0, 2)))


def test_solve_cycle(capsys, c6, empty_w):
    assert run(["solve", "--graph", c6, "--terminals", empty_w]) == 0
    assert capsys.readouterr().out == "cycle: 0 1 2 3 4 5\n"


def test_solve_infeasible(capsys, c5, w02):
    assert run(["solve", "--graph", c5, "--terminals", w02]) == 1
    assert capsys.readouterr().out == "INFEASIBLE\n"


def test_oracle_agrees_with_solve(capsys, c5, c6, w02, empty_w):
    assert run(["oracle", "--graph", c5, "--terminals", w02]) == 1
    assert run(["oracle", "--graph", c6, "--terminals", empty_w]) == 0
    out = capsys.readouterr().out
    assert "INFEASIBLE" in out and "cycle: 0 1 2 3 4 5" in out


def test_oracle_bound_exceeded(files, empty_w):
    big = files("k8.graph", serialize_graph(complete_graph(8)))
    assert run(["oracle", "--graph", big, "--terminals", empty_w]) == 3


def test_certify_exhaustive_finds_witness(capsys, c5, w02):
    assert run(["certify", "--graph", c5, "--terminals", w02, "--exhaustive"]) == 1
    out = capsys.readouterr().out
    assert "S:\n" in out and "T: 1 3" in out and "delta: -2" in out


def test_certify_exhaustive_feasible(capsys, c6, empty_w):
    assert run(["certify", "--graph", c6, "--terminals", empty_w, "--exhaustive"]) == 0
    assert "NO-CERTIFICATE" in capsys.readouterr().out


def test_certify_explicit_pair(capsys, c5, w02):
    code = run(["certify", "--graph", c5, "--terminals", w02, "--s", "", "--t", "1,3"])
    assert code == 1
    assert "delta: -2" in capsys.readouterr().out


def test_certify_requires_a_mode(c5, w02):
    assert run(["certify", "--graph", c5, "--terminals", w02]) == 2


def test_certify_bound_exceeded(files):
    from .conftest import cycle_graph as cg

    big = files("c16.graph", serialize_graph(cg(16)))
    wfile = files("w.terminals", "\n")
    assert run(["certify", "--graph", big, "--terminals", wfile, "--exhaustive"]) == 3


def test_generate_verify_certify_roundtrip(capsys, tmp_path):
    prefix = str(tmp_path / "fam")
    assert run([
        "generate", "--family", "prop2-r4", "--n", "6", "--out", prefix,
    ]) == 0
    capsys.readouterr()
    assert run([
        "verify", "--graph", f"{prefix}.graph", "--regular", "4",
        "--star-free", "4", "--edge-connectivity", "4",
    ]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS") == 3
    assert run([
        "certify", "--graph", f"{prefix}.graph",
        "--terminals", f"{prefix}.terminals",
        "--witness", f"{prefix}.witness",
    ]) == 1
    assert "delta: -2" in capsys.readouterr().out


def test_generate_witness_replay_prop1_odd(capsys, tmp_path):
    prefix = str(tmp_path / "odd")
    assert run(["generate", "--family", "prop1-odd", "--r", "5", "--k", "6",
                "--out", prefix]) == 0
    capsys.readouterr()
    assert run(["certify", "--graph", f"{prefix}.graph",
                "--terminals", f"{prefix}.terminals",
                "--witness", f"{prefix}.witness"]) == 1
    assert "delta: -2" in capsys.readouterr().out
    assert run(["solve", "--graph", f"{prefix}.graph",
                "--terminals", f"{prefix}.terminals"]) == 1


def test_roundtrip_every_family_at_smallest_parameters(capsys, tmp_path):
    """generate -> verify -> certify (witness mode) for each family."""
    plans = [
        (["--family", "prop1-odd", "--r", "5", "--k", "6"], "5", True),
        (["--family", "prop1-even", "--r", "6", "--k", "6"], "6", True),
        (["--family", "prop1-bipartite", "--r", "4", "--n", "12"], "4", False),
        (["--family", "prop2-r4", "--n", "6"], "4", True),
        (["--family", "prop2-general", "--r", "6", "--m", "50"], "6", True),
        (["--family", "prop2-r5", "--m", "96"], "5", True),
    ]
    for i, (flags, r, has_witness) in enumerate(plans):
        prefix = str(tmp_path / f"fam{i}")
        assert run(["generate", *flags, "--out", prefix]) == 0
        capsys.readouterr()
        assert run(["verify", "--graph", f"{prefix}.graph", "--regular", r]) == 0
        if has_witness:
            assert run([
                "certify", "--graph", f"{prefix}.graph",
                "--terminals", f"{prefix}.terminals",
                "--witness", f"{prefix}.witness",
            ]) == 1
            assert "delta: -2" in capsys.readouterr().out


def test_certify_witness_mismatch_is_input_error(capsys, tmp_path, c5, w02):
    bad = tmp_path / "bad.witness"
    bad.write_text("S:\nT: 1 3\ndelta: 0\nodd: 2\ncomp: 0 4\ncomp: 2\n")
    assert run(["certify", "--graph", c5, "--terminals", w02,
                "--witness", str(bad)]) == 2


def test_verify_failure_and_undecided_codes(capsys, files):
    p3 = files("p3.graph", serialize_graph(cycle_graph(3)))
    assert run(["verify", "--graph", p3, "--regular", "3"]) == 1
    inst = gen_prop1_odd(5, 6)
    big = files("big.graph", serialize_graph(inst.graph))
    assert run(["verify", "--graph", big, "--path-system-criterion"]) == 3


def test_verify_terminal_modes(capsys, files, c5):
    wfile = files("w.terminals", "0 2\n")
    assert run(["verify", "--graph", c5, "--terminals", wfile,
                "--mode", "nbhd1"]) == 1
    assert run(["verify", "--graph", c5, "--terminals", wfile]) == 2  # no mode


def test_verify_requires_some_check(c5):
    assert run(["verify", "--graph", c5]) == 2


def test_generate_random_requires_seed(tmp_path):
    assert run(["generate", "--family", "random", "--r", "4", "--n", "20",
                "--out", str(tmp_path / "r")]) == 2


def test_generate_random_with_seed(tmp_path, capsys):
    assert run(["generate", "--family", "random", "--r", "4", "--n", "20",
                "--seed", "3", "--out", str(tmp_path / "r")]) == 0
    capsys.readouterr()
    assert run(["solve", "--graph", str(tmp_path / "r.graph"),
                "--terminals", str(tmp_path / "r.terminals")]) == 0


def test_generate_unknown_family(tmp_path):
    assert run(["generate", "--family", "nope", "--out", str(tmp_path / "x")]) == 2


def test_generate_missing_parameters(tmp_path):
    assert run(["generate", "--family", "prop1-odd", "--r", "5",
                "--out", str(tmp_path / "x")]) == 2


def test_discharge_cli(capsys, tmp_path):
    inst = gen_prop1_odd(5, 6)
    write_instance(inst, tmp_path / "odd")
    code = run([
        "discharge", "--graph", str(tmp_path / "odd.graph"),
        "--terminals", str(tmp_path / "odd.terminals"),
        "--s", "0,1", "--t", "30", "--r", "5",
    ])
    out = capsys.readouterr().out
    assert "conservation: PASS" in out and "charge-identity: PASS" in out
    assert code in (0, 1)


def test_bad_graph_file_reports_usage_error(files, empty_w, capsys):
    bad = files("bad.graph", "p 2 1\ne 0 0\n")
    assert run(["solve", "--graph", bad, "--terminals", empty_w]) == 2
    assert "error" in capsys.readouterr().err


def test_missing_file(empty_w):
    assert run(["solve", "--graph", "/nonexistent.graph",
                "--terminals", empty_w]) == 2


def test_unknown_flag():
    assert run(["solve", "--graph", "x", "--nope", "y"]) == 2
