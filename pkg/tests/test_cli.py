import subprocess
import sys

import pytest

from bddkernel.cli import (EXIT_INPUT, EXIT_NO, EXIT_OK, EXIT_SCALE, EXIT_USAGE, RunConfig,
                           main, run)
from bddkernel.generate import SplitMix64, gnp_random_graph
from bddkernel.graph import parse_graph, serialize_graph
from bddkernel.kernel import parse_result

K15 = "0 1\n0 2\n0 3\n0 4\n0 5\n"
K5 = "".join(f"{u} {v}\n" for u in range(5) for v in range(u + 1, 5))


def test_kernelize_star():
    code, out = run(RunConfig("kernelize", d=0), K15)
    assert code == EXIT_OK
    assert out.splitlines()[0] == "6 5 0 1 5 0 4 1"
    res = parse_result(out)
    assert res.forced == {0} and res.discardable == {1, 2, 3, 4, 5}


def test_solve_no():
    code, out = run(RunConfig("solve", d=2, k=1), K5)
    assert code == EXIT_NO
    assert out.splitlines()[0] == "NO"


def test_solve_yes():
    code, out = run(RunConfig("solve", d=0, k=1), K15)
    assert code == EXIT_OK
    assert out.splitlines()[:2] == ["YES", "solution: 0"]
    assert out.splitlines()[2].startswith("nodes: ")


def test_splex():
    code, out = run(RunConfig("splex", s=2), "1 2\n2 3\n3 4\n4 5\n5 1\n")
    assert code == EXIT_OK
    assert out.splitlines()[1] == "size: 3"


@pytest.mark.parametrize("seed", range(5))
def test_verify_random(seed):
    text = serialize_graph(gnp_random_graph(12 + seed % 3, 0.35, seed), "dimacs")
    code, out = run(RunConfig("verify", d=seed % 3, format="dimacs"), text)
    assert code == EXIT_OK, out
    assert [line.split(":")[0] for line in out.splitlines()] == ["P1", "P2", "P3"]
    assert all(": pass" in line for line in out.splitlines())


def test_verify_scale_refusal():
    text = serialize_graph(gnp_random_graph(30, 0.5, 1), "dimacs")
    code, out = run(RunConfig("verify", d=0, format="dimacs"), text)
    assert code == EXIT_SCALE
    assert "unverified" in out


def test_gen_reproducible():
    cfg = RunConfig("gen", n=6, p=0.5, seed=42, format="dimacs")
    code, out = run(cfg, None)
    assert code == EXIT_OK
    assert out == "p edge 6 9\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\ne 3 5\ne 3 6\ne 4 5\ne 4 6\n"
    assert run(cfg, None) == (code, out)


def test_splitmix_reference_values():
    r = SplitMix64(0)
    assert [r.next_u64() for _ in range(3)] == [0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4,
                                                0x06C45D188009454F]


def test_gen_edge_density():
    g = gnp_random_graph(2000, 0.003, seed=9)
    expected = 0.003 * 2000 * 1999 / 2
    assert abs(g.m - expected) < 5 * expected ** 0.5
    assert gnp_random_graph(5, 1.0).m == 10 and gnp_random_graph(5, 0.0).m == 0


@pytest.mark.parametrize("cfg", [
    RunConfig("solve", d=0),
    RunConfig("splex"),
    RunConfig("kernelize", d=-1),
    RunConfig("solve", d=0, k=-2),
    RunConfig("splex", s=0),
    RunConfig("gen", n=5),
    RunConfig("gen", n=5, p=1.5),
])
def test_usage_errors(cfg):
    assert run(cfg, K15) == (EXIT_USAGE, "")


def test_input_error(caplog):
    code, out = run(RunConfig("kernelize"), "0 1\n2 2\n")
    assert code == EXIT_INPUT and out == ""
    assert "line 2" in caplog.text


def test_deterministic_bytes():
    text = serialize_graph(gnp_random_graph(300, 0.02, 5))
    outs = {run(RunConfig("kernelize", d=1), text)[1] for _ in range(3)}
    assert len(outs) == 1


def test_main_reads_file(tmp_path, capsys):
    p = tmp_path / "g.txt"
    p.write_text(K15)
    assert main(["kernelize", str(p), "--d", "0"]) == 0
    assert capsys.readouterr().out.startswith("6 5 0 1 5 0 4 1\n")


def test_main_missing_file(tmp_path):
    assert main(["kernelize", str(tmp_path / "nope")]) == EXIT_INPUT


def test_main_inline(capsys):
    assert main(["solve", "--d", "0", "--k", "1", "--graph", "0 1/0 2/0 3"]) == 0
    assert capsys.readouterr().out.startswith("YES\nsolution: 0\n")


def test_main_trace_goes_to_stderr():
    proc = subprocess.run([sys.executable, "-m", "bddkernel", "kernelize", "-", "--d", "0",
                           "--trace"], input=K15, capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.startswith("6 5 0 1 5 0 4 1\n")
    assert "round 0: |FX|=0 |FY|=0 packing_edges=1 fixpoint_steps=2" in proc.stderr
    assert "|FX|" not in proc.stdout


def test_main_bad_flag():
    proc = subprocess.run([sys.executable, "-m", "bddkernel", "solve", "--k", "x"],
                          input="", capture_output=True, text=True, check=False)
    assert proc.returncode == EXIT_USAGE


def test_gen_pipes_into_kernelize():
    gen = subprocess.run([sys.executable, "-m", "bddkernel", "gen", "--n", "40", "--p", "0.1",
                          "--seed", "3"], capture_output=True, text=True, check=True)
    g = parse_graph(gen.stdout)
    assert max(g.vertices) <= 40
    ker = subprocess.run([sys.executable, "-m", "bddkernel", "kernelize", "--d", "1"],
                         input=gen.stdout, capture_output=True, text=True, check=True)
    assert ker.stdout.split()[0:2] == [str(g.n), str(g.m)]
