from paulisim.cli import main
from paulisim.state import load_state


def write(path, text):
    path.write_text(text)
    return str(path)


BELL = "qubits 2\nh q[0]\ncx q[0],q[1]\nensemble\n"


def test_run_reports_distribution(tmp_path, capsys):
    circuit = write(tmp_path / "bell.circ", BELL)
    assert main(["run", "--circuit", circuit]) == 0
    out = capsys.readouterr().out
    assert "qubits 2" in out and "partitions 3" in out
    assert "00 0.5" in out.replace("0.49999999999999994", "0.5")


def test_run_with_noise_file(tmp_path, capsys):
    circuit = write(tmp_path / "bell.circ", BELL)
    noise = write(tmp_path / "dev.noise", "d1 = 0.8\nf = 0.99\n")
    assert main(["run", "--circuit", circuit, "--noise", noise]) == 0
    assert "ensemble:" in capsys.readouterr().out


def test_run_writes_report_file(tmp_path):
    circuit = write(tmp_path / "bell.circ", BELL)
    out_path = tmp_path / "report.txt"
    assert main(["run", "--circuit", circuit, "--out", str(out_path)]) == 0
    assert "instructions 3 -> 3" in out_path.read_text()


def test_run_save_state_round_trips(tmp_path):
    circuit = write(tmp_path / "x.circ", "qubits 1\nx q[0]\n")
    state_path = tmp_path / "final.state"
    assert main(["run", "--circuit", circuit, "--save-state", str(state_path)]) == 0
    s = load_state(state_path)
    assert s.n == 1 and abs(s.coeffs[3] + 0.5) < 1e-15


def test_run_schedule_dump_to_stdout(tmp_path, capsys):
    circuit = write(tmp_path / "bell.circ", BELL)
    assert main(["run", "--circuit", circuit, "--schedule-dump", "-"]) == 0
    out = capsys.readouterr().out
    assert "0 gate | " in out and "2 solo | ensemble" in out


def test_run_schedule_dump_to_file(tmp_path):
    circuit = write(tmp_path / "bell.circ", BELL)
    dump = tmp_path / "schedule.txt"
    assert main(["run", "--circuit", circuit, "--schedule-dump", str(dump)]) == 0
    assert dump.read_text().startswith("0 gate | ")


def test_run_shots_with_seed(tmp_path, capsys):
    circuit = write(tmp_path / "bell.circ", BELL)
    assert main(["run", "--circuit", circuit, "--shots", "100", "--seed", "5"]) == 0
    assert "counts:" in capsys.readouterr().out


def test_run_init_bitstring(tmp_path, capsys):
    circuit = write(tmp_path / "id.circ", "qubits 2\nensemble\n")
    assert main(["run", "--circuit", circuit, "--init", "bitstring:10"]) == 0
    assert "10 1.0" in capsys.readouterr().out


def test_sweep_prints_table(tmp_path, capsys):
    circuit = write(tmp_path / "bell.circ", BELL)
    code = main([
        "sweep", "--circuit", circuit,
        "--param", "d1", "--values", "1.0,0.9", "--metric", "success:11",
    ])
    assert code == 0
    lines = capsys.readouterr().out.strip().split("\n")
    assert lines[0] == "d1\tsuccess:11\tpartitions"
    assert len(lines) == 3


def test_gen_adder_emits_runnable_circuit(tmp_path, capsys):
    assert main(["gen", "adder", "110", "011"]) == 0
    text = capsys.readouterr().out
    assert text.startswith("qubits 10")
    circuit = write(tmp_path / "adder.circ", text)
    assert main(["run", "--circuit", circuit]) == 0


def test_gen_qft_with_out_file(tmp_path):
    out = tmp_path / "qft.circ"
    assert main(["gen", "qft", "3", "--out", str(out)]) == 0
    assert out.read_text().startswith("qubits 3")


def test_verify_reports_divergence(tmp_path, capsys):
    circuit = write(tmp_path / "bell.circ", BELL)
    noise = write(tmp_path / "dev.noise", "r_cx = 0.97\nd1 = 0.9\n")
    assert main(["verify", "--circuit", circuit, "--noise", noise]) == 0
    out = capsys.readouterr().out
    assert "max state divergence" in out
    assert "records checked 1" in out


def test_exit_code_syntax_error(tmp_path, capsys):
    circuit = write(tmp_path / "bad.circ", "qubits 2\nfrobnicate q[0]\n")
    assert main(["run", "--circuit", circuit]) == 3
    assert "line 2" in capsys.readouterr().err


def test_exit_code_capacity(tmp_path, capsys):
    circuit = write(tmp_path / "big.circ", "qubits 20\nx q[0]\n")
    assert main(["run", "--circuit", circuit]) == 5


def test_exit_code_state_format(tmp_path, capsys):
    circuit = write(tmp_path / "id.circ", "qubits 1\nensemble\n")
    state = write(tmp_path / "bad.state", "junk\n")
    assert main(["run", "--circuit", circuit, "--init", f"file:{state}"]) == 6


def test_exit_code_missing_file(tmp_path, capsys):
    assert main(["run", "--circuit", str(tmp_path / "nope.circ")]) == 2


def test_exit_code_bad_noise_value(tmp_path, capsys):
    circuit = write(tmp_path / "id.circ", "qubits 1\nensemble\n")
    noise = write(tmp_path / "bad.noise", "r_x = 2.0\n")
    assert main(["run", "--circuit", circuit, "--noise", noise]) == 2
