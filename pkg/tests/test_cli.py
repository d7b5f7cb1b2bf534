"""Command-line behaviour: flags, exit codes, file round trips."""

import random

import pytest

from conftest import random_image
from dnamagic.cipher import deserialize
from dnamagic.cli import run
from dnamagic.imageio import read_pgm, write_pgm


@pytest.fixture(scope="module")
def workdir(tmp_path_factory, random_key):
    """Key FASTA plus a 16x16 sample image on disk."""
    root = tmp_path_factory.mktemp("cli")
    key_path = root / "key.fasta"
    key_path.write_text(">test key\n" + random_key.sequence.bases + "\n")
    rng = random.Random(31)
    image_path = root / "sample.pgm"
    image_path.write_bytes(write_pgm(random_image(rng, 16)))
    return root


def test_magic_prints_square_and_constant(capsys):
    assert run(["magic", "--order", "4"]) == 0
    out = capsys.readouterr().out
    assert "16  2  3 13" in out
    assert "magic constant: 34" in out


def test_magic_rejects_odd_order(capsys):
    assert run(["magic", "--order", "5"]) == 2
    assert "NotDoublyEven" in capsys.readouterr().err


def test_encrypt_decrypt_round_trip_byte_exact(workdir):
    cipher_path = workdir / "sample.dmc"
    plain_path = workdir / "sample.out.pgm"
    args = ["--in", str(workdir / "sample.pgm"), "--key", str(workdir / "key.fasta")]
    assert run(["encrypt", *args, "--out", str(cipher_path), "--seed", "42"]) == 0
    assert run(["decrypt", "--in", str(cipher_path), "--key", str(workdir / "key.fasta"),
                "--out", str(plain_path)]) == 0
    assert plain_path.read_bytes() == (workdir / "sample.pgm").read_bytes()


def test_encrypt_is_deterministic_for_a_seed(workdir):
    a = workdir / "a.dmc"
    b = workdir / "b.dmc"
    base = ["encrypt", "--in", str(workdir / "sample.pgm"),
            "--key", str(workdir / "key.fasta"), "--seed", "0xDEADBEEF"]
    assert run([*base, "--out", str(a)]) == 0
    assert run([*base, "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_omitted_seed_is_echoed_to_stderr(workdir, capsys):
    out = workdir / "echo.dmc"
    assert run(["encrypt", "--in", str(workdir / "sample.pgm"),
                "--key", str(workdir / "key.fasta"), "--out", str(out)]) == 0
    err = capsys.readouterr().err
    assert "seed: " in err
    # replaying the echoed seed reproduces the file
    seed = err.split("seed: ")[1].split()[0]
    replay = workdir / "replay.dmc"
    assert run(["encrypt", "--in", str(workdir / "sample.pgm"),
                "--key", str(workdir / "key.fasta"), "--out", str(replay),
                "--seed", seed]) == 0
    assert replay.read_bytes() == out.read_bytes()


def test_encrypt_rejects_bad_dimensions(workdir, tmp_path, capsys):
    from dnamagic.imageio import PlainImage
    bad = tmp_path / "bad.pgm"
    bad.write_bytes(write_pgm(PlainImage(5, 5, bytes(25))))
    code = run(["encrypt", "--in", str(bad), "--key", str(workdir / "key.fasta"),
                "--out", str(tmp_path / "x.dmc")])
    assert code == 2
    assert "DimensionError" in capsys.readouterr().err


def test_fingerprint_flag_detects_wrong_key(workdir, tmp_path, capsys):
    rng = random.Random(32)
    other_key = tmp_path / "other.fasta"
    other_key.write_text(">other\n" + "".join(rng.choices("ACGT", k=65540)) + "\n")
    cipher_path = tmp_path / "fp.dmc"
    assert run(["encrypt", "--in", str(workdir / "sample.pgm"),
                "--key", str(workdir / "key.fasta"), "--out", str(cipher_path),
                "--seed", "1", "--fingerprint"]) == 0
    assert deserialize(cipher_path.read_bytes()).flags == 1
    code = run(["decrypt", "--in", str(cipher_path), "--key", str(other_key),
                "--out", str(tmp_path / "y.pgm")])
    assert code == 2
    assert "WrongKey" in capsys.readouterr().err


def test_analyze_report_and_csv(workdir, tmp_path, capsys):
    cipher_path = workdir / "analyze.dmc"
    run(["encrypt", "--in", str(workdir / "sample.pgm"), "--key", str(workdir / "key.fasta"),
         "--out", str(cipher_path), "--seed", "5"])
    capsys.readouterr()
    csv_path = tmp_path / "report.csv"
    assert run(["analyze", "--plain", str(workdir / "sample.pgm"),
                "--cipher", str(cipher_path), "--csv", str(csv_path),
                "--sample-n", "512", "--seed", "7"]) == 0
    out = capsys.readouterr().out
    for label in ("plain_correlation[horizontal]", "cipher_correlation[diagonal]",
                  "plain_histogram_chi2", "cipher_histogram_chi2"):
        assert label in out
    lines = csv_path.read_text().strip().splitlines()
    assert lines[0] == "metric,direction,value"
    assert len(lines) == 9  # header + 6 correlations + 2 histogram rows
    for line in lines[1:]:
        float(line.rsplit(",", 1)[1])


def test_analyze_with_key_adds_differential_metrics(workdir, capsys):
    cipher_path = workdir / "analyze2.dmc"
    run(["encrypt", "--in", str(workdir / "sample.pgm"), "--key", str(workdir / "key.fasta"),
         "--out", str(cipher_path), "--seed", "6"])
    capsys.readouterr()
    assert run(["analyze", "--plain", str(workdir / "sample.pgm"),
                "--cipher", str(cipher_path), "--seed", "8", "--sample-n", "256",
                "--key", str(workdir / "key.fasta"), "--trials", "2"]) == 0
    out = capsys.readouterr().out
    assert "differential_change_rate" in out
    assert "paired_seed_changed_cells: 1.000000" in out


def test_attack_reports_failure_against_real_ciphertexts(workdir, tmp_path, capsys):
    rng = random.Random(33)
    target_pgm = tmp_path / "target.pgm"
    target_pgm.write_bytes(write_pgm(random_image(rng, 16)))
    known_dmc = tmp_path / "known.dmc"
    target_dmc = tmp_path / "target.dmc"
    run(["encrypt", "--in", str(workdir / "sample.pgm"), "--key", str(workdir / "key.fasta"),
         "--out", str(known_dmc), "--seed", "9"])
    run(["encrypt", "--in", str(target_pgm), "--key", str(workdir / "key.fasta"),
         "--out", str(target_dmc), "--seed", "10"])
    capsys.readouterr()
    assert run(["attack", "--known-plain", str(workdir / "sample.pgm"),
                "--known-cipher", str(known_dmc), "--target", str(target_dmc),
                "--truth", str(target_pgm)]) == 0
    out = capsys.readouterr().out
    assert "verdict: failure" in out
    assert "match fraction: 0.0" in out


def test_keyinfo_reports_key_statistics(workdir, random_key, capsys):
    assert run(["keyinfo", "--key", str(workdir / "key.fasta")]) == 0
    out = capsys.readouterr().out
    assert "length: 65540" in out
    assert "coverage: 256/256 quads" in out
    assert f"min multiplicity: {random_key.index.min_multiplicity}" in out
    assert f"fingerprint: 0x{random_key.fingerprint:016x}" in out


def test_keyinfo_flags_incomplete_coverage(tmp_path, capsys):
    bad_key = tmp_path / "cycling.fasta"
    bad_key.write_text(">cycling\n" + ("ACGT" * 16385)[:65540] + "\n")
    assert run(["keyinfo", "--key", str(bad_key)]) == 2
    out = capsys.readouterr().out
    assert "coverage: 4/256 quads" in out
    assert "missing quads:" in out


def test_strict_mode_rejects_dirty_key(workdir, tmp_path, capsys):
    dirty = tmp_path / "dirty.fasta"
    dirty.write_text(">dirty\nACGTN" + "ACGT" * 16384 + "\n")
    code = run(["encrypt", "--in", str(workdir / "sample.pgm"), "--key", str(dirty),
                "--out", str(tmp_path / "z.dmc"), "--seed", "1"])
    assert code == 2
    assert "InvalidSymbol" in capsys.readouterr().err


def test_sanitize_mode_accepts_dirty_key(workdir, tmp_path):
    rng = random.Random(34)
    clean = "".join(rng.choices("ACGT", k=65540))
    dirty = tmp_path / "dirty2.fasta"
    dirty.write_text(">dirty\nNNN" + clean + "\n")
    assert run(["encrypt", "--in", str(workdir / "sample.pgm"), "--key", str(dirty),
                "--out", str(tmp_path / "w.dmc"), "--seed", "1", "--mode", "sanitize"]) == 0


def test_missing_file_is_a_data_error(workdir, tmp_path, capsys):
    code = run(["encrypt", "--in", str(tmp_path / "nope.pgm"),
                "--key", str(workdir / "key.fasta"), "--out", str(tmp_path / "o.dmc")])
    assert code == 2
    assert "FileNotFoundError" in capsys.readouterr().err


def test_usage_errors_exit_1(capsys):
    assert run([]) == 1
    assert run(["encrypt"]) == 1
    assert run(["no-such-command"]) == 1
    assert run(["encrypt", "--in", "x", "--key", "y", "--out", "z", "--seed", "abc"]) == 1
    capsys.readouterr()


@pytest.mark.parametrize("command", ["encrypt", "decrypt", "analyze", "attack", "magic", "keyinfo"])
def test_help_exits_zero(command, capsys):
    assert run([command, "--help"]) == 0
    assert "--" in capsys.readouterr().out


def test_hex_seed_accepted(workdir, tmp_path):
    out_dec = tmp_path / "dec.dmc"
    out_hex = tmp_path / "hex.dmc"
    base = ["encrypt", "--in", str(workdir / "sample.pgm"), "--key", str(workdir / "key.fasta")]
    assert run([*base, "--out", str(out_dec), "--seed", "255"]) == 0
    assert run([*base, "--out", str(out_hex), "--seed", "0xFF"]) == 0
    assert out_dec.read_bytes() == out_hex.read_bytes()


def test_decrypted_file_parses_back(workdir):
    # decrypt output is canonical P5 and reparses to the original raster
    img = read_pgm((workdir / "sample.pgm").read_bytes())
    cipher_path = workdir / "reparse.dmc"
    plain_path = workdir / "reparse.pgm"
    run(["encrypt", "--in", str(workdir / "sample.pgm"), "--key", str(workdir / "key.fasta"),
         "--out", str(cipher_path), "--seed", "11"])
    run(["decrypt", "--in", str(cipher_path), "--key", str(workdir / "key.fasta"),
         "--out", str(plain_path)])
    assert read_pgm(plain_path.read_bytes()) == img
