"""Command-line front end: encrypt, decrypt, analyze, attack, magic, keyinfo.

Exit codes: 0 success, 1 usage error, 2 data or contract error (printed to
stderr as "ErrorName: detail").
"""

import argparse
import csv
import secrets
import sys
from pathlib import Path

from . import analysis, cipher, imageio, magic_square, reference
from .dna import BYTE_TO_QUAD
from .errors import DnamagicError
from .substitution import RandomStream

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # argparse defaults to exit code 2; usage problems must exit 1 here
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _seed_value(text: str) -> int:
    try:
        value = int(text, 0)  # decimal or 0x-hex
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal or 0x-hex integer: {text!r}")
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dnamagic",
                     description="Image cipher based on DNA 4-mer position substitution "
                                 "and magic-square scrambling.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add_mode(p):
        p.add_argument("--mode", choices=("strict", "sanitize"), default="strict",
                       help="how to treat non-ACGT symbols in the key file (default: strict)")

    p = sub.add_parser("encrypt", help="encrypt a PGM image")
    p.add_argument("--in", dest="input", required=True, help="plaintext PGM file")
    p.add_argument("--key", required=True, help="key FASTA file")
    p.add_argument("--out", required=True, help="output DMC1 container")
    p.add_argument("--seed", type=_seed_value, default=None,
                   help="64-bit seed, decimal or 0x-hex; omitted: OS entropy, echoed to stderr")
    p.add_argument("--fingerprint", action="store_true",
                   help="embed the key fingerprint so a wrong key is detected at decrypt time")
    add_mode(p)

    p = sub.add_parser("decrypt", help="decrypt a DMC1 container")
    p.add_argument("--in", dest="input", required=True, help="ciphertext DMC1 file")
    p.add_argument("--key", required=True, help="key FASTA file")
    p.add_argument("--out", required=True, help="output PGM file")
    add_mode(p)

    p = sub.add_parser("analyze",
                       help="histogram and correlation report for a plain/cipher pair")
    p.add_argument("--plain", required=True, help="plaintext PGM file")
    p.add_argument("--cipher", required=True, help="ciphertext DMC1 file")
    p.add_argument("--csv", default=None, help="also write metric,direction,value rows here")
    p.add_argument("--sample-n", type=int, default=analysis.DEFAULT_SAMPLE_PAIRS,
                   help="adjacent pairs sampled per direction (default: %(default)s)")
    p.add_argument("--seed", type=_seed_value, default=None,
                   help="sampling seed; omitted: OS entropy, echoed to stderr")
    p.add_argument("--key", default=None,
                   help="key FASTA file; enables the differential sensitivity metrics")
    p.add_argument("--trials", type=int, default=10,
                   help="differential trials when --key is given (default: %(default)s)")
    add_mode(p)

    p = sub.add_parser("attack",
                       help="run the XOR-replay attack and score it against the truth")
    p.add_argument("--known-plain", required=True, help="known plaintext PGM")
    p.add_argument("--known-cipher", required=True, help="its ciphertext DMC1")
    p.add_argument("--target", required=True, help="ciphertext DMC1 to attack")
    p.add_argument("--truth", required=True, help="true plaintext PGM of the target")

    p = sub.add_parser("magic", help="print a doubly-even magic square")
    p.add_argument("--order", type=int, required=True, help="side length, a multiple of 4")

    p = sub.add_parser("keyinfo", help="report key file statistics")
    p.add_argument("--key", required=True, help="key FASTA file")
    add_mode(p)

    return parser


def _load_pgm(path: str) -> imageio.PlainImage:
    return imageio.read_pgm(Path(path).read_bytes())


def _load_cipher(path: str) -> cipher.CipherImage:
    return cipher.deserialize(Path(path).read_bytes())


def _load_key(path: str, mode: str) -> reference.ReferenceKey:
    return reference.build_key(reference.parse_fasta(Path(path).read_bytes(), mode=mode))


def _resolve_seed(seed: int | None) -> int:
    if seed is None:
        seed = secrets.randbits(64)
        print(f"seed: {seed}", file=sys.stderr)  # echoed so any run can be reproduced
    return seed


def _cmd_encrypt(args) -> int:
    image = _load_pgm(args.input)
    key = _load_key(args.key, args.mode)
    rng = RandomStream(_resolve_seed(args.seed))
    result = cipher.encrypt(image, key, rng, include_fingerprint=args.fingerprint)
    Path(args.out).write_bytes(cipher.serialize(result))
    return EXIT_OK


def _cmd_decrypt(args) -> int:
    blob = _load_cipher(args.input)
    key = _load_key(args.key, args.mode)
    image = cipher.decrypt(blob, key)
    Path(args.out).write_bytes(imageio.write_pgm(image))
    return EXIT_OK


def _cmd_analyze(args) -> int:
    plain = _load_pgm(args.plain)
    blob = _load_cipher(args.cipher)
    seed = _resolve_seed(args.seed)

    rows: list[tuple[str, str, float]] = []
    # a fresh stream per call means plain and cipher sample identical positions
    for direction in analysis.DIRECTIONS:
        report = analysis.adjacent_correlation(plain.pixels, plain.width, plain.height,
                                               direction, args.sample_n, RandomStream(seed))
        rows.append(("plain_correlation", direction, report.r))
    for direction in analysis.DIRECTIONS:
        report = analysis.adjacent_correlation(blob.pointers, blob.width, blob.height,
                                               direction, args.sample_n, RandomStream(seed))
        rows.append(("cipher_correlation", direction, report.r))
    rows.append(("plain_histogram_chi2", "",
                 analysis.chi_square_uniform(analysis.histogram(plain.pixels))))
    rows.append(("cipher_histogram_chi2", "",
                 analysis.chi_square_uniform(analysis.histogram(analysis.high_bytes(blob.pointers)))))

    if args.key is not None:
        key = _load_key(args.key, args.mode)
        rate = analysis.differential_sensitivity(plain, key, args.trials, RandomStream(seed))
        rows.append(("differential_change_rate", "", rate))
        pixel = RandomStream(seed).randbelow(plain.width * plain.height)
        changed = analysis.differential_paired_seed(plain, key, seed, pixel)
        rows.append(("paired_seed_changed_cells", "", float(changed)))

    for metric, direction, value in rows:
        label = f"{metric}[{direction}]" if direction else metric
        print(f"{label}: {value:.6f}")
    if args.csv is not None:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["metric", "direction", "value"])
            writer.writerows(rows)
    return EXIT_OK


def _cmd_attack(args) -> int:
    known_plain = _load_pgm(args.known_plain)
    known_cipher = _load_cipher(args.known_cipher)
    target = _load_cipher(args.target)
    truth = _load_pgm(args.truth)
    candidate = analysis.chosen_plaintext_attack(known_plain.pixels, known_cipher.pointers,
                                                 target.pointers)
    report = analysis.evaluate_attack(candidate, truth.pixels)
    print(f"match fraction: {report.match_fraction:.4f}")
    print(f"verdict: {report.verdict}")
    return EXIT_OK


def _cmd_magic(args) -> int:
    square = magic_square.generate_doubly_even(args.order)
    width = len(str(args.order * args.order))
    for row in square.cells:
        print(" ".join(f"{v:>{width}}" for v in row))
    print(f"magic constant: {magic_square.magic_constant(args.order)}")
    return EXIT_OK


def _cmd_keyinfo(args) -> int:
    seq = reference.parse_fasta(Path(args.key).read_bytes(), mode=args.mode)
    print(f"source: {seq.source_name or '(unnamed)'}")
    print(f"length: {len(seq.bases)}")
    index = reference.scan_index(seq)
    covered = [bool(lst) for lst in index.occurrences]
    print(f"coverage: {sum(covered)}/256 quads")
    print(f"min multiplicity: {index.min_multiplicity}")
    print(f"fingerprint: 0x{reference.key_fingerprint(seq):016x}")
    if not all(covered):
        missing = [BYTE_TO_QUAD[v] for v, ok in enumerate(covered) if not ok]
        shown = ", ".join(missing[:8])
        more = f" (+{len(missing) - 8} more)" if len(missing) > 8 else ""
        print(f"missing quads: {shown}{more}")
        return EXIT_DATA
    return EXIT_OK


_HANDLERS = {
    "encrypt": _cmd_encrypt,
    "decrypt": _cmd_decrypt,
    "analyze": _cmd_analyze,
    "attack": _cmd_attack,
    "magic": _cmd_magic,
    "keyinfo": _cmd_keyinfo,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles --help (0) and usage errors (1)
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _HANDLERS[args.command](args)
    except (DnamagicError, ValueError, OSError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DATA


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
