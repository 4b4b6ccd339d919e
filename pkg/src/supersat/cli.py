"""Command-line front end.  JSON results go to stdout, diagnostics to
stderr; exact integers above the 53-bit float-safe range are serialized as
decimal strings.

Exit codes: 0 ok, 1 verify-suite failure, 2 usage error, 3 precondition
violation, 4 file error, 5 family-format error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from supersat import __version__
from supersat.core import (
    Family,
    FamilyFormatError,
    format_word,
    parse_family,
    serialize_family,
    sigma,
)
from supersat.scd import Permutation, permute_decomposition, scd_bracketing, scd_inductive, validate_scd
from supersat.counting import count_k_chains
from supersat.bounds import (
    bound_report,
    build_extremal_family,
    n_permutations_enumerate,
    n_permutations_factorial,
    n_permutations_ratio,
)
from supersat import oracle as oracle_mod
from supersat import verify as verify_mod

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_FILE = 4
EXIT_FORMAT = 5

_SAFE_INT = 1 << 53


def _jsonable(value):
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return value if abs(value) <= _SAFE_INT else str(value)
    if isinstance(value, dict):
        return {key: _jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    return value


def _emit(payload: dict) -> None:
    json.dump(_jsonable(payload), sys.stdout)
    sys.stdout.write("\n")


def _read_family(path: str) -> Family:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_family(handle.read())


def _cmd_bound(args) -> int:
    report = bound_report(args.n, args.k, args.x)
    _emit(report.to_payload())
    return EXIT_OK


def _cmd_sigma(args) -> int:
    _emit({"n": args.n, "k": args.k, "sigma": sigma(args.n, args.k)})
    return EXIT_OK


def _cmd_count(args) -> int:
    family = _read_family(args.family)
    _emit({"count": count_k_chains(family, args.k)})
    return EXIT_OK


def _cmd_construct(args) -> int:
    family = build_extremal_family(args.n, args.k, args.x)
    text = serialize_family(family)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
        _emit({"n": args.n, "k": args.k, "x": args.x, "size": family.size(), "out": args.out})
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _build_scd(n: int, method: str):
    return scd_inductive(n) if method == "inductive" else scd_bracketing(n)


def _parse_permutation(text: str, n: int) -> Permutation:
    try:
        image = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"permutation must be comma-separated integers, got {text!r}") from None
    if len(image) != n:
        raise ValueError(f"permutation lists {len(image)} images, expected {n}")
    return Permutation(image)


def _cmd_scd(args) -> int:
    dec = _build_scd(args.n, args.method)
    if args.permute:
        dec = permute_decomposition(dec, _parse_permutation(args.permute, args.n))
    if args.validate:
        report = validate_scd(dec)
        _emit(
            {
                "n": args.n,
                "method": args.method,
                "chains": len(dec.chains),
                "valid": report.ok,
                "checks": {
                    "partition": report.partition,
                    "skipless": report.skipless,
                    "symmetric": report.symmetric,
                    "chain_count": report.chain_count,
                    "locator": report.locator,
                },
                "problems": list(report.problems),
            }
        )
        return EXIT_OK
    for chain in dec.chains:
        sys.stdout.write(" -> ".join(format_word(w) for w in chain) + "\n")
    return EXIT_OK


def _cmd_nperm(args) -> int:
    try:
        levels = tuple(int(part) for part in args.levels.split(","))
    except ValueError:
        raise ValueError(f"levels must be comma-separated integers, got {args.levels!r}") from None
    payload = {
        "n": args.n,
        "levels": list(levels),
        "factorial_form": n_permutations_factorial(args.n, levels),
        "ratio_form": n_permutations_ratio(args.n, levels),
    }
    payload["agree"] = payload["factorial_form"] == payload["ratio_form"]
    if args.enumerate:
        chain = []
        word = 0
        for lvl in levels:
            while word.bit_count() < lvl:
                word |= 1 << word.bit_count()
            chain.append(word)
        enumerated = n_permutations_enumerate(_build_scd(args.n, "inductive"), chain)
        payload["enumerated"] = enumerated
        payload["agree"] = payload["agree"] and enumerated == payload["factorial_form"]
    _emit(payload)
    return EXIT_OK


def _cmd_oracle(args) -> int:
    if args.heuristic:
        result = oracle_mod.min_chain_count_heuristic(
            args.n, args.k, args.size, seed=args.seed, iterations=args.iters
        )
    else:
        result = oracle_mod.min_chain_count_exact(args.n, args.k, args.size)
    _emit(
        {
            "n": result.n,
            "k": result.k,
            "size": result.family_size,
            "min_count": result.min_count,
            "exact": result.exact,
            "witness": serialize_family(result.witness),
        }
    )
    return EXIT_OK


def _cmd_kleitman(args) -> int:
    rows = oracle_mod.kleitman_report(args.n, args.k, seed=args.seed, iterations=args.iters)
    if args.json:
        _emit(
            {
                "n": args.n,
                "k": args.k,
                "rows": [
                    {
                        "size": row.size,
                        "min_count": row.min_count,
                        "exact": row.exact,
                        "construction": row.construction_count,
                        "equal": row.equal,
                    }
                    for row in rows
                ],
            }
        )
        return EXIT_OK
    sys.stdout.write("size\tmin_count\texact\tconstruction\tequal\n")
    for row in rows:
        sys.stdout.write(
            f"{row.size}\t{row.min_count}\t{str(row.exact).lower()}"
            f"\t{row.construction_count}\t{str(row.equal).lower()}\n"
        )
    return EXIT_OK


def _cmd_verify(args) -> int:
    checks = verify_mod.run_suite(args.suite, seed=args.seed)
    _emit(
        {
            "suite": args.suite,
            "ok": all(check.ok for check in checks),
            "checks": [
                {"name": check.name, "ok": check.ok, "detail": check.detail} for check in checks
            ],
        }
    )
    return EXIT_OK if all(check.ok for check in checks) else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supersat",
        description="Chain counting, symmetric chain decompositions, and "
        "supersaturation bounds in the subset lattice.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="forced k-chain lower bound for a size surplus")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("sigma", help="sum of the k largest binomials C(n, .)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_sigma)

    p = sub.add_parser("count", help="count k-chains in a family file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--family", required=True, help="path to a family file")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("construct", help="emit the extremal family for (n, k, x)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--out", help="write the family file here instead of stdout")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("scd", help="dump or validate a symmetric chain decomposition")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("inductive", "bracketing"), default="inductive")
    p.add_argument("--permute", help="comma-separated images of 1..n")
    p.add_argument("--validate", action="store_true", help="emit a JSON validation report")
    p.set_defaults(func=_cmd_scd)

    p = sub.add_parser("nperm", help="permutation-count formulas for a level tuple")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--levels", required=True, help="comma-separated levels a1<...<ak")
    p.add_argument("--enumerate", action="store_true", help="cross-check by brute force (n <= 7)")
    p.set_defaults(func=_cmd_nperm)

    p = sub.add_parser("oracle", help="minimum chain count over families of one size")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--heuristic", action="store_true", help="annealing search (n <= 10)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--iters", type=int, default=2000)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("kleitman", help="minimum vs centered construction for every size")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--iters", type=int, default=500)
    p.add_argument("--json", action="store_true", help="JSON instead of the TSV table")
    p.set_defaults(func=_cmd_kleitman)

    p = sub.add_parser("verify", help="run a module property suite")
    p.add_argument("--suite", choices=sorted(verify_mod.SUITES), required=True)
    p.add_argument("--seed", type=int, default=2024)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FamilyFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FILE
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
