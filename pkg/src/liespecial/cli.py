"""Command-line interface.

    liespecial roots  TYPE
    liespecial orbit  TYPE [--index i]
    liespecial gamma  TYPE [--index i]
    liespecial table  TYPE
    liespecial verify TYPE [--conjecture 1|2|all]
    liespecial atable RANK

Every command accepts ``--format text|csv|json``, ``--cache-dir PATH`` and
``--max-elements N``. Reports go to stdout; timings and errors to stderr.
Exit status is 0 on success, 1 when ``verify`` finds a failing check and 2
on usage errors or when a cap is exceeded.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Optional, Sequence

from . import atype, records
from .cache import GroupCache
from .lie import LieType, cartan_data, fundamental_weight
from .rootsys import generate_positive_roots
from .special import (
    TupleBudgetError,
    gamma_set,
    special_root_table,
    verify_conjecture1,
    verify_conjecture2,
)
from .weyl import DEFAULT_MAX_ELEMENTS, EnumerationCapError, WeylGroup, enumerate_group, orbit

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _lie_type(text: str) -> LieType:
    try:
        return LieType.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--cache-dir", default=None, help="directory for cached Weyl group enumerations")
    common.add_argument("--max-elements", type=_positive, default=DEFAULT_MAX_ELEMENTS,
                        help="refuse to enumerate Weyl groups larger than this (default %(default)s)")

    parser = argparse.ArgumentParser(prog="liespecial", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", parents=[common], help="positive roots")
    p.add_argument("type", type=_lie_type)

    for name, what in (("orbit", "Weyl orbit of lambda_i"), ("gamma", "the set Gamma(i)+")):
        p = sub.add_parser(name, parents=[common], help=what)
        p.add_argument("type", type=_lie_type)
        p.add_argument("--index", type=_positive, default=None, help="fundamental weight index (default: all)")

    p = sub.add_parser("table", parents=[common], help="special-root table over the Weyl group")
    p.add_argument("type", type=_lie_type)

    p = sub.add_parser("verify", parents=[common], help="check both conjectures")
    p.add_argument("type", type=_lie_type)
    p.add_argument("which", nargs="?", choices=("c1", "c2", "all"), default=None)
    p.add_argument("--conjecture", choices=("1", "2", "all"), default=None)

    p = sub.add_parser("atable", parents=[common], help="A_r closed-form checks")
    p.add_argument("rank", type=_positive)
    return parser


def _group(t: LieType, args) -> WeylGroup:
    if args.cache_dir:
        return GroupCache(args.cache_dir).group(t, args.max_elements)
    return enumerate_group(t, args.max_elements)


def _indices(t: LieType, index: Optional[int]) -> list[int]:
    if index is None:
        return list(range(1, t.rank + 1))
    if index > t.rank:
        raise IndexError(f"--index {index} out of range 1..{t.rank} for {t.name}")
    return [index]


def _timed(label: str, fn, *a, **kw):
    start = time.perf_counter()
    out = fn(*a, **kw)
    print(f"timing: {label}: {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return out


def run(args) -> tuple[records.OutputRecord, int]:
    cmd = args.command
    if cmd == "roots":
        return records.roots_record(generate_positive_roots(args.type)), EXIT_OK
    if cmd == "orbit":
        t = args.type
        cd = cartan_data(t)
        orbits = {i: orbit(fundamental_weight(i, cd), cd) for i in _indices(t, args.index)}
        return records.orbit_record(t, orbits), EXIT_OK
    if cmd == "gamma":
        t = args.type
        sets = [gamma_set(i, t) for i in _indices(t, args.index)]
        return records.gamma_record(t, sets, cartan_data(t)), EXIT_OK
    if cmd == "table":
        t = args.type
        return records.table_record(special_root_table(t, _group(t, args))), EXIT_OK
    if cmd == "verify":
        t = args.type
        which = args.conjecture or {"c1": "1", "c2": "2", "all": "all", None: "all"}[args.which]
        c1 = c2 = None
        if which in ("1", "all"):
            c1 = _timed(f"{t.name} conjecture 1", verify_conjecture1, t)
        if which in ("2", "all"):
            group = _timed(f"{t.name} group", _group, t, args)
            c2 = _timed(f"{t.name} conjecture 2", verify_conjecture2, t, group)
        ok = (c1 is None or c1.passed) and (c2 is None or c2.passed)
        return records.verify_record(t, c1, c2), EXIT_OK if ok else EXIT_FAILED
    if cmd == "atable":
        rows = atype.agreement(args.rank)
        ok = all(row.passed for row in rows)
        return records.atable_record(args.rank, rows), EXIT_OK if ok else EXIT_FAILED
    raise AssertionError(cmd)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        record, status = run(args)
    except (EnumerationCapError, TupleBudgetError, IndexError) as exc:
        print(f"liespecial: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(record.render(args.format))
    return status


if __name__ == "__main__":
    sys.exit(main())
