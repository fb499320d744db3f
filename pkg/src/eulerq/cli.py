"""Command line front end: statistics, Q-function renderings, verification
suites, character tables, expression expansion, and the table cache.

Exit codes are stable for scripting: 0 success, 1 a verification check
failed, 2 usage or parse error.  JSON output is key-sorted and compact, so
identical inputs produce byte-identical bytes regardless of --jobs.
"""

import argparse
import json
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import factorial

from . import cache as cachestore
from .eulerian import (
    char_table,
    q_symf,
    q_symf_type,
    suite_registry,
    verify_character_formula,
    verify_derangement_identities,
    verify_finite_specialization,
    verify_four_stat_series,
    verify_main_generating_function,
    verify_qexp_generating_function,
    verify_positivity,
    verify_recurrences,
    verify_specializations,
    verify_structure_identities,
    verify_symmetry_unimodality,
)
from .permstats import CapacityError, Partition, Permutation, enumerate_permutations, statistics
from .related import related_registry, verify_related
from .symfunc import SymF


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    """Effective run settings for the verify driver."""

    n_max: int = 0          # 0 means suite defaults
    mode: str = "ci"
    output: str = "text"
    cache_dir: str = ""
    jobs: int = 1


# ---------------------------------------------------------------------------
# verify driver
# ---------------------------------------------------------------------------

_SUITE_MAX = {
    "genfun": 6, "recurrences": 7, "qexp": 6, "series": 6, "finite-spec": 5,
    "derangements": 6, "symmetry": 7, "positivity": 8, "characters": 8,
    "structure": 7, "specializations": 6, "related": 7,
}
_CI_SPECIAL = {"series": 4, "finite-spec": 5, "related": 5}


def _suite_thunk(name, bound, mode):
    gessel = min(bound, 4 if mode == "ci" else 6)
    table = {
        "genfun": lambda: verify_main_generating_function(bound),
        "recurrences": lambda: verify_recurrences(bound),
        "qexp": lambda: verify_qexp_generating_function(bound),
        "series": lambda: verify_four_stat_series(bound, bound),
        "finite-spec": lambda: verify_finite_specialization(bound, 4),
        "derangements": lambda: verify_derangement_identities(bound),
        "symmetry": lambda: verify_symmetry_unimodality(bound),
        "positivity": lambda: verify_positivity(bound),
        "characters": lambda: verify_character_formula(bound),
        "structure": lambda: verify_structure_identities(bound, min(bound, 6), bound),
        "specializations": lambda: verify_specializations(bound),
        "related": lambda: verify_related(bound, gessel),
    }
    return table[name]


def full_registry(mode):
    """Every suite in fixed order: the core families plus companion models."""
    return list(suite_registry(mode)) + list(related_registry(mode))


def selected_entries(suite, cfg):
    entries = full_registry(cfg.mode)
    if suite != "all":
        entries = [e for e in entries if e[0] == suite]
        if not entries:
            names = ", ".join(n for n, _ in full_registry(cfg.mode))
            raise UsageError(f"unknown suite {suite!r}; choose from: {names}, all")
    if cfg.n_max:
        rebound = []
        for name, _ in entries:
            cap = _SUITE_MAX[name]
            if cfg.mode == "ci":
                cap = min(cap, _CI_SPECIAL.get(name, 6))
            bound = max(1, min(cfg.n_max, cap))
            rebound.append((name, _suite_thunk(name, bound, cfg.mode)))
        entries = rebound
    return entries


def _run_entries(entries, jobs):
    if jobs <= 1:
        return [report_fn() for _, report_fn in entries]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(report_fn) for _, report_fn in entries]
        return [f.result() for f in futures]


def cmd_verify(args):
    cfg = RunConfig(n_max=args.n_max or 0, mode=args.mode, output=args.output,
                    jobs=max(1, args.jobs))
    entries = selected_entries(args.suite, cfg)
    reports = _run_entries(entries, cfg.jobs)
    passed = all(r.ok for r in reports)
    if cfg.output == "json":
        envelope = {
            "command": "verify",
            "mode": cfg.mode,
            "suite": args.suite,
            "passed": passed,
            "suites": [r.to_jsonable() for r in reports],
        }
        print(json.dumps(envelope, sort_keys=True, separators=(",", ":")))
    else:
        for r in reports:
            print(r.summary())
            for c in r.failures():
                print(f"  FAIL {c.identity} {c.params} {c.witness}".rstrip())
        print("result: PASS" if passed else "result: FAIL")
    return 0 if passed else 1


# ---------------------------------------------------------------------------
# stats
# ---------------------------------------------------------------------------

_STAT_NAMES = ("des", "exc", "maj", "comaj", "inv", "fix")


def _parse_word(text):
    text = text.strip()
    try:
        if "," in text:
            word = [int(x) for x in text.split(",")]
        else:
            word = [int(ch) for ch in text]
        return Permutation(word)
    except ValueError as e:
        raise UsageError(str(e))


def _stat_totals(n):
    """Closed-form column sums over the whole symmetric group: each of the
    n-1 positions is a descent (an excedance) in half of S_n, each of the
    C(n,2) pairs is an inversion in half, and maj splits evenly with comaj;
    every letter is fixed in (n-1)! permutations."""
    eulerian = factorial(n) * (n - 1) // 2 if n >= 2 else 0
    mahonian = factorial(n) * n * (n - 1) // 4 if n >= 2 else 0
    return {
        "des": eulerian,
        "exc": eulerian,
        "maj": mahonian,
        "comaj": mahonian,
        "inv": mahonian,
        "fix": factorial(n) if n >= 1 else 0,
    }


def cmd_stats(args):
    if (args.perm is None) == (args.n is None):
        raise UsageError("give a permutation word or --n, not both")
    if args.perm is not None:
        st = statistics(_parse_word(args.perm))
        payload = {
            "word": list(st.word),
            "n": len(st.word),
            "Des": sorted(st.des_set),
            "Exc": sorted(st.exc_set),
            "Exd": sorted(st.exd_set),
            "cycle_type": list(st.cycle_type),
            "des": st.des, "exc": st.exc, "maj": st.maj,
            "comaj": st.comaj, "inv": st.inv, "fix": st.fix,
        }
        if args.output == "json":
            print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
        else:
            joiner = "" if len(st.word) < 10 and all(x < 10 for x in st.word) else ","
            print("word: " + joiner.join(map(str, st.word)))
            print(f"n: {payload['n']}")
            for key in ("Des", "Exc", "Exd"):
                print(f"{key}: {{{','.join(map(str, payload[key]))}}}")
            print("cycle type: " + (",".join(map(str, st.cycle_type)) or "()"))
            print("  ".join(f"{s}={payload[s]}" for s in _STAT_NAMES))
        return 0

    n = args.n
    if n < 0:
        raise UsageError("--n must be nonnegative")
    names = _STAT_NAMES
    if args.table:
        names = tuple(s.strip() for s in args.table.split(","))
        bad = [s for s in names if s not in _STAT_NAMES]
        if bad:
            raise UsageError(f"unknown statistics {bad}; choose from {_STAT_NAMES}")
    try:
        rows = [statistics(sigma) for sigma in enumerate_permutations(n)]
    except CapacityError as e:
        raise UsageError(str(e))
    sums = {s: sum(getattr(st, s) for st in rows) for s in names}
    want = _stat_totals(n)
    checked = {s: sums[s] == want[s] for s in names}
    if args.output == "json":
        payload = {
            "n": n,
            "permutations": len(rows),
            "columns": list(names),
            "rows": [[list(st.word)] + [getattr(st, s) for s in names] for st in rows] if args.table else None,
            "sums": {s: sums[s] for s in names},
            "cross_check": checked,
        }
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        if n == 0:
            print("S_0 holds one permutation, the empty word; every statistic is 0")
        if args.table:
            width = max(n, 4)
            print("word".ljust(width) + "  " + "  ".join(s.rjust(5) for s in names))
            for st in rows:
                word = "".join(map(str, st.word)) if n < 10 else ",".join(map(str, st.word))
                print(word.ljust(width) + "  " + "  ".join(str(getattr(st, s)).rjust(5) for s in names))
        print(f"permutations: {len(rows)}")
        print("sums: " + "  ".join(f"{s}={sums[s]}" for s in names))
        print("cross-check vs closed forms: " +
              ("OK" if all(checked.values()) else "MISMATCH " + str(checked)))
    return 0 if all(checked.values()) else 1


# ---------------------------------------------------------------------------
# qfun and chartable
# ---------------------------------------------------------------------------

def _parse_partition(text):
    try:
        return Partition(int(x) for x in text.split(",") if x.strip())
    except ValueError as e:
        raise UsageError(str(e))


def cmd_qfun(args):
    if args.j is None or args.j < 0:
        raise UsageError("--j is required and must be nonnegative")
    if (args.lam is None) == (args.n is None):
        raise UsageError("give exactly one of --n or --lambda")
    if args.lam is not None:
        if args.k is not None:
            raise UsageError("--k applies only with --n")
        lam = _parse_partition(args.lam)
        if lam.n > 8:
            raise UsageError("cycle types beyond size 8 are not supported")
        params = ["lam", list(lam), "j", args.j]
        compute = lambda: q_symf_type(lam, args.j).to_basis(args.basis).render()
    else:
        if not 0 <= args.n <= 8:
            raise UsageError("--n must be between 0 and 8")
        params = ["n", args.n, "j", args.j, "k", args.k]
        compute = lambda: q_symf(args.n, args.j, args.k).to_basis(args.basis).render()
    directory = args.cache_dir or cachestore.default_cache_dir()
    payload, _ = cachestore.fetch(directory, "qfun", params, args.basis, None, compute)
    if args.output == "json":
        out = {"command": "qfun", "params": params, "basis": args.basis,
               "value": payload}
        print(json.dumps(out, sort_keys=True, separators=(",", ":")))
    else:
        print(payload)
    return 0


def _chartable_text(n):
    js, rows = char_table(n)
    head = ["lambda"] + [f"({n},{j})" for j in js]
    body = [[",".join(map(str, mu))] + [str(v) for v in vals] for mu, vals in rows]
    widths = [max(len(line[i]) for line in [head] + body) for i in range(len(head))]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(line, widths))
             for line in [head] + body]
    return "\n".join(lines)


def cmd_chartable(args):
    if not 1 <= args.n <= 8:
        raise UsageError("n must be between 1 and 8")
    if args.output == "json":
        js, rows = char_table(args.n)
        out = {"command": "chartable", "n": args.n,
               "columns": [[args.n, j] for j in js],
               "rows": [{"lam": list(mu), "values": vals} for mu, vals in rows]}
        print(json.dumps(out, sort_keys=True, separators=(",", ":")))
        return 0
    directory = args.cache_dir or cachestore.default_cache_dir()
    payload, _ = cachestore.fetch(directory, "chartable", ["n", args.n], None,
                                  None, lambda: _chartable_text(args.n))
    print(payload)
    return 0


# ---------------------------------------------------------------------------
# expression expansion
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(\d+|[A-Za-z_]+|[\[\](),+*-])")


def _tokenize(text):
    out, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise UsageError(f"bad character at {text[pos:pos + 8]!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


class _ExprParser:
    """Recursive descent over Q[..], omega(..), basis atoms, + - * and parens."""

    def __init__(self, text):
        self.toks = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self, expect=None):
        tok = self.peek()
        if tok is None or (expect is not None and tok != expect):
            raise UsageError(f"expected {expect or 'more input'}, found {tok!r}")
        self.pos += 1
        return tok

    def parse(self):
        value = self.expr()
        if self.peek() is not None:
            raise UsageError(f"trailing input at {self.peek()!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek() in ("+", "-"):
            if self.take() == "+":
                value = value + self.term()
            else:
                value = value - self.term()
        return value

    def term(self):
        value = self.factor()
        while self.peek() == "*":
            self.take()
            value = value * self.factor()
        return value

    def factor(self):
        tok = self.peek()
        if tok == "-":
            self.take()
            return self.factor() * (-1)
        if tok == "(":
            self.take()
            value = self.expr()
            self.take(")")
            return value
        if tok is None:
            raise UsageError("unexpected end of expression")
        if tok.isdigit():
            self.take()
            return SymF.one("h") * int(tok)
        return self.atom()

    def atom(self):
        name = self.take()
        if name == "omega":
            self.take("(")
            value = self.expr()
            self.take(")")
            return value.omega()
        if name == "Q":
            return self.q_atom()
        if name in ("h", "e", "s", "p", "m"):
            self.take("[")
            lam = self.int_list("]")
            return SymF.single(name, Partition(lam))
        raise UsageError(f"unknown name {name!r}")

    def q_atom(self):
        self.take("[")
        if self.peek() == "(":
            self.take()
            lam = Partition(self.int_list(")"))
            if lam.n > 8:
                raise UsageError("cycle types beyond size 8 are not supported")
            self.take(",")
            j = int(self.take())
            self.take("]")
            return q_symf_type(lam, j)
        nums = self.int_list("]")
        if nums and nums[0] > 8:
            raise UsageError("Q sizes beyond 8 are not supported")
        if len(nums) == 2:
            return q_symf(nums[0], nums[1])
        if len(nums) == 3:
            return q_symf(nums[0], nums[1], nums[2])
        raise UsageError("Q[..] takes n,j or n,j,k or (parts),j")

    def int_list(self, closer):
        out = []
        while self.peek() != closer:
            tok = self.take()
            if not tok.isdigit():
                raise UsageError(f"expected integer, found {tok!r}")
            out.append(int(tok))
            if self.peek() == ",":
                self.take()
        self.take(closer)
        return out


def cmd_expand(args):
    value = _ExprParser(args.expr).parse()
    if args.vars:
        mon = value.to_monomial(args.vars)
        try:
            value = mon.to_symf()
        except ValueError as e:
            raise UsageError(f"--vars {args.vars} cannot carry this expression: {e}")
    rendered = value.to_basis(args.basis).render()
    if args.output == "json":
        out = {"command": "expand", "expr": args.expr, "basis": args.basis,
               "vars": args.vars or None, "value": rendered}
        print(json.dumps(out, sort_keys=True, separators=(",", ":")))
    else:
        print(rendered)
    return 0


# ---------------------------------------------------------------------------
# cache management
# ---------------------------------------------------------------------------

def cmd_cache(args):
    directory = args.cache_dir or cachestore.default_cache_dir()
    if args.action == "list":
        for kind, params, basis, cap, ok in cachestore.list_entries(directory):
            state = "ok" if ok else "corrupt"
            print(f"{kind} params={json.dumps(params)} basis={basis} cap={cap} [{state}]")
        return 0
    if args.action == "clear":
        print(f"removed {cachestore.clear(directory)} entries")
        return 0
    # warm
    cap = 6 if args.mode == "ci" else 8
    count = 0
    for n in range(1, cap + 1):
        cachestore.store(directory, cachestore.CacheEntry(
            "chartable", ["n", n], None, None, _chartable_text(n)))
        count += 1
        for j in range(max(n, 1)):
            payload = q_symf(n, j).to_basis("h").render()
            cachestore.store(directory, cachestore.CacheEntry(
                "qfun", ["n", n, "j", j, "k", None], "h", None, payload))
            count += 1
    print(f"warmed {count} entries into {directory}")
    return 0


# ---------------------------------------------------------------------------
# argument wiring
# ---------------------------------------------------------------------------

def _parser():
    top = argparse.ArgumentParser(
        prog="eulerq",
        description="Exact fixed-excedance quasisymmetric functions: "
                    "statistics, expansions, and machine verification.")
    sub = top.add_subparsers(dest="cmd", required=True)

    def common(p):
        p.add_argument("--output", choices=("text", "json"), default="text")
        p.add_argument("--cache-dir", default="", help="cache directory "
                       "(default: $EULERQ_CACHE_DIR or ~/.cache/eulerq)")

    p = sub.add_parser("stats", help="permutation statistics")
    p.add_argument("perm", nargs="?", help="one line word, e.g. 32541")
    p.add_argument("--n", type=int, help="tabulate all of S_n")
    p.add_argument("--table", help="comma list of statistics to tabulate")
    common(p)
    p.set_defaults(fn=cmd_stats)

    p = sub.add_parser("qfun", help="render one Q function")
    p.add_argument("--n", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--lambda", dest="lam", help="cycle type, e.g. 4,2,1")
    p.add_argument("--basis", choices=("h", "e", "s", "p", "m"), default="h")
    common(p)
    p.set_defaults(fn=cmd_qfun)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suite", help="suite name or 'all'")
    p.add_argument("--n-max", type=int, default=0)
    p.add_argument("--mode", choices=("ci", "extended"), default="ci")
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("chartable", help="character table of single-cycle slices")
    p.add_argument("n", type=int)
    common(p)
    p.set_defaults(fn=cmd_chartable)

    p = sub.add_parser("expand", help="evaluate an expression over Q and bases")
    p.add_argument("expr")
    p.add_argument("basis", nargs="?", default="m",
                   choices=("h", "e", "s", "p", "m"))
    p.add_argument("--vars", type=int, default=0,
                   help="restrict to x_1..x_N before rendering")
    common(p)
    p.set_defaults(fn=cmd_expand)

    p = sub.add_parser("cache", help="manage the table cache")
    p.add_argument("action", choices=("warm", "clear", "list"))
    p.add_argument("--mode", choices=("ci", "extended"), default="ci")
    common(p)
    p.set_defaults(fn=cmd_cache)

    return top


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
