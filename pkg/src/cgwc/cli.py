"""Command line front end.

Instance files are plain text::

    # comment
    n m
    u v w        (m lines)
    spec x1 x2 ...
    k b

Every command prints one JSON document with sorted keys.  Exit status is
0 for YES (and for commands without a yes/no answer), 1 for NO, 2 for any
error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from importlib import resources
from typing import Optional, Sequence

from .connectivity import global_min_cut, min_separator
from .decomposition import GoodSeparation, find_good_separation
from .graph import (
    INF,
    BoundariedGraph,
    CgwcError,
    ConnSpec,
    GraphError,
    WeightedGraph,
    format_value,
    is_properly_boundaried,
)

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2


class ParseError(CgwcError):
    def __init__(self, msg: str, line: int, col: int = 1):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Instance:
    graph: WeightedGraph
    spec: Optional[ConnSpec]
    k: Optional[int]


# -- parsing ------------------------------------------------------------------

def _tokens(text: str):
    """(line number, [(column, token), ...]) for each non-blank line."""
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = []
        col = 0
        for part in line.split():
            col = line.index(part, col)
            toks.append((col + 1, part))
            col += len(part)
        if toks:
            yield no, toks


def _int(tok, no: int, what: str, lo: int = 0) -> int:
    col, s = tok
    try:
        v = int(s)
    except ValueError:
        raise ParseError(f"expected integer {what}, got {s!r}", no, col) from None
    if v < lo:
        raise ParseError(f"{what} must be >= {lo}, got {v}", no, col)
    return v


def parse_instance(text: str, require_problem: bool = True) -> Instance:
    """Parse the instance format.  With ``require_problem=False`` the spec
    and budget lines may be omitted (graph-only commands)."""
    lines = list(_tokens(text))
    if not lines:
        raise ParseError("empty instance", 1)
    no, head = lines[0]
    if len(head) != 2:
        raise ParseError("header must be 'n m'", no, head[0][0])
    n = _int(head[0], no, "vertex count")
    m = _int(head[1], no, "edge count")
    if len(lines) < 1 + m:
        raise ParseError(f"expected {m} edge lines", lines[-1][0] + 1)
    edges = []
    seen = {}
    for no, toks in lines[1:1 + m]:
        if len(toks) != 3:
            raise ParseError("edge line must be 'u v w'", no, toks[0][0])
        u = _int(toks[0], no, "vertex")
        v = _int(toks[1], no, "vertex")
        w = _int(toks[2], no, "weight", lo=1)
        for tok, x in ((toks[0], u), (toks[1], v)):
            if x >= n:
                raise ParseError(f"vertex {x} out of range 0..{n - 1}", no, tok[0])
        if u == v:
            raise ParseError(f"loop at vertex {u}", no, toks[0][0])
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key} (first on line {seen[key]})", no, toks[0][0])
        seen[key] = no
        edges.append((u, v, w))
    graph = WeightedGraph.from_edges(n, edges)

    spec = k = None
    for no, toks in lines[1 + m:]:
        col, key = toks[0]
        if key == "spec":
            if spec is not None:
                raise ParseError("second spec line", no, col)
            vals = []
            for tcol, s in toks[1:]:
                if s == "inf":
                    vals.append(INF)
                else:
                    vals.append(_int((tcol, s), no, "connectivity", lo=1))
            for (tcol, _), a, b in zip(toks[2:], vals, vals[1:]):
                if a > b:
                    raise ParseError("spec must be sorted nondecreasing", no, tcol)
            spec = ConnSpec(tuple(vals))
        elif key == "k":
            if k is not None:
                raise ParseError("second budget line", no, col)
            if len(toks) != 2:
                raise ParseError("budget line must be 'k b'", no, col)
            k = _int(toks[1], no, "budget")
        else:
            raise ParseError(f"unexpected line starting with {key!r}", no, col)
    if require_problem:
        last = lines[-1][0]
        if spec is None:
            raise ParseError("missing spec line", last + 1)
        if k is None:
            raise ParseError("missing budget line", last + 1)
    return Instance(graph, spec, k)


def render(inst: Instance) -> str:
    out = [f"{inst.graph.n} {inst.graph.m}"]
    out += [f"{u} {v} {w}" for u, v, w in inst.graph.edges]
    if inst.spec is not None:
        out.append(" ".join(["spec", *(format_value(x) for x in inst.spec)]))
    if inst.k is not None:
        out.append(f"k {inst.k}")
    return "\n".join(out) + "\n"


# -- config -------------------------------------------------------------------

_CONFIG_KEYS = {
    "p": "p_const",
    "q": "q_const",
    "family_cap": "family_cap",
    "labeled_cap": "labeled_cap",
    "force_bruteforce_at": "force_bruteforce_at",
    "oracle_check": "oracle_check",
    "seed": "seed",
}


def _config_value(key: str, s: str):
    s = s.strip()
    if key == "oracle_check":
        low = s.lower()
        if low in {"1", "true", "yes", "on"}:
            return True
        if low in {"0", "false", "no", "off"}:
            return False
        raise CgwcError(f"oracle_check must be a boolean, got {s!r}")
    if s == "inf" and key in {"p", "q", "force_bruteforce_at"}:
        return INF
    try:
        v = int(s)
    except ValueError:
        raise CgwcError(f"config value for {key} must be an integer, got {s!r}") from None
    if v < (0 if key == "seed" else 1):
        raise CgwcError(f"config value for {key} out of range: {v}")
    return v


def parse_config(text: str) -> dict:
    """key=value lines; '#' comments.  Returns RecursionConfig keyword args."""
    out = {}
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError("config line must be key=value", no)
        key, val = (s.strip() for s in line.split("=", 1))
        if key not in _CONFIG_KEYS:
            raise ParseError(f"unknown config key {key!r}", no)
        out[_CONFIG_KEYS[key]] = _config_value(key, val)
    return out


def _build_config(args):
    from .recursive import RecursionConfig

    kw = {}
    if getattr(args, "config", None):
        kw.update(parse_config(_read_text(args.config)))
    for flag, key in (("p", "p"), ("q", "q"), ("family_cap", "family_cap"),
                      ("labeled_cap", "labeled_cap"), ("bruteforce_at", "force_bruteforce_at"),
                      ("seed", "seed")):
        val = getattr(args, flag, None)
        if val is not None:
            kw[_CONFIG_KEYS[key]] = _config_value(key, val)
    if getattr(args, "oracle_check", False):
        kw["oracle_check"] = True
    return RecursionConfig(**kw)


# -- output helpers ------------------------------------------------------------

def _num(x):
    return "inf" if x == INF else int(x)


def _edges_out(g: WeightedGraph, edges) -> list:
    return [[u, v, g.weight(u, v)] for u, v in sorted(edges)]


def _components_out(comps) -> list:
    return [{"connectivity": _num(c), "vertices": list(v)} for v, c in comps]


def _solution_doc(g: WeightedGraph, sol) -> dict:
    if sol is None:
        return {"answer": "NO"}
    return {
        "answer": "YES",
        "components": _components_out(sol.components),
        "weight": int(sol.total_weight),
        "witness": _edges_out(g, sol.edges),
    }


def _vertex_list(s: str) -> list[int]:
    try:
        return [int(x) for x in s.split(",") if x.strip()]
    except ValueError:
        raise CgwcError(f"bad vertex list {s!r}; expected comma-separated ids") from None


def _read_text(path: str) -> str:
    """File contents; ``fixture:<name>`` reads a bundled file (``.txt`` implied)."""
    if path.startswith("fixture:"):
        name = path[len("fixture:"):]
        if "." not in name:
            name += ".txt"
        return resources.files("cgwc").joinpath("fixtures", name).read_text()
    with open(path) as fh:
        return fh.read()


def _load(path: str, require_problem: bool = True) -> Instance:
    return parse_instance(_read_text(path), require_problem)


def fixture_names() -> list[str]:
    d = resources.files("cgwc").joinpath("fixtures")
    return sorted(p.name[:-4] for p in d.iterdir() if p.name.endswith(".txt"))


# -- commands ------------------------------------------------------------------

def cmd_solve(args) -> tuple[dict, int]:
    from .general import solve_cgwc

    inst = _load(args.instance)
    cfg = _build_config(args)
    sol = solve_cgwc(inst.graph, inst.spec, inst.k, cfg)
    if cfg.oracle_check:
        from .oracle import oracle_solve

        if (oracle_solve(inst.graph, None, inst.spec, inst.k) is None) != (sol is None):
            raise CgwcError("oracle cross-check disagrees with the solver")
    doc = _solution_doc(inst.graph, sol)
    doc["config"] = cfg.echo(inst.k)
    return doc, EXIT_YES if sol is not None else EXIT_NO


def cmd_oracle(args) -> tuple[dict, int]:
    from .oracle import oracle_solve

    inst = _load(args.instance)
    sol = oracle_solve(inst.graph, None, inst.spec, inst.k)
    return _solution_doc(inst.graph, sol), EXIT_YES if sol is not None else EXIT_NO


def cmd_mincut(args) -> tuple[dict, int]:
    g = _load(args.instance, False).graph
    res = global_min_cut(g)
    doc = {"connectivity": _num(res.weight)}
    if res.partition is not None:
        doc["partition"] = [list(res.partition[0]), list(res.partition[1])]
        doc["cut"] = _edges_out(g, res.edges)
    return doc, EXIT_YES


def cmd_sep(args) -> tuple[dict, int]:
    g = _load(args.instance, False).graph
    res = min_separator(g, _vertex_list(args.a), _vertex_list(args.b))
    return {
        "cut": _edges_out(g, res.edges),
        "partition": [list(res.partition[0]), list(res.partition[1])],
        "weight": _num(res.weight),
    }, EXIT_YES


def cmd_goodsep(args) -> tuple[dict, int]:
    g = _load(args.instance, False).graph
    q = _config_value("q", args.q)
    p = _config_value("p", args.p)
    v = find_good_separation(g, q, p, seed=args.seed or 0)
    if isinstance(v, GoodSeparation):
        return {"a": list(v.a), "answer": "SEPARATION", "b": list(v.b),
                "weight": int(v.weight)}, EXIT_YES
    return {"answer": "UNBREAKABLE", "certified": bool(v.certified), "p": _num(v.p),
            "q": _num(v.q_out)}, EXIT_YES


def cmd_cutreduce(args) -> tuple[dict, int]:
    from .mimick import reduce_with_blocks

    g = _load(args.instance, False).graph
    h = BoundariedGraph(g, tuple(_vertex_list(args.boundary)))
    if not is_properly_boundaried(h):
        raise GraphError("boundary must be independent and meet every component")
    p = _config_value("p", args.p)
    red, prod = reduce_with_blocks(h, p)
    return {
        "blocks": [list(b) for b in prod.blocks],
        "boundary": list(red.boundary),
        "graph": render(Instance(red.graph, None, None)).splitlines(),
    }, EXIT_YES


def cmd_family(args) -> tuple[dict, int]:
    from .mimick import enumerate_family

    members = enumerate_family(args.r, args.s, args.cap, args.labeled_cap)
    return {
        "count": len(members),
        "members": [{"edges": [list(e) for e in m.graph.edges], "n": m.graph.n}
                    for m in members],
        "r": args.r,
        "s": args.s,
    }, EXIT_YES


def cmd_render(args) -> tuple[str, int]:
    return render(_load(args.instance, False)), EXIT_YES


def cmd_selftest(args) -> tuple[dict, int]:
    from .selftest import run_selftest

    results = run_selftest()
    ok = all(r["passed"] for r in results)
    return {"checks": results, "passed": ok}, EXIT_YES if ok else EXIT_NO


_HINTS = {
    "FamilyCapExceeded": "pass --family-cap/--labeled-cap (or set family_cap/labeled_cap in the config)",
    "BudgetExceeded": "the oracle is exhaustive; use 'solve' or shrink the instance",
    "SearchTooLarge": "lower q so the recursion splits the graph, or shrink the instance",
    "CapExceeded": "lower q or p",
}


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cgwc", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="cmd", required=True)

    def with_instance(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("instance", help="instance file, or fixture:<name>")
        sp.add_argument("--timings", action="store_true", help="include wall-clock timings")
        sp.set_defaults(fn=fn)
        return sp

    sp = with_instance("solve", cmd_solve, "solve an instance")
    sp.add_argument("--config", help="key=value config file")
    sp.add_argument("--p")
    sp.add_argument("--q")
    sp.add_argument("--family-cap", dest="family_cap")
    sp.add_argument("--labeled-cap", dest="labeled_cap")
    sp.add_argument("--bruteforce-at", dest="bruteforce_at")
    sp.add_argument("--seed")
    sp.add_argument("--oracle-check", action="store_true")

    with_instance("oracle", cmd_oracle, "exhaustive reference answer")
    with_instance("mincut", cmd_mincut, "global minimum cut")
    with_instance("render", cmd_render, "print the instance in canonical form")
    sp = with_instance("sep", cmd_sep, "minimum (A,B)-separator")
    sp.add_argument("--a", required=True, help="comma-separated vertices")
    sp.add_argument("--b", required=True, help="comma-separated vertices")
    sp = with_instance("goodsep", cmd_goodsep, "good separation or unbreakability")
    sp.add_argument("q")
    sp.add_argument("p")
    sp.add_argument("--seed", type=int, default=0)
    sp = with_instance("cutreduce", cmd_cutreduce, "cut-reducing replacement")
    sp.add_argument("p")
    sp.add_argument("--boundary", required=True, help="comma-separated boundary vertices")

    sp = sub.add_parser("family", help="list the completion family")
    sp.add_argument("r", type=int)
    sp.add_argument("s", type=int)
    sp.add_argument("--cap", type=int, default=6)
    sp.add_argument("--labeled-cap", dest="labeled_cap", type=int, default=1 << 18)
    sp.add_argument("--timings", action="store_true")
    sp.set_defaults(fn=cmd_family)

    sp = sub.add_parser("selftest", help="quick correctness checks")
    sp.add_argument("--timings", action="store_true")
    sp.set_defaults(fn=cmd_selftest)
    return ap


def run_command(argv: Sequence[str]) -> tuple[str, int]:
    """Run one command; returns (output text, exit status)."""
    ap = _parser()
    try:
        args = ap.parse_args(list(argv))
    except SystemExit as e:
        return "", EXIT_ERROR if e.code else EXIT_YES
    t0 = time.perf_counter()
    try:
        doc, code = args.fn(args)
    except (CgwcError, OSError) as e:
        err = {"command": args.cmd, "error": str(e), "kind": type(e).__name__}
        hint = _HINTS.get(type(e).__name__)
        if hint:
            err["hint"] = hint
        return json.dumps(err, sort_keys=True, indent=1) + "\n", EXIT_ERROR
    if isinstance(doc, str):
        return doc, code
    doc["command"] = args.cmd
    if args.timings:
        doc["timings"] = {"total_seconds": round(time.perf_counter() - t0, 6)}
    return json.dumps(doc, sort_keys=True, indent=1) + "\n", code


def main(argv: Optional[Sequence[str]] = None) -> int:
    out, code = run_command(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
