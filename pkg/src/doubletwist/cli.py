"""Command-line front end.

Subcommands: ``form``, ``embed``, ``classify``, ``alex``, ``survey``.
Exit codes are a stable contract: 0 success (Found for ``embed``),
1 NoneExists, 2 usage or parameter error, 3 budget exhausted (Unknown).

Exhaustive non-embedding results are the expensive asset, so ``embed``
outcomes are cached in a JSON file keyed by a content hash of the form,
at ``$CONCORDANCE_CACHE`` or ``~/.config/doubletwist/embed_cache.json``
(flag ``--cache`` overrides both).  NoneExists and Found entries are
budget-independent facts; Unknown entries are superseded by any run
with a larger budget.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys

from . import __version__, embed, forms, knotalg, pipeline

EXIT_OK = 0
EXIT_NONE_EXISTS = 1
EXIT_USAGE = 2
EXIT_UNKNOWN = 3


def default_cache_path():
    env = os.environ.get("CONCORDANCE_CACHE")
    if env:
        return env
    base = os.environ.get("XDG_CONFIG_HOME", os.path.expanduser("~/.config"))
    return os.path.join(base, "doubletwist", "embed_cache.json")


def form_hash(g):
    return hashlib.sha256(g.canonical_bytes()).hexdigest()


class EmbedCache:
    """Append-friendly JSON cache of search outcomes, with file locking."""

    def __init__(self, path):
        self.path = path

    def _load(self):
        try:
            with open(self.path) as fh:
                data = json.load(fh)
        except (OSError, ValueError):
            return {"schema": 1, "entries": {}}
        if data.get("schema") != 1:
            return {"schema": 1, "entries": {}}
        return data

    def lookup(self, g, budget):
        entry = self._load()["entries"].get(form_hash(g))
        if entry is None:
            return None
        status = entry["outcome"]["status"]
        if status == embed.UNKNOWN:
            cached_budget = int(entry["budget_used"])
            if budget is not None and cached_budget < budget:
                return None  # a bigger run supersedes an Unknown
        outcome = entry["outcome"]
        witness = (embed.EmbeddingWitness.from_json(outcome["witness"])
                   if outcome["witness"] else None)
        return embed.SearchOutcome(status, witness,
                                   int(outcome["nodes_explored"]),
                                   outcome["budget_exhausted"])

    def store(self, g, outcome, budget):
        from filelock import FileLock

        os.makedirs(os.path.dirname(self.path) or ".", exist_ok=True)
        with FileLock(self.path + ".lock"):
            data = self._load()
            data["entries"][form_hash(g)] = {
                "outcome": outcome.to_json(),
                "budget_used": str(budget if budget is not None else 0),
                "tool_version": __version__,
            }
            tmp = self.path + ".tmp"
            with open(tmp, "w") as fh:
                json.dump(data, fh, sort_keys=True)
            os.replace(tmp, self.path)


def _parse_range(text):
    """'a..b' inclusive, or a single integer."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _parse_list(text):
    return [int(x) for x in text.split(",")]


def build_parser():
    ap = argparse.ArgumentParser(
        prog="doubletwist",
        description="Rational-concordance obstructions for double twist knots")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p_form = sub.add_parser("form", help="print the intersection form Q_p(m,n)")
    p_form.add_argument("-m", type=int, required=True)
    p_form.add_argument("-n", type=int, required=True)
    p_form.add_argument("-p", type=int, required=True)
    grp = p_form.add_mutually_exclusive_group()
    grp.add_argument("--json", action="store_true")
    grp.add_argument("--pretty", action="store_true")

    p_embed = sub.add_parser("embed", help="decide lattice embeddability")
    p_embed.add_argument("-m", type=int, required=True)
    p_embed.add_argument("-n", type=int, required=True)
    p_embed.add_argument("-p", type=int, required=True)
    p_embed.add_argument("-N", type=int, default=1)
    p_embed.add_argument("--budget", type=int, default=embed.DEFAULT_NODE_BUDGET)
    p_embed.add_argument("--sequential", action="store_true",
                         help="deterministic single-branch mode (the default "
                              "search is already sequential)")
    p_embed.add_argument("--search", action="store_true",
                         help="always search, even when an explicit witness "
                              "construction applies")
    p_embed.add_argument("--cache", default=None, help="cache file override")
    p_embed.add_argument("--no-cache", action="store_true")

    p_cls = sub.add_parser("classify", help="rational concordance class")
    p_cls.add_argument("-m", type=int, required=True)
    p_cls.add_argument("-n", type=int, required=True)

    p_alex = sub.add_parser("alex", help="Alexander polynomial / Fox-Milnor")
    p_alex.add_argument("-m", type=int, required=True)
    p_alex.add_argument("-n", type=int, required=True)
    p_alex.add_argument("--fm", type=int, default=None, metavar="C",
                        help="search a Fox-Milnor factorization of Delta(t^C)")

    p_sur = sub.add_parser("survey", help="batch reports over a grid")
    p_sur.add_argument("-m", required=True, help="range a..b or single value")
    p_sur.add_argument("-n", required=True, help="range a..b or single value")
    p_sur.add_argument("-p", required=True, help="comma-separated list")
    p_sur.add_argument("-N", type=int, default=1)
    p_sur.add_argument("--budget", type=int, default=embed.DEFAULT_NODE_BUDGET)
    p_sur.add_argument("--out", default=None, help="JSON-lines output file")

    return ap


def cmd_form(args):
    g = forms.intersection_form(args.m, args.n, args.p)
    if args.json:
        print(json.dumps(g.to_json(), sort_keys=True))
    else:
        width = max(len(str(x)) for row in g.entries for x in row)
        for row in g.entries:
            print(" ".join(f"{x:>{width}}" for x in row))
    return EXIT_OK


def cmd_embed(args):
    if args.m * args.n >= 0:
        raise ValueError("embed requires mixed signs: m*n < 0")
    if args.N < 1:
        raise ValueError("N must be >= 1")
    mp_, np_, _, _ = pipeline.normalize(args.m, args.n)
    base = forms.intersection_form(mp_, np_, args.p)
    g = forms.direct_sum([base] * args.N) if args.N > 1 else base

    cache = None if args.no_cache else EmbedCache(args.cache or default_cache_path())
    outcome = cache.lookup(g, args.budget) if cache else None
    if outcome is None:
        witness = None if args.search else pipeline._explicit_witness(mp_, np_, args.p)
        if witness is not None:
            if args.N > 1:
                witness = pipeline._direct_sum_witness(witness, args.N)
            assert embed.verify_witness(g, witness)
            outcome = embed.SearchOutcome(embed.FOUND, witness, 0, False)
        else:
            outcome = embed.search_embedding(g, node_budget=args.budget)
        if cache:
            cache.store(g, outcome, args.budget)

    payload = outcome.to_json()
    payload["schema"] = 1
    payload["form_hash"] = form_hash(g)
    if not pipeline.is_odd_prime_power(args.p):
        payload["warning"] = "p is not an odd prime power"
    print(json.dumps(payload, sort_keys=True))
    return {embed.FOUND: EXIT_OK,
            embed.NONE_EXISTS: EXIT_NONE_EXISTS,
            embed.UNKNOWN: EXIT_UNKNOWN}[outcome.status]


def cmd_classify(args):
    print(pipeline.classify(args.m, args.n))
    return EXIT_OK


def cmd_alex(args):
    delta = knotalg.alexander(knotalg.DoubleTwist(args.m, args.n))
    out = {"schema": 1, "alexander": delta.to_json()}
    if args.fm is not None:
        fac = knotalg.fox_milnor(delta, args.fm)
        if fac is None:
            out["fox_milnor"] = None
        else:
            out["fox_milnor"] = {
                "f": fac.f.to_json(),
                "unit_sign": fac.unit_sign,
                "unit_exp": fac.unit_exp,
                "complexity": fac.complexity,
                "remultiplies": fac.remultiply() == delta.compose_power(args.fm),
            }
    print(json.dumps(out, sort_keys=True))
    return EXIT_OK


def cmd_survey(args):
    reports = pipeline.survey(_parse_range(args.m), _parse_range(args.n),
                              _parse_list(args.p), budget=args.budget, N=args.N)
    lines = [json.dumps(r.to_json(), sort_keys=True) for r in reports]
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("\n".join(lines) + ("\n" if lines else ""))
    else:
        for line in lines:
            print(line)
    return EXIT_OK


_COMMANDS = {
    "form": cmd_form,
    "embed": cmd_embed,
    "classify": cmd_classify,
    "alex": cmd_alex,
    "survey": cmd_survey,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; keep --version/-h at 0
        return exc.code
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
