"""Command line: ``saxlgraph info | saxl | construct | reproduce | invariants``.

Exit codes: 0 success (all claims pass), 1 a reproduction claim failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from pathlib import Path

from . import __version__
from .actions import (DEFAULT_DOMAIN_LIMIT, DomainLimitError, EnumerationLimitError, coset_action,
                      minimal_block_systems, natural_action)
from .constructions import FAMILIES, construct
from .invariants import DEFAULT_BUDGET_MS, compute_invariants
from .io import GroupFileError, dumps_json, format_group_file, read_group_file, read_subgroup_file, write_adjacency
from .perm import Permutation
from .probability import probability_report
from .reproduce import SUITES, run_suite
from .saxl import build_saxl

SCHEMA = 1


class UsageError(Exception):
    pass


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="print JSON instead of text")
    p.add_argument("--seed", type=int, default=0, help="seed for randomised steps (recorded in reports)")
    p.add_argument("--budget-ms", type=float, default=DEFAULT_BUDGET_MS, help="time budget per hard invariant")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                   help="accepted for compatibility; computations run single-threaded and are deterministic")
    p.add_argument("--domain-limit", type=int, default=DEFAULT_DOMAIN_LIMIT, help="largest coset domain to build")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="saxlgraph", description="Saxl graphs of base-two permutation groups")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="degree, order, transitivity and block systems of a group file")
    p.add_argument("group_file")
    _common(p)

    for name, text in (("saxl", "Saxl graph report for a group acting on points or on cosets"),
                       ("invariants", "graph invariants with certificates")):
        p = sub.add_parser(name, help=text)
        p.add_argument("group_file")
        p.add_argument("subgroup_file", nargs="?", help="subgroup file; omit for the natural action")
        p.add_argument("--natural", action="store_true", help="use the natural action (the default without a subgroup)")
        p.add_argument("--point", type=int, default=1, help="base point of the natural action (1-indexed)")
        p.add_argument("--adjacency", metavar="FILE", help="write the adjacency list (1-indexed) to FILE")
        p.add_argument("--hard", action="store_true", help="compute the hard invariants even when n > 200")
        p.add_argument("--timing", action="store_true", help="include wall-clock timings (reports then vary per run)")
        _common(p)

    p = sub.add_parser("construct", help="build a named family instance")
    p.add_argument("family", nargs="?")
    p.add_argument("params", nargs="*", help="family parameters (integers or strings)")
    p.add_argument("--list", action="store_true", help="list the families")
    p.add_argument("--out", metavar="DIR", help="write <label>.grp and <label>.json into DIR")
    _common(p)

    p = sub.add_parser("reproduce", help="run a reproduction suite")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.add_argument("--slow", action="store_true", help="include the slow claims")
    _common(p)
    return parser


def _emit(args, payload: dict, text_lines) -> None:
    if args.json:
        print(dumps_json(payload))
    else:
        for line in text_lines:
            print(line)


# -- commands -------------------------------------------------------------------------------


def cmd_info(args) -> int:
    group, gf = read_group_file(args.group_file)
    transitive = group.is_transitive()
    info = {"schema": SCHEMA, "name": gf.name, "degree": group.degree, "order": group.order,
            "transitive": transitive, "orbits": len(group.orbits())}
    if transitive and group.degree > 1:
        systems = minimal_block_systems(natural_action(group))
        info["primitive"] = not systems
        info["minimal_block_systems"] = [{"block_size": len(s[0]), "blocks": len(s),
                                          "blocks_1indexed": [[x + 1 for x in b] for b in s]} for s in systems]
    lines = [f"degree      {group.degree}", f"order       {group.order}", f"transitive  {transitive}"]
    if "primitive" in info:
        lines.append(f"primitive   {info['primitive']}")
        for s in info["minimal_block_systems"]:
            lines.append(f"blocks      {s['blocks']} of size {s['block_size']}")
    _emit(args, info, lines)
    return 0


def _load_action(args):
    group, gf = read_group_file(args.group_file)
    if args.subgroup_file:
        sub, _, sf = read_subgroup_file(args.subgroup_file, group)
        act = coset_action(group, sub, domain_limit=args.domain_limit, name=f"{gf.name or 'G'}/{sf.name or 'H'}")
        desc = {"group_file": str(args.group_file), "subgroup_file": str(args.subgroup_file), "action": "cosets",
                "group_order": group.order, "subgroup_order": sub.order}
    else:
        if not 1 <= args.point <= group.degree:
            raise UsageError(f"--point must lie in 1..{group.degree}")
        if not group.is_transitive():
            raise UsageError("the natural action is not transitive")
        act = natural_action(group, args.point - 1, name=gf.name or "G")
        desc = {"group_file": str(args.group_file), "action": "natural", "point": args.point,
                "group_order": group.order}
    return act, desc


def _run_report(args, with_invariants: bool) -> tuple[dict, list[str]]:
    t0 = time.perf_counter()
    act, desc = _load_action(args)
    if not act.faithful:
        raise UsageError("the action is not faithful")
    report = {"schema": SCHEMA, "version": __version__, "seed": args.seed, "instance": desc}
    timing = {"action": time.perf_counter() - t0}
    graph = build_saxl(act, materialise=False)
    prof = graph.base_profile
    report["verdict"] = prof.base_size_verdict
    lines = [f"n           {graph.n}", f"|H|         {graph.stabiliser_order}", f"verdict     {prof.base_size_verdict}"]
    if prof.regular:
        report["saxl"] = {"n": graph.n, "r": graph.r, "valency": graph.valency, "complete": True}
        lines.append("Sigma is complete (regular action)")
        return report, lines
    if not prof.has_base_two:
        report["saxl"] = {"n": graph.n, "r": 0, "valency": 0}
        lines.append("no regular suborbit: the Saxl graph is empty")
        return report, lines
    report["saxl"] = graph.report()
    lines += [f"r           {graph.r}", f"valency     {graph.valency}"]
    if args.adjacency:
        write_adjacency(graph.adjacency_lines(), args.adjacency)
    timing["saxl"] = time.perf_counter() - t0
    prob = probability_report(graph)
    report["probability"] = prob.to_json()
    lines += [f"Q(G,2)      {report['probability']['q2']}  ({report['probability']['q2_3dp']})",
              f"Q-hat       {report['probability']['qhat']}  ({report['probability']['qhat_3dp']})",
              f"t           {prob.t}", f"star        {prob.star}"]
    timing["probability"] = time.perf_counter() - t0
    hard = graph.n <= 200 or args.hard
    if hard and graph.n <= 50_000:
        graph.materialise()
    inv = compute_invariants(graph, budget_ms=args.budget_ms, seed=args.seed,
                             hard=hard if with_invariants else False)
    report["invariants"] = inv.to_json()
    diam = report["invariants"]["diameter"]
    lines += [f"components  {inv.components}", f"diameter    {'inf' if diam is None else diam}",
              f"eulerian    {inv.eulerian}", f"common nbr  {inv.common_neighbour.holds}"]
    for key in ("clique", "independence", "chromatic", "total_domination", "max_minimal_base"):
        b = getattr(inv, key)
        if b is not None:
            lines.append(f"{key:<18}{b.value if b.exact else f'[{b.lower}, {b.upper}]'}")
    if inv.hamiltonian is not None:
        lines.append(f"hamiltonian {inv.hamiltonian.found}")
    timing["invariants"] = time.perf_counter() - t0
    if args.timing:
        report["timing_s"] = {k: round(v, 3) for k, v in timing.items()}
    return report, lines


def cmd_saxl(args) -> int:
    report, lines = _run_report(args, with_invariants=True)
    _emit(args, report, lines)
    return 0


def cmd_invariants(args) -> int:
    report, lines = _run_report(args, with_invariants=True)
    if args.json:
        print(dumps_json({"schema": SCHEMA, "seed": args.seed, "invariants": report.get("invariants"),
                          "verdict": report["verdict"]}))
    else:
        for line in lines:
            print(line)
    return 0


def _param(text: str):
    try:
        return int(text)
    except ValueError:
        return text


def cmd_construct(args) -> int:
    if args.list or not args.family:
        if args.json:
            print(dumps_json({name: doc for name, (_, doc) in FAMILIES.items()}))
        else:
            for name, (_, doc) in FAMILIES.items():
                print(f"{name:<26}{doc}")
        return 0
    try:
        fi = construct(args.family, *[_param(p) for p in args.params])
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    except TypeError as exc:
        raise UsageError(f"{args.family}: {exc}") from None
    act = fi.action
    sidecar = {"schema": SCHEMA, "family": fi.family, "params": fi.params, "n": act.n, "order": act.order,
               "stabiliser_order": act.stabiliser_order, "point": act.alpha + 1,
               "expected_valency": fi.expected_valency, "expected_r": fi.expected_r,
               "expected_graph": None if fi.expected is None else {"kind": fi.expected.kind,
                                                                   "name": fi.expected.name}}
    for k, v in fi.notes.items():
        if isinstance(v, (int, str, list, dict)):
            sidecar.setdefault("notes", {})[k] = v
    text = format_group_file([Permutation(g, check=False) for g in act.gen_images], act.n,
                             {"name": fi.label, "order": act.order},
                             comments=[f"{fi.label} acting on {act.n} points"], image_notation=act.n > 200)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        stem = "".join(c if c.isalnum() or c in "-_" else "_" for c in fi.label).strip("_")
        (out / f"{stem}.grp").write_text(text, encoding="utf-8")
        (out / f"{stem}.json").write_text(dumps_json(sidecar) + "\n", encoding="utf-8")
        print(out / f"{stem}.grp")
    elif args.json:
        sidecar["group_file"] = text
        print(dumps_json(sidecar))
    else:
        sys.stdout.write(text)
    return 0


def cmd_reproduce(args) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    claims = []
    for name in names:
        claims += run_suite(name, slow=args.slow, seed=args.seed, budget_ms=args.budget_ms)
    failed = [c for c in claims if not c.passed]
    if args.json:
        print(dumps_json({"schema": SCHEMA, "suites": names, "slow": args.slow, "seed": args.seed,
                          "passed": len(claims) - len(failed), "failed": len(failed),
                          "claims": [dict(c.to_json(), seconds=None) for c in claims]}))
    else:
        width = max((len(c.name) for c in claims), default=10)
        for c in claims:
            status = "PASS" if c.passed else "FAIL"
            print(f"{status}  {c.suite:<15}{c.name:<{width}}  expected {c.to_json()['expected']}  "
                  f"computed {c.to_json()['computed']}")
        print(f"{len(claims) - len(failed)} passed, {len(failed)} failed")
    return 1 if failed else 0


COMMANDS = {"info": cmd_info, "saxl": cmd_saxl, "invariants": cmd_invariants, "construct": cmd_construct,
            "reproduce": cmd_reproduce}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (GroupFileError, UsageError, DomainLimitError, EnumerationLimitError, ValueError, FileNotFoundError) as exc:
        print(f"saxlgraph: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
