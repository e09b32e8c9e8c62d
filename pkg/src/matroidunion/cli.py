"""Command-line entry point.

Exit codes: 0 when the verdict is true/pass, 1 when it is false/fail,
2 for usage or schema errors.  ``--json`` switches to a canonical JSON
report (optionally written to a file); payloads are byte-identical across
runs unless ``--timing`` is given.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable

from .axioms import DEFAULT_CAP, check_matroid
from .core import Matroid, make_graphic
from .descriptors import SchemaError, canonical_json, load_json, matroid_from_descriptor, parse_graph
from .infinitary import (
    DEMO_WINDOWS,
    SymbolicFamily,
    certify_growth_chain,
    demo_growth_chain,
    demo_window_monotone,
    family_from_json,
    finitarization_agrees,
    finitarize,
    ladder_demo,
    make_Mk,
    nearly_finitary_gap,
    truncation_family,
)
from .packing import cover_independent, forest_cover, pack_bases, tree_pack
from .union import Representation, reachability, union_base, union_membership

WORKERS_ENV = "MATROIDUNION_WORKERS"
EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class InstanceFile:
    path: str
    kind: str  # "matroid" | "graph" | "family"
    raw: Any
    obj: Any


def load_instance(path: str) -> InstanceFile:
    raw = load_json(path)
    if isinstance(raw, dict) and raw.get("type") == "family":
        return InstanceFile(path, "family", raw, family_from_json(raw))
    if isinstance(raw, dict) and "type" not in raw and "edges" in raw:
        vertices, edges = parse_graph(raw)
        return InstanceFile(path, "graph", raw, (vertices, edges))
    return InstanceFile(path, "matroid", raw, matroid_from_descriptor(raw))


def _matroid(inst: InstanceFile) -> Matroid:
    if inst.kind == "graph":
        return make_graphic(*inst.obj)
    if inst.kind != "matroid":
        raise UsageError(f"{inst.path}: expected a matroid descriptor, got a {inst.kind}")
    return inst.obj


def _subset(M: Matroid, text: str | None, flag: str) -> int:
    if text is None or text.strip() == "":
        return 0
    names = [t.strip() for t in text.split(",") if t.strip()]
    for e in names:
        if e not in M.ground:
            raise UsageError(f"{flag}: element {e!r} not in ground set")
    return M.ground.mask(names)


def _element(M: Matroid, name: str, flag: str) -> int:
    if name not in M.ground:
        raise UsageError(f"{flag}: element {name!r} not in ground set")
    return M.ground.index(name)


# -- commands ----------------------------------------------------------------
# each returns (verdict, payload, human summary lines)

Result = tuple[bool, dict, list[str]]


def cmd_check_axioms(args, inputs) -> Result:
    inst = load_instance(args.descriptor)
    inputs.append(inst.raw)
    M = _matroid(inst)
    rep = check_matroid(M, cap=args.cap, seed=args.seed, max_x=None if args.full_c else 3)
    payload = rep.to_json()
    lines = [f"{k}: {v}" for k, v in payload.items() if k not in ("witness", "seed")]
    if payload["witness"]:
        lines.append(f"witness: {json.dumps(payload['witness'], sort_keys=True)}")
    return rep.ok, payload, lines


def _pair(args, inputs) -> tuple[Matroid, Matroid]:
    a, b = load_instance(args.a), load_instance(args.b)
    inputs.extend([a.raw, b.raw])
    M1, M2 = _matroid(a), _matroid(b)
    if not M1.ground.same_elements(M2.ground) or M1.n != M2.n:
        raise UsageError("--a and --b must share a ground set")
    return M1, M2


def cmd_union(args, inputs) -> Result:
    M1, M2 = _pair(args, inputs)
    X = _subset(M1, args.set, "--set")
    rep = union_membership(M1, M2, X)
    payload: dict = {"set": sorted(M1.names(X)), "member": rep is not None}
    payload["rep"] = rep.to_json(M1.ground) if rep is not None else None
    line = "member" if rep else "not a member"
    if rep:
        line += f": I1={payload['rep']['I1']} I2={payload['rep']['I2']}"
    return rep is not None, payload, [line]


def cmd_union_base(args, inputs) -> Result:
    M1, M2 = _pair(args, inputs)
    X = _subset(M1, args.within, "--within") if args.within is not None else None
    rep = union_base(M1, M2, X)
    payload = {"base": sorted(M1.names(rep.set)), "size": bin(rep.set).count("1"), "rep": rep.to_json(M1.ground)}
    return True, payload, [f"base of size {payload['size']}: {payload['base']}"]


def cmd_chain(args, inputs) -> Result:
    M1, M2 = _pair(args, inputs)
    I1, I2 = _subset(M1, args.i1, "--i1"), _subset(M1, args.i2, "--i2")
    if not M1.indep(I1) or not M2.indep(I2):
        raise UsageError("--i1/--i2 must be independent in M1/M2")
    x = _element(M1, args.x, "--x")
    if not (I1 | I2) >> x & 1:
        raise UsageError("--x must lie in I1 or I2")
    A = reachability(M1, M2, I1, I2, x)
    payload = A.to_json(M1.ground)
    return True, payload, [f"A = {payload['members']}"] + [
        f"  {a}: {' -> '.join(ch['nodes'])} ({ch['parity']})" for a, ch in payload["chains"].items()]


def cmd_pack(args, inputs) -> Result:
    inst = load_instance(args.descriptor)
    inputs.append(inst.raw)
    M = _matroid(inst)
    rep = pack_bases(M, args.k, max_y=args.max_y)
    payload = rep.to_json(M)
    return rep.packable, payload, [payload["verdict"]] + _detail(payload, ("bases", "violating_Y"))


def cmd_cover(args, inputs) -> Result:
    inst = load_instance(args.descriptor)
    inputs.append(inst.raw)
    M = _matroid(inst)
    rep = cover_independent(M, args.k)
    payload = rep.to_json(M)
    return rep.coverable, payload, [payload["verdict"]] + _detail(payload, ("cover", "violating_X"))


def cmd_trees(args, inputs) -> Result:
    raw = load_json(args.graph)
    inputs.append(raw)
    vertices, edges = parse_graph(raw)
    G = make_graphic(vertices, edges)
    if args.forests:
        rep = forest_cover(vertices, edges, args.k)
        payload = rep.to_json(G)
        return rep.coverable, payload, [payload["verdict"]] + _detail(payload, ("cover", "violating_X"))
    try:
        prep = tree_pack(vertices, edges, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = prep.to_json(G)
    return prep.packable, payload, [payload["verdict"]] + _detail(payload, ("bases", "violating_Y"))


def _detail(payload: dict, keys: tuple[str, ...]) -> list[str]:
    return [f"{k}: {payload[k]}" for k in keys if k in payload]


def _family(args, inputs) -> SymbolicFamily:
    inst = load_instance(args.family)
    inputs.append(inst.raw)
    if inst.kind != "family":
        raise UsageError(f"{args.family}: expected a family descriptor")
    return inst.obj


def cmd_finitarize(args, inputs) -> Result:
    f = _family(args, inputs)
    fin = finitarize(f)
    windows = list(range(1, args.check_windows + 1))
    ok = all(finitarization_agrees(f, n) for n in windows)
    payload = {"family": fin.to_json(), "checked_windows": windows, "circuits_agree": ok}
    return ok, payload, [json.dumps(fin.to_json(), sort_keys=True), f"circuits agree on windows {windows}: {ok}"]


def cmd_gap(args, inputs) -> Result:
    f = _family(args, inputs)
    rep = nearly_finitary_gap(f, range(2, args.max_window + 1))
    payload = rep.to_json()
    lines = [f"verdict: {rep.verdict}", f"total gap: {rep.total}", f"stable across windows: {rep.stable}"]
    return rep.stable, payload, lines


def cmd_mk(args, inputs) -> Result:
    inst = load_instance(args.descriptor)
    inputs.append(inst.raw)
    M = _matroid(inst)
    try:
        Mk = make_Mk(M, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = check_matroid(Mk, cap=args.cap)
    fam = set(Mk.independent_sets()) if M.n <= args.cap else None
    trunc = fam == truncation_family(M, args.k) if fam is not None else None
    payload = {"descriptor": Mk.descriptor, "rank": Mk.rank(), "axioms": report.to_json(),
               "equals_truncation": trunc}
    ok = report.ok and trunc is not False
    return ok, payload, [f"rank {Mk.rank()}", f"matroid: {report.ok}", f"equals rank-{M.rank() - args.k} truncation: {trunc}"]


def cmd_demo(args, inputs) -> Result:
    name = args.name
    if name == "ladder":
        rep = ladder_demo(args.window or 2)
        payload = rep.to_json()
        lines = [f"B1+B2 inside B3+B4: {rep.proper}", f"difference: {rep.difference}",
                 f"bases certified on windows up to {rep.checked_windows[-1]}: {rep.bases_certified}"]
        return rep.ok, payload, lines
    if name == "claim31":
        if not args.countable_analog:
            raise UsageError("claim31 is uncountable; only --countable-analog is available")
        name = "claim32"
    steps = 3 if args.steps is None else args.steps
    try:
        chain = demo_growth_chain(name, steps, start=args.window or 1, k=args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    mono_to = max(args.monotone_through, 1)
    monotone = all(demo_window_monotone(name, n) for n in range(1, mono_to))
    payload = chain.to_json()
    if args.name == "claim31":
        payload["demo"] = "claim31-countable-analog"
    payload["window_monotone_through"] = mono_to if monotone else None
    ok = certify_growth_chain(chain) and monotone
    lines = [f"{len(chain.steps)} sets, strictly increasing: {chain.strictly_increasing}",
             f"all steps certified: {all(s.certified for s in chain.steps)}",
             f"windows monotone through {mono_to}: {monotone}"]
    lines += [f"  window {s.window}: |J|={bin(s.set).count('1')}" for s in chain.steps]
    return ok, payload, lines


# -- parser ------------------------------------------------------------------


def _workers_default() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="matroidunion", description="Matroid union, packing and infinitary demos.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", nargs="?", const="-", default=None, metavar="OUT",
                        help="emit a JSON report (to OUT if given)")
    common.add_argument("--timing", action="store_true", help="include wall-clock timing in the report")
    common.add_argument("--workers", type=int, default=_workers_default(),
                        help=f"parallelism width (default from ${WORKERS_ENV})")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, fn: Callable, help_: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("check-axioms", cmd_check_axioms, "verify the independence axioms")
    sp.add_argument("descriptor")
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--full-c", action="store_true", help="circuit elimination over all X")

    for name, fn, help_ in (("union", cmd_union, "union membership"),
                            ("union-base", cmd_union_base, "a base of the union"),
                            ("chain", cmd_chain, "reachability set with witness chains")):
        sp = add(name, fn, help_)
        sp.add_argument("--a", required=True)
        sp.add_argument("--b", required=True)
        if name == "union":
            sp.add_argument("--set", default="")
        elif name == "union-base":
            sp.add_argument("--within", default=None)
        else:
            sp.add_argument("--i1", default="")
            sp.add_argument("--i2", default="")
            sp.add_argument("--x", required=True)

    for name, fn, help_ in (("pack", cmd_pack, "k disjoint bases"), ("cover", cmd_cover, "cover by k independent sets")):
        sp = add(name, fn, help_)
        sp.add_argument("descriptor")
        sp.add_argument("--k", type=int, required=True)
        if name == "pack":
            sp.add_argument("--max-y", type=int, default=None)

    sp = add("trees", cmd_trees, "edge-disjoint spanning trees")
    sp.add_argument("graph")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--forests", action="store_true", help="cover the edges by k forests instead")

    sp = add("finitarize", cmd_finitarize, "finitarize a symbolic family")
    sp.add_argument("family")
    sp.add_argument("--check-windows", type=int, default=4)

    sp = add("gap", cmd_gap, "nearly-finitary gap of a symbolic family")
    sp.add_argument("family")
    sp.add_argument("--max-window", type=int, default=8)

    sp = add("mk", cmd_mk, "the matroid M[k]")
    sp.add_argument("descriptor")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)

    sp = add("demo", cmd_demo, "counterexample demos")
    sp.add_argument("name", choices=sorted(DEMO_WINDOWS) + ["claim31", "ladder"])
    sp.add_argument("--window", type=int, default=None, help="starting window (rungs for ladder)")
    sp.add_argument("--steps", type=int, default=None)
    sp.add_argument("--k", type=int, default=1, help="uniform rank for obs46a")
    sp.add_argument("--countable-analog", action="store_true")
    sp.add_argument("--monotone-through", type=int, default=8)
    return p


def _digest(inputs: list) -> str:
    return hashlib.sha256(canonical_json(inputs).encode()).hexdigest()


def dispatch(argv: list[str]) -> tuple[int, dict | None]:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), None
    if args.workers < 1:
        print("error: --workers must be positive", file=sys.stderr)
        return EXIT_USAGE, None
    for flag in ("k", "steps", "window"):
        value = getattr(args, flag, None)
        if value is not None and value < (0 if flag == "steps" else 1):
            print(f"error: --{flag} out of range", file=sys.stderr)
            return EXIT_USAGE, None
    inputs: list = []
    started = time.perf_counter()
    try:
        ok, payload, lines = args.fn(args, inputs)
    except (SchemaError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE, None
    report = {"command": argv[0], "inputs_digest": _digest(inputs), "result": payload, "verdict": ok}
    if getattr(args, "seed", None) is not None and args.command == "check-axioms":
        report["seed"] = args.seed
    if args.timing:
        report["seconds"] = round(time.perf_counter() - started, 6)
    if args.json is not None:
        text = json.dumps(report, sort_keys=True, indent=2) + "\n"
        if args.json == "-":
            sys.stdout.write(text)
        else:
            Path(args.json).write_text(text)
    if args.json != "-":
        for line in lines:
            print(line)
    return (EXIT_OK if ok else EXIT_FALSE), report


def main(argv: list[str] | None = None) -> int:
    code, _ = dispatch(list(sys.argv[1:] if argv is None else argv))
    return code


if __name__ == "__main__":
    sys.exit(main())
