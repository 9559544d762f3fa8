"""Command-line front end.

Every checking subcommand emits one report: a JSON object with the tool
version, the claim tag being checked, a sha256 of the input, the
parameters, and the result.  Reports are byte-stable given identical
inputs (sorted keys, fixed indentation), so they can be kept as golden
files.  ``gen`` is the exception: it emits the complex itself, ready to
be fed back through ``--input``.

Exit codes: 0 all checks passed; 1 a mathematical check failed (the
report is still written); 2 usage or input error; 3 search budget
exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from typing import Union

from . import __version__
from .bounds import (
    corollary_bounds,
    find_witness_pair,
    is_simplicial,
    verify_lower_bound,
)
from .errors import (
    BudgetExceeded,
    HypothesisNotMet,
    InputError,
    InternalContradiction,
    LatticeBuildError,
    NoSuchAtom,
    NotAShelling,
    NotShellable,
)
from .generators import (
    cross_polytope,
    cyclic_boundary,
    gubt_compare,
    hypercube_boundary,
    ngon,
    punctured,
    simplex_boundary,
)
from .lattice import (
    FaceLattice,
    from_facets,
    lattice_from_json_dict,
    lattice_to_json_dict,
    parse_facet_text,
)
from .shelling import (
    DEFAULT_BUDGET,
    SearchBudget,
    ShellingFailure,
    find_shelling,
    is_shelling,
)

# claim tags are protocol identifiers consumed by downstream tooling;
# do not rename
CLAIM_TAGS = {
    "gen": "corpus",
    "check-shelling": "Def2.8",
    "find-shelling": "Def2.8",
    "bounds": "Thm3.4",
    "witness": "Lem3.2",
    "corollaries": "Cor3.6",
    "gubt": "Thm4.1",
}

FAMILIES = (
    "simplex-boundary",
    "cross-polytope",
    "hypercube-boundary",
    "ngon",
    "cyclic-boundary",
    "punctured",
)


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="shellbound",
        description="Face lattices, shelling search, and exact face-number bounds.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--input", required=True, help="lattice JSON or facet-list file")
        sp.add_argument("--out", help="write the report here instead of stdout")
        sp.add_argument("--format", choices=("json", "tsv"), default="json")
        sp.add_argument(
            "--budget", type=int, default=DEFAULT_BUDGET, help="search node cap"
        )

    g = sub.add_parser("gen", help="emit a corpus complex")
    g.add_argument("family", choices=FAMILIES)
    g.add_argument("--d", type=int, help="dimension parameter")
    g.add_argument("--n", type=int, help="vertex count parameter")
    g.add_argument("--input", help="base sphere (punctured only)")
    g.add_argument("--facet", help="facet to remove (punctured; default least id)")
    g.add_argument("--out", help="write the complex here instead of stdout")
    g.add_argument("--format", choices=("json", "text"), default="json")

    c = sub.add_parser("check-shelling", help="verify a facet order")
    common(c)
    c.add_argument("--order", required=True, help="comma-separated facet ids")

    f = sub.add_parser("find-shelling", help="search for a shelling order")
    common(f)
    f.add_argument("--order", help="comma-separated facet ids to use as a prefix")

    b = sub.add_parser("bounds", help="verify the face-number lower bound")
    common(b)
    b.add_argument("--order", help="shelling order (found automatically if omitted)")
    b.add_argument("--k", type=int, help="dimension to check (sweeps the range if omitted)")

    w = sub.add_parser("witness", help="construct the split witness pair")
    common(w)
    w.add_argument("--order", required=True, help="comma-separated facet ids")
    w.add_argument("--split", type=int, required=True, help="split position j")

    r = sub.add_parser("corollaries", help="shellability-conditional floors")
    common(r)
    r.add_argument("--k", type=int, help="dimension to check (sweeps all k if omitted)")

    u = sub.add_parser("gubt", help="compare a sphere against the cyclic boundary")
    common(u)
    u.add_argument("--d", type=int, required=True, help="cyclic polytope dimension")
    u.add_argument("--n", type=int, required=True, help="cyclic polytope vertex count")
    return p


# -- input / output ------------------------------------------------------


def _load_lattice(path: str) -> tuple[FaceLattice, str]:
    with open(path, "rb") as fh:
        raw = fh.read()
    digest = hashlib.sha256(raw).hexdigest()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as e:
        raise InputError(f"{path}: not text: {e}") from None
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise InputError(f"{path}: invalid JSON: {e}") from None
        try:
            return lattice_from_json_dict(data), digest
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"{path}: malformed lattice JSON: {e}") from None
    return from_facets(parse_facet_text(text)), digest


def _write_text(out: Union[str, None], text: str) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _flatten(value, path: str, rows: list[tuple[str, str]]) -> None:
    if isinstance(value, dict):
        if not value:
            rows.append((path, "{}"))
        for key in sorted(value):
            _flatten(value[key], f"{path}.{key}" if path else str(key), rows)
    elif isinstance(value, list):
        if not value:
            rows.append((path, "[]"))
        for i, item in enumerate(value):
            _flatten(item, f"{path}.{i}" if path else str(i), rows)
    else:
        rows.append((path, json.dumps(value)))


def _emit(args: argparse.Namespace, envelope: dict) -> None:
    if args.format == "tsv":
        rows: list[tuple[str, str]] = []
        _flatten(envelope, "", rows)
        text = "".join(f"{k}\t{v}\n" for k, v in rows)
    else:
        text = json.dumps(envelope, sort_keys=True, indent=2) + "\n"
    _write_text(args.out, text)


def _parse_order(raw: Union[str, None]) -> Union[tuple[str, ...], None]:
    if raw is None:
        return None
    ids = tuple(part.strip() for part in raw.split(","))
    if any(not part for part in ids):
        raise InputError("--order must be a comma-separated list of face ids")
    return ids


def _require(args: argparse.Namespace, flag: str) -> object:
    value = getattr(args, flag.lstrip("-"))
    if value is None:
        raise InputError(f"{args.family}: {flag} is required")
    return value


# -- subcommands ---------------------------------------------------------


def _cmd_gen(args: argparse.Namespace) -> int:
    family = args.family.replace("-", "_")
    if family == "simplex_boundary":
        L = simplex_boundary(_require(args, "--d"))
    elif family == "cross_polytope":
        L = cross_polytope(_require(args, "--d"))
    elif family == "hypercube_boundary":
        L = hypercube_boundary(_require(args, "--d"))
    elif family == "ngon":
        L = ngon(_require(args, "--n"))
    elif family == "cyclic_boundary":
        L = cyclic_boundary(_require(args, "--d"), _require(args, "--n"))
    else:
        if args.input is None:
            raise InputError("punctured: --input is required")
        base, _ = _load_lattice(args.input)
        L = punctured(base, args.facet)
    if args.format == "text":
        if not is_simplicial(L):
            raise InputError("facet-list text output needs a simplicial complex")
        lines = []
        for facet in L.facets():
            lines.append(" ".join(v for v in L.faces(0) if L.leq(v, facet)))
        _write_text(args.out, "\n".join(lines) + "\n")
    else:
        _write_text(
            args.out, json.dumps(lattice_to_json_dict(L), sort_keys=True, indent=2) + "\n"
        )
    return 0


def _dispatch(
    args: argparse.Namespace, L: FaceLattice, bud: SearchBudget
) -> tuple[dict, dict, bool]:
    """Returns (params, result, ok) for one checking subcommand."""
    command = args.command
    if command == "check-shelling":
        order = _parse_order(args.order)
        outcome = is_shelling(L, order, budget=bud)
        if isinstance(outcome, ShellingFailure):
            return {"order": list(order)}, {
                "accepted": False,
                "failure": outcome.to_json_dict(),
            }, False
        return {"order": list(order)}, {
            "accepted": True,
            "certificate": outcome.to_json_dict(),
        }, True

    if command == "find-shelling":
        prefix = _parse_order(args.order) or ()
        found = find_shelling(L, prefix, budget=bud)
        if found is None:
            return {"prefix": list(prefix)}, {"found": False, "order": None}, False
        return {"prefix": list(prefix)}, {"found": True, "order": list(found.facets)}, True

    if command == "bounds":
        given = _parse_order(args.order)
        params = {"order": None if given is None else list(given), "k": args.k}
        if given is None:
            search = find_shelling(L, budget=bud)
            if search is None:
                return params, {"error": "NotShellable", "detail": "no shelling found"}, False
            order = search.facets
        else:
            order = given
        d = L.dim
        ks = [args.k] if args.k is not None else list(range((d - 1) // 2, d + 1))
        reports = [verify_lower_bound(L, order, k, budget=bud) for k in ks]
        result = {
            "order": list(order),
            "reports": [r.to_json_dict() for r in reports],
        }
        return params, result, all(r.ok for r in reports)

    if command == "witness":
        order = _parse_order(args.order)
        pair = find_witness_pair(L, order, args.split, budget=bud)
        return {"order": list(order), "split": args.split}, pair.to_json_dict(), True

    if command == "corollaries":
        ks = [args.k] if args.k is not None else list(range(L.dim + 1))
        reports = [corollary_bounds(L, k, budget=bud) for k in ks]
        ok = all(
            flag is not False
            for r in reports
            for flag in (r.facet_bound_ok, r.vertex_bound_ok, r.barany_ok)
        )
        return {"k": args.k}, {"reports": [r.to_json_dict() for r in reports]}, ok

    if command == "gubt":
        report = gubt_compare(L, args.d, args.n, budget=bud)
        return {"d": args.d, "n": args.n}, report.to_json_dict(), report.all_ok

    raise InputError(f"unknown command {command!r}")


def _cmd_report(args: argparse.Namespace) -> int:
    L, digest = _load_lattice(args.input)
    bud = SearchBudget(args.budget)
    code = 0
    try:
        params, result, ok = _dispatch(args, L, bud)
        if not ok:
            code = 1
    except NotAShelling as e:
        params = _base_params(args)
        result = {"error": "NotAShelling", "failure": e.failure.to_json_dict()}
        ok, code = False, 1
    except (NotShellable, HypothesisNotMet, InternalContradiction, NoSuchAtom) as e:
        params = _base_params(args)
        result = {"error": type(e).__name__, "detail": str(e)}
        ok, code = False, 1
    except BudgetExceeded as e:
        params = _base_params(args)
        result = {"error": "BudgetExceeded", "detail": str(e)}
        ok, code = False, 3
    envelope = {
        "tool": "shellbound",
        "version": __version__,
        "command": args.command,
        "claim": CLAIM_TAGS[args.command],
        "input_sha256": digest,
        "params": params,
        "result": result,
        "ok": ok,
    }
    _emit(args, envelope)
    return code


def _base_params(args: argparse.Namespace) -> dict:
    params: dict = {}
    for name in ("order", "k", "split", "d", "n"):
        if hasattr(args, name) and getattr(args, name) is not None:
            params[name] = getattr(args, name)
    return params


def run(argv: Union[list, None] = None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if args.command == "gen":
            return _cmd_gen(args)
        return _cmd_report(args)
    except BudgetExceeded as e:
        print(f"shellbound: budget exceeded: {e}", file=sys.stderr)
        return 3
    except (InputError, LatticeBuildError) as e:
        print(f"shellbound: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"shellbound: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
