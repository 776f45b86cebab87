"""``vtwin`` command line front end.

Global flags may appear before or after the subcommand::

    vtwin --n 4 isid "s1 s3 s1 s3"
    vtwin rewrite "s1 r1" --n 4
    vtwin --n 5 verify all

Exit status: 0 on success, 1 when a verification suite reports a failure,
2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .config import DEFAULT
from .errors import NotApplicable, ResourceLimit, VTwinError, WordParseError
from .graph import (
    complement_connected,
    components_minus_star,
    defining_graph,
    dominating_pairs,
    graph_automorphisms,
    is_chordal,
    non_neighbors,
    star,
    to_dot,
)
from .perms import pi_image, schreier_tuple, schreier_word
from .raag import normal_form, parse_raag
from .rewriting import decompose, rewrite_tau, vt_equal, vt_is_identity
from .theorems import SUITES, run_all, run_suite
from .words import parse_word

FORMATS = ("text", "json", "dot")


@dataclass(frozen=True)
class CliConfig:
    n: int
    format: str | None
    seed: int
    force: bool
    max_aut_n: int = DEFAULT.max_aut_n


class UsageError(Exception):
    pass


def _vname(v) -> str:
    return f"L{v[0]}.{v[1]}"


def _emit(cfg: CliConfig, text: str, payload: dict) -> None:
    if cfg.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _no_dot(cfg: CliConfig, cmd: str) -> None:
    if cfg.format == "dot":
        raise UsageError(f"--format dot is only meaningful for 'graph', not '{cmd}'")


def cmd_pi(cfg, args):
    _no_dot(cfg, "pi")
    w = parse_word(args.word, cfg.n)
    p = pi_image(w)
    _emit(cfg, str(p), {"word": str(w), "perm": list(p.images), "cycles": p.cycle_str()})
    return 0


def cmd_isid(cfg, args):
    _no_dot(cfg, "isid")
    w = parse_word(args.word, cfg.n)
    res = vt_is_identity(w)
    _emit(cfg, "true" if res else "false", {"word": str(w), "identity": res})
    return 0


def cmd_equal(cfg, args):
    _no_dot(cfg, "equal")
    u, v = parse_word(args.u, cfg.n), parse_word(args.v, cfg.n)
    res = vt_equal(u, v)
    _emit(cfg, "true" if res else "false", {"u": str(u), "v": str(v), "equal": res})
    return 0


def cmd_rewrite(cfg, args):
    _no_dot(cfg, "rewrite")
    w = parse_word(args.word, cfg.n)
    out = rewrite_tau(w)
    _emit(cfg, str(out), {"word": str(w), "rewrite": str(out)})
    return 0


def cmd_decompose(cfg, args):
    _no_dot(cfg, "decompose")
    w = parse_word(args.word, cfg.n)
    p, sigma = decompose(w)
    t = schreier_tuple(sigma)
    m = schreier_word(t)
    text = f"pure: {p}\nperm: {sigma}\ncoset: {m}"
    _emit(cfg, text, {"word": str(w), "pure": str(p), "perm": list(sigma.images),
                      "schreier_tuple": list(t.indices), "coset": str(m)})
    return 0


def cmd_nf(cfg, args):
    _no_dot(cfg, "nf")
    w = parse_raag(args.word, cfg.n)
    out = normal_form(w)
    _emit(cfg, str(out), {"word": str(w), "normal_form": str(out)})
    return 0


def cmd_graph(cfg, args):
    g = defining_graph(cfg.n)
    if cfg.format == "dot":
        sys.stdout.write(to_dot(cfg.n))
        return 0
    edges = g.edges()
    lines = [f"PVT_{cfg.n}: {len(g.vertices)} vertices, {len(edges)} edges"]
    lines += [f"{_vname(v)}: {' '.join(_vname(u) for u in sorted(g.link(v))) or '-'}" for v in g.vertices]
    payload = {
        "n": cfg.n,
        "vertices": [_vname(v) for v in g.vertices],
        "edges": [[_vname(u), _vname(v)] for u, v in edges],
    }
    _emit(cfg, "\n".join(lines), payload)
    return 0


def cmd_graphprops(cfg, args):
    _no_dot(cfg, "graphprops")
    n = cfg.n
    g = defining_graph(n)
    v0 = g.vertices[0]
    comps = {_vname(v): len(components_minus_star(n, v)) for v in g.vertices}
    dom = dominating_pairs(n)
    payload = {
        "n": n,
        "vertices": len(g.vertices),
        "edges": len(g.edges()),
        "degrees": sorted({g.degree(v) for v in g.vertices}),
        "non_neighbors": sorted({len(non_neighbors(n, v)) for v in g.vertices}),
        "star": sorted({len(star(n, v)) for v in g.vertices}),
        "dominating_pairs": [[_vname(a), _vname(b)] for a, b in dom],
        "components_minus_star": comps,
        "chordal": is_chordal(n),
        "complement_connected": complement_connected(n),
    }
    text = "\n".join([
        f"vertices: {payload['vertices']}",
        f"edges: {payload['edges']}",
        f"degree: {', '.join(map(str, payload['degrees']))}",
        f"|N|: {', '.join(map(str, payload['non_neighbors']))}",
        f"|st|: {', '.join(map(str, payload['star']))}",
        f"dominating pairs: {len(dom)}",
        f"components of Gamma - st({_vname(v0)}): {comps[_vname(v0)]}",
        f"chordal: {'true' if payload['chordal'] else 'false'}",
        f"complement connected: {'true' if payload['complement_connected'] else 'false'}",
    ])
    _emit(cfg, text, payload)
    return 0


def cmd_auts(cfg, args):
    _no_dot(cfg, "auts")
    if cfg.n > cfg.max_aut_n and not cfg.force:
        raise UsageError(f"automorphism enumeration for n={cfg.n} > {cfg.max_aut_n} needs --force")
    auts = graph_automorphisms(cfg.n, limit=max(cfg.n, cfg.max_aut_n) if cfg.force else cfg.max_aut_n)
    payload = {"n": cfg.n, "count": len(auts)}
    if args.list:
        payload["automorphisms"] = [{_vname(k): _vname(v) for k, v in f.items()} for f in auts]
    text = str(len(auts))
    if args.list:
        text += "\n" + "\n".join(
            " ".join(f"{_vname(k)}->{_vname(v)}" for k, v in f.items()) for f in auts
        )
    _emit(cfg, text, payload)
    return 0


def cmd_verify(cfg, args):
    _no_dot(cfg, "verify")
    if args.suite == "all":
        rep = run_all(cfg.n, cfg.seed)
    else:
        try:
            rep = run_suite(args.suite, cfg.n, cfg.seed)
        except NotApplicable as e:
            raise UsageError(f"suite '{args.suite}' does not apply at n={cfg.n}: {e}") from None
    rep.seed = cfg.seed
    # reports default to JSON; --format text gives the readable listing
    print(rep.to_text() if cfg.format == "text" else rep.to_json())
    return 0 if rep.ok else 1


def _common(defaults: bool) -> argparse.ArgumentParser:
    """Global flags; the subcommand copy uses SUPPRESS so it only overrides when given."""
    p = argparse.ArgumentParser(add_help=False)
    sup = {} if defaults else {"default": argparse.SUPPRESS}
    p.add_argument("--n", type=int, help="strand count (default 4)", **({"default": 4} if defaults else sup))
    p.add_argument("--format", choices=FORMATS, help="output format", **({"default": None} if defaults else sup))
    p.add_argument("--seed", type=int, help="seed for randomised checks",
                   **({"default": DEFAULT.seed} if defaults else sup))
    p.add_argument("--force", action="store_true", help="lift resource guards",
                   **({"default": False} if defaults else sup))
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vtwin",
        description="Virtual twin groups VT_n and pure virtual twin groups PVT_n.",
        parents=[_common(True)],
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    common = _common(False)

    def add(name, fn, help_, *positionals):
        sp = sub.add_parser(name, help=help_, parents=[common])
        for pos, h in positionals:
            sp.add_argument(pos, help=h)
        sp.set_defaults(func=fn)
        return sp

    word = ("word", "word in s1..s{n-1}, r1..r{n-1}, space separated")
    add("pi", cmd_pi, "image in S_n", word)
    add("isid", cmd_isid, "decide whether a VT_n word is trivial", word)
    add("equal", cmd_equal, "decide equality of two VT_n words", ("u", "first word"), ("v", "second word"))
    add("rewrite", cmd_rewrite, "rewrite a pure word into PVT_n generators", word)
    add("decompose", cmd_decompose, "split a word as (pure part) x (coset representative)", word)
    add("nf", cmd_nf, "normal form of a PVT_n word", ("word", "word in L<i>.<j> and L<i>.<j>^-1"))
    add("graph", cmd_graph, "defining graph of PVT_n")
    add("graphprops", cmd_graphprops, "link, star, domination and chordality data")
    a = add("auts", cmd_auts, "count graph automorphisms")
    a.add_argument("--list", action="store_true", help="also list the vertex maps")
    v = add("verify", cmd_verify, "run a verification suite")
    v.add_argument("suite", choices=sorted(SUITES) + ["all"])
    return parser


def _config(ns: argparse.Namespace) -> CliConfig:
    if ns.n < 2:
        raise UsageError("--n must be at least 2")
    if ns.n > DEFAULT.max_n and not ns.force:
        raise UsageError(f"--n above {DEFAULT.max_n} needs --force")
    return CliConfig(n=ns.n, format=ns.format, seed=ns.seed, force=ns.force)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        cfg = _config(ns)
        return ns.func(cfg, ns)
    except WordParseError as e:
        print(f"vtwin: parse error: {e}", file=sys.stderr)
        print(f"  {e.text}\n  {' ' * e.position}^", file=sys.stderr)
        return 2
    except UsageError as e:
        print(f"vtwin: {e}", file=sys.stderr)
        return 2
    except (ResourceLimit, VTwinError) as e:
        print(f"vtwin: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
