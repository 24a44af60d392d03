"""
Command-line front end.

    linkbound invariants REF [--phi M]... [--json]
    linkbound compare REF REF [--phi M]... [--json]
    linkbound bound REF --m M [--json]
    linkbound batch FILE [--json]
    linkbound list [--json]

REF is a catalog name, an inline PD code or ``@file:line``.  Exit status
is 0 on success, 1 on bad input and 2 when an internal cross-check fails.
"""

import argparse
import json
import os
import sys

from . import catalog
from .bounds import M_Q_CAVEAT, bound_chain_report, weakly_split_bound
from .diagram import format_pd
from .errors import InconsistencyError, LinkboundError
from .invariants import AdmissibleMap, full_report

__all__ = ["run", "main"]


class _UserError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UserError(message)


def _parser():
    p = _Parser(prog="linkbound", description="Alexander-module invariants and cobordism genus bounds.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, maps=True):
        if maps:
            sp.add_argument("--phi", action="append", default=[], metavar="MATRIX",
                            help='extra admissible map, row-major, e.g. "1,1;0,2" (repeatable)')
        sp.add_argument("--json", action="store_true", help="emit one JSON document")

    sp = sub.add_parser("invariants", help="invariants of one link")
    sp.add_argument("link")
    common(sp)
    sp = sub.add_parser("compare", help="cobordism genus and Gordian bounds for a pair")
    sp.add_argument("link1")
    sp.add_argument("link2")
    common(sp)
    sp = sub.add_parser("bound", help="genus bound to a weakly m-split link")
    sp.add_argument("link")
    sp.add_argument("--m", type=int, required=True)
    common(sp, maps=False)
    sp = sub.add_parser("batch", help="process a file of NAME <pd> and PAIR <ref> <ref> lines")
    sp.add_argument("file")
    common(sp, maps=False)
    sp = sub.add_parser("list", help="list catalog entries")
    common(sp, maps=False)
    return p


def _maps(texts):
    return [AdmissibleMap.parse(t) for t in texts]


def _matrix_text(rows):
    return "[" + ", ".join("[" + ", ".join(str(v) for v in r) + "]" for r in rows) + "]"


def _invariants_data(label, d, maps):
    inv = full_report(d, maps)
    return {"link": label, "pd": format_pd(d), **inv.to_json()}


def _invariants_text(data):
    lines = [
        f"link: {data['link']}",
        f"components: {data['k']}",
        f"linking matrix: {_matrix_text(data['linking_matrix'])}",
        f"Δ = {data['alexander_polynomial']}",
        f"det = {data['determinant']}",
    ]
    for item in data["r_per_map"]:
        label = item["label"] if item["label"] in ("δ", "id") else item["map"]
        lines.append(f"r({label}) = {item['r']}")
    lines.append(f"m_Q = {data['min_generators_q']}")
    return lines


def _compare_data(l1, d1, l2, d2, maps):
    chain = bound_chain_report(d1, d2, maps)
    return {"L": l1, "J": l2, **chain.report.to_json(), "chain": chain.to_json()["chain"]}


def _compare_text(data):
    lines = [f"L: {data['L']}", f"J: {data['J']}"]
    if data["exists"]:
        lines.append("cobordism exists: yes (linking matrices agree)")
        for item in data["per_map"]:
            label = item["label"] if item["label"] in ("δ", "id") else item["map"]
            lines.append(f"  phi = {label}: r(L) = {item['r_L']}, r(J) = {item['r_J']}, "
                         f"bound = {item['bound']}")
        lines.append(f"genus ≥ {data['rational_bound']} (rational)")
        lines.append(f"genus ≥ {data['integer_bound']} (integer, connected-components convention)")
    else:
        lines.append(f"cobordism exists: no ({data['notes'][0]})")
        lines.append("genus = inf")
    lines.append(f"Gordian distance ≥ {data['gordian_q']} (|m_Q(L) - m_Q(J)|)")
    lines.append("bound chain:")
    for slot in data["chain"]:
        lines.append(f"  {slot['quantity']} ≥ {slot['lower_bound']}  [{slot['status']}]")
    lines.append(f"note: {M_Q_CAVEAT}")
    return lines


def _bound_data(label, d, m):
    rep = weakly_split_bound(d, m)
    return {"link": label, **rep.to_json()}


def _bound_text(data):
    m = data["m"]
    if data["delta_nonzero"]:
        line = f"genus ≥ {data['bound']} (⌊{m}/2⌋; requires Δ_L ≠ 0: satisfied)"
    else:
        line = "no bound (requires Δ_L ≠ 0: not satisfied, Δ_L = 0)"
    return [f"link: {data['link']}", f"target: weakly {m}-split link", line,
            f"r(J) ≥ {data['r_via_lemma']} for any weakly {m}-split J"]


def _list_data():
    out = []
    for name in catalog.names():
        e = catalog.lookup(name)
        item = {"name": name, "pd": format_pd(e.diagram), "k": e.diagram.k,
                "crossings": len(e.diagram.crossings), "description": e.description,
                "alternates": [format_pd(a) for a in e.alt_diagrams]}
        if e.expected is not None:
            x = e.expected
            item["expected"] = {
                "alexander_polynomial": x.alexander, "determinant": x.determinant,
                "r_diagonal": x.r, "min_generators_q": x.m_q,
                "linking_matrix": [list(r) for r in x.linking],
                "provenance": dict(sorted(x.provenance.items())),
            }
        out.append(item)
    return out


def _list_text(items):
    width = max((len(i["name"]) for i in items), default=0)
    return [f"{i['name']:<{width}}  k={i['k']}  crossings={i['crossings']}  {i['description']}"
            for i in items]


def _split_pair(rest):
    if "|" in rest:
        refs = [r.strip() for r in rest.split("|")]
    else:
        refs = rest.split()
    if len(refs) != 2 or not all(refs):
        raise _UserError("PAIR needs exactly two references (separate inline PD codes with '|')")
    return refs


def _batch_line(text, base_dir):
    """One report dict for a batch line, or None for blank/comment lines."""
    parsed = catalog.split_line(text)
    if parsed is None:
        return None
    name, rest = parsed
    if name == "PAIR":
        refs = []
        for ref in _split_pair(rest):
            if ref.startswith("@") and not os.path.isabs(ref[1:]):
                ref = "@" + os.path.join(base_dir, ref[1:])
            refs.append(catalog.resolve(ref))
        (l1, d1), (l2, d2) = refs
        return {"kind": "compare", "result": _compare_data(l1, d1, l2, d2, [])}
    if not rest:
        raise _UserError("missing PD code")
    label, d = catalog.resolve(rest)
    return {"kind": "invariants", "result": _invariants_data(name or label, d, [])}


def _batch(path, as_json, out):
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise _UserError(f"cannot read {path}: {exc.strerror}") from None
    base_dir = os.path.dirname(path)
    reports, ok, failed, broken = [], 0, 0, False
    for lineno, text in enumerate(lines, 1):
        try:
            rep = _batch_line(text, base_dir)
        except (LinkboundError, _UserError) as exc:
            rep = {"kind": "error", "error": str(exc)}
        except InconsistencyError as exc:
            rep = {"kind": "error", "error": f"internal inconsistency: {exc}"}
            broken = True
        if rep is None:
            continue
        rep = {"line": lineno, "ok": rep["kind"] != "error", **rep}
        if rep["ok"]:
            ok += 1
        else:
            failed += 1
        reports.append(rep)
    summary = f"{ok} ok, {failed} failed"
    if as_json:
        _emit_json({"reports": reports, "summary": {"ok": ok, "failed": failed, "text": summary}}, out)
    else:
        for rep in reports:
            if not rep["ok"]:
                out.write(f"line {rep['line']}: error: {rep['error']}\n")
                continue
            body = (_invariants_text if rep["kind"] == "invariants" else _compare_text)(rep["result"])
            out.write(f"line {rep['line']}:\n")
            out.writelines(f"  {s}\n" for s in body)
        out.write(summary + "\n")
    return 2 if broken else 0


def _emit_json(doc, out):
    out.write(json.dumps(doc, ensure_ascii=False, indent=2) + "\n")


def _dispatch(args, out):
    if args.command == "batch":
        return _batch(args.file, args.json, out)
    if args.command == "list":
        data, render = _list_data(), _list_text
    elif args.command == "invariants":
        label, d = catalog.resolve(args.link)
        data, render = _invariants_data(label, d, _maps(args.phi)), _invariants_text
    elif args.command == "compare":
        maps = _maps(args.phi)
        (l1, d1), (l2, d2) = catalog.resolve(args.link1), catalog.resolve(args.link2)
        data, render = _compare_data(l1, d1, l2, d2, maps), _compare_text
    else:
        label, d = catalog.resolve(args.link)
        try:
            data = _bound_data(label, d, args.m)
        except ValueError as exc:
            if isinstance(exc, LinkboundError):
                raise
            raise _UserError(str(exc)) from None
        render = _bound_text
    if args.json:
        _emit_json(data, out)
    else:
        out.writelines(s + "\n" for s in render(data))
    return 0


def run(argv=None, out=None, err=None):
    """Run the CLI; returns the exit status."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = _parser().parse_args(argv)
        return _dispatch(args, out)
    except (LinkboundError, _UserError) as exc:
        err.write(f"error: {exc}\n")
        return 1
    except InconsistencyError as exc:
        err.write(f"internal inconsistency: {exc}\n")
        return 2


def main():
    sys.exit(run())
