"""Command-line interface.

Exit codes: 0 success, 1 input or parameter error, 2 proven negative
(no witness exists, verification failed, not a perfect code), 3 internal
disagreement found by ``enumerate``.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence, TextIO

from . import __version__
from .catalog import catalog
from .cosets import left_cosets
from .errors import BudgetExhausted, RegularSetsError, SearchSpaceTooLarge
from .group import (
    ElementSet,
    Group,
    group_from_spec,
    list_normal_subgroups,
    normality_violation,
    parse_index_list,
    read_index_file,
    subgroup_from,
)
from .oracle import connection_set, exhaustive_witness_search, inversion_orbits, regular_set_check
from .perfect_code import (
    perfect_code_transversal,
    satisfies_sharp_condition,
    self_inverse_cosets_have_involutions,
)
from .witness import build_witness, check_parameters, valid_parameters

EXIT_OK, EXIT_INPUT, EXIT_NEGATIVE, EXIT_DISAGREE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


class InputError(Exception):
    pass


def _indices(text: str) -> list[int]:
    if text.startswith("@"):
        return read_index_file(text[1:])
    return parse_index_list(text)


def _fmt(xs) -> str:
    return ",".join(str(x) for x in sorted(xs))


def _labels(G: Group, xs) -> str:
    return ";".join(G.label(x) for x in sorted(xs))


# -- certificate documents ----------------------------------------------------

@dataclass
class CertificateDocument:
    group: str
    subgroup: list[int]
    kappa: int
    tau: int
    witness: list[int]
    verdict: str
    version: str = __version__

    def format(self, G: Group | None = None) -> str:
        lines = [
            "certificate: regular-set",
            f"tool-version: {self.version}",
            f"group: {self.group}",
            f"subgroup: {_fmt(self.subgroup)}",
        ]
        if G is not None:
            lines.append(f"subgroup-labels: {_labels(G, self.subgroup)}")
        lines += [f"kappa: {self.kappa}", f"tau: {self.tau}", f"witness: {_fmt(self.witness)}"]
        if G is not None:
            lines.append(f"witness-labels: {_labels(G, self.witness)}")
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps({
            "record": "certificate",
            "tool_version": self.version,
            "group": self.group,
            "subgroup": sorted(self.subgroup),
            "kappa": self.kappa,
            "tau": self.tau,
            "witness": sorted(self.witness),
            "verdict": self.verdict,
        }, sort_keys=True)

    @classmethod
    def parse(cls, text: str) -> "CertificateDocument":
        text = text.strip()
        if text.startswith("{"):
            d = json.loads(text)
            return cls(d["group"], d["subgroup"], d["kappa"], d["tau"], d["witness"],
                       d["verdict"], d["tool_version"])
        fields = {}
        for line in text.splitlines():
            key, sep, value = line.partition(":")
            if sep:
                fields[key.strip()] = value.strip()
        try:
            return cls(
                group=fields["group"],
                subgroup=parse_index_list(fields["subgroup"]),
                kappa=int(fields["kappa"]),
                tau=int(fields["tau"]),
                witness=parse_index_list(fields["witness"]),
                verdict=fields["verdict"],
                version=fields.get("tool-version", ""),
            )
        except (KeyError, ValueError) as exc:
            raise RegularSetsError(f"malformed certificate document: {exc}") from None


# -- verbs --------------------------------------------------------------------

def _load(args) -> Group:
    return group_from_spec(args.group)


def _subgroup(G: Group, text: str):
    H = subgroup_from(G, _indices(text))
    bad = normality_violation(G, H)
    if bad is not None:
        g, h, c = bad
        raise InputError(
            f"subgroup is not normal: g={g} [{G.label(g)}], h={h} [{G.label(h)}], "
            f"g*h*g^-1={c} [{G.label(c)}] is outside H"
        )
    return H


def cmd_construct(args, out: TextIO) -> int:
    G = _load(args)
    H = _subgroup(G, args.subgroup)
    check_parameters(len(H), args.kappa, args.tau)
    cert = build_witness(G, H, args.kappa, args.tau)
    if cert is None:
        sharp = satisfies_sharp_condition(G, H)
        g = sharp.failing
        if args.json:
            out.write(json.dumps({
                "record": "nonexistence", "group": args.group, "subgroup": H.sorted(),
                "kappa": args.kappa, "tau": args.tau, "failing_g": g,
            }, sort_keys=True) + "\n")
        else:
            out.write(f"nonexistence: no ({args.kappa},{args.tau})-regular set for H in {args.group}\n")
            out.write("reason: tau is odd and H is not a perfect code of G\n")
            out.write(
                f"failing-g: {g} [{G.label(g)}] (g^2 lies in H, but (g*h)^2 != 1 for every h in H)\n"
            )
        return EXIT_NEGATIVE
    doc = CertificateDocument(args.group, H.sorted(), cert.kappa, cert.tau, cert.X.sorted(), "pass")
    out.write(doc.to_json() + "\n" if args.json else doc.format(G))
    return EXIT_OK


def _write_report(out: TextIO, report, as_json: bool) -> None:
    if as_json:
        rec = {"record": "verification", "verdict": report.verdict,
               "kappa": report.kappa, "tau": report.tau,
               "first_violation": list(report.first_violation) if report.first_violation else None}
        out.write(json.dumps(rec, sort_keys=True) + "\n")
        return
    out.write(f"verdict: {report.verdict}\n")
    if report.passed:
        out.write(f"kappa: {'-' if report.kappa is None else report.kappa}\n")
        out.write(f"tau: {'-' if report.tau is None else report.tau}\n")
    else:
        v, expected, observed = report.first_violation
        out.write(f"first-violation: vertex={v} expected={expected} observed={observed}\n")


def cmd_verify(args, out: TextIO) -> int:
    if args.certificate:
        with open(args.certificate, encoding="ascii") as fh:
            doc = CertificateDocument.parse(fh.read())
        G = group_from_spec(doc.group)
        X, R = doc.witness, doc.subgroup
    else:
        if args.group is None or args.x is None or args.r is None:
            raise InputError("verify needs --certificate, or all of --group, --x and --r")
        G = _load(args)
        X, R = _indices(args.x), _indices(args.r)
    X = connection_set(G, X)
    report = regular_set_check(G, X, ElementSet.of(G.order, R))
    if args.certificate and report.passed and (report.kappa, report.tau) != (doc.kappa, doc.tau):
        out.write(f"verdict: fail\nmismatch: certificate claims ({doc.kappa},{doc.tau}), "
                  f"observed ({report.kappa},{report.tau})\n")
        return EXIT_NEGATIVE
    _write_report(out, report, args.json)
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def cmd_check_code(args, out: TextIO) -> int:
    G = _load(args)
    H = _subgroup(G, args.subgroup)
    cert = perfect_code_transversal(G, H)
    if cert is None:
        g = satisfies_sharp_condition(G, H).failing
        if args.json:
            out.write(json.dumps({"record": "perfect_code", "perfect_code": False,
                                  "failing_g": g}, sort_keys=True) + "\n")
        else:
            out.write("perfect-code: no\n")
            out.write(f"failing-g: {g} [{G.label(g)}]\n")
        return EXIT_NEGATIVE
    Y = cert.Y.sorted()
    if args.json:
        out.write(json.dumps({"record": "perfect_code", "perfect_code": True,
                              "transversal": Y}, sort_keys=True) + "\n")
    else:
        out.write("perfect-code: yes\n")
        out.write(f"transversal: {_fmt(Y)}\n")
        out.write(f"transversal-labels: {_labels(G, Y)}\n")
    return EXIT_OK


def _search_verdict(G, H, kappa, tau, orbit_bound):
    try:
        X = exhaustive_witness_search(G, H, kappa, tau, orbit_bound=orbit_bound)
    except SearchSpaceTooLarge:
        return "skipped"
    except BudgetExhausted:
        return "unknown"
    return "none" if X is None else "found"


def cmd_enumerate(args, out: TextIO) -> int:
    totals = dict(instances=0, rows=0, witnesses=0, nonexistent=0, searched=0,
                  skipped=0, disagreements=0)

    def emit(text: str, record: dict) -> None:
        out.write(json.dumps(record, sort_keys=True) + "\n" if args.json else text + "\n")

    for spec, G in catalog(args.max_order):
        can_search = len(inversion_orbits(G)) <= args.exhaustive_bound
        for H in list_normal_subgroups(G, proper_nontrivial_only=True):
            totals["instances"] += 1
            index = G.order // len(H)
            sharp = satisfies_sharp_condition(G, H)
            has_code = perfect_code_transversal(G, H) is not None
            coset_rule = self_inverse_cosets_have_involutions(left_cosets(G, H))
            code_agree = bool(sharp) == has_code == coset_rule
            if not code_agree:
                totals["disagreements"] += 1
            failing = "" if sharp.failing is None else f" failing-g={sharp.failing}"
            emit(
                f"instance group={spec} H={_fmt(H)} |H|={len(H)} index={index} "
                f"perfect-code={'yes' if has_code else 'no'}{failing}"
                f"{'' if code_agree else ' DISAGREE'}",
                {"record": "instance", "group": spec, "subgroup": H.sorted(),
                 "subgroup_order": len(H), "index": index, "perfect_code": has_code,
                 "failing_g": sharp.failing, "criteria_agree": code_agree},
            )
            odd_stratum = len(H) % 2 == 1 or index % 2 == 1
            for kappa, tau in valid_parameters(len(H)):
                totals["rows"] += 1
                cert = build_witness(G, H, kappa, tau)
                if cert is None:
                    totals["nonexistent"] += 1
                    oracle = "-"
                else:
                    totals["witnesses"] += 1
                    report = regular_set_check(G, cert.X, H)
                    ok = report.passed and (report.kappa, report.tau) == (kappa, tau)
                    oracle = "pass" if ok else "fail"
                search = _search_verdict(G, H, kappa, tau, args.exhaustive_bound) if can_search else "skipped"
                if search == "skipped":
                    totals["skipped"] += 1
                elif search != "unknown":
                    totals["searched"] += 1
                agree = oracle != "fail"
                if search in ("found", "none"):
                    agree = agree and (search == "found") == (cert is not None)
                if tau % 2 == 0 or odd_stratum:
                    agree = agree and cert is not None
                else:
                    agree = agree and (cert is not None) == has_code
                if not agree:
                    totals["disagreements"] += 1
                emit(
                    f"  kappa={kappa} tau={tau} witness={'yes' if cert else 'no'} "
                    f"oracle={oracle} search={search} agree={'yes' if agree else 'NO'}",
                    {"record": "row", "group": spec, "subgroup": H.sorted(), "kappa": kappa,
                     "tau": tau, "witness": cert is not None, "oracle": oracle,
                     "search": search, "agree": agree},
                )
    summary = " ".join(f"{k}={v}" for k, v in totals.items())
    emit(f"summary: {summary}", {"record": "summary", **totals})
    return EXIT_DISAGREE if totals["disagreements"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="regularsets", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def common(p, group_required=True):
        p.add_argument("--group", required=group_required,
                       help='"family:params" (e.g. cyclic:6, product:cyclic:2,cyclic:4) or @table.txt')
        p.add_argument("--json", action="store_true", help="one JSON record per line")

    p = sub.add_parser("construct", help="build a witness connection set")
    common(p)
    p.add_argument("--subgroup", required=True, help="comma-separated indices or @file")
    p.add_argument("--kappa", type=int, required=True)
    p.add_argument("--tau", type=int, required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a regular set by neighbour counting")
    common(p, group_required=False)
    p.add_argument("--x", help="connection set: indices or @file")
    p.add_argument("--r", help="candidate regular set: indices or @file")
    p.add_argument("--certificate", help="re-verify a certificate document")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check-code", help="decide whether H is a perfect code of G")
    common(p)
    p.add_argument("--subgroup", required=True)
    p.set_defaults(func=cmd_check_code)

    p = sub.add_parser("enumerate", help="sweep the catalog and cross-check everything")
    p.add_argument("--max-order", type=int, default=24)
    p.add_argument("--exhaustive-bound", type=int, default=24,
                   help="largest number of inversion orbits for exhaustive search")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (InputError, RegularSetsError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
