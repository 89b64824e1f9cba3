"""Batch command line front end.

Subcommands: gen, box, bounds, interval, construct-cover, verify-cover,
survey. Everything is deterministic; there are no seed flags.

Exit codes: 0 success (and certificate accepted), 1 certificate rejected,
2 parse error, 3 capacity cap exceeded (the message names the cap),
4 theorem or self-check failure (signals a bug, never expected).
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .bounds import (
    chromatic_boxicity_check,
    chromatic_number,
    compute_bounds_report,
    edge_clique_cover,
    even_focal_surcharge,
    mycielski_lower_bound,
    mycielski_upper_bound,
)
from .constructions import complete_mycielski_cover, mycielski_cover
from .engine import (
    DEFAULT_COMPLEMENT_EDGE_CAP,
    exact_boxicity,
    format_cover,
    parse_cover,
    verify_cointerval_cover,
)
from .errors import CapacityError, SelfCheckError
from .generators import focalize, gen_family, mycielski
from .graphs import complement, focal_vertices, graph6_decode, graph6_encode, to_dot
from .intervals import interval_representation, is_interval

SURVEY_HEADER = (
    "graph6,n,m,box,chi,theta_comp,focal,lb_cor36,ub_thm42,"
    "chk_cor36,chk_thm42,chk_thm11,chk_chi_plus1"
)

#: Complement-edge threshold under which the survey verifies the Mycielski
#: lower bound directly against an exact engine run.
SURVEY_DIRECT_EDGE_LIMIT = 20


def _cmd_gen(args: argparse.Namespace) -> int:
    g = gen_family(args.spec)
    if args.focalize:
        g = focalize(g, args.focalize)
    if args.r:
        g, _ = mycielski(g, args.r)
    sys.stdout.write(to_dot(g) if args.dot else graph6_encode(g) + "\n")
    return 0


def _cmd_box(args: argparse.Namespace) -> int:
    g = graph6_decode(args.graph6)
    result = exact_boxicity(g, args.max_complement_edges)
    print(f"box {result.value}")
    text = format_cover(result.certificate)
    if args.stdout:
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"certificate {args.out}")
    return 0


def _cmd_bounds(args: argparse.Namespace) -> int:
    g = graph6_decode(args.graph6)
    report = compute_bounds_report(
        g,
        r=args.r,
        include_exact=args.exact,
        max_complement_edges=args.max_complement_edges,
    )
    print("graph6,lower,upper,exact")
    lower = ";".join(f"{v}:{tag}" for v, tag in report.lower)
    upper = ";".join(f"{v}:{tag}" for v, tag in report.upper)
    exact = "" if report.exact is None else str(report.exact)
    print(f"{report.graph6},{lower},{upper},{exact}")
    return 0


def _cmd_interval(args: argparse.Namespace) -> int:
    g = graph6_decode(args.graph6)
    result = is_interval(g)
    print(result.verdict)
    if result.interval:
        sys.stdout.write(interval_representation(g).to_text())
    return 0


def _cmd_construct_cover(args: argparse.Namespace) -> int:
    if args.lemma41 is not None:
        cover = complete_mycielski_cover(args.lemma41)
    else:
        g = graph6_decode(args.thm42)
        _, clique_cover = edge_clique_cover(complement(g))
        cover = mycielski_cover(g, clique_cover)
    sys.stdout.write(format_cover(cover))
    return 0


def _cmd_verify_cover(args: argparse.Namespace) -> int:
    g = graph6_decode(args.graph6)
    with open(args.certificate) as fh:
        cover = parse_cover(fh.read())
    verdict = verify_cointerval_cover(g, cover)
    if verdict:
        print("accept")
        return 0
    print(f"reject {verdict.reason}")
    return 1


@dataclass
class SurveyRow:
    graph6: str
    n: int
    m: int
    box: int
    chi: int
    theta_comp: int
    focal: int
    lb_cor36: int
    ub_thm42: int
    chk_cor36: bool
    chk_thm42: bool
    chk_thm11: bool
    chk_chi_plus1: bool

    def to_csv(self) -> str:
        flags = [self.chk_cor36, self.chk_thm42, self.chk_thm11, self.chk_chi_plus1]
        return ",".join(
            [
                self.graph6,
                str(self.n),
                str(self.m),
                str(self.box),
                str(self.chi),
                str(self.theta_comp),
                str(self.focal),
                str(self.lb_cor36),
                str(self.ub_thm42),
            ]
            + ["pass" if f else "fail" for f in flags]
        )

    def all_pass(self) -> bool:
        return self.chk_cor36 and self.chk_thm42 and self.chk_thm11 and self.chk_chi_plus1


def survey_row(g, r: int = 2, cap: int = DEFAULT_COMPLEMENT_EDGE_CAP) -> SurveyRow:
    """One survey row: exact invariants of g plus empirical verification of
    the Mycielski bounds, the boxicity-chromatic inequality and the chromatic
    step.

    The Mycielski lower bound is checked directly against an exact engine run
    when the Mycielski complement is small enough, and against the upper
    bounds otherwise (crossed bounds would falsify one of the theorems).
    """
    box = exact_boxicity(g, cap).value
    chi = chromatic_number(g)
    theta, clique_cover = edge_clique_cover(complement(g))
    focal = len(focal_vertices(g))
    lb = mycielski_lower_bound(g, r, cap)
    ub = mycielski_upper_bound(g)
    myc, _ = mycielski(g, r)

    if complement(myc).num_edges() <= SURVEY_DIRECT_EDGE_LIMIT:
        myc_box = exact_boxicity(myc, cap).value
        ok_cor36 = lb <= myc_box and (focal == 0 or myc_box > box)
    elif r == 2:
        ok_cor36 = lb <= ub
    else:
        ok_cor36 = lb <= myc.n // 2

    try:
        built = mycielski_cover(g, clique_cover)
        limit = theta + (focal + 1) // 2 + even_focal_surcharge(focal)
        ok_thm42 = len(built.parts) <= limit
    except SelfCheckError:
        ok_thm42 = False

    ok_thm11 = chromatic_boxicity_check(g, cap).ok
    m2 = myc if r == 2 else mycielski(g, 2)[0]
    ok_chi = chromatic_number(m2) == chi + 1

    return SurveyRow(
        graph6_encode(g),
        g.n,
        g.num_edges(),
        box,
        chi,
        theta,
        focal,
        lb,
        ub,
        ok_cor36,
        ok_thm42,
        ok_thm11,
        ok_chi,
    )


def _cmd_survey(args: argparse.Namespace) -> int:
    with open(args.graphs) as fh:
        lines = [line.strip() for line in fh]
    print(SURVEY_HEADER)
    for line in lines:
        if not line:
            continue
        g = graph6_decode(line)
        row = survey_row(g, r=args.mycielski_r, cap=args.max_complement_edges)
        print(row.to_csv())
        if not row.all_pass():
            print(f"theorem check failed for {line}", file=sys.stderr)
            return 4
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boxicity",
        description="Exact boxicity, interval recognition and Mycielski bounds "
        "for small graphs, with verifiable certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a named family graph")
    p.add_argument(
        "spec",
        help="complete:N | empty:N | path:N | cycle:N | star:N | "
        "multipartite:N1,N2,... | mycielski:<spec>:R | focalize:<spec>:T",
    )
    p.add_argument("--focalize", type=int, metavar="T", help="focalize T times")
    p.add_argument(
        "--r", type=int, metavar="R",
        help="wrap in the R-copy Mycielski construction (after --focalize)",
    )
    p.add_argument("--dot", action="store_true", help="emit DOT instead of graph6")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("box", help="exact boxicity with certificate")
    p.add_argument("graph6")
    p.add_argument(
        "--max-complement-edges", type=int, default=DEFAULT_COMPLEMENT_EDGE_CAP
    )
    p.add_argument("--out", default="cointerval-cover.cert", help="certificate path")
    p.add_argument(
        "--stdout", action="store_true", help="print the certificate instead"
    )
    p.set_defaults(func=_cmd_box)

    p = sub.add_parser(
        "bounds", help="bounds on the boxicity of the Mycielski graph of the input"
    )
    p.add_argument("graph6")
    p.add_argument("--r", type=int, default=2, help="Mycielski copy count")
    p.add_argument(
        "--exact", action="store_true", help="also run the exact engine on it"
    )
    p.add_argument(
        "--max-complement-edges", type=int, default=DEFAULT_COMPLEMENT_EDGE_CAP
    )
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("interval", help="interval recognition plus representation")
    p.add_argument("graph6")
    p.set_defaults(func=_cmd_interval)

    p = sub.add_parser("construct-cover", help="emit an explicit cover certificate")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument(
        "--lemma41", type=int, metavar="N",
        help="cover for the Mycielski graph of the complete graph on N vertices",
    )
    group.add_argument(
        "--thm42", metavar="GRAPH6",
        help="clique-cover-based Mycielski cover for the given graph",
    )
    p.set_defaults(func=_cmd_construct_cover)

    p = sub.add_parser("verify-cover", help="check a cover certificate")
    p.add_argument("graph6")
    p.add_argument("certificate")
    p.set_defaults(func=_cmd_verify_cover)

    p = sub.add_parser("survey", help="per-graph CSV with theorem checks")
    p.add_argument("graphs", help="file with one graph6 string per line")
    p.add_argument("--mycielski-r", type=int, default=2)
    p.add_argument(
        "--max-complement-edges", type=int, default=DEFAULT_COMPLEMENT_EDGE_CAP
    )
    p.set_defaults(func=_cmd_survey)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code in (0, None):
            return 0
        return 2
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return 3
    except SelfCheckError as exc:
        print(f"self-check failure (bug): {exc}", file=sys.stderr)
        return 4


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
