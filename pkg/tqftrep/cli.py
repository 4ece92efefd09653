"""
Command-line front end.

Every subcommand writes one document to stdout: JSON (schema "1", sorted
keys), CSV or a text table.  Exit code 0 means success, 1 that a verified
property failed, 2 invalid input.
"""
import argparse
import json
import logging
import sys

from astropy.table import Table

from . import __version__, tqftrep_config
from .analysis import (infinite_image_report, bfs_closure, irreducibility, generator_order_table,
                       scan_levels, SCAN_COLUMNS)
from .checks import paper_check, oracle_check
from .errors import TQFTRepError, ContextError
from .recoupling import theta, tet, sixj
from .rep import (path_basis, rho_gen, rho_word, parse_word, verify_relations, RTContext,
                  check_equivalence, rt_unitarity_deviation, rt_braid_residual, block_discrepancy)
from .scalar import TheoryCtx, level_conductor, THEORIES
from .utils.status import get_status, show_line

SCHEMA = "1"

SUCCESS, FAILED, INVALID = 0, 1, 2

ORDER_COLUMNS = ['r', 'm', 'rEff', 'order', 'expected', 'rule', 'pass']


class CommandResult(object):
    """
    What a subcommand hands back for rendering.

    Parameters
    ----------
    payload : dict
        JSON document (without the schema field)
    rows : list of dict, optional
        Tabular form, for csv and text output
    columns : list of str, optional
        Frozen column order of `rows`
    passed : bool
        False turns into exit code 1
    """
    def __init__(self, payload, rows=None, columns=None, passed=True, text=None):
        self.payload = payload
        self.rows = rows
        self.columns = columns
        self.passed = passed
        self.text = text


def build_parser():
    parser = argparse.ArgumentParser(prog='tqftrep',
                                     description='Exact braid group representations from SU(2)/SO(3) TQFTs')
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    parser.add_argument('--m', type=int, help='conductor: A is a primitive m-th root of unity')
    parser.add_argument('--s', type=int, default=1, help='A = zeta_m^s (default 1)')
    parser.add_argument('--level', type=int, help='level preset, used when --m is not given')
    parser.add_argument('--theory', choices=THEORIES, default='su2')
    parser.add_argument('--format', choices=('text', 'json', 'csv'), default='text')
    parser.add_argument('--seed', type=int, default=None)
    parser.add_argument('--verbose', action='store_true')
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    p = sub.add_parser('qnum', help='quantum integer [n]')
    p.add_argument('n', type=int)
    p = sub.add_parser('theta', help='theta network value')
    p.add_argument('colors', type=int, nargs=3)
    p = sub.add_parser('tet', help='tetrahedron value, colors A B E D C F')
    p.add_argument('colors', type=int, nargs=6)
    p = sub.add_parser('sixj', help='6j symbol {a b i; c d j}')
    p.add_argument('colors', type=int, nargs=6)

    p = sub.add_parser('basis', help='path basis of V(n, m)')
    _space_args(p)

    p = sub.add_parser('rep-matrix', help='generator or word image')
    _space_args(p)
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument('--gen', type=int)
    which.add_argument('--word')
    p.add_argument('--variant', choices=('rhoTilde', 'rho'), default='rhoTilde')

    p = sub.add_parser('verify', help='braid, Hecke and Temperley-Lieb relations')
    _space_args(p)

    p = sub.add_parser('oracle-check', help='diagrammatic evaluation against the recoupling formulas')
    p.add_argument('--theta-max', type=int, default=4)
    p.add_argument('--tet-max', type=int, default=3)
    p.add_argument('--jw-max', type=int, default=6)

    p = sub.add_parser('analyze-image', help='finite or infinite projective image')
    _space_args(p)
    p.add_argument('--max-word-len', type=int, default=None)
    p.add_argument('--bfs-cap', type=int, default=None)

    p = sub.add_parser('order-table', help='projective order of the generators over a level range')
    p.add_argument('--r-min', type=int, required=True)
    p.add_argument('--r-max', type=int, required=True)

    p = sub.add_parser('rt-compare', help='compare with the quantum-group representation')
    _space_args(p)
    p.add_argument('--trials', type=int, default=None)

    p = sub.add_parser('paper-check', help='run the published-results suite')
    p.add_argument('--quick', action='store_true', help='reduced ranges')

    p = sub.add_parser('scan', help='verdicts over a level range')
    _space_args(p)
    p.add_argument('--r-min', type=int, required=True)
    p.add_argument('--r-max', type=int, required=True)
    p.add_argument('--max-word-len', type=int, default=None)
    p.add_argument('--bfs-cap', type=int, default=None)
    p.add_argument('--db', help='sqlite file to store rows in')
    p.add_argument('--resume', action='store_true', help='skip levels already in --db')
    return parser


def _space_args(p):
    p.add_argument('--n', type=int, required=True, help='number of strands')
    p.add_argument('--mcolor', type=int, required=True, help='color of the last edge')


def resolve_context(args):
    """
    The TheoryCtx selected on the command line, and the preset header.

    Raw ``--m``/``--s`` win over ``--level``/``--theory``.
    """
    if args.m is not None:
        return TheoryCtx(args.m, args.s), {"m": args.m, "s": args.s}
    if args.level is not None:
        m = level_conductor(args.level, args.theory)
        return TheoryCtx(m, 1), {"level": args.level, "theory": args.theory, "m": m, "s": 1}
    raise ContextError("This command needs --m or --level")


def cmd_qnum(args, ctx):
    value = ctx.qint(args.n)
    return CommandResult({"n": args.n, "value": str(value), "scalar": value.to_json()})


def _coefficient(name, func):
    def command(args, ctx):
        value = func(ctx, *args.colors)
        return CommandResult({"colors": args.colors, "name": name, "value": str(value),
                              "scalar": value.to_json()})
    return command


def cmd_basis(args, ctx):
    basis = path_basis(ctx, args.n, args.mcolor)
    rows = [{"index": k, "path": " ".join(str(c) for c in p)} for k, p in enumerate(basis)]
    return CommandResult({"n": args.n, "m_color": args.mcolor, "dim": len(basis),
                          "basis": [list(p) for p in basis]}, rows, ['index', 'path'])


def cmd_rep_matrix(args, ctx):
    if args.gen is not None:
        M = rho_gen(ctx, args.n, args.mcolor, args.gen, args.variant)
        label = "g%d" % args.gen
    else:
        word = parse_word(args.word, args.n)
        M = rho_word(ctx, args.n, args.mcolor, word, args.variant)
        label = str(word)
    payload = M.to_json()
    payload["word"] = label
    rows = [dict({"path": " ".join(str(c) for c in p)},
                 **{"c%d" % c: str(x) for c, x in enumerate(row)})
            for p, row in zip(M.basis, M.entries)]
    return CommandResult(payload, rows, ['path'] + ["c%d" % c for c in range(M.dim)])


def _check_rows(checks):
    rows = []
    for c in checks:
        status = get_status(c)
        name = "%s %s" % (c.get("relation", c.get("kind", c.get("name"))),
                          c.get("generators", c.get("labels", c.get("id", ""))))
        rows.append({"check": name, "variant": c.get("variant", ""), "status": status})
    return rows


def cmd_verify(args, ctx):
    report = verify_relations(ctx, args.n, args.mcolor)
    return CommandResult(report, _check_rows(report["checks"]), ['check', 'variant', 'status'],
                         passed=report["pass"])


def cmd_oracle_check(args, ctx):
    rows = oracle_check(ctx, args.theta_max, args.tet_max, args.jw_max)
    passed = all(r["pass"] for r in rows)
    return CommandResult({"checks": rows, "pass": passed}, _check_rows(rows), ['check', 'variant', 'status'],
                         passed=passed)


def cmd_analyze_image(args, ctx):
    report = infinite_image_report(ctx, args.n, args.mcolor, args.max_word_len)
    if report["verdict"] == "inconclusive":
        closure = bfs_closure(ctx, args.n, args.mcolor, args.bfs_cap)
        report["bfs"] = closure
        if closure["status"] == "closed":
            report.update({"verdict": "finite", "certificate": "bfs"})
    report["irreducibility"] = irreducibility(ctx, args.n, args.mcolor)
    rows = [{"key": k, "value": str(report[k])} for k in ("verdict", "certificate", "witness", "checked_bound")]
    return CommandResult(report, rows, ['key', 'value'])


def cmd_order_table(args, ctx):
    rows = generator_order_table(args.r_min, args.r_max, args.theory)
    passed = all(r["pass"] for r in rows)
    return CommandResult({"theory": args.theory, "rows": rows, "pass": passed}, rows, ORDER_COLUMNS,
                         passed=passed)


def cmd_rt_compare(args, ctx):
    rctx = RTContext(ctx.rEff)
    report = check_equivalence(ctx, rctx, args.n, args.mcolor, trials=args.trials, seed=args.seed)
    report["unitarity_deviation"] = rt_unitarity_deviation(rctx, args.n, args.mcolor)
    report["braid_residual"] = rt_braid_residual(rctx, args.n, args.mcolor)
    report["printed_blocks"] = block_discrepancy(rctx)
    passed = (report["pass"] and report["unitarity_deviation"] < tqftrep_config.unitary_tolerance
              and report["braid_residual"] < tqftrep_config.numeric_tolerance)
    report["pass"] = passed
    rows = [{"key": k, "value": str(report[k])}
            for k in ("max_trace_dev", "worst_word", "unitarity_deviation", "braid_residual", "pass")]
    return CommandResult(report, rows, ['key', 'value'], passed=passed)


def cmd_paper_check(args, ctx):
    report = paper_check(seed=args.seed, quick=args.quick)
    lines = [show_line("%2d %s" % (c["id"], c["name"]), "pass", "%s (%.2fs)" % (get_status(c), c["seconds"]),
                       get_status(c), color=sys.stdout.isatty())
             for c in report["checks"]]
    lines.append("digest %s" % report["digest"])
    rows = [{"id": c["id"], "name": c["name"], "status": get_status(c)} for c in report["checks"]]
    return CommandResult(report, rows, ['id', 'name', 'status'], passed=report["pass"],
                         text="\n".join(lines))


def cmd_scan(args, ctx):
    session = None
    skip = set()
    if args.db:
        from .orm import sessionfactory, create_tables, ScanQuery, record_scan_row
        session = sessionfactory('sqlite:///' + args.db)
        create_tables(session)
        if args.resume:
            skip = ScanQuery(session).theory(args.theory).space(args.n, args.mcolor).levels_done()
            logging.info("Resuming: %d levels already stored" % len(skip))
    rows = scan_levels(args.r_min, args.r_max, args.theory, args.n, args.mcolor, skip,
                       args.max_word_len, args.bfs_cap)
    if session is not None:
        for row in rows:
            record_scan_row(session, row)
        session.close()
    return CommandResult({"rows": rows, "skipped": sorted(skip)}, rows, SCAN_COLUMNS)


COMMANDS = {
    'qnum': (cmd_qnum, True),
    'theta': (_coefficient('theta', theta), True),
    'tet': (_coefficient('tet', tet), True),
    'sixj': (_coefficient('sixj', sixj), True),
    'basis': (cmd_basis, True),
    'rep-matrix': (cmd_rep_matrix, True),
    'verify': (cmd_verify, True),
    'oracle-check': (cmd_oracle_check, True),
    'analyze-image': (cmd_analyze_image, True),
    'order-table': (cmd_order_table, False),
    'rt-compare': (cmd_rt_compare, True),
    'paper-check': (cmd_paper_check, False),
    'scan': (cmd_scan, False),
}


def _table(rows, columns):
    data = {}
    for col in columns:
        values = [row.get(col) for row in rows]
        if any(v is None for v in values):
            values = ['' if v is None else str(v) for v in values]
        data[col] = values
    return Table([data[col] for col in columns], names=columns)


def render(result, args, header, out):
    if args.format == 'json':
        doc = dict(result.payload, schema=SCHEMA)
        if header is not None:
            doc["context"] = header
        out.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
        return
    if args.format == 'csv':
        if result.rows is None:
            rows = [{"key": k, "value": json.dumps(v, sort_keys=True)} for k, v in sorted(result.payload.items())]
            columns = ['key', 'value']
        else:
            rows, columns = result.rows, result.columns
        if rows:
            _table(rows, columns).write(out, format='ascii.csv')
        else:
            out.write(",".join(columns) + "\n")
        return
    if header is not None:
        out.write("# %s\n" % ", ".join("%s=%s" % (k, header[k]) for k in sorted(header)))
    if result.text is not None:
        out.write(result.text + "\n")
    elif result.rows:
        _table(result.rows, result.columns).write(out, format='ascii.fixed_width_two_line')
    else:
        for key in sorted(result.payload):
            out.write("%s: %s\n" % (key, result.payload[key]))


def main(argv=None, out=None):
    """
    Entry point.

    Returns
    -------
    int
        0 on success, 1 when a verified property fails, 2 on invalid input
    """
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == 'scan' and args.resume and not args.db:
            parser.error("--resume needs --db")
    except SystemExit as e:
        return INVALID if e.code else SUCCESS
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format='%(levelname)s %(message)s')

    func, needs_ctx = COMMANDS[args.command]
    try:
        ctx, header = resolve_context(args) if needs_ctx else (None, None)
        if args.command == 'rt-compare' and args.trials is not None and args.trials < 1:
            raise ValueError("--trials must be positive")
        result = func(args, ctx)
    except (TQFTRepError, ValueError, ZeroDivisionError) as e:
        logging.error(str(e))
        return INVALID
    render(result, args, header, out)
    return SUCCESS if result.passed else FAILED
