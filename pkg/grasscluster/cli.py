# --------------------------------------------------
# Command-line front end.
#
#   grasscluster pp      {enumerate, toggle, eta, macmahon}
#   grasscluster csp     {verify, census}
#   grasscluster quiver  {show, mutate, rho}
#   grasscluster conf    {sample, check}
#   grasscluster trop    {rotate, bijection}
#   grasscluster plabic  {standard, move, strands}
#
# Exit codes: 0 success, 1 verification failure, 2 usage error,
# 3 resource cap. Errors go to stderr as one JSON line.
# --------------------------------------------------

import argparse
import csv
import json
import logging
import sys
from concurrent.futures import ThreadPoolExecutor

from grasscluster.config import CSP_COST_CAP, DEFAULT_TRIALS, get_settings
from grasscluster.correspondence import PartitionToGZCorrespondence, PlabicToQuiverCorrespondence
from grasscluster.element.plabic import (
    PlabicGraph,
    contract_expand,
    quiver_of,
    square_move,
    standard_graph,
    strand_permutation,
)
from grasscluster.element.matrix import random_generic_matrix
from grasscluster.element.plane_partition import (
    PlanePartition,
    _check_box_parameters,
    enumerate_partitions,
    macmahon,
    macmahon_by_product,
)
from grasscluster.element.quiver import (
    Quiver,
    extended_quiver,
    parse_vertex,
    rho_sequence,
    rotation_permutation,
    standard_quiver,
    vertex_str,
)
from grasscluster.errors import (
    DegenerateSeedError,
    GrassclusterError,
    InputFormatError,
    NonGenericError,
    ParameterError,
    ResourceCapError,
)
from grasscluster.space.confspace import DecoratedConfiguration, identity_checks, random_configuration
from grasscluster.space.csp import trop_weight_census, verify_csp, weight_census
from grasscluster.space.tropical import (
    ROTATE_METHODS,
    TropicalPoint,
    bijection,
    random_tropical_point,
    trop_rotate,
)

logger = logging.getLogger(__name__)

FORMATS = ("table", "json", "csv")


# ---------------------------------------------------------------------
# Argument types
# ---------------------------------------------------------------------

def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _add_output(parser, formats=FORMATS):
    parser.add_argument("--format", choices=formats, default="table", help="Output format (default: table).")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="More logging on stderr; repeatable.")


def _add_box(parser, need_ab: bool = True):
    if need_ab:
        parser.add_argument("--a", type=_positive_int, required=True)
        parser.add_argument("--b", type=_positive_int, required=True)
    parser.add_argument("--c", type=_nonneg_int, required=True)


def _add_grassmannian(parser, required: bool = True):
    parser.add_argument("--a", type=_positive_int, required=required)
    parser.add_argument("--n", type=_positive_int, required=required)


def _add_random(parser, trials: bool = False):
    parser.add_argument("--seed", type=_nonneg_int, default=0, help="Seed threaded through every random draw.")
    if trials:
        parser.add_argument("--trials", type=_positive_int, default=DEFAULT_TRIALS,
                            help=f"Random samples to check (default: {DEFAULT_TRIALS}).")


# ---------------------------------------------------------------------
# Input / output
# ---------------------------------------------------------------------

def _read_json(source: str):
    """JSON from a file path, or from stdin when source is '-'."""
    try:
        if source == "-":
            return json.load(sys.stdin)
        with open(source, "r") as file:
            return json.load(file)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"Input is not valid JSON: {exc}")
    except OSError as exc:
        raise InputFormatError(f"Cannot read {source}: {exc}")


def _cell(value) -> str:
    if isinstance(value, bool):
        return "yes" if value else "NO"
    if isinstance(value, (list, tuple, dict)):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def _print_table(rows: list, columns: list):
    cells = [[_cell(row[c]) for c in columns] for row in rows]
    widths = [max([len(c)] + [len(line[i]) for line in cells]) for i, c in enumerate(columns)]
    print("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip())
    for line in cells:
        print("  ".join(x.ljust(w) for x, w in zip(line, widths)).rstrip())


def _emit(args, payload, rows: list = None, columns: list = None):
    """
    Print one result.

    Parameters:
    - payload: JSON-ready object printed under --format json
    - rows: list of dicts for table/csv output (payload is used when absent)
    - columns: column order for rows
    """
    if args.format == "json" or rows is None:
        print(json.dumps(payload, separators=(",", ":")) if args.format != "table" else _cell(payload))
        return
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_cell(row[c]) for c in columns])
        return
    _print_table(rows, columns)


def _verdict(ok: bool, what: str) -> int:
    if ok:
        logger.info("%s: all checks passed", what)
        return 0
    logger.info("%s: verification FAILED", what)
    return 1


def _read_partition(args) -> PlanePartition:
    return PlanePartition.from_json(_read_json(args.input))


# ---------------------------------------------------------------------
# pp
# ---------------------------------------------------------------------

def cmd_pp_enumerate(args) -> int:
    _check_box_parameters(args.a, args.b, args.c)
    count = macmahon_by_product(args.a, args.b, args.c).at_one()
    if count > CSP_COST_CAP:
        raise ResourceCapError(f"P({args.a},{args.b},{args.c}) has {count} elements (cap {CSP_COST_CAP}).",
                               estimated_cost=count)
    partitions = list(enumerate_partitions(args.a, args.b, args.c))
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        for pi in partitions:
            writer.writerow(pi.to_csv_row())
        return 0
    rows = [{"index": i, "size": pi.size(), "entries": pi.tolist()} for i, pi in enumerate(partitions)]
    _emit(args, [pi.tolist() for pi in partitions], rows, ["index", "size", "entries"])
    return 0


def cmd_pp_toggle(args) -> int:
    pi = _read_partition(args)
    toggled = pi.toggle(args.i, args.j, args.c)
    _emit(args, toggled.tolist())
    return 0


def cmd_pp_eta(args) -> int:
    pi = _read_partition(args)
    if args.frames:
        frames = pi.eta_frames(args.c)
        rows = [{"step": t, "entries": frame.tolist()} for t, frame in enumerate(frames)]
        _emit(args, [frame.tolist() for frame in frames], rows, ["step", "entries"])
        return 0
    _emit(args, pi.eta_power(args.power, args.c).tolist())
    return 0


def cmd_pp_macmahon(args) -> int:
    M = macmahon(args.a, args.b, args.c)
    coefficients = M.coefficients
    rows = [{"degree": k, "coefficient": x} for k, x in enumerate(coefficients)]
    payload = {"a": args.a, "b": args.b, "c": args.c, "coefficients": coefficients, "count": M.at_one()}
    _emit(args, payload, rows, ["degree", "coefficient"])
    return 0


# ---------------------------------------------------------------------
# csp
# ---------------------------------------------------------------------

def cmd_csp_verify(args) -> int:
    settings = get_settings()
    logger.info("csp verify (%d,%d,%d) on %d worker(s)", args.a, args.b, args.c, settings.threads)
    report = verify_csp(args.a, args.b, args.c, cap=args.cap, threads=settings.threads)
    _emit(args, report.to_json(), report.rows(as_float=args.float), ["d", "fixed", "value", "ok"])
    return _verdict(report.all_equal, "csp verify")


def cmd_csp_census(args) -> int:
    _check_box_parameters(args.a, args.b, args.c)
    by_patterns = weight_census(args.a, args.b, args.c)
    by_tropical = trop_weight_census(args.a, args.b, args.c)
    weights = sorted(set(by_patterns) | set(by_tropical), reverse=True)
    rows = [{"weight": list(mu), "patterns": by_patterns.get(mu, 0), "tropical": by_tropical.get(mu, 0),
             "ok": by_patterns.get(mu, 0) == by_tropical.get(mu, 0)} for mu in weights]
    ok = by_patterns == by_tropical
    payload = {"a": args.a, "b": args.b, "c": args.c, "agree": ok,
               "census": [{"weight": row["weight"], "count": row["patterns"]} for row in rows]}
    _emit(args, payload, rows, ["weight", "patterns", "tropical", "ok"])
    return _verdict(ok, "csp census")


# ---------------------------------------------------------------------
# quiver
# ---------------------------------------------------------------------

def _load_quiver(args) -> Quiver:
    if args.input is not None:
        if args.input == "-":
            return Quiver.from_json(_read_json("-"))
        return Quiver.parse(args.input)
    if args.a is None or args.n is None:
        raise ParameterError("Give --a and --n, or --input.")
    return extended_quiver(args.a, args.n) if args.extended else standard_quiver(args.a, args.n)


def _show_quiver(args, Q: Quiver):
    rows = [{"tail": vertex_str(u), "head": vertex_str(v), "multiplicity": m} for u, v, m in Q.arrows()]
    _emit(args, Q.to_json(), rows, ["tail", "head", "multiplicity"])


def cmd_quiver_show(args) -> int:
    _show_quiver(args, _load_quiver(args))
    return 0


def cmd_quiver_mutate(args) -> int:
    Q = _load_quiver(args)
    sequence = [parse_vertex(text) for text in args.at]
    logger.info("mutating at %s", ", ".join(vertex_str(k) for k in sequence))
    _show_quiver(args, Q.mutate_sequence(sequence))
    return 0


def cmd_quiver_rho(args) -> int:
    Q = extended_quiver(args.a, args.n) if args.extended else standard_quiver(args.a, args.n)
    sequence = rho_sequence(args.a, args.n)
    rotated = Q.mutate_sequence(sequence)
    try:
        sigma = rotation_permutation(args.a, args.n, args.extended)
    except ParameterError:
        if not args.check:
            raise
        sigma = None
    isomorphic = sigma is not None and rotated.relabel(sigma) == Q
    moved = {} if sigma is None else {u: v for u, v in sigma.items() if u != v}
    rows = [{"vertex": vertex_str(u), "relabelled": vertex_str(v)} for u, v in moved.items()]
    payload = {
        "a": args.a, "n": args.n, "extended": args.extended,
        "sequence": [vertex_str(k) for k in sequence],
        "sigma": {vertex_str(u): vertex_str(v) for u, v in moved.items()},
        "isomorphic": isomorphic,
    }
    _emit(args, payload, rows, ["vertex", "relabelled"])
    if args.check:
        return _verdict(isomorphic, "quiver rho")
    return 0


# ---------------------------------------------------------------------
# conf
# ---------------------------------------------------------------------

def cmd_conf_sample(args) -> int:
    cfg = random_configuration(args.a, args.n, seed=args.seed, positive=args.positive)
    rows = [{"column": i + 1, "v": list(map(str, cfg.v(i + 1))), "lambda": str(cfg.lam_at(i + 1))}
            for i in range(cfg.n)]
    _emit(args, cfg.to_json(), rows, ["column", "v", "lambda"])
    return 0


def _check_one(task):
    a, n, seed, positive = task
    try:
        return seed, identity_checks(random_configuration(a, n, seed=seed, positive=positive))
    except (DegenerateSeedError, NonGenericError) as exc:
        logger.warning("conf check: seed %d skipped, %s", seed, exc)
        return seed, None


def cmd_conf_check(args) -> int:
    if args.input is not None:
        cfg = DecoratedConfiguration.from_json(_read_json(args.input))
        a, n = cfg.a, cfg.n
        results = [(None, identity_checks(cfg))]
    else:
        if args.a is None or args.n is None:
            raise ParameterError("Give --a and --n, or --input.")
        a, n = args.a, args.n
        settings = get_settings()
        logger.info("conf check a=%d n=%d: %d trial(s) on %d worker(s)", a, n, args.trials, settings.threads)
        tasks = [(a, n, args.seed + t, args.positive) for t in range(args.trials)]
        with ThreadPoolExecutor(max_workers=settings.threads) as pool:
            results = list(pool.map(_check_one, tasks))

    skipped = [seed for seed, checks in results if checks is None]
    checked = [(seed, checks) for seed, checks in results if checks is not None]
    if not checked:
        raise NonGenericError(f"All {len(results)} sampled configurations were degenerate.")
    names = list(checked[0][1])
    rows = []
    for name in names:
        failed = [seed for seed, checks in checked if not checks[name]]
        rows.append({"check": name, "passed": len(checked) - len(failed), "failed": len(failed),
                     "ok": not failed, "seeds": failed})
    ok = all(row["ok"] for row in rows)
    payload = {"a": a, "n": n, "trials": len(results), "skipped": skipped, "all_passed": ok, "checks": rows}
    _emit(args, payload, rows, ["check", "passed", "failed", "ok"])
    return _verdict(ok, "conf check")


# ---------------------------------------------------------------------
# trop
# ---------------------------------------------------------------------

def cmd_trop_rotate(args) -> int:
    if args.input is not None:
        pt = TropicalPoint.from_json(_read_json(args.input))
        _emit(args, trop_rotate(pt, method=args.method).to_json())
        return 0
    if args.a is None or args.n is None:
        raise ParameterError("Give --a and --n, or --input.")
    rows = []
    for t in range(args.trials):
        pt = random_tropical_point(args.a, args.n, seed=args.seed + t)
        rotated = trop_rotate(pt, method=args.method)
        rows.append({"seed": args.seed + t, "point": pt.to_json()["x"], "rotated": rotated.to_json()["x"]})
    payload = {"a": args.a, "n": args.n, "method": args.method, "trials": args.trials, "points": rows}
    _emit(args, payload, rows, ["seed", "point", "rotated"])
    return 0


def cmd_trop_bijection(args) -> int:
    if args.input is not None:
        pi = _read_partition(args)
        _emit(args, bijection(pi, args.c).to_json())
        return 0
    if args.a is None or args.b is None:
        raise ParameterError("Give --a and --b, or --input.")
    correspondence = PartitionToGZCorrespondence(args.a, args.b, args.c, debug=args.verbose >= 2)
    onto, round_trip, equivariant = correspondence.test_correspondence()
    rows = [{"check": "onto_cone", "ok": onto},
            {"check": "round_trip", "ok": round_trip},
            {"check": "eta_equivariance", "ok": equivariant}]
    ok = onto and round_trip and equivariant
    payload = {"a": args.a, "b": args.b, "c": args.c, "size": len(correspondence.source),
               "all_passed": ok, "checks": rows}
    _emit(args, payload, rows, ["check", "ok"])
    return _verdict(ok, "trop bijection")


# ---------------------------------------------------------------------
# plabic
# ---------------------------------------------------------------------

def _load_graph(args) -> PlabicGraph:
    if args.input is not None:
        if args.input == "-":
            return PlabicGraph.from_json(_read_json("-"))
        return PlabicGraph.parse(args.input)
    if args.a is None or args.n is None:
        raise ParameterError("Give --a and --n, or --input.")
    return standard_graph(args.a, args.n)


def _face_key(text: str):
    """'(i,j)' or "i'" names a face by label, '{1,3}' by dominating set."""
    text = text.strip()
    if text.startswith("{") and text.endswith("}"):
        try:
            return tuple(int(x) for x in text[1:-1].split(",") if x.strip())
        except ValueError:
            raise InputFormatError(f"Bad dominating set {text!r}")
    return parse_vertex(text)


def _face_rows(G: PlabicGraph) -> list:
    return [{"face": str(G.face_name(f)), "set": sorted(G.dominating_sets[f]), "sides": len(f),
             "boundary": f.is_boundary} for f in G.faces]


def cmd_plabic_standard(args) -> int:
    G = _load_graph(args)
    if args.format == "dot":
        print(G.to_dot())
        return 0
    _emit(args, G.to_json(), _face_rows(G), ["face", "set", "sides", "boundary"])
    return 0


def cmd_plabic_move(args) -> int:
    G = _load_graph(args)
    Q = quiver_of(G)
    if args.face is not None:
        key = _face_key(args.face)
        moved = square_move(G, key)
        expected = Q.mutate(G.face_name(G.find_face(key)))
        kind = "square"
    else:
        moved = contract_expand(G, args.vertex)
        expected = Q
        kind = "contract_expand"
    ok = quiver_of(moved) == expected
    if args.format == "dot":
        print(moved.to_dot())
    else:
        payload = {"move": kind, "quiver_ok": ok, "graph": moved.to_json()}
        _emit(args, payload, _face_rows(moved), ["face", "set", "sides", "boundary"])
    if args.check_exchange and kind == "square":
        correspondence = PlabicToQuiverCorrespondence(G, debug=args.verbose >= 2)
        ok = ok and correspondence.exchange_holds(G.face_name(G.find_face(key)),
                                                  random_generic_matrix(G.a, G.n, args.seed))
    return _verdict(ok, f"plabic move ({kind})")


def cmd_plabic_strands(args) -> int:
    G = _load_graph(args)
    perm = strand_permutation(G)
    rows = [{"source": i, "target": perm[i], "length": len(G.strands[i])} for i in sorted(perm)]
    expected = all(perm[i] == (i + G.a - 1) % G.n + 1 for i in perm)
    payload = {"a": G.a, "n": G.n, "permutation": {str(i): perm[i] for i in sorted(perm)},
               "shift_by_a": expected,
               "dominating_sets": {str(G.face_name(f)): sorted(s) for f, s in G.dominating_sets.items()}}
    _emit(args, payload, rows, ["source", "target", "length"])
    return _verdict(expected, "plabic strands")


# ---------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grasscluster",
        description="Exact cluster coordinates on Grassmannians, plane-partition toggles and cyclic sieving.")
    groups = parser.add_subparsers(dest="group", metavar="GROUP")
    groups.required = True

    # pp
    pp = groups.add_parser("pp", help="Plane partitions in an a×b×c box.").add_subparsers(dest="command")
    pp.required = True
    p = pp.add_parser("enumerate", help="List P(a,b,c) in lexicographic order.")
    _add_box(p)
    _add_output(p)
    p.set_defaults(handler=cmd_pp_enumerate)

    p = pp.add_parser("toggle", help="Apply the toggle t_{i,j} to a partition read as JSON.")
    _add_box(p, need_ab=False)
    p.add_argument("--i", type=_nonneg_int, required=True)
    p.add_argument("--j", type=_nonneg_int, required=True)
    p.add_argument("--input", default="-", help="JSON file, or '-' for stdin (default).")
    _add_output(p)
    p.set_defaults(handler=cmd_pp_toggle)

    p = pp.add_parser("eta", help="Apply η (or η^d) to a partition read as JSON.")
    _add_box(p, need_ab=False)
    p.add_argument("--power", type=_nonneg_int, default=1, help="Apply η this many times (default 1).")
    p.add_argument("--frames", action="store_true", help="Print every intermediate toggle state.")
    p.add_argument("--input", default="-", help="JSON file, or '-' for stdin (default).")
    _add_output(p)
    p.set_defaults(handler=cmd_pp_eta)

    p = pp.add_parser("macmahon", help="Coefficients of the MacMahon polynomial M_{a,b,c}(q).")
    _add_box(p)
    _add_output(p)
    p.set_defaults(handler=cmd_pp_macmahon)

    # csp
    csp = groups.add_parser("csp", help="Cyclic sieving checks.").add_subparsers(dest="command")
    csp.required = True
    p = csp.add_parser("verify", help="Compare #Fix(η^d) with M_{a,b,c}(ζ^d) for every d.")
    _add_box(p)
    p.add_argument("--cap", type=_positive_int, default=CSP_COST_CAP, help="Largest |P(a,b,c)|·n to attempt.")
    p.add_argument("--float", action="store_true", help="Show root-of-unity values as complex floats.")
    _add_output(p)
    p.set_defaults(handler=cmd_csp_verify)

    p = csp.add_parser("census", help="Weight census through GT patterns and through the tropical weight map.")
    _add_box(p)
    _add_output(p)
    p.set_defaults(handler=cmd_csp_census)

    # quiver
    quiver = groups.add_parser("quiver", help="The quivers Q_{a,n}.").add_subparsers(dest="command")
    quiver.required = True
    for name, handler, text in (("show", cmd_quiver_show, "Print the arrows of a quiver."),
                                ("mutate", cmd_quiver_mutate, "Mutate a quiver along a vertex sequence.")):
        p = quiver.add_parser(name, help=text)
        _add_grassmannian(p, required=False)
        p.add_argument("--extended", action="store_true", help="Use the extended quiver with primed vertices.")
        p.add_argument("--input", help="Quiver file in the data directory (.json or .txt), or '-' for stdin.")
        if name == "mutate":
            p.add_argument("--at", action="append", required=True, metavar="VERTEX",
                           help="Vertex such as '(1,2)'; repeat for a sequence.")
        _add_output(p)
        p.set_defaults(handler=handler)

    p = quiver.add_parser("rho", help="Run ρ and report the frozen relabelling back onto Q_{a,n}.")
    _add_grassmannian(p)
    p.add_argument("--extended", action="store_true")
    p.add_argument("--check", action="store_true", help="Exit 1 unless σ(ρQ) = Q.")
    _add_output(p)
    p.set_defaults(handler=cmd_quiver_rho)

    # conf
    conf = groups.add_parser("conf", help="Decorated configurations.").add_subparsers(dest="command")
    conf.required = True
    p = conf.add_parser("sample", help="Draw a generic configuration.")
    _add_grassmannian(p)
    _add_random(p)
    p.add_argument("--positive", action="store_true", help="Totally positive representative.")
    _add_output(p)
    p.set_defaults(handler=cmd_conf_sample)

    p = conf.add_parser("check", help="Run the identity suite on random configurations.")
    _add_grassmannian(p, required=False)
    _add_random(p, trials=True)
    p.add_argument("--positive", action="store_true")
    p.add_argument("--input", help="Check one configuration JSON instead ('-' for stdin).")
    _add_output(p)
    p.set_defaults(handler=cmd_conf_check)

    # trop
    trop = groups.add_parser("trop", help="Tropical points and the bijection with P(a,b,c).").add_subparsers(
        dest="command")
    trop.required = True
    p = trop.add_parser("rotate", help="Apply the tropical rotation R^t.")
    _add_grassmannian(p, required=False)
    _add_random(p, trials=True)
    p.add_argument("--method", choices=ROTATE_METHODS, default="both")
    p.add_argument("--input", help="Tropical point JSON ('-' for stdin); otherwise random points are used.")
    _add_output(p)
    p.set_defaults(handler=cmd_trop_rotate)

    p = trop.add_parser("bijection", help="Check P(a,b,c) ↔ Q(a,b,c), or map one partition.")
    p.add_argument("--a", type=_positive_int)
    p.add_argument("--b", type=_positive_int)
    p.add_argument("--c", type=_nonneg_int, required=True)
    p.add_argument("--input", help="Plane partition JSON ('-' for stdin) to send to its GZ vector.")
    _add_output(p)
    p.set_defaults(handler=cmd_trop_bijection)

    # plabic
    plabic = groups.add_parser("plabic", help="Reduced plabic graphs.").add_subparsers(dest="command")
    plabic.required = True
    p = plabic.add_parser("standard", help="The standard graph Γ_{a,n} with its faces.")
    _add_grassmannian(p, required=False)
    p.add_argument("--input", help="Plabic graph JSON in the data directory, or '-' for stdin.")
    _add_output(p, FORMATS + ("dot",))
    p.set_defaults(handler=cmd_plabic_standard)

    p = plabic.add_parser("move", help="Square move at a face, or contraction-expansion at a white vertex.")
    _add_grassmannian(p, required=False)
    p.add_argument("--input", help="Plabic graph JSON in the data directory, or '-' for stdin.")
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--face", help="Face label such as '(1,1)' or dominating set such as '{1,3}'.")
    target.add_argument("--vertex", help="Bivalent white vertex id for the contraction-expansion move.")
    p.add_argument("--check-exchange", action="store_true",
                   help="Also test the Plücker exchange relation on a random point.")
    _add_random(p)
    _add_output(p, FORMATS + ("dot",))
    p.set_defaults(handler=cmd_plabic_move)

    p = plabic.add_parser("strands", help="Strand permutation and dominating sets.")
    _add_grassmannian(p, required=False)
    p.add_argument("--input", help="Plabic graph JSON in the data directory, or '-' for stdin.")
    _add_output(p)
    p.set_defaults(handler=cmd_plabic_strands)

    return parser


def parse_args(argv=None):
    return build_parser().parse_args(argv)


def _configure_logging(verbosity: int):
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def run(argv=None) -> int:
    """Parse argv, dispatch, and map errors to exit codes."""
    try:
        args = parse_args(argv)
    except SystemExit as exc:
        # argparse prints its own usage message
        return 2 if exc.code not in (0, None) else 0
    _configure_logging(getattr(args, "verbose", 0))
    try:
        return args.handler(args)
    except GrassclusterError as exc:
        print(json.dumps(exc.to_payload()), file=sys.stderr)
        return exc.exit_code
    except FileNotFoundError as exc:
        print(json.dumps({"error": str(exc), "type": "FileNotFoundError"}), file=sys.stderr)
        return 2


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
