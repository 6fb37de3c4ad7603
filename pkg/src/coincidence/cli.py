"""Command-line interface.

Subcommands::

    index      coincidence index of one isometry (JSON)
    enumerate  coincidence rotations up to a Sigma bound (CSV or JSON)
    count      coefficients f(1..N) of a counting function (CSV or JSON)
    verify     closed form against the lattice oracle over an enumeration
    classify   point-group orbits of the CSLs of one index
    hierarchy  all / square / primitive square / CSL sublattice counts of Z^2

Exit codes: 0 success, 1 verification mismatch, 2 parse or domain error,
3 the isometry is not a coincidence isometry, 4 resource cap exceeded
(the resume token is printed on stderr).
"""

import argparse
from concurrent.futures import ProcessPoolExecutor
import csv
import io
import json
import math
import os
import sys
from fractions import Fraction

from . import __version__
from .counting import (COUNTING_FUNCTIONS, F_SIGMA1, F_SQUARE_ALL, F_SQUARE_PRIMITIVE, STRUCTURE_FUNCTION,
                       hierarchy_counts, materialize, sublattice_function)
from .engine import (IsometryHandle, classify_csls, enumerate_rotations, get_structure,
                     parse_resume_token, sigma_closed_form, sigma_oracle)
from .engine.sigma import action_matrix, cayley_inverse, csl_model_basis, denominator, integral_primitive
from .engine.structures import rotation_group
from .errors import CapExceeded, DomainError
from .linalg import common_denominator, format_matrix

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_NOT_COINCIDENCE = 3
EXIT_CAP = 4

CAP_ENV = "COINCIDENCE_CAP"
DEFAULT_CAP = 1_000_000


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def default_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"{CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise UsageError(f"{CAP_ENV} must be positive")
    return cap


# --- output helpers ----------------------------------------------------------------------------

def _text(x) -> str:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return str(x)


def emit_json(obj, out):
    out.write(json.dumps(obj, indent=2) + "\n")


def emit_record(record, fmt, out):
    """One record, as a JSON object or as field,value CSV rows."""
    if fmt == "json":
        emit_json(record, out)
        return
    rows = [(k, " ".join(map(str, v)) if isinstance(v, list) else v) for k, v in record.items()]
    emit_table(("field", "value"), rows, "csv", out)


def emit_table(header, rows, fmt, out):
    if fmt == "json":
        emit_json([dict(zip(header, r)) for r in rows], out)
        return
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    out.write(buf.getvalue())


# --- handles ------------------------------------------------------------------------------------

def build_handle(args, spec):
    given = [k for k in ("matrix", "quaternion", "pair", "quotient") if getattr(args, k, None)]
    if len(given) != 1:
        raise UsageError("give exactly one of --matrix, --quaternion, --pair, --quotient")
    kind = given[0]
    text = getattr(args, kind)
    if kind == "matrix":
        h = IsometryHandle.from_matrix(text)
        if args.reflect:
            raise UsageError("--reflect applies to parametrized input; give the improper matrix directly")
        return h
    if kind == "quaternion":
        return IsometryHandle.from_quaternion(text, reflect=args.reflect)
    if kind == "pair":
        return IsometryHandle.from_pair(text, reflect=args.reflect)
    ring = "cyclo" if spec.model == "cyclo" else "gauss"
    return IsometryHandle.from_quotient(text, ring=ring, reflect=args.reflect)


def _axis_angle(handle):
    """Primitive rotation axis and the exact cosine of the angle (d = 3)."""
    R = handle.rotation_part().matrix()
    q = integral_primitive(cayley_inverse(R))
    k = q.comps[0]
    v = q.comps[1:]
    n2 = q.norm2()
    cos = Fraction(k * k - (n2 - k * k)) / n2
    angle = math.degrees(math.acos(max(-1.0, min(1.0, float(cos)))))
    axis = [_text(c) for c in v] if any(v) else ["0", "0", "1"]
    return axis, _text(cos), round(angle, 10)


def _denominator_text(handle, spec):
    if spec.model == "cyclo":
        # the quotient alpha/beta acts on Z[xi]; its denominator is that of the action
        return str(common_denominator(action_matrix(handle, spec)))
    return _text(denominator(handle.matrix()))


def cmd_index(args, out):
    spec = get_structure(args.structure)
    handle = build_handle(args, spec)
    if not args.oracle:
        res = sigma_closed_form(handle, spec)
    else:
        res = sigma_oracle(handle, spec)
    record = {"structure": spec.name, "isometry": str(handle)}
    if not res.is_coincidence:
        record.update({"sigma": "infinite", "method": res.method})
        emit_record(record, args.format, out)
        return EXIT_NOT_COINCIDENCE
    full = sigma_oracle(handle, spec, with_csl=True)
    if full.sigma != res.sigma:
        raise AssertionError(f"closed form {res.sigma} disagrees with oracle {full.sigma}")
    record.update({
        "sigma": res.sigma,
        "denominator": _denominator_text(handle, spec),
        "method": res.method,
        "determinant": handle.determinant_sign(),
        "csl_basis": format_matrix(csl_model_basis(spec, full.csl)),
        "csl_basis_structure_coords": str(full.csl),
    })
    if handle.dim == 3:
        axis, cos, angle = _axis_angle(handle)
        record.update({"axis": axis, "cos_angle": cos, "angle_degrees": angle})
    emit_record(record, args.format, out)
    return EXIT_OK


def _start(args, spec):
    if args.resume:
        return parse_resume_token(args.resume, spec.name)
    return 1


def _cap(args):
    return args.cap if args.cap is not None else default_cap()


def cmd_enumerate(args, out):
    spec = get_structure(args.structure)
    start = _start(args, spec)
    status = EXIT_OK
    try:
        recs = enumerate_rotations(spec, args.max, cap=_cap(args), start=start)
    except CapExceeded as exc:
        recs = exc.partial
        sys.stderr.write(f"{exc}\nresume-token: {exc.resume_token}\n")
        status = EXIT_CAP
    rows = [(r.sigma, str(r.handle)) for r in recs]
    emit_table(["sigma", "rotation"], rows, args.format, out)
    return status


def _counting_function(name):
    if name in COUNTING_FUNCTIONS:
        return COUNTING_FUNCTIONS[name]
    extra = {"sigma1": F_SIGMA1, "square_all": F_SQUARE_ALL, "square_primitive": F_SQUARE_PRIMITIVE}
    if name in extra:
        return extra[name]
    if name.startswith("sublattices") and name[len("sublattices"):].isdigit():
        return sublattice_function(int(name[len("sublattices"):]))
    spec = get_structure(name)
    return COUNTING_FUNCTIONS[STRUCTURE_FUNCTION[spec.name]]


def cmd_count(args, out):
    f = _counting_function(args.structure)
    if args.max < 1:
        raise UsageError("--max must be positive")
    values = materialize(f, args.max)
    rows = [(m, values[m]) for m in range(1, args.max + 1)]
    emit_table(["m", "f(m)"], rows, args.format, out)
    return EXIT_OK


def _oracle_sigmas(payload):
    name, handles = payload
    return [sigma_oracle(h, name).sigma for h in handles]


def cmd_verify(args, out):
    spec = get_structure(args.structure)
    start = _start(args, spec)
    status = EXIT_OK
    try:
        recs = enumerate_rotations(spec, args.max, cap=_cap(args), start=start)
    except CapExceeded as exc:
        recs = exc.partial
        sys.stderr.write(f"{exc}\nresume-token: {exc.resume_token}\n")
        status = EXIT_CAP
    handles = [r.handle for r in recs]
    if args.threads > 1 and len(handles) > 1:
        size = max(1, len(handles) // (4 * args.threads))
        chunks = [(spec.name, handles[i:i + size]) for i in range(0, len(handles), size)]
        with ProcessPoolExecutor(max_workers=args.threads) as pool:
            oracle = [s for part in pool.map(_oracle_sigmas, chunks) for s in part]
    else:
        oracle = _oracle_sigmas((spec.name, handles))
    first = None
    for rec, o in zip(recs, oracle):
        if rec.sigma != o and first is None:
            first = f"rotation {rec.handle}: closed form {rec.sigma}, oracle {o}"
        if first is None:
            c = sigma_closed_form(rec.handle, spec).sigma
            if c != o:
                first = f"rotation {rec.handle}: closed form {c}, oracle {o}"
    f = COUNTING_FUNCTIONS[STRUCTURE_FUNCTION[spec.name]]
    group = len(rotation_group(spec))
    counts = {}
    for r in recs:
        counts[r.sigma] = counts.get(r.sigma, 0) + 1
    rows = []
    last = max((r.sigma for r in recs), default=start - 1) if status == EXIT_CAP else args.max
    for m in range(start, last + 1):
        expected = group * f(m)
        got = counts.get(m, 0)
        if got != expected and first is None:
            first = f"Sigma {m}: {got} rotations, expected {group} * f({m}) = {expected}"
        if got or expected:
            rows.append((m, got, expected, "ok" if got == expected else "MISMATCH"))
    emit_table(["sigma", "rotations", "expected", "status"], rows, args.format, out)
    if first is not None:
        sys.stderr.write(f"first mismatch: {first}\n")
        return EXIT_MISMATCH
    return status


def cmd_classify(args, out):
    spec = get_structure(args.structure)
    try:
        orbits = classify_csls(spec, args.sigma, cap=_cap(args))
    except CapExceeded as exc:
        sys.stderr.write(f"{exc}\nresume-token: {exc.resume_token}\n")
        return EXIT_CAP
    rows = [(i, o.sigma, o.size, o.rotations, str(o.representative), str(o.members[0]))
            for i, o in enumerate(orbits, 1)]
    emit_table(["orbit", "sigma", "size", "rotations", "representative", "first_csl"], rows, args.format, out)
    return EXIT_OK


def cmd_hierarchy(args, out):
    if args.max < 1:
        raise UsageError("--max must be positive")
    rows = []
    for m in range(1, args.max + 1):
        h = hierarchy_counts(m)
        rows.append((m, h.all, h.square, h.primitive_square, h.csl))
    emit_table(["m", "all", "square", "primitive_square", "csl"], rows, args.format, out)
    return EXIT_OK


# --- argument parsing ------------------------------------------------------------------------

def build_parser():
    p = _Parser(prog="coincidence", description="Exact coincidence indices for lattices and modules.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, table=True, bound=True):
        sp.add_argument("--structure", required=True, help="Z2, Z3, FCC, BCC, Z4, D4, D4*, M10, MB, MP, MF, MC, H4")
        if bound:
            sp.add_argument("--max", type=int, required=True, help="largest Sigma (or m) to include")
        sp.add_argument("--format", choices=("csv", "json"), default="csv" if table else "json")
        sp.add_argument("--cap", type=int, default=None, help=f"resource cap (default from ${CAP_ENV})")

    s = sub.add_parser("index", help="coincidence index of one isometry")
    common(s, table=False, bound=False)
    s.add_argument("--matrix", help="rows separated by ';', entries by ','")
    s.add_argument("--quaternion", help="(k,l,m,n) for d = 3")
    s.add_argument("--pair", help="(k,l,m,n),(k,l,m,n) for d = 4")
    s.add_argument("--quotient", help="(alpha)/(beta) or alpha:beta for planar structures")
    s.add_argument("--reflect", action="store_true", help="compose with the canonical reflection")
    s.add_argument("--oracle", action="store_true", help="use the lattice oracle instead of the closed form")
    s.set_defaults(func=cmd_index)

    s = sub.add_parser("enumerate", help="coincidence rotations up to --max")
    common(s)
    s.add_argument("--resume", help="resume token printed by an earlier capped run")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("count", help="counting-function coefficients f(1..max)")
    common(s)
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("verify", help="closed form against the oracle over an enumeration")
    common(s)
    s.add_argument("--resume", help="resume token printed by an earlier capped run")
    s.add_argument("--threads", type=int, default=1, help="worker processes for the oracle")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("classify", help="point-group orbits of the CSLs of one index")
    common(s, bound=False)
    s.add_argument("--sigma", type=int, required=True)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("hierarchy", help="sublattice counts of Z^2 by type")
    s.add_argument("--max", type=int, required=True)
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.set_defaults(func=cmd_hierarchy)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if getattr(args, "cap", None) is not None and args.cap < 1:
        sys.stderr.write("error: --cap must be positive\n")
        return EXIT_PARSE
    if getattr(args, "threads", 1) < 1:
        sys.stderr.write("error: --threads must be positive\n")
        return EXIT_PARSE
    try:
        return args.func(args, out)
    except (UsageError, DomainError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
