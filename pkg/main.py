import argparse
import sys
from typing import Callable, Dict, List, Optional, Tuple

from src.config import OUTPUT_FORMATS, Config
from src.data.spec_loader import load_type
from src.errors import GLOrderError, InputError
from src.geometry.gltype import GLType, require_valid, strata, validate_type
from src.grading.lgroup import canonical, coerce, format_element, interval
from src.logs import get_logger, setup_logging
from src.order.ordermodel import local_type, twisted_column
from src.regrade.regrade import (b_algebra_series, coset_reps, regrade_component, regraded_series,
                                 transport_shift, triangular_series)
from src.ring.glring import monomial_basis
from src.save_state import save_sweep_results
from src.sweep import PropertySweep
from src.tilting.bundle import build_tilting, cartan, rigidity_report
from src.tilting.endo import endo_algebra
from src.tilting.quiver import arrow_generation_check, quiver_presentation
import src.render as render

logger = get_logger("main")

Result = Tuple[str, int]


def _nonnegative(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {value!r}")
    if number < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {number}")
    return number


def _positive(value: str) -> int:
    number = _nonnegative(value)
    if number == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return number


def parse_indices(text: Optional[str]) -> Optional[List[int]]:
    """'1,2,4' -> [0, 1, 3]"""
    if text is None:
        return None
    if not text.strip():
        return []
    try:
        return [int(part) - 1 for part in text.split(",")]
    except ValueError:
        raise InputError(f"expected comma-separated hyperplane indices, got {text!r}")


def _emit(args, payload_fn: Callable, text_fn: Callable, *values, dot_fn: Optional[Callable] = None) -> str:
    fmt = args.format
    if fmt == "json":
        return render.to_json(payload_fn(*values), indent=args.config.output.indent)
    if fmt == "dot":
        if dot_fn is None:
            raise InputError(f"--format dot is not available for '{args.command}'")
        return dot_fn(*values)
    return text_fn(*values)


def _load(args, validate: bool = True) -> GLType:
    t = load_type(args.spec)
    return require_valid(t) if validate else t


def cmd_validate(args) -> Result:
    t = _load(args, validate=False)
    report = validate_type(t)
    return _emit(args, render.validation_payload, render.validation_text, t, report), 0 if report.ok else 1


def cmd_interval(args) -> Result:
    t = _load(args)
    elements = interval(t)
    columns = [twisted_column(x, t) for x in elements] if args.columns else None
    return _emit(args, render.interval_payload, render.interval_text, elements, columns), 0


def cmd_cartan(args) -> Result:
    T = build_tilting(_load(args))
    return _emit(args, render.cartan_payload, render.cartan_text, cartan(T)), 0


def cmd_rigidity(args) -> Result:
    T = build_tilting(_load(args))
    report = rigidity_report(T, progress=args.config.verbose)
    return _emit(args, render.rigidity_payload, render.rigidity_text, report), 0 if report.ok else 1


def cmd_quiver(args) -> Result:
    T = build_tilting(_load(args))
    q = quiver_presentation(T, pivot=parse_indices(args.pivot))
    return _emit(args, render.quiver_payload, render.quiver_text, q, dot_fn=render.quiver_dot), 0


def cmd_endo(args) -> Result:
    T = build_tilting(_load(args))
    endo = endo_algebra(T)
    failures = endo.check_associativity() if args.check_associativity else None
    generation = arrow_generation_check(T, endo, progress=args.config.verbose) if args.generation else None
    status = 0
    if failures or (generation is not None and not generation.ok):
        status = 1
    return _emit(args, render.endo_payload, render.endo_text, endo, failures, generation), status


def cmd_hilbert(args) -> Result:
    t = _load(args)
    if args.degree:
        degrees = [coerce(text, t) for text in args.degree]
    else:
        degrees = [canonical(t, h) for h in range(args.config.sweep.max_degree + 1)]
    rows = []
    for g in degrees:
        basis = monomial_basis(g, t)
        row = {'degree': format_element(g), 'dim': len(basis)}
        if args.basis:
            row['basis'] = [str(m) for m in basis]
        rows.append(row)
    return _emit(args, render.hilbert_payload, render.hilbert_text, rows), 0


def cmd_regrade(args) -> Result:
    t = _load(args)
    if args.component is not None:
        component = regrade_component(args.component, t)
        return _emit(args, render.component_payload, render.component_text, component), 0
    max_degree = args.config.sweep.max_degree
    series = [{'h': h, 'regraded': r, 'triangular': tr, 'b_algebra': b}
              for h, (r, tr, b) in enumerate(zip(regraded_series(t, max_degree), triangular_series(t, max_degree),
                                                 b_algebra_series(t, max_degree)))]
    ok = render.regrade_series_payload(series)['ok']
    return _emit(args, render.regrade_series_payload, render.regrade_series_text, series), 0 if ok else 1


def cmd_local(args) -> Result:
    t = _load(args)
    subset = parse_indices(args.stratum)
    subsets = strata(t) if subset is None else [subset]
    items = [local_type(s, t) for s in subsets]
    return _emit(args, render.local_payload, render.local_text, items), 0


def cmd_transport(args) -> Result:
    t = _load(args)
    g = coerce(args.element, t)
    h, index = transport_shift(g, t)
    rep = coset_reps(t)[index]
    return _emit(args, render.transport_payload, render.transport_text, g, h, index, rep), 0


def cmd_sweep(args) -> Result:
    config = args.config
    sweep = PropertySweep(config)
    records = sweep.run()
    summary = sweep.summary()
    save_sweep_results(records, summary, config.output.results_dir, config.output.indent)
    if args.format == "json":
        out = render.to_json(summary, indent=config.output.indent)
    else:
        state = "OK" if summary['ok'] else "FAIL"
        out = (f"{state}: {summary['samples']} types checked, {len(summary['failures'])} failures; "
               f"results in {config.output.results_dir}/")
    return out, 0 if summary['ok'] else 1


COMMANDS: Dict[str, Callable] = {
    'validate': cmd_validate,
    'interval': cmd_interval,
    'cartan': cmd_cartan,
    'rigidity': cmd_rigidity,
    'quiver': cmd_quiver,
    'endo': cmd_endo,
    'hilbert': cmd_hilbert,
    'regrade': cmd_regrade,
    'local': cmd_local,
    'transport': cmd_transport,
    'sweep': cmd_sweep,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=OUTPUT_FORMATS, default=None)
    common.add_argument("--max-degree", type=_nonnegative, default=None)
    common.add_argument("-v", "--verbose", action="store_true", default=None)

    parser = argparse.ArgumentParser(prog="glorder", description="GL orders: tilting bundles, quivers and regrading")
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ('validate', 'interval', 'cartan', 'rigidity', 'quiver', 'endo',
                 'hilbert', 'regrade', 'local', 'transport'):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("spec", help="type spec file (JSON or YAML)")
        if name == 'interval':
            p.add_argument("--columns", action="store_true", help="print the column bundle of every P(x)")
        elif name == 'quiver':
            p.add_argument("--pivot", default=None, help="pivot hyperplanes, e.g. 1,2,3")
        elif name == 'endo':
            p.add_argument("--check-associativity", action="store_true")
            p.add_argument("--generation", action="store_true", help="run the arrow generation check")
        elif name == 'hilbert':
            p.add_argument("--degree", action="append", default=None, help="group element, e.g. x1+2*c")
            p.add_argument("--basis", action="store_true")
        elif name == 'regrade':
            p.add_argument("--component", type=int, default=None, help="print the block dimensions of degree h")
        elif name == 'local':
            p.add_argument("--stratum", default=None, help="hyperplane subset, e.g. 1,2")
        elif name == 'transport':
            p.add_argument("--element", required=True)

    p = sub.add_parser('sweep', parents=[common])
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--samples", type=_positive, default=None)
    p.add_argument("--results-dir", default=None)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        args.config = Config(max_degree=args.max_degree, verbose=args.verbose,
                             seed=getattr(args, 'seed', None), num_samples=getattr(args, 'samples', None),
                             results_dir=getattr(args, 'results_dir', None), output_format=args.format)
        setup_logging(args.config.verbose)
        args.format = args.config.output.format
        logger.debug(f"command {args.command} ({args.format})")
        out, status = COMMANDS[args.command](args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except GLOrderError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1

    print(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
