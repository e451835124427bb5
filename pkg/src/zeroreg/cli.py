"""Command-line front end: JSON in, canonical JSON out.

Exit codes follow one convention everywhere: 0 when the computation
succeeds and any asserted property holds, 1 when a checked property is
violated (the offending evidence is still printed as JSON), 2 for
malformed input or usage errors (message on standard error).
"""

from __future__ import annotations

import argparse
import sys

from .bounds import BoundQuery, known_regularity_bound, bel_bound, eisenbud_goto_bound
from .exactalg import QQ, prime_field, scalar_str
from .harness import SUITE_NAMES, run_suite
from .jsonio import (
    DocumentFormatError,
    canonical_json,
    curve_loads,
    form_to_jsonable,
    recipe_loads,
    recipe_to_jsonable,
    scheme_loads,
    scheme_to_jsonable,
    subspace_loads,
)
from .normality import (
    finite_scheme_regularity,
    hilbert_function_values,
    is_k_normal,
    min_normal_degree,
    secant_normality_verdict,
)
from .projection import (
    classify_fiber,
    curve_fiber,
    curve_linear_section_length,
    fiber_scheme,
    project_scheme,
    recipe_for_fiber,
    yk_counts,
)
from .scheme import EnumerationCapExceeded, invariant_t, max_collinear_length, span_dim
from .separation import (
    DegenerateConfiguration,
    SeparatorConfig,
    family_rank,
    recipe_space,
    separator_forms,
    standard_recipe,
)


class _UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as err:
        raise _UsageError("cannot read %s: %s" % (path, err)) from None


def _load_scheme(path: str):
    return scheme_loads(_read(path))


def _emit(doc) -> None:
    sys.stdout.write(canonical_json(doc))


def _point_out(point):
    return [scalar_str(c) for c in point.coords]


# ---------------------------------------------------------------------------
# subcommand handlers, each returning the exit code


def _cmd_hilbert(args) -> int:
    if args.max_degree < 0:
        raise _UsageError("--max-degree must be nonnegative")
    x = _load_scheme(args.scheme)
    _emit({"phi": hilbert_function_values(x, args.max_degree)})
    return 0


def _cmd_normality(args) -> int:
    if args.degree < 0:
        raise _UsageError("--degree must be nonnegative")
    x = _load_scheme(args.scheme)
    normal = is_k_normal(x, args.degree)
    _emit({"degree": x.degree, "k": args.degree, "normal": normal})
    return 0 if normal else 1


def _cmd_regularity(args) -> int:
    x = _load_scheme(args.scheme)
    k = min_normal_degree(x)
    _emit({"degree": x.degree, "min_normal_degree": k,
           "regularity": finite_scheme_regularity(x)})
    return 0


def _cmd_invariant_t(args) -> int:
    x = _load_scheme(args.scheme)
    try:
        t = invariant_t(x)
    except EnumerationCapExceeded as err:
        raise _UsageError(str(err)) from None
    _emit({"degree": x.degree, "span": span_dim(x), "t": t,
           "max_collinear": max_collinear_length(x)[0]})
    return 0


def _cmd_secant(args) -> int:
    x = _load_scheme(args.scheme)
    try:
        verdict = secant_normality_verdict(x)
    except ValueError as err:
        raise _UsageError(str(err)) from None
    _emit(verdict.to_jsonable())
    return 0 if verdict.equivalence_holds else 1


def _cmd_separate(args) -> int:
    if args.degree < 0:
        raise _UsageError("--degree must be nonnegative")
    x = _load_scheme(args.scheme)
    recipe = recipe_loads(_read(args.recipe)) if args.recipe else standard_recipe()
    try:
        forms = recipe_space(recipe, args.degree, x.ambient)
    except ValueError as err:
        raise _UsageError(str(err)) from None
    rank = family_rank(x, forms)
    separates = rank == x.degree
    _emit({"degree": x.degree, "k": args.degree, "family_rank": rank,
           "separates": separates})
    return 0 if separates else 1


def _cmd_lemma26(args) -> int:
    field = args.field
    try:
        config = SeparatorConfig(
            [_parse_scalar_arg(u, field) for u in args.aligned.split(",")],
            _parse_scalar_arg(args.a, field),
            _parse_scalar_arg(args.b, field),
            [_parse_point_arg(p, field) for p in args.off],
            field,
        )
    except ValueError as err:
        raise _UsageError(str(err)) from None
    try:
        forms = separator_forms(config)
    except DegenerateConfiguration as err:
        _emit({"n": config.n, "case": config.case, "error": str(err)})
        return 1
    points = [_point_out(p) for p in config.points]
    _emit({"n": config.n, "case": config.case, "points": points,
           "forms": [form_to_jsonable(f) for f in forms]})
    return 0


def _cmd_project(args) -> int:
    x = _load_scheme(args.scheme)
    center = subspace_loads(_read(args.center))
    try:
        fibers = project_scheme(x, center)
    except ValueError as err:
        raise _UsageError(str(err)) from None
    out = []
    for image, selector in fibers:
        piece = fiber_scheme(x, selector)
        out.append({"image": _point_out(image), "length": piece.degree,
                    "fiber": scheme_to_jsonable(piece)})
    counts = yk_counts(f["length"] for f in out)
    _emit({"fibers": out, "counts": {str(k): v for k, v in counts.items()}})
    return 0


def _cmd_classify_fiber(args) -> int:
    x = _load_scheme(args.scheme)
    try:
        profile = classify_fiber(x, args.n)
    except ValueError as err:
        raise _UsageError(str(err)) from None
    doc = profile.to_jsonable()
    pair = recipe_for_fiber(profile)
    if pair is None:
        doc["recipe"] = None
    else:
        recipe, k = pair
        doc["recipe"] = recipe_to_jsonable(recipe)
        doc["recipe_degree"] = k
    _emit(doc)
    return 0


def _cmd_curve_fiber(args) -> int:
    curve = curve_loads(_read(args.curve))
    center = subspace_loads(_read(args.center))
    y = _parse_coords_arg(args.y, curve.field)
    try:
        fiber = curve_fiber(curve, center, y)
    except ValueError as err:
        raise _UsageError(str(err)) from None
    _emit({
        "image": [scalar_str(c) for c in fiber.image],
        "total": fiber.total,
        "germ_lengths": [g.length for g in fiber.germs],
        "parameters": [[[scalar_str(s), scalar_str(t)], m]
                       for (s, t), m in fiber.parameters],
        "clusters": [[d, m] for d, m in fiber.clusters],
    })
    return 0


def _cmd_curve_section(args) -> int:
    curve = curve_loads(_read(args.curve))
    sub = subspace_loads(_read(args.subspace))
    try:
        length = curve_linear_section_length(curve, sub)
    except ValueError as err:
        raise _UsageError(str(err)) from None
    bound = curve.degree - (curve.ambient - 1 - sub.dim)
    nondeg = curve.is_nondegenerate()
    within = length <= bound
    _emit({"length": length, "bound": bound, "subspace_dim": sub.dim,
           "nondegenerate": nondeg, "within_bound": within})
    return 0 if within or not nondeg else 1


def _cmd_bounds(args) -> int:
    try:
        q = BoundQuery(args.dim, args.degree, args.codim,
                       smooth=not args.not_smooth,
                       contained_in_quadric=args.on_quadric,
                       integral=not args.not_integral)
        best = known_regularity_bound(q, quadric_generators=args.quadric_generators)
    except ValueError as err:
        raise _UsageError(str(err)) from None
    _emit({
        "eisenbud_goto": eisenbud_goto_bound(args.degree, args.codim),
        "best_known": best.value,
        "bel": bel_bound(args.dim, args.degree, args.codim),
    })
    return 0


def _cmd_verify(args) -> int:
    try:
        report = run_suite(args.suite, args.trials, args.seed,
                           prime=args.field, jobs=args.jobs)
    except ValueError as err:
        raise _UsageError(str(err)) from None
    _emit(report.to_jsonable())
    return 0 if report.passed else 1


# ---------------------------------------------------------------------------
# argument plumbing


def _parse_field_arg(text: str):
    if text == "Q":
        return QQ
    if text.startswith("fp:"):
        try:
            return prime_field(int(text[3:]))
        except ValueError as err:
            raise argparse.ArgumentTypeError(str(err)) from None
    raise argparse.ArgumentTypeError("field must be Q or fp:PRIME")


def _parse_prime_arg(text: str) -> int:
    if not text.startswith("fp:"):
        raise argparse.ArgumentTypeError("field must be fp:PRIME")
    try:
        prime_field(int(text[3:]))
    except ValueError as err:
        raise argparse.ArgumentTypeError(str(err)) from None
    return int(text[3:])


def _parse_scalar_arg(text, field):
    from .exactalg import parse_scalar

    try:
        return parse_scalar(str(text).strip(), field)
    except (ValueError, ZeroDivisionError) as err:
        raise _UsageError("bad scalar %r: %s" % (text, err)) from None


def _parse_coords_arg(text, field):
    return tuple(_parse_scalar_arg(c, field) for c in text.split(":"))


def _parse_point_arg(text, field):
    from .scheme import ProjPoint

    coords = _parse_coords_arg(text, field)
    try:
        return ProjPoint(coords, field)
    except ValueError as err:
        raise _UsageError("bad point %r: %s" % (text, err)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zeroreg",
        description="Exact computations on finite subschemes of projective "
                    "space: Hilbert functions, normality, projections and "
                    "randomized verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilbert", help="Hilbert function values of a scheme")
    p.add_argument("--scheme", required=True, metavar="FILE")
    p.add_argument("--max-degree", type=int, required=True)
    p.set_defaults(fn=_cmd_hilbert)

    p = sub.add_parser("normality", help="check k-normality of a scheme")
    p.add_argument("--scheme", required=True, metavar="FILE")
    p.add_argument("--degree", type=int, required=True, help="the k to check")
    p.set_defaults(fn=_cmd_normality)

    p = sub.add_parser("regularity", help="minimal normal degree and regularity")
    p.add_argument("--scheme", required=True, metavar="FILE")
    p.set_defaults(fn=_cmd_regularity)

    p = sub.add_parser("invariant-t", help="general-position level of a scheme")
    p.add_argument("--scheme", required=True, metavar="FILE")
    p.set_defaults(fn=_cmd_invariant_t)

    p = sub.add_parser("secant", help="long-secant normality dichotomy")
    p.add_argument("--scheme", required=True, metavar="FILE")
    p.set_defaults(fn=_cmd_secant)

    p = sub.add_parser("separate", help="check a separating family on a scheme")
    p.add_argument("--scheme", required=True, metavar="FILE")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--recipe", metavar="FILE",
                   help="recipe JSON; default is the standard family")
    p.set_defaults(fn=_cmd_separate)

    p = sub.add_parser("lemma26", help="plane separators confined to a small "
                                       "monomial family")
    p.add_argument("--aligned", required=True,
                   help="comma-separated first coordinates of the aligned points")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--off", action="append", required=True, metavar="X:Y:Z",
                   help="off-line point (repeat two or three times)")
    p.add_argument("--field", type=_parse_field_arg, default=QQ)
    p.set_defaults(fn=_cmd_lemma26)

    p = sub.add_parser("project", help="fibers of a linear projection of a scheme")
    p.add_argument("--scheme", required=True, metavar="FILE")
    p.add_argument("--center", required=True, metavar="FILE",
                   help="subspace JSON for the projection center")
    p.set_defaults(fn=_cmd_project)

    p = sub.add_parser("classify-fiber", help="case label and prediction for a "
                                              "plane fiber")
    p.add_argument("--scheme", required=True, metavar="FILE")
    p.add_argument("--n", type=int, required=True, choices=(5, 6))
    p.set_defaults(fn=_cmd_classify_fiber)

    p = sub.add_parser("curve-fiber", help="fiber of a pencil projection of a "
                                           "rational curve")
    p.add_argument("--curve", required=True, metavar="FILE")
    p.add_argument("--center", required=True, metavar="FILE")
    p.add_argument("--y", required=True, metavar="S:T",
                   help="target point of the pencil")
    p.set_defaults(fn=_cmd_curve_fiber)

    p = sub.add_parser("curve-section", help="length of a linear section of a "
                                             "rational curve")
    p.add_argument("--curve", required=True, metavar="FILE")
    p.add_argument("--subspace", required=True, metavar="FILE")
    p.set_defaults(fn=_cmd_curve_section)

    p = sub.add_parser("bounds", help="regularity bounds for a projective variety")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--codim", type=int, required=True)
    p.add_argument("--not-smooth", action="store_true")
    p.add_argument("--not-integral", action="store_true")
    p.add_argument("--on-quadric", choices=("yes", "no", "unknown"),
                   default="unknown", type=str)
    p.add_argument("--quadric-generators", action="store_true",
                   help="assume the ideal is generated by quadrics")
    p.set_defaults(fn=_cmd_bounds)

    p = sub.add_parser("verify", help="run a randomized verification suite")
    p.add_argument("--suite", required=True, choices=SUITE_NAMES)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--field", type=_parse_prime_arg, default=None,
                   metavar="fp:PRIME",
                   help="run over a prime field, cross-checking 1%% against Q")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=_cmd_verify)

    return parser


_QUADRIC = {"yes": True, "no": False, "unknown": None}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "on_quadric", None) is not None:
        args.on_quadric = _QUADRIC[args.on_quadric]
    try:
        return args.fn(args)
    except (_UsageError, DocumentFormatError) as err:
        print("error: %s" % err, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
