"""Reading and writing scheme, curve and subspace documents as JSON.

Scalars travel as exact strings ("5", "-3/4"); floats are rejected so a
document can never smuggle in rounding.  Output is canonical — sorted
keys, no whitespace, one trailing newline — so byte identity means
semantic identity.

A scheme document looks like::

    {"field": "Q" | {"Fp": p},
     "ambient": N,
     "germs": [{"point": [...], "chart": c, "jet": [[...], null, ...]}]}

`chart` may be omitted for the first nonzero coordinate of the point,
and `jet` may be omitted for a reduced (length-1) point.  When present,
`jet` lists one coefficient series per coordinate, with null in the
chart slot (that coordinate is identically 1 on the arc).
"""

from __future__ import annotations

import json

from .exactalg import QQ, parse_scalar, prime_field, scalar_str
from .projection import RationalCurve
from .scheme import CurvilinearGerm, FiniteScheme, LinearSubspace, ProjPoint


class DocumentFormatError(ValueError):
    """A JSON document does not follow the expected layout."""


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _reject_float(text):
    raise DocumentFormatError(
        "floating-point literal %r: use exact \"p/q\" strings" % text)


def parse_document(text: str):
    try:
        return json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as err:
        raise DocumentFormatError("not valid JSON: %s" % err) from None


def field_to_jsonable(field):
    if field is QQ:
        return "Q"
    return {"Fp": field.modulus}


def field_from_jsonable(tag):
    if tag == "Q":
        return QQ
    if isinstance(tag, dict) and set(tag) == {"Fp"}:
        try:
            return prime_field(int(tag["Fp"]))
        except (TypeError, ValueError) as err:
            raise DocumentFormatError(str(err)) from None
    raise DocumentFormatError("field must be \"Q\" or {\"Fp\": p}, got %r" % (tag,))


def _scalar_out(x):
    return scalar_str(x)


def _scalar_in(raw, field):
    if isinstance(raw, bool) or not isinstance(raw, (int, str)):
        raise DocumentFormatError("scalar must be an integer or string, got %r" % (raw,))
    try:
        return parse_scalar(str(raw), field)
    except (ValueError, ZeroDivisionError) as err:
        raise DocumentFormatError("bad scalar %r: %s" % (raw, err)) from None


def germ_to_jsonable(germ: CurvilinearGerm):
    doc = {"point": [_scalar_out(c) for c in germ.support.coords]}
    default_chart = next(i for i, c in enumerate(germ.support.coords) if c != 0)
    if germ.chart != default_chart:
        doc["chart"] = germ.chart
    if germ.length > 1:
        doc["chart"] = germ.chart
        doc["jet"] = [None if j is None else [_scalar_out(c) for c in j]
                      for j in germ.jets]
    return doc


def germ_from_jsonable(doc, field) -> CurvilinearGerm:
    if not isinstance(doc, dict) or "point" not in doc:
        raise DocumentFormatError("germ must be an object with a \"point\" key")
    extra = set(doc) - {"point", "chart", "jet"}
    if extra:
        raise DocumentFormatError("unknown germ keys %s" % sorted(extra))
    coords = [_scalar_in(c, field) for c in doc["point"]]
    try:
        point = ProjPoint(coords, field)
    except ValueError as err:
        raise DocumentFormatError(str(err)) from None
    chart = doc.get("chart")
    if chart is None:
        chart = next(i for i, c in enumerate(point.coords) if c != 0)
    elif not isinstance(chart, int) or not 0 <= chart <= point.ambient:
        raise DocumentFormatError("chart must be a coordinate index")
    raw_jet = doc.get("jet")
    if raw_jet is None:
        jets = [None if i == chart else (point.coords[i] / point.coords[chart],)
                for i in range(point.ambient + 1)]
    else:
        if len(raw_jet) != point.ambient + 1:
            raise DocumentFormatError("jet must list one series per coordinate")
        jets = []
        for i, series in enumerate(raw_jet):
            if i == chart:
                if series is not None:
                    raise DocumentFormatError("the chart slot of a jet must be null")
                jets.append(None)
            elif not isinstance(series, list) or not series:
                raise DocumentFormatError("jet series must be nonempty lists")
            else:
                jets.append(tuple(_scalar_in(c, field) for c in series))
    try:
        return CurvilinearGerm(point, chart, jets, field)
    except ValueError as err:
        raise DocumentFormatError(str(err)) from None


def scheme_to_jsonable(scheme: FiniteScheme):
    return {"field": field_to_jsonable(scheme.field),
            "ambient": scheme.ambient,
            "germs": [germ_to_jsonable(g) for g in scheme.germs]}


def scheme_from_jsonable(doc) -> FiniteScheme:
    if not isinstance(doc, dict):
        raise DocumentFormatError("scheme must be a JSON object")
    missing = {"field", "ambient", "germs"} - set(doc)
    if missing:
        raise DocumentFormatError("scheme is missing keys %s" % sorted(missing))
    field = field_from_jsonable(doc["field"])
    ambient = doc["ambient"]
    if not isinstance(ambient, int) or ambient < 1:
        raise DocumentFormatError("ambient must be a positive integer")
    germs = [germ_from_jsonable(g, field) for g in doc["germs"]]
    for g in germs:
        if g.ambient != ambient:
            raise DocumentFormatError(
                "germ lives in P^%d, document says P^%d" % (g.ambient, ambient))
    try:
        return FiniteScheme(germs, field)
    except ValueError as err:
        raise DocumentFormatError(str(err)) from None


def scheme_dumps(scheme: FiniteScheme) -> str:
    return canonical_json(scheme_to_jsonable(scheme))


def scheme_loads(text: str) -> FiniteScheme:
    return scheme_from_jsonable(parse_document(text))


def curve_to_jsonable(curve: RationalCurve):
    return {"field": field_to_jsonable(curve.field),
            "forms": [[_scalar_out(c) for c in f] for f in curve.forms]}


def curve_from_jsonable(doc) -> RationalCurve:
    if not isinstance(doc, dict) or "forms" not in doc:
        raise DocumentFormatError("curve must be an object with a \"forms\" key")
    field = field_from_jsonable(doc.get("field", "Q"))
    forms = [[_scalar_in(c, field) for c in f] for f in doc["forms"]]
    try:
        return RationalCurve(forms, field)
    except ValueError as err:
        raise DocumentFormatError(str(err)) from None


def curve_loads(text: str) -> RationalCurve:
    return curve_from_jsonable(parse_document(text))


def subspace_to_jsonable(sub: LinearSubspace):
    return {"field": field_to_jsonable(sub.field),
            "ambient": sub.ambient,
            "cutting_forms": [[_scalar_out(c) for c in f]
                              for f in sub.cutting_forms]}


def subspace_from_jsonable(doc) -> LinearSubspace:
    if not isinstance(doc, dict):
        raise DocumentFormatError("subspace must be a JSON object")
    missing = {"ambient", "cutting_forms"} - set(doc)
    if missing:
        raise DocumentFormatError("subspace is missing keys %s" % sorted(missing))
    field = field_from_jsonable(doc.get("field", "Q"))
    ambient = doc["ambient"]
    if not isinstance(ambient, int) or ambient < 1:
        raise DocumentFormatError("ambient must be a positive integer")
    forms = [[_scalar_in(c, field) for c in f] for f in doc["cutting_forms"]]
    try:
        return LinearSubspace(ambient, forms, field)
    except ValueError as err:
        raise DocumentFormatError(str(err)) from None


def subspace_loads(text: str) -> LinearSubspace:
    return subspace_from_jsonable(parse_document(text))


def form_to_jsonable(form):
    """A form dict {exponents: coefficient} as a sorted list of
    [exponent-list, coefficient-string] pairs."""
    return [[list(mon), _scalar_out(c)]
            for mon, c in sorted(form.items(), key=lambda kv: kv[0])]


def recipe_to_jsonable(recipe):
    doc = {"t_count": recipe.t_count, "standard": recipe.standard,
           "levels": {}}
    for j in sorted(recipe.spaces):
        doc["levels"][str(j)] = [form_to_jsonable(f) for f in recipe.spaces[j]]
    return doc


def form_from_jsonable(doc):
    if not isinstance(doc, list):
        raise DocumentFormatError("a form must be a list of [exponents, scalar]")
    form = {}
    for pair in doc:
        if not (isinstance(pair, list) and len(pair) == 2):
            raise DocumentFormatError("a form term must be [exponents, scalar]")
        exps, raw = pair
        if not (isinstance(exps, list)
                and all(isinstance(e, int) and e >= 0 for e in exps)):
            raise DocumentFormatError("exponents must be nonnegative integers")
        form[tuple(exps)] = _scalar_in(raw, QQ)
    return form


def recipe_from_jsonable(doc):
    from .separation import FormSpaceRecipe

    if not isinstance(doc, dict):
        raise DocumentFormatError("recipe must be a JSON object")
    missing = {"t_count", "levels"} - set(doc)
    if missing:
        raise DocumentFormatError("recipe is missing keys %s" % sorted(missing))
    t_count = doc["t_count"]
    if not isinstance(t_count, int) or t_count < 1:
        raise DocumentFormatError("t_count must be a positive integer")
    levels = doc["levels"]
    if not isinstance(levels, dict):
        raise DocumentFormatError("levels must map degree strings to form lists")
    spaces = {}
    for key, forms in levels.items():
        try:
            j = int(key)
        except ValueError:
            raise DocumentFormatError("level key %r is not an integer" % (key,)) from None
        spaces[j] = [form_from_jsonable(f) for f in forms]
    standard = doc.get("standard", True)
    if not isinstance(standard, bool):
        raise DocumentFormatError("standard must be a boolean")
    try:
        return FormSpaceRecipe(t_count, spaces, standard)
    except ValueError as err:
        raise DocumentFormatError(str(err)) from None


def recipe_loads(text: str):
    return recipe_from_jsonable(parse_document(text))
