"""Linear projections: scheme fibers, fiber classification for
dimension-5 and dimension-6 sources, and finite projections of
parameterized rational curves.

Projecting from a center Lambda (a linear subspace) sends a point x to
the tuple of values of the cutting forms of Lambda at x.  For a finite
scheme the fibers partition the germs: each germ lands, with its full
length, in the fiber over the image of its support point.

For a rational curve given by an (N+1)-tuple of coprime degree-d binary
forms, projecting to a line or to a plane pulls fibers back to divisors
on P^1: the parameters in the fiber over y are the zeros of an explicit
binary form (or a gcd of two).  Multiplicities come from exact
square-free decomposition; rational parameters are expanded into
curvilinear germs, irrational ones are reported as clusters by degree
and multiplicity.
"""

from __future__ import annotations

from fractions import Fraction

from zeroreg.exactalg import Matrix, QQ
from zeroreg.forms import (
    binary_degree,
    binary_eval,
    binary_gcd,
    binary_is_zero,
    poly_degree,
    poly_divmod,
    poly_normalize,
    poly_taylor_shift,
    rational_roots,
    series_div,
    squarefree_decomposition,
)
from zeroreg.normality import hilbert_function
from zeroreg.scheme import (
    CurvilinearGerm,
    FiniteScheme,
    LinearSubspace,
    ProjPoint,
    max_collinear_length,
    span_dim,
)
from zeroreg.separation import FormSpaceRecipe, line_power_recipe, standard_recipe, t_monomial


class CenterMeetsScheme(Exception):
    """A support point of the scheme lies in the projection center."""


class CenterMeetsCurve(Exception):
    """The projection center intersects the curve."""


class CurveContainedInSubspace(Exception):
    """The curve lies inside the subspace being intersected."""


class DuplicateFiberSupport(Exception):
    """Two fiber parameters map to the same curve point (a node)."""


class NonCurvilinearFiber(Exception):
    """A multiple fiber point sits where the parameterization is not an
    immersion, so the fiber is not curvilinear."""


# ---------------------------------------------------------------------------
# projections of finite schemes


def _coord_key(point: ProjPoint):
    return tuple(c if isinstance(c, Fraction) else int(c.value) for c in point.coords)


def project_point(point: ProjPoint, center: LinearSubspace) -> ProjPoint:
    vals = [
        sum((c * x for c, x in zip(f, point.coords)), point.field(0))
        for f in center.cutting_forms
    ]
    if all(v == 0 for v in vals):
        raise CenterMeetsScheme("point lies in the projection center")
    return ProjPoint(vals, point.field)


def project_scheme(scheme: FiniteScheme, center: LinearSubspace):
    """Fibers of the projection, as (image point, selector) pairs with
    the selectors picking out whole germs; fiber lengths sum to the
    degree.  The list is sorted by image coordinates."""
    if len(center.cutting_forms) < 2:
        raise ValueError("projection target needs at least two cutting forms")
    if center.ambient != scheme.ambient:
        raise ValueError("center and scheme live in different spaces")
    buckets = {}
    for idx, g in enumerate(scheme.germs):
        image = project_point(g.support, center)
        buckets.setdefault(image, []).append(idx)
    fibers = []
    for image in sorted(buckets, key=_coord_key):
        selector = tuple(
            scheme.germs[i].length if i in buckets[image] else 0
            for i in range(len(scheme.germs))
        )
        fibers.append((image, selector))
    return fibers


def fiber_scheme(scheme: FiniteScheme, selector) -> FiniteScheme:
    return scheme.truncated(selector)


def yk_counts(fiber_lengths) -> dict:
    """Map k to the number of fibers of length at least k."""
    lengths = list(fiber_lengths)
    out = {}
    for k in range(1, max(lengths, default=0) + 1):
        c = sum(1 for l in lengths if l >= k)
        if c:
            out[k] = c
    return out


class MatherCheck:
    __slots__ = ("total", "bound", "holds")

    def __init__(self, total: int, bound: int):
        self.total = total
        self.bound = bound
        self.holds = total <= bound

    def __repr__(self):
        return "MatherCheck(total=%d, bound=%d, holds=%r)" % (self.total, self.bound, self.holds)


def _fiber_lengths(fiber) -> list:
    if isinstance(fiber, FiniteScheme):
        return [g.length for g in fiber.germs]
    if hasattr(fiber, "germs") and hasattr(fiber, "clusters"):
        lengths = [g.length for g in fiber.germs]
        for deg, mult in fiber.clusters:
            lengths.extend([mult] * deg)
        return lengths
    return [int(l) for l in fiber]


def mather_inequality(fiber, n: int) -> MatherCheck:
    """Sum of (local length + local length - 1) over the fiber compared
    with n + 1; every fiber of a generic projection of a smooth n-fold
    satisfies it."""
    lengths = _fiber_lengths(fiber)
    return MatherCheck(sum(2 * l - 1 for l in lengths), n + 1)


# ---------------------------------------------------------------------------
# fiber classification inside a plane


class FiberProfile:
    __slots__ = (
        "n",
        "degree",
        "support_size",
        "span",
        "max_collinear",
        "reduced",
        "mather_total",
        "case",
        "predicted_normality",
    )

    def __init__(self, **kw):
        for name in self.__slots__:
            setattr(self, name, kw[name])

    def to_jsonable(self):
        return {name: getattr(self, name) for name in self.__slots__}

    def __repr__(self):
        return "FiberProfile(case=%r, degree=%d, predicted=%r)" % (
            self.case, self.degree, self.predicted_normality,
        )


def _small_fiber_prediction(d: int, span: int):
    if d == 1:
        return 0
    if span == 1:
        return d - 1
    if d <= span + 1:
        return 1
    return 2


def classify_fiber(fiber: FiniteScheme, n: int) -> FiberProfile:
    """Case label and predicted minimal normality degree for a fiber of
    a generic projection of a smooth n-fold (n = 5 or 6) from a line.

    Labels for n = 5: small, 1.i, 1.ii, 1.iii, 2.i, 2.ii, Y6,
    impossible, high-span.  For n = 6: small, 5.line, 5.span2,
    5.span2.4sec, 6.line, 6.span2, 6.span2.4sec, 6.span2.5sec,
    6.span2.conic, Y7, impossible, high-span.
    """
    if n not in (5, 6):
        raise ValueError("classification implemented for n = 5 and n = 6")
    d = fiber.degree
    if d > n + 2:
        raise ValueError("fiber length exceeds n + 2")
    lengths = [g.length for g in fiber.germs]
    reduced = all(l == 1 for l in lengths)
    mather = sum(2 * l - 1 for l in lengths)
    span = span_dim(fiber)
    col, _ = max_collinear_length(fiber)
    base = dict(
        n=n,
        degree=d,
        support_size=len(fiber.germs),
        span=span,
        max_collinear=col,
        reduced=reduced,
        mather_total=mather,
    )

    def profile(case, predicted):
        return FiberProfile(case=case, predicted_normality=predicted, **base)

    if mather > n + 1:
        return profile("impossible", None)
    if span > 2:
        return profile("high-span", None)
    if d <= 4:
        return profile("small", _small_fiber_prediction(d, span))

    if n == 5:
        if d == 5:
            if reduced:
                if span == 1:
                    return profile("1.i", 4)
                if col >= 4:
                    return profile("1.ii", 3)
                return profile("1.iii", 2)
            if span == 1:
                return profile("2.i", 4)
            return profile("2.ii", 3 if col >= 4 else 2)
        # d == 6; the multiplicity inequality already forced reducedness
        if col >= 4:
            return profile("Y6", col - 1)
        return profile("Y6", 2 if hilbert_function(fiber, 2) == 6 else 3)

    # n == 6
    if d == 5:
        if span == 1:
            return profile("5.line", 4)
        if col >= 4:
            return profile("5.span2.4sec", 3)
        return profile("5.span2", 2)
    if d == 6:
        if span == 1:
            return profile("6.line", 5)
        if col == 5:
            return profile("6.span2.5sec", 4)
        if col == 4:
            return profile("6.span2.4sec", 3)
        if hilbert_function(fiber, 2) == 6:
            return profile("6.span2", 2)
        return profile("6.span2.conic", 3)
    # d == 7, reduced forced
    return profile("Y7", col - 1 if col >= 5 else 3)


def recipe_for_fiber(profile: FiberProfile):
    """The separating family prescribed for the fiber's case, as a
    (recipe, degree) pair, or None when no case family applies.  The
    recipe binds U to the coordinate not vanishing on the fiber and
    T1 to the line of any aligned subscheme."""
    case = profile.case
    k = profile.predicted_normality
    if case in ("1.i", "2.i", "5.line"):
        return line_power_recipe(4), 4
    if case == "6.line":
        return line_power_recipe(5), 5
    if case in ("1.ii", "5.span2.4sec", "6.span2.4sec", "6.span2.conic"):
        return standard_recipe(extra={3: [t_monomial(2, (3, 0))]}), 3
    if case == "2.ii":
        if k == 3:
            return standard_recipe(extra={3: [t_monomial(2, (3, 0))]}), 3
        return standard_recipe(), 2
    if case == "6.span2.5sec":
        return (
            standard_recipe(extra={3: [t_monomial(2, (3, 0))], 4: [t_monomial(2, (4, 0))]}),
            4,
        )
    if case in ("1.iii", "5.span2", "6.span2"):
        return standard_recipe(), 2
    if case in ("Y6", "Y7"):
        top = 5 if profile.n == 5 else 6
        return (
            standard_recipe(extra={j: [t_monomial(2, (j, 0))] for j in range(3, top + 1)}),
            top,
        )
    return None


# ---------------------------------------------------------------------------
# rational curves and their finite projections


class RationalCurve:
    """A base-point-free parameterization P^1 -> P^N by binary forms of
    one common degree, with exact rational coefficients."""

    __slots__ = ("forms", "field")

    def __init__(self, forms, field=QQ):
        if field is not QQ:
            raise ValueError("rational curves are supported over Q only")
        forms = tuple(tuple(field(c) for c in f) for f in forms)
        if len(forms) < 2:
            raise ValueError("need at least two coordinate forms")
        widths = {len(f) for f in forms}
        if len(widths) != 1:
            raise ValueError("coordinate forms must share one degree")
        if next(iter(widths)) < 2:
            raise ValueError("the parameterization must have degree >= 1")
        nonzero = [f for f in forms if not binary_is_zero(f)]
        if not nonzero:
            raise ValueError("the zero tuple does not parameterize a curve")
        g = nonzero[0]
        for f in nonzero[1:]:
            g = binary_gcd(g, f)
            if binary_degree(g) == 0:
                break
        if binary_degree(g) != 0:
            raise ValueError("coordinate forms share a zero (a base point)")
        self.forms = forms
        self.field = field

    @property
    def ambient(self) -> int:
        return len(self.forms) - 1

    @property
    def degree(self) -> int:
        return binary_degree(self.forms[0])

    def point(self, s, t) -> ProjPoint:
        s, t = self.field(s), self.field(t)
        return ProjPoint([binary_eval(f, s, t) for f in self.forms], self.field)

    def jet(self, s0, t0, length: int):
        """Taylor expansions of the homogeneous coordinates in a local
        parameter at (s0 : t0), as length-`length` series."""
        s0, t0 = self.field(s0), self.field(t0)
        if s0 != 0:
            r = t0 / s0
            return tuple(poly_taylor_shift(f, r, length) for f in self.forms)
        if t0 == 0:
            raise ValueError("(0 : 0) is not a parameter value")
        return tuple(
            poly_taylor_shift(tuple(reversed(f)), self.field(0), length)
            for f in self.forms
        )

    def is_nondegenerate(self) -> bool:
        """True when the image spans the whole ambient space (possible
        only for degree >= ambient)."""
        return Matrix([list(f) for f in self.forms], field=self.field).rank() == self.ambient + 1

    def __repr__(self):
        return "RationalCurve(degree=%d in P^%d)" % (self.degree, self.ambient)


def _germ_at_parameter(curve: RationalCurve, s0, t0, length: int) -> CurvilinearGerm:
    jet = curve.jet(s0, t0, length)
    chart = next((i for i, s in enumerate(jet) if s[0] != 0), None)
    if chart is None:
        raise ValueError("parameterization vanishes at the parameter")
    unit = jet[chart]
    jets = [
        None if i == chart else series_div(s, unit, length) for i, s in enumerate(jet)
    ]
    if length >= 2 and all(j[1] == 0 for j in jets if j is not None):
        raise NonCurvilinearFiber(
            "parameterization is not an immersion at a multiple fiber point"
        )
    support = ProjPoint([s[0] for s in jet], curve.field)
    return CurvilinearGerm(support, chart, jets, curve.field)


class CurveFiber:
    """A fiber of a finite projection of a rational curve: curvilinear
    germs at the rational parameters, irrational parameters summarized
    as (degree, multiplicity) clusters, and the total length."""

    __slots__ = ("image", "germs", "parameters", "clusters", "total")

    def __init__(self, image, germs, parameters, clusters, total):
        self.image = image
        self.germs = tuple(germs)
        self.parameters = tuple(parameters)
        self.clusters = tuple(clusters)
        self.total = total

    def scheme(self) -> FiniteScheme:
        if self.clusters:
            raise ValueError("fiber has irrational points; no exact scheme over Q")
        return FiniteScheme(self.germs)

    def __repr__(self):
        return "CurveFiber(total=%d, germs=%d, clusters=%r)" % (
            self.total, len(self.germs), list(self.clusters),
        )


def _compose_linear(curve: RationalCurve, coeffs):
    width = curve.degree + 1
    out = [curve.field(0)] * width
    for c, f in zip(coeffs, curve.forms):
        if c == 0:
            continue
        for i, v in enumerate(f):
            out[i] = out[i] + c * v
    return tuple(out)


def _fiber_from_binary_form(curve: RationalCurve, image, form) -> CurveFiber:
    """Decompose the divisor of a nonzero binary form into germs on the
    curve (rational roots) and clusters (irrational ones)."""
    total = binary_degree(form)
    g = poly_normalize(form)
    inf_mult = total - poly_degree(g)
    germs, parameters = [], []
    if inf_mult:
        parameters.append(((0, 1), inf_mult))
    remaining = g
    for r, m in rational_roots(g):
        parameters.append(((1, r), m))
        for _ in range(m):
            remaining = poly_divmod(remaining, (-r, Fraction(1)))[0]
    clusters = []
    if poly_degree(remaining) >= 1:
        clusters = [
            (poly_degree(fac), mult)
            for fac, mult in squarefree_decomposition(remaining)
        ]
    accounted = sum(m for _, m in parameters) + sum(d * m for d, m in clusters)
    if accounted != total:
        raise AssertionError("fiber decomposition lost multiplicity")
    for (s0, t0), m in parameters:
        germs.append(_germ_at_parameter(curve, s0, t0, m))
    supports = [g_.support for g_ in germs]
    if len(set(supports)) != len(supports):
        raise DuplicateFiberSupport(
            "distinct parameters map to one point; the fiber is not a disjoint union of arcs"
        )
    return CurveFiber(image, germs, parameters, clusters, total)


def curve_fiber(curve: RationalCurve, center: LinearSubspace, y) -> CurveFiber:
    """Fiber over y in P^1 of the projection from a center of dimension
    N - 2; always of total length equal to the curve's degree."""
    if center.ambient != curve.ambient or len(center.cutting_forms) != 2:
        raise ValueError("center must be cut by exactly two forms in the curve's space")
    a = _compose_linear(curve, center.cutting_forms[0])
    b = _compose_linear(curve, center.cutting_forms[1])
    if binary_degree(binary_gcd(a, b)) != 0:
        raise CenterMeetsCurve("center intersects the curve")
    y0, y1 = (curve.field(c) for c in y)
    if y0 == 0 and y1 == 0:
        raise ValueError("(0 : 0) is not a point of the target line")
    form = tuple(y1 * xa - y0 * xb for xa, xb in zip(a, b))
    return _fiber_from_binary_form(curve, (y0, y1), form)


def curve_fiber_scheme(curve: RationalCurve, center: LinearSubspace, y) -> FiniteScheme:
    return curve_fiber(curve, center, y).scheme()


def plane_fiber(curve: RationalCurve, center: LinearSubspace, y) -> CurveFiber:
    """Fiber over y in P^2 of the projection from a center of dimension
    N - 3; total length 0 when y is not on the image curve."""
    if center.ambient != curve.ambient or len(center.cutting_forms) != 3:
        raise ValueError("center must be cut by exactly three forms in the curve's space")
    composed = [_compose_linear(curve, f) for f in center.cutting_forms]
    g = composed[0]
    for f in composed[1:]:
        g = binary_gcd(g, f)
        if binary_degree(g) == 0:
            break
    if binary_degree(g) != 0:
        raise CenterMeetsCurve("center intersects the curve")
    ys = [curve.field(c) for c in y]
    if all(v == 0 for v in ys):
        raise ValueError("(0 : 0 : 0) is not a point of the target plane")
    i0 = next(i for i, v in enumerate(ys) if v != 0)
    minors = []
    for j in range(3):
        if j == i0:
            continue
        minors.append(
            tuple(ys[i0] * xj - ys[j] * xi for xj, xi in zip(composed[j], composed[i0]))
        )
    if all(binary_is_zero(m) for m in minors):
        raise AssertionError("projection collapses the curve despite a disjoint center")
    nonzero = [m for m in minors if not binary_is_zero(m)]
    h = nonzero[0]
    for m in nonzero[1:]:
        h = binary_gcd(h, m)
    if binary_degree(h) == 0:
        return CurveFiber(tuple(ys), (), (), (), 0)
    return _fiber_from_binary_form(curve, tuple(ys), h)


def curve_linear_section_length(curve: RationalCurve, subspace: LinearSubspace) -> int:
    """Length of the scheme-theoretic intersection of the parameterized
    curve with a linear subspace."""
    if subspace.ambient != curve.ambient:
        raise ValueError("subspace lives in the wrong ambient space")
    composed = [_compose_linear(curve, f) for f in subspace.cutting_forms]
    nonzero = [f for f in composed if not binary_is_zero(f)]
    if not nonzero:
        raise CurveContainedInSubspace("every cutting form vanishes on the curve")
    g = nonzero[0]
    for f in nonzero[1:]:
        g = binary_gcd(g, f)
        if binary_degree(g) == 0:
            break
    return binary_degree(g)


# ---------------------------------------------------------------------------
# codimension formulas for the generic-projection loci


def schubert_codim(t: int, N: int, k: int, n: int) -> int:
    """Codimension t(N - k - n + t) in the Grassmannian G(k, N) of the
    k-planes meeting an n-fold in a subspace of dimension >= t - 1."""
    if min(t, N, k, n) < 0:
        raise ValueError("arguments must be nonnegative")
    return t * (N - k - n + t)


def tangency_locus_codim(q: int) -> int:
    """Expected codimension q(q + 1) of the locus of points whose
    tangency with a generic center has corank q."""
    if q < 0:
        raise ValueError("q must be nonnegative")
    return q * (q + 1)


def secant_locus_dim_bound(n: int, k: int) -> int:
    """Dimension bound n + 1 + k for the locus of (n + 2 - k)-secant
    lines of a smooth n-fold."""
    if not 1 <= k <= n + 1:
        raise ValueError("k must satisfy 1 <= k <= n + 1")
    return n + 1 + k
