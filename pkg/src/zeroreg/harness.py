"""Seeded random generators and high-volume verification suites.

Every suite draws its inputs from a splittable 64-bit seed stream, so a
run is reproducible from (suite, trials, seed) alone and parallel runs
agree byte-for-byte with serial ones.  Generators plant the features a
suite needs (collinear subsets, long secants, specific fiber shapes),
then verify them post hoc and redraw degenerate attempts with a logged
count — never silently.

Verification always goes through the exact rank oracles; the generators
certify general position with independent closed-form tests (never by
running the property under test), so a failing trial is a genuine
counterexample and is reported with a replayable JSON artifact.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from math import comb

from .exactalg import Matrix, QQ, prime_field
from .forms import (
    binary_linear_combination,
    evaluate_form,
    poly_add,
    poly_degree,
    poly_derivative,
    poly_divmod,
    poly_gcd,
    poly_mul,
    poly_scale,
)
from .jsonio import scheme_to_jsonable
from .normality import (
    hilbert_function,
    min_normal_degree,
    normality_threshold_bound,
    secant_normality_verdict,
)
from .projection import (
    CenterMeetsCurve,
    DuplicateFiberSupport,
    NonCurvilinearFiber,
    RationalCurve,
    classify_fiber,
    curve_fiber,
    curve_linear_section_length,
    mather_inequality,
    plane_fiber,
    recipe_for_fiber,
)
from .scheme import (
    FiniteScheme,
    LinearSubspace,
    ProjPoint,
    apply_matrix,
    enumeration_cap,
    germ_on_line,
    invariant_t,
    make_germ,
    max_collinear_length,
    reduced_germ,
    span_dim,
    subspace_from_rows,
)
from .separation import DegenerateConfiguration, SeparatorConfig, recipe_separates, separator_forms, separator_monomial_basis

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix64(z: int) -> int:
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def trial_seed(master: int, index: int) -> int:
    """Per-trial seed: a splitmix64 output, so trial i's randomness is
    independent of how many trials run before it or in parallel."""
    return _mix64((master + _GOLDEN * (index + 1)) & _MASK)


class GenerationExhausted(Exception):
    """A generator could not realize its planted features within the
    redraw budget."""


class _Retry(Exception):
    """Internal: the current attempt hit a degenerate draw."""


class _Redraws:
    __slots__ = ("count",)

    def __init__(self):
        self.count = 0

    def bump(self):
        self.count += 1


class GeneratorSpec:
    """What to generate: ambient space, degree budget or explicit germ
    lengths, planted features, coordinate box, field and seed.

    `collinear` plants a maximal line-subscheme of exactly that degree;
    `secant` additionally routes a nonreduced germ along the planted
    line; `general_position` requires the independence level to reach
    min(ambient, degree - 1).  Mutually inconsistent features are
    rejected here rather than failing mysteriously later.
    """

    __slots__ = ("ambient", "degree", "lengths", "max_germ_length", "collinear",
                 "secant", "general_position", "box", "field", "seed")

    def __init__(self, ambient: int, degree=None, lengths=None,
                 max_germ_length: int = 1, collinear=None, secant: bool = False,
                 general_position: bool = False, box=(-10, 10), field=QQ,
                 seed: int = 0):
        if ambient < 1:
            raise ValueError("ambient must be at least 1")
        if (degree is None) == (lengths is None):
            raise ValueError("give exactly one of degree or lengths")
        if lengths is not None:
            lengths = tuple(int(l) for l in lengths)
            if not lengths or any(l < 1 for l in lengths):
                raise ValueError("lengths must be positive")
            degree = sum(lengths)
            max_germ_length = max(max_germ_length, max(lengths))
        if degree < 1:
            raise ValueError("degree must be positive")
        if max_germ_length < 1:
            raise ValueError("max_germ_length must be at least 1")
        if collinear is not None:
            if lengths is not None:
                raise ValueError("explicit lengths and a planted collinear "
                                 "subset cannot be combined")
            if not 2 <= collinear <= degree:
                raise ValueError("collinear size must lie in [2, degree]")
            if general_position and collinear >= 3 and ambient >= 2:
                raise ValueError("three collinear points contradict general position")
        if secant:
            if collinear is None:
                raise ValueError("a planted secant needs a collinear size")
            if max_germ_length < 2 or collinear < 2:
                raise ValueError("a secant through a germ needs germ length >= 2")
        if general_position and degree > enumeration_cap():
            raise ValueError("general position is verified by subscheme "
                             "enumeration; degree exceeds the cap")
        if box[0] >= box[1]:
            raise ValueError("empty coordinate box")
        self.ambient = ambient
        self.degree = degree
        self.lengths = lengths
        self.max_germ_length = max_germ_length
        self.collinear = collinear
        self.secant = bool(secant)
        self.general_position = bool(general_position)
        self.box = (int(box[0]), int(box[1]))
        self.field = field
        self.seed = int(seed)


def _draw_coords(rng, width, box):
    while True:
        c = tuple(rng.randint(box[0], box[1]) for _ in range(width))
        if any(c):
            return c


def _draw_point(rng, ambient, box, field, avoid=()):
    for _ in range(80):
        try:
            p = ProjPoint(_draw_coords(rng, ambient + 1, box), field)
        except ValueError:
            continue
        if p not in avoid:
            return p
    raise _Retry


def _draw_direction(rng, point, box, field):
    """A direction independent of the support, so the arc is immersed."""
    n1 = len(point.coords)
    for _ in range(80):
        v = tuple(field(c) for c in _draw_coords(rng, n1, box))
        rows = Matrix([list(point.coords), list(v)], field=field)
        if rows.rank() == 2:
            return v
    raise _Retry


def _draw_germ(rng, point, length, box, field):
    """A curvilinear germ at `point` with random jet coefficients."""
    if length == 1:
        return reduced_germ(point, field)
    chart = next(i for i, c in enumerate(point.coords) if c != 0)
    for _ in range(80):
        v = tuple(field(c) for c in _draw_coords(rng, len(point.coords), box))
        if any(v[i] != 0 for i in range(len(v)) if i != chart):
            break
    else:
        raise _Retry
    jets = []
    for i in range(len(point.coords)):
        if i == chart:
            continue
        tail = tuple(field(rng.randint(box[0], box[1])) for _ in range(length - 2))
        jets.append((point.coords[i], v[i]) + tail)
    return make_germ(point, chart, jets, field)


def _random_invertible(rng, size, field, box=(-4, 4)):
    for _ in range(80):
        rows = [[field(rng.randint(box[0], box[1])) for _ in range(size)]
                for _ in range(size)]
        m = Matrix(rows, field=field)
        if m.rank() == size:
            return m
    raise _Retry


def _random_partition(rng, total, max_part):
    parts = []
    while total:
        top = min(max_part, total)
        part = 1 if top == 1 else rng.choice((1, 1, 1, min(2, top), top))
        parts.append(part)
        total -= part
    rng.shuffle(parts)
    return parts


def _build_scheme(spec: GeneratorSpec, rng) -> FiniteScheme:
    field = spec.field
    germs = []
    used = set()
    if spec.collinear is not None:
        base = _draw_point(rng, spec.ambient, spec.box, field)
        direction = _draw_direction(rng, base, spec.box, field)
        line = subspace_from_rows([base.coords, direction], spec.ambient, field)
        on_line = _random_partition(rng, spec.collinear, spec.max_germ_length)
        if spec.secant and max(on_line) < 2:
            on_line[0] = 2
            rest = spec.collinear - 2
            on_line = [2] + _random_partition(rng, rest, 1) if rest else [2]
        choices = range(spec.box[0], spec.box[1] + 1)
        if len(choices) < len(on_line):
            raise _Retry
        params = rng.sample(choices, len(on_line))
        for length, t in zip(on_line, params):
            coords = tuple(b + field(t) * v for b, v in zip(base.coords, direction))
            if all(c == 0 for c in coords):
                raise _Retry
            p = ProjPoint(coords, field)
            if p in used:
                raise _Retry
            used.add(p)
            germs.append(germ_on_line(p, direction, length, field))
        off_lengths = _random_partition(rng, spec.degree - spec.collinear,
                                        spec.max_germ_length)
        for length in off_lengths:
            p = _draw_point(rng, spec.ambient, spec.box, field, avoid=used)
            if line.contains_point(p):
                raise _Retry
            used.add(p)
            germs.append(_draw_germ(rng, p, length, spec.box, field))
    else:
        lengths = (list(spec.lengths) if spec.lengths is not None
                   else _random_partition(rng, spec.degree, spec.max_germ_length))
        for length in lengths:
            p = _draw_point(rng, spec.ambient, spec.box, field, avoid=used)
            used.add(p)
            germs.append(_draw_germ(rng, p, length, spec.box, field))
    try:
        return FiniteScheme(germs, field)
    except ValueError:
        raise _Retry from None


def _features_ok(spec: GeneratorSpec, x: FiniteScheme) -> bool:
    if spec.collinear is not None:
        if max_collinear_length(x)[0] != spec.collinear:
            return False
        if spec.secant and all(g.length == 1 for g in x.germs):
            return False
    if spec.general_position:
        if invariant_t(x) != min(x.ambient, x.degree - 1):
            return False
    return True


def gen_scheme(spec: GeneratorSpec, log: _Redraws = None) -> FiniteScheme:
    """Draw a scheme with the requested features; degenerate attempts
    are redrawn (counted in `log`) and exhaustion raises instead of
    looping."""
    rng = random.Random(spec.seed)
    for _ in range(200):
        try:
            x = _build_scheme(spec, rng)
        except _Retry:
            if log:
                log.bump()
            continue
        if _features_ok(spec, x):
            return x
        if log:
            log.bump()
    raise GenerationExhausted("could not realize the planted features "
                              "(ambient %d, degree %d, collinear %r)"
                              % (spec.ambient, spec.degree, spec.collinear))


# ---------------------------------------------------------------------------
# fast positive certificates for k-normality


def _random_monomial(rng, nvars, k):
    counts = [0] * nvars
    for _ in range(k):
        counts[rng.randrange(nvars)] += 1
    return tuple(counts)


def _family_rows(x: FiniteScheme, monomials):
    rows = [[] for _ in range(x.degree)]
    for mon in monomials:
        offset = 0
        for g in x.germs:
            series = g.evaluate_form({mon: x.field(1)})
            for j in range(g.length):
                rows[offset + j].append(series[j])
            offset += g.length
    return rows


def _certified_k_normal(x: FiniteScheme, k: int, rng) -> bool:
    """Same verdict as comparing the Hilbert function with the degree,
    but tries small random monomial subfamilies first: a full-rank
    subfamily certifies normality without building the whole space."""
    d = x.degree
    total = comb(x.ambient + k, k)
    if total <= d + 3:
        return hilbert_function(x, k) == d
    for _ in range(4):
        mons = set()
        while len(mons) < d + 3:
            mons.add(_random_monomial(rng, x.ambient + 1, k))
        m = Matrix(_family_rows(x, sorted(mons)), field=x.field)
        if m.rank() == d:
            return True
    return hilbert_function(x, k) == d


# ---------------------------------------------------------------------------
# plane fiber generators (all in P^2) with closed-form frame certificates


def _line_basis(rng, box, field):
    """Two independent plane points whose line is in general position
    for the separator frame: it meets {x0 = 0} away from {x1 = 0}."""
    for _ in range(80):
        b0 = _draw_coords(rng, 3, box)
        b1 = _draw_coords(rng, 3, box)
        c2 = field(b0[0]) * b1[1] - field(b0[1]) * b1[0]
        if c2 != 0:
            return (tuple(field(c) for c in b0), tuple(field(c) for c in b1))
    raise _Retry


def _line_point(basis, s, t, field):
    b0, b1 = basis
    coords = tuple(field(s) * x + field(t) * y for x, y in zip(b0, b1))
    if all(c == 0 for c in coords):
        raise _Retry
    return ProjPoint(coords, field)


def _line_direction(basis, field):
    return tuple(basis[1])


def _off_point(rng, box, field, avoid, on_lines=()):
    """A point with nonzero first coordinate (so the separator frame's
    distinguished coordinate does not vanish there), off the given lines."""
    for _ in range(80):
        try:
            p = ProjPoint(_draw_coords(rng, 3, box), field)
        except ValueError:
            continue
        if p.coords[0] == 0 or p in avoid:
            continue
        if any(line.contains_point(p) for line in on_lines):
            continue
        return p
    raise _Retry


def _line_scheme(rng, field, box, line_lengths, off_lengths):
    """Contact `sum(line_lengths)` with a generic-frame line plus off
    points; raises _Retry on degenerate draws."""
    basis = _line_basis(rng, box, field)
    direction = _line_direction(basis, field)
    params = rng.sample(range(-7, 8), len(line_lengths))
    germs, used = [], set()
    for length, t in zip(line_lengths, params):
        p = _line_point(basis, 1, t, field)
        if p in used:
            raise _Retry
        used.add(p)
        germs.append(germ_on_line(p, direction, length, field))
    if off_lengths:
        lsub = subspace_from_rows([basis[0], basis[1]], 2, field)
        for length in off_lengths:
            p = _off_point(rng, box, field, used, on_lines=(lsub,))
            used.add(p)
            germs.append(_draw_germ(rng, p, length, box, field))
    try:
        return FiniteScheme(germs, field)
    except ValueError:
        raise _Retry from None


def _conic_rows(rng, field):
    m = _random_invertible(rng, 3, field)
    return [tuple(m.data[i]) for i in range(3)]


def _conic_eval(row, tau, field):
    return row[0] + row[1] * field(tau) + row[2] * field(tau) ** 2


def _conic_tangent(row, tau, field):
    return row[1] + 2 * row[2] * field(tau)


def conic_frame_certificate(rows, parameters, field=QQ) -> bool:
    """Exact test that the standard separator frame separates the given
    divisor on the conic parameterized by `rows`: with u, t1 the first
    two coordinate restrictions and pi the divisor polynomial, the
    family has full rank iff pi and t1^3 stay independent modulo u.
    `parameters` lists (tau, multiplicity) pairs.  The rows must form an
    invertible matrix (a smooth conic); frames whose first row is not
    honestly quadratic are reported unseparated so callers redraw them.
    """
    u = tuple(field(c) for c in rows[0])
    t1 = tuple(field(c) for c in rows[1])
    if len(u) != 3 or u[2] == 0:
        return False
    pi = (field(1),)
    for tau, mult in parameters:
        for _ in range(mult):
            pi = poly_mul(pi, (-field(tau), field(1)))
    a = poly_divmod(pi, u)[1]
    b = poly_divmod(poly_mul(poly_mul(t1, t1), t1), u)[1]
    a = tuple(a) + (field(0),) * (2 - len(a))
    b = tuple(b) + (field(0),) * (2 - len(b))
    return a[0] * b[1] - a[1] * b[0] != 0


def _conic_scheme(rng, field, with_germ):
    """Six units of degree on a smooth conic through a random frame,
    certified separable by the degree-3 separator family."""
    for _ in range(80):
        rows = _conic_rows(rng, field)
        count = 5 if with_germ else 6
        taus = rng.sample(range(-9, 10), count)
        parameters = [(taus[0], 2)] + [(t, 1) for t in taus[1:]] if with_germ \
            else [(t, 1) for t in taus]
        if not conic_frame_certificate(rows, parameters, field):
            continue
        germs, used = [], set()
        try:
            for tau, mult in parameters:
                coords = tuple(_conic_eval(r, tau, field) for r in rows)
                p = ProjPoint(coords, field)
                if p in used:
                    raise _Retry
                used.add(p)
                if mult == 1:
                    germs.append(reduced_germ(p, field))
                else:
                    tangent = tuple(_conic_tangent(r, tau, field) for r in rows)
                    germs.append(germ_on_line(p, tangent, 2, field))
            return FiniteScheme(germs, field)
        except (ValueError, _Retry):
            continue
    raise _Retry


def _spread_scheme(rng, field, box, lengths, want_phi2=None, max_col=3):
    """Span-2 scheme with no long collinear subscheme; `want_phi2` pins
    the quadric rank (6 keeps the scheme off every conic)."""
    for _ in range(80):
        germs, used = [], set()
        try:
            for length in lengths:
                p = _draw_point(rng, 2, box, field, avoid=used)
                used.add(p)
                germs.append(_draw_germ(rng, p, length, box, field))
            x = FiniteScheme(germs, field)
        except (_Retry, ValueError):
            continue
        if span_dim(x) != 2 or max_collinear_length(x)[0] > max_col:
            continue
        if want_phi2 is not None and hilbert_function(x, 2) != want_phi2:
            continue
        return x
    raise _Retry


_FIBER_TYPES = ("1.i", "1.ii", "1.iii", "2.i", "2.ii",
                "5.line", "5.span2", "5.span2.4sec",
                "6.line", "6.span2", "6.span2.4sec", "6.span2.5sec",
                "6.span2.conic")


def _gen_fiber_instance(rng, field, label):
    box = (-9, 9)
    if label == "1.i":
        return _line_scheme(rng, field, box, [1] * 5, []), 5
    if label == "1.ii":
        return _line_scheme(rng, field, box, [1] * 4, [1]), 5
    if label == "1.iii":
        return _spread_scheme(rng, field, box, [1] * 5), 5
    if label == "2.i":
        return _line_scheme(rng, field, box, [2, 1, 1, 1], []), 5
    if label == "2.ii":
        if rng.random() < 0.5:
            return _line_scheme(rng, field, box, [2, 1, 1], [1]), 5
        return _spread_scheme(rng, field, box, [2, 1, 1, 1]), 5
    if label == "5.line":
        parts = [2, 1, 1, 1] if rng.random() < 0.5 else [1] * 5
        return _line_scheme(rng, field, box, parts, []), 6
    if label == "5.span2":
        parts = [2, 1, 1, 1] if rng.random() < 0.5 else [1] * 5
        return _spread_scheme(rng, field, box, parts), 6
    if label == "5.span2.4sec":
        variant = rng.randrange(4)
        parts = ([1] * 4, [2, 1, 1], [2, 2], [3, 1])[variant]
        return _line_scheme(rng, field, box, list(parts), [1]), 6
    if label == "6.line":
        parts = [2, 1, 1, 1, 1] if rng.random() < 0.5 else [1] * 6
        return _line_scheme(rng, field, box, parts, []), 6
    if label == "6.span2":
        parts = [2, 1, 1, 1, 1] if rng.random() < 0.5 else [1] * 6
        return _spread_scheme(rng, field, box, parts, want_phi2=6), 6
    if label == "6.span2.4sec":
        variant = rng.randrange(3)
        if variant == 0:
            return _line_scheme(rng, field, box, [1] * 4, [1, 1]), 6
        if variant == 1:
            return _line_scheme(rng, field, box, [2, 1, 1], [1, 1]), 6
        return _line_scheme(rng, field, box, [1] * 4, [2]), 6
    if label == "6.span2.5sec":
        parts = [2, 1, 1, 1] if rng.random() < 0.5 else [1] * 5
        return _line_scheme(rng, field, box, parts, [1]), 6
    if label == "6.span2.conic":
        return _conic_scheme(rng, field, with_germ=rng.random() < 0.5), 6
    raise ValueError("unknown fiber type %r" % (label,))


# ---------------------------------------------------------------------------
# curve drawing


def _draw_curve(rng, log):
    for _ in range(200):
        ambient = rng.randint(3, 5)
        degree = rng.randint(ambient, 6)
        forms = [tuple(rng.randint(-6, 6) for _ in range(degree + 1))
                 for _ in range(ambient + 1)]
        try:
            curve = RationalCurve(forms)
        except ValueError:
            log.bump()
            continue
        if not curve.is_nondegenerate():
            log.bump()
            continue
        return curve
    raise GenerationExhausted("no base-point-free nondegenerate curve found")


def _curve_image_point(curve, center, s, t):
    p = curve.point(s, t)
    coords = tuple(
        sum((c * x for c, x in zip(f, p.coords)), curve.field(0))
        for f in center.cutting_forms
    )
    if all(c == 0 for c in coords):
        raise _Retry
    return coords


def _center_meets_tangent_line(curve, center) -> bool:
    """Exact test for the genericity hypothesis of the plane projection:
    the center meets a tangent line of the curve iff the composed map to
    the plane has a critical parameter, i.e. the Wronskian minors of the
    composed coordinates share a root (checked at the finite parameters,
    which is all the sampled fibers use)."""
    composed = [
        binary_linear_combination(curve.forms, f) for f in center.cutting_forms
    ]
    minors = []
    for i in range(3):
        for j in range(i + 1, 3):
            a, b = composed[i], composed[j]
            m = poly_add(
                poly_mul(a, poly_derivative(b)),
                poly_scale(poly_mul(b, poly_derivative(a)), -1),
            )
            if m:
                minors.append(m)
    if not minors:
        return True
    g = minors[0]
    for m in minors[1:]:
        g = poly_gcd(g, m)
        if poly_degree(g) < 1:
            break
    return poly_degree(g) >= 1


# ---------------------------------------------------------------------------
# the trial bodies; each returns (ok, redraws, signature, failure detail)


def _fail(message, x=None, extra=None):
    detail = {"message": message}
    if x is not None:
        detail["artifact"] = scheme_to_jsonable(x)
    if extra:
        detail.update(extra)
    return detail


def _trial_prop12(rng, field, index):
    log = _Redraws()
    ambient = rng.randint(2, 5)
    d = rng.randint(2, 10)
    maxlen = rng.choice((1, 1, 1, 2, 2, 3))
    collinear = None
    secant = False
    if d >= 3 and rng.random() < 0.45:
        collinear = rng.randint(3, d)
        secant = maxlen >= 2 and collinear >= 2 and rng.random() < 0.5
    spec = GeneratorSpec(ambient, degree=d, max_germ_length=maxlen,
                         collinear=collinear, secant=secant, box=(-8, 8),
                         field=field, seed=rng.getrandbits(63))
    x = gen_scheme(spec, log)
    k0 = normality_threshold_bound(x)
    bad = [k for k in range(k0, d) if not _certified_k_normal(x, k, rng)]
    sig = (d, k0, tuple(bad))
    if bad:
        return False, log.count, sig, _fail(
            "not k-normal above the threshold", x, {"threshold": k0, "bad": bad})
    return True, log.count, sig, None


def _trial_cor13a(rng, field, index):
    log = _Redraws()
    planted = index % 2 == 0
    ambient = rng.choice((2, 3))
    d = rng.randint(ambient + 3, 10)
    maxlen = rng.choice((1, 1, 2, 3))
    for _ in range(200):
        if planted:
            spec = GeneratorSpec(ambient, degree=d, max_germ_length=maxlen,
                                 collinear=d - ambient + 1, box=(-8, 8),
                                 field=field, seed=rng.getrandbits(63))
        else:
            spec = GeneratorSpec(ambient, degree=d, max_germ_length=maxlen,
                                 box=(-8, 8), field=field,
                                 seed=rng.getrandbits(63))
        x = gen_scheme(spec, log)
        if span_dim(x) != ambient:
            log.bump()
            continue
        if not planted and max_collinear_length(x)[0] >= d - ambient + 1:
            log.bump()
            continue
        break
    else:
        raise GenerationExhausted("no nondegenerate scheme in the secant regime")
    v = secant_normality_verdict(x)
    sig = (d, ambient, v.normal_at_d_minus_n, v.normal_at_d_minus_n_1,
           v.has_long_secant)
    ok = v.equivalence_holds and v.has_long_secant == planted
    if not ok:
        return False, log.count, sig, _fail(
            "secant dichotomy violated", x, {"verdict": v.to_jsonable()})
    return True, log.count, sig, None


def _trial_cor13b(rng, field, index):
    log = _Redraws()
    ambient = rng.randint(2, 5)
    d = rng.randint(ambient + 1, 10)
    maxlen = rng.choice((1, 1, 1, 2))
    spec = GeneratorSpec(ambient, degree=d, max_germ_length=maxlen,
                         general_position=True, box=(-9, 9), field=field,
                         seed=rng.getrandbits(63))
    x = gen_scheme(spec, log)
    k_star = -((1 - d) // ambient)
    bad = [k for k in range(k_star, d) if not _certified_k_normal(x, k, rng)]
    sig = (d, ambient, k_star, tuple(bad))
    if bad:
        return False, log.count, sig, _fail(
            "general-position scheme not normal from ceil((d-1)/N) on", x,
            {"first_k": k_star, "bad": bad})
    return True, log.count, sig, None


def _trial_lemma26(rng, field, index):
    log = _Redraws()
    n = 3 + index % 4
    case = 1 + (index // 4) % 2
    aligned = n + 1 if case == 1 else n
    off_count = 2 if case == 1 else 3
    for _ in range(200):
        us = rng.sample([u for u in range(-9, 10) if u], aligned)
        a = rng.choice([u for u in range(-5, 6) if u])
        b = rng.choice([u for u in range(-5, 6) if u])
        offs = []
        try:
            avoid = set()
            for _ in range(off_count):
                p = _off_point(rng, (-9, 9), field, avoid)
                if field(b) * p.coords[1] - field(a) * p.coords[2] == 0:
                    raise _Retry
                avoid.add(p)
                offs.append(p)
            config = SeparatorConfig(us, a, b, offs, field)
            forms = separator_forms(config)
        except (_Retry, ValueError, DegenerateConfiguration):
            log.bump()
            continue
        break
    else:
        raise GenerationExhausted("no admissible separator configuration")
    allowed = set(separator_monomial_basis(n))
    confined = all(set(f) <= allowed for f in forms)
    pts = config.points
    diagonal = True
    for j, f in enumerate(forms):
        for i, p in enumerate(pts):
            value = evaluate_form(f, p.coords, field)
            if (i == j) == (value == 0):
                diagonal = False
    rows = [[evaluate_form(f, p.coords, field) for f in forms] for p in pts]
    rank = Matrix(rows, field=field).rank()
    sig = (n, case, confined, diagonal, rank)
    ok = confined and diagonal and rank == n + 3
    if not ok:
        return False, log.count, sig, _fail(
            "separator solver postcondition failed",
            config.scheme(),
            {"n": n, "case": case, "rank": rank, "confined": confined})
    return True, log.count, sig, None


def _trial_fiber(rng, field, index):
    log = _Redraws()
    label = _FIBER_TYPES[index % len(_FIBER_TYPES)]
    for _ in range(200):
        try:
            x, n = _gen_fiber_instance(rng, field, label)
        except _Retry:
            log.bump()
            continue
        break
    else:
        raise GenerationExhausted("no instance of fiber type %s" % label)
    profile = classify_fiber(x, n)
    if profile.case != label:
        return False, log.count, (label, profile.case), _fail(
            "planted fiber classified as %s" % profile.case, x)
    mnd = min_normal_degree(x)
    pair = recipe_for_fiber(profile)
    sig = (label, profile.predicted_normality, mnd)
    if mnd != profile.predicted_normality:
        return False, log.count, sig, _fail(
            "minimal normality degree %d does not match prediction %d"
            % (mnd, profile.predicted_normality), x)
    if pair is None:
        return False, log.count, sig, _fail("no separator recipe for %s" % label, x)
    recipe, k = pair
    if not recipe_separates(x, recipe, k):
        return False, log.count, sig, _fail(
            "recipe fails to separate at degree %d" % k, x)
    return True, log.count, sig, None


def _trial_flatness(rng, field, index):
    log = _Redraws()
    curve = _draw_curve(rng, log)
    n = curve.ambient
    for _ in range(200):
        forms = [_draw_coords(rng, n + 1, (-5, 5)) for _ in range(2)]
        try:
            center = LinearSubspace(n, forms)
        except ValueError:
            log.bump()
            continue
        ys = [(1, 0), (0, 1), (1, 1)]
        ys += [(1, rng.randint(-9, 9)) for _ in range(2)]
        try:
            fibers = [curve_fiber(curve, center, y) for y in ys]
        except (CenterMeetsCurve, DuplicateFiberSupport, NonCurvilinearFiber):
            log.bump()
            continue
        break
    else:
        raise GenerationExhausted("no usable projection center")
    totals = [f.total for f in fibers]
    sig = (curve.degree, tuple(totals))
    if any(t != curve.degree for t in totals):
        return False, log.count, sig, _fail(
            "fiber total %r differs from the curve degree %d"
            % (totals, curve.degree))
    return True, log.count, sig, None


def _trial_lemma31(rng, field, index):
    log = _Redraws()
    curve = _draw_curve(rng, log)
    n = curve.ambient
    d = curve.degree
    for _ in range(200):
        r = rng.randint(0, n - 2)
        if rng.random() < 0.5:
            rows = [_draw_coords(rng, n + 1, (-5, 5)) for _ in range(r + 1)]
        else:
            through = rng.randint(1, r + 1)
            taus = rng.sample(range(-9, 10), through)
            rows = [curve.point(1, t).coords for t in taus]
            rows += [_draw_coords(rng, n + 1, (-5, 5)) for _ in range(r + 1 - through)]
        sub = subspace_from_rows(rows, n)
        if sub.dim != r:
            log.bump()
            continue
        length = curve_linear_section_length(curve, sub)
        bound = d - (n - 1 - r)
        sig = (d, n, r, length, bound)
        if length > bound:
            return False, log.count, sig, _fail(
                "linear section length %d exceeds the bound %d" % (length, bound))
        return True, log.count, sig, None
    raise GenerationExhausted("no linear subspace of the requested dimension")


def _trial_mather(rng, field, index):
    log = _Redraws()
    curve = _draw_curve(rng, log)
    n = curve.ambient
    for _ in range(200):
        t1, t2 = rng.sample(range(-9, 10), 2)
        p1 = curve.point(1, t1)
        p2 = curve.point(1, t2)
        lam = rng.choice([u for u in range(-5, 6) if u])
        chord_pt = tuple(a + lam * b for a, b in zip(p1.coords, p2.coords))
        if not any(chord_pt):
            log.bump()
            continue
        rows = [chord_pt]
        rows += [_draw_coords(rng, n + 1, (-5, 5)) for _ in range(n - 3)]
        center = subspace_from_rows(rows, n)
        if center.dim != n - 3:
            log.bump()
            continue
        if _center_meets_tangent_line(curve, center):
            log.bump()
            continue
        try:
            y_star = _curve_image_point(curve, center, 1, t1)
            planted = plane_fiber(curve, center, y_star)
        except (_Retry, CenterMeetsCurve, DuplicateFiberSupport,
                NonCurvilinearFiber):
            log.bump()
            continue
        if planted.total != 2 or len(planted.germs) != 2 or any(
                g.length != 1 for g in planted.germs):
            log.bump()
            continue
        try:
            others = []
            for tau in rng.sample(range(-9, 10), 3):
                y = _curve_image_point(curve, center, 1, tau)
                others.append(plane_fiber(curve, center, y))
        except (_Retry, CenterMeetsCurve, DuplicateFiberSupport,
                NonCurvilinearFiber):
            log.bump()
            continue
        checks = [mather_inequality(f, 1) for f in [planted] + others]
        sig = (curve.degree, n, tuple(c.total for c in checks))
        if not all(c.holds for c in checks):
            return False, log.count, sig, _fail(
                "curve fiber multiplicity exceeds the generic bound",
                extra={"totals": [c.total for c in checks]})
        return True, log.count, sig, None
    raise GenerationExhausted("no generic plane-projection center")


def _trial_invariance(rng, field, index):
    log = _Redraws()
    ambient = rng.randint(2, 5)
    d = rng.randint(2, 10)
    maxlen = rng.choice((1, 1, 2, 3))
    collinear = None
    if d >= 3 and rng.random() < 0.35:
        top = d if ambient <= 3 else min(d, 7)
        collinear = rng.randint(3, top)
    spec = GeneratorSpec(ambient, degree=d, max_germ_length=maxlen,
                         collinear=collinear, box=(-7, 7), field=field,
                         seed=rng.getrandbits(63))
    x = gen_scheme(spec, log)
    g = _random_invertible(rng, ambient + 1, field)
    y = apply_matrix(x, g)
    mx, my = min_normal_degree(x), min_normal_degree(y)
    tx, ty = invariant_t(x), invariant_t(y)
    cx = max_collinear_length(x)[0]
    cy = max_collinear_length(y)[0]
    phi_x = [hilbert_function(x, k) for k in range(1, mx + 1)]
    phi_y = [hilbert_function(y, k) for k in range(1, mx + 1)]
    sig = (d, mx, tx, cx)
    ok = mx == my and tx == ty and cx == cy and phi_x == phi_y
    if not ok:
        return False, log.count, sig, _fail(
            "coordinate change altered an invariant", x,
            {"normal": [mx, my], "t": [tx, ty], "collinear": [cx, cy],
             "phi": [phi_x, phi_y]})
    return True, log.count, sig, None


def _trial_hilbert_shape(rng, field, index):
    log = _Redraws()
    ambient = rng.randint(2, 4)
    d = rng.randint(2, 10)
    maxlen = rng.choice((1, 1, 2, 3))
    collinear = rng.randint(3, d) if d >= 3 and rng.random() < 0.4 else None
    spec = GeneratorSpec(ambient, degree=d, max_germ_length=maxlen,
                         collinear=collinear, box=(-8, 8), field=field,
                         seed=rng.getrandbits(63))
    x = gen_scheme(spec, log)
    mnd = min_normal_degree(x)
    phi = [hilbert_function(x, k) for k in range(0, mnd + 1)]
    problems = []
    if phi[0] != 1:
        problems.append("phi(0) != 1")
    if len(phi) > 1 and phi[1] != span_dim(x) + 1:
        problems.append("phi(1) != span + 1")
    if any(phi[k] > phi[k + 1] for k in range(len(phi) - 1)):
        problems.append("phi decreases")
    if any(phi[k] > min(comb(ambient + k, k), d) for k in range(len(phi))):
        problems.append("phi exceeds its ceiling")
    if phi[-1] != d:
        problems.append("phi misses the degree at the normal degree")
    if any(not _certified_k_normal(x, k, rng) for k in range(mnd + 1, d)):
        problems.append("phi drops below the degree after reaching it")
    sig = (d, mnd, tuple(phi))
    if problems:
        return False, log.count, sig, _fail("; ".join(problems), x, {"phi": phi})
    return True, log.count, sig, None


_TRIALS = {
    "prop1_2": _trial_prop12,
    "cor1_3a": _trial_cor13a,
    "cor1_3b": _trial_cor13b,
    "lemma2_6": _trial_lemma26,
    "fiber_cases": _trial_fiber,
    "flatness": _trial_flatness,
    "lemma3_1": _trial_lemma31,
    "mather_consistency": _trial_mather,
    "invariance": _trial_invariance,
    "hilbert_shape": _trial_hilbert_shape,
}

SUITE_NAMES = tuple(sorted(_TRIALS))

_CURVE_SUITES = frozenset(("flatness", "lemma3_1", "mather_consistency"))


class SuiteReport:
    """Aggregated outcome of one suite run.  The JSON form deliberately
    omits wall time so reports are byte-identical across machines and
    worker counts; the measured time stays available on the object."""

    __slots__ = ("suite", "trials", "failures", "redraws", "wall_seconds")

    def __init__(self, suite, trials, failures, redraws, wall_seconds=0.0):
        self.suite = suite
        self.trials = trials
        self.failures = list(failures)
        self.redraws = redraws
        self.wall_seconds = wall_seconds

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_jsonable(self):
        return {"suite": self.suite, "trials": self.trials,
                "redraws": self.redraws, "passed": self.passed,
                "failures": self.failures}


def _run_trial(args):
    suite, master, index, prime = args
    field = QQ if prime is None else prime_field(prime)
    seed = trial_seed(master, index)
    fn = _TRIALS[suite]
    try:
        ok, redraws, sig, detail = fn(random.Random(seed), field, index)
    except GenerationExhausted as err:
        return {"trial": index, "seed": seed, "ok": False, "redraws": 0,
                "detail": {"message": "generator exhausted: %s" % err}}
    if prime is not None and index % 100 == 0:
        ok_q, _, sig_q, _ = fn(random.Random(seed), QQ, index)
        if ok_q != ok or sig_q != sig:
            ok = False
            detail = {"message": "prime-field result disagrees with the "
                                 "rational cross-check",
                      "fp": list(map(str, sig)), "q": list(map(str, sig_q))}
    out = {"trial": index, "seed": seed, "ok": ok, "redraws": redraws}
    if detail is not None:
        out["detail"] = detail
    return out


def run_suite(name: str, trials: int, seed: int, prime=None,
              jobs: int = 1) -> SuiteReport:
    """Run `trials` independent trials of the named suite.  Deterministic
    given (name, trials, seed, prime); `jobs` only changes the schedule,
    never the outcome.  Curve-based suites run over Q only."""
    if name not in _TRIALS:
        raise ValueError("unknown suite %r; known: %s" % (name, ", ".join(SUITE_NAMES)))
    if trials < 1:
        raise ValueError("need at least one trial")
    if prime is not None and name in _CURVE_SUITES:
        raise ValueError("suite %s uses rational curve arithmetic; "
                         "prime fields are not supported" % name)
    started = time.monotonic()
    args = [(name, int(seed), i, prime) for i in range(trials)]
    if jobs > 1:
        chunk = max(1, trials // (jobs * 4))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_trial, args, chunksize=chunk))
    else:
        results = [_run_trial(a) for a in args]
    failures = []
    redraws = 0
    for r in results:
        redraws += r["redraws"]
        if not r["ok"]:
            record = {"trial": r["trial"], "seed": r["seed"]}
            record.update(r.get("detail") or {"message": "trial failed"})
            failures.append(record)
    return SuiteReport(name, trials, failures, redraws,
                       time.monotonic() - started)
