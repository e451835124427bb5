"""Hilbert functions, k-normality and regularity of finite schemes.

For a finite scheme X of degree d in P^N, phi(k) is the rank of the
evaluation map sending a degree-k form to the d functional values of X
(per germ: the first L Taylor coefficients of the form composed with
the arc).  X is k-normal when phi(k) = d, and

    reg(X) = 1 + min { k >= 0 : phi(k) = d }.

phi(d - 1) = d always holds, which bounds every search below.

The evaluation matrix has d rows but C(N + k, N) columns, so ranks are
computed by streaming columns into an incremental column space and
stopping as soon as the rank hits d.
"""

from __future__ import annotations

from zeroreg.exactalg import ColumnSpace, Matrix
from zeroreg.forms import monomials_of_degree, series_mul, series_of_constant
from zeroreg.scheme import FiniteScheme, invariant_t, max_collinear_length, span_dim


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


class GermEvaluator:
    """Caches powers of one germ's jet series so that monomial columns
    for many degrees share work."""

    __slots__ = ("germ", "_powers")

    def __init__(self, germ):
        self.germ = germ
        self._powers = {}

    def _power(self, var: int, e: int):
        key = (var, e)
        got = self._powers.get(key)
        if got is None:
            if e == 1:
                got = self.germ.jets[var]
            else:
                got = series_mul(
                    self._power(var, e - 1), self.germ.jets[var], self.germ.length
                )
            self._powers[key] = got
        return got

    def monomial_series(self, mon):
        g = self.germ
        out = None
        for i, e in enumerate(mon):
            if e == 0 or i == g.chart:
                continue
            p = self._power(i, e)
            out = p if out is None else series_mul(out, p, g.length)
        if out is None:
            return series_of_constant(1, g.length, g.field)
        return out


class SchemeEvaluator:
    """Evaluation-rank engine for one scheme, reusable across degrees."""

    def __init__(self, scheme: FiniteScheme):
        self.scheme = scheme
        self._germ_evals = [GermEvaluator(g) for g in scheme.germs]

    def column(self, mon):
        """The d functional values of the monomial, germ by germ."""
        out = []
        for ev in self._germ_evals:
            out.extend(ev.monomial_series(mon))
        return out

    def phi(self, k: int) -> int:
        if k < 0:
            raise ValueError("phi is only defined for k >= 0")
        d = self.scheme.degree
        space = ColumnSpace(self.scheme.field)
        for mon in monomials_of_degree(self.scheme.ambient + 1, k):
            space.add(self.column(mon))
            if space.rank == d:
                break
        return space.rank


def evaluation_matrix(scheme: FiniteScheme, k: int) -> Matrix:
    """The full d x C(N+k, N) matrix of functional values, one column
    per degree-k monomial in graded-lex order."""
    ev = SchemeEvaluator(scheme)
    cols = [ev.column(mon) for mon in monomials_of_degree(scheme.ambient + 1, k)]
    rows = [[col[i] for col in cols] for i in range(scheme.degree)]
    return Matrix(rows, field=scheme.field, ncols=len(cols))


def hilbert_function(scheme: FiniteScheme, k: int) -> int:
    return SchemeEvaluator(scheme).phi(k)


def hilbert_function_values(scheme: FiniteScheme, max_degree: int):
    ev = SchemeEvaluator(scheme)
    return [ev.phi(k) for k in range(max_degree + 1)]


def is_k_normal(scheme: FiniteScheme, k: int) -> bool:
    return hilbert_function(scheme, k) == scheme.degree


def min_normal_degree(scheme: FiniteScheme) -> int:
    """Smallest k with phi(k) = d; at most d - 1."""
    d = scheme.degree
    ev = SchemeEvaluator(scheme)
    k = 0
    while ev.phi(k) < d:
        k += 1
    return k


def finite_scheme_regularity(scheme: FiniteScheme) -> int:
    return 1 + min_normal_degree(scheme)


def normality_threshold_bound(scheme: FiniteScheme) -> int:
    """A proved degree k0 such that the scheme is k-normal for every
    k >= k0, in terms of the degree, the span and the independence
    level: k0 = max(1, ceil((d - n - 1) / t) + 1) with n the dimension
    of the linear span and t the largest level at which all subschemes
    are in general position."""
    d = scheme.degree
    n = span_dim(scheme)
    t = invariant_t(scheme)
    if d <= n + 1:
        return 1
    return max(1, _ceil_div(d - n - 1, t) + 1)


class SecantNormalityVerdict:
    """Outcome of the long-secant dichotomy for a finite scheme: whether
    normality first fails at degree d - n - 1 and whether a line meets
    the scheme in degree d - n + 1."""

    __slots__ = (
        "degree",
        "span",
        "normal_at_d_minus_n",
        "normal_at_d_minus_n_1",
        "has_long_secant",
        "max_collinear",
        "equivalence_holds",
    )

    def __init__(self, degree, span, at_k, at_k_minus_1, max_collinear):
        self.degree = degree
        self.span = span
        self.normal_at_d_minus_n = at_k
        self.normal_at_d_minus_n_1 = at_k_minus_1
        self.max_collinear = max_collinear
        self.has_long_secant = max_collinear >= degree - span + 1
        lhs = at_k and not at_k_minus_1
        self.equivalence_holds = lhs == self.has_long_secant

    def to_jsonable(self):
        return {
            "degree": self.degree,
            "span": self.span,
            "normal_at_d_minus_n": self.normal_at_d_minus_n,
            "normal_at_d_minus_n_1": self.normal_at_d_minus_n_1,
            "max_collinear": self.max_collinear,
            "has_long_secant": self.has_long_secant,
            "equivalence_holds": self.equivalence_holds,
        }


def secant_normality_verdict(scheme: FiniteScheme) -> SecantNormalityVerdict:
    d = scheme.degree
    n = span_dim(scheme)
    if d < n + 2:
        raise ValueError("the dichotomy needs degree >= span + 2")
    ev = SchemeEvaluator(scheme)
    at_k = ev.phi(d - n) == d
    at_k_minus_1 = (d - n - 1 >= 0) and ev.phi(d - n - 1) == d
    collinear, _ = max_collinear_length(scheme)
    return SecantNormalityVerdict(d, n, at_k, at_k_minus_1, collinear)
