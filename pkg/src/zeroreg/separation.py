"""Separating families of forms built from a distinguished coordinate.

A recipe fixes, for each level j, a space V_j of degree-j forms in the
"tangent" variables T_1 .. T_m; at degree k it spawns the forms
U^(k-j) * v for v in V_j.  The standard recipe takes V_0, V_1, V_2 to
be the full monomial spaces; refinements add small spaces at higher
levels instead of the full ones, which is what makes the resulting
regularity bounds tight.

A family of forms separates a finite scheme when its evaluations span
all of the scheme's functionals, equivalently when for every functional
some member of the family takes a prescribed nonzero value after
killing the others.

For plane configurations of n + 3 points with n + 1 (or n) of them on
a line through (1:0:0) avoiding the two coordinate vertices, a family
of n + 4 monomials of degree n suffices; `separator_forms` produces one
certified separator per point inside that family, or reports the
configuration as degenerate.
"""

from __future__ import annotations

from zeroreg.exactalg import ColumnSpace, Matrix, QQ, kernel_basis
from zeroreg.forms import evaluate_form, monomials_of_degree
from zeroreg.scheme import FiniteScheme, LinearSubspace, ProjPoint


class DegenerateConfiguration(Exception):
    """The requested separators do not exist inside the monomial family."""


class FormSpaceRecipe:
    """Level-indexed spaces of forms in m tangent variables.  With
    `standard` set, levels 0..2 are the full monomial spaces and
    `spaces` may only add levels >= 3."""

    __slots__ = ("t_count", "spaces", "standard")

    def __init__(self, t_count: int, spaces=None, standard: bool = True):
        spaces = {int(j): tuple(forms) for j, forms in (spaces or {}).items()}
        for j, forms in spaces.items():
            if j < 0:
                raise ValueError("levels must be nonnegative")
            if standard and j <= 2:
                raise ValueError("levels 0..2 are implied by the standard part")
            for f in forms:
                for mon, _ in f.items():
                    if len(mon) != t_count or sum(mon) != j:
                        raise ValueError("form degree does not match its level")
        self.t_count = t_count
        self.spaces = spaces
        self.standard = standard

    def space(self, j: int):
        """Basis of V_j (tuples of form dicts over the tangent variables)."""
        out = []
        if self.standard and j <= 2:
            out.extend({mon: QQ(1)} for mon in monomials_of_degree(self.t_count, j))
        out.extend(self.spaces.get(j, ()))
        return out

    def levels(self):
        out = set(self.spaces)
        if self.standard:
            out.update((0, 1, 2))
        return sorted(out)

    def dims(self):
        return {j: len(self.space(j)) for j in self.levels() if self.space(j)}


def t_monomial(t_count: int, exponents):
    """Single tangent-variable monomial as a one-term form."""
    exponents = tuple(exponents)
    if len(exponents) != t_count:
        raise ValueError("wrong number of exponents")
    return {exponents: QQ(1)}


def line_power_recipe(max_level: int, t_count: int = 2) -> FormSpaceRecipe:
    """V_j = { T_1^j } for 0 <= j <= max_level: the family of powers of
    a single line, which separates aligned configurations."""
    spaces = {
        j: [t_monomial(t_count, (j,) + (0,) * (t_count - 1))]
        for j in range(max_level + 1)
    }
    return FormSpaceRecipe(t_count, spaces, standard=False)


def standard_recipe(t_count: int = 2, extra=None) -> FormSpaceRecipe:
    return FormSpaceRecipe(t_count, extra or {}, standard=True)


def full_recipe(t_count: int, max_level: int) -> FormSpaceRecipe:
    """Every monomial space up to max_level; at degree k = max_level the
    spawned family is the complete degree-k monomial basis."""
    spaces = {
        j: [t_monomial(t_count, mon) for mon in monomials_of_degree(t_count, j)]
        for j in range(3, max_level + 1)
    }
    return FormSpaceRecipe(t_count, spaces, standard=True)


def recipe_space(recipe: FormSpaceRecipe, k: int, ambient: int, u_index: int = 0, t_indices=None):
    """The degree-k forms U^(k-j) * v, as form dicts over the ambient
    coordinates; levels above k are skipped."""
    if t_indices is None:
        t_indices = tuple(range(1, recipe.t_count + 1))
    used = (u_index,) + tuple(t_indices)
    if len(set(used)) != len(used) or any(not 0 <= i <= ambient for i in used):
        raise ValueError("coordinate bindings must be distinct and in range")
    out = []
    for j in recipe.levels():
        if j > k:
            continue
        for v in recipe.space(j):
            form = {}
            for mon, coeff in v.items():
                exps = [0] * (ambient + 1)
                exps[u_index] = k - j
                for idx, e in zip(t_indices, mon):
                    exps[idx] = e
                form[tuple(exps)] = coeff
            out.append(form)
    return out


def family_rank(scheme: FiniteScheme, forms) -> int:
    """Rank of the family's evaluations on the scheme's functionals."""
    space = ColumnSpace(scheme.field)
    for f in forms:
        col = []
        for g in scheme.germs:
            col.extend(g.evaluate_form(f))
        space.add(col)
        if space.rank == scheme.degree:
            break
    return space.rank


def recipe_separates(scheme: FiniteScheme, recipe: FormSpaceRecipe, k: int,
                     u_index: int = 0, t_indices=None) -> bool:
    forms = recipe_space(recipe, k, scheme.ambient, u_index, t_indices)
    return family_rank(scheme, forms) == scheme.degree


def separator_monomial_basis(n: int):
    """The n + 4 degree-n monomials in (U, T1, T2) used by the plane
    separator construction: U^(n-j) T1^j for 0 <= j <= n, plus
    U^(n-1) T2, U^(n-2) T1 T2 and U^(n-2) T2^2."""
    if n < 2:
        raise ValueError("the monomial family needs n >= 2")
    mons = [(n - j, j, 0) for j in range(n + 1)]
    mons += [(n - 1, 0, 1), (n - 2, 1, 1), (n - 2, 0, 2)]
    return mons


class SeparatorConfig:
    """n + 3 plane points, of which the aligned ones are (u_i : a : b)
    on the line b*T1 = a*T2 (so the line passes through (1:0:0) and
    misses (0:1:0) and (0:0:1)); two off-line points give the
    (n+1)-aligned case, three give the n-aligned case."""

    __slots__ = ("n", "case", "a", "b", "aligned", "off", "field")

    def __init__(self, aligned_u, a, b, off_points, field=QQ):
        a, b = field(a), field(b)
        if a == 0 or b == 0:
            raise ValueError("the line parameters a, b must be nonzero")
        us = [field(u) for u in aligned_u]
        if any(u == 0 for u in us):
            raise ValueError("aligned points must have nonzero first coordinate")
        if len(set(us)) != len(us):
            raise ValueError("aligned points must be distinct")
        off = [p if isinstance(p, ProjPoint) else ProjPoint(p, field) for p in off_points]
        if len(off) == 2:
            case = 1
        elif len(off) == 3:
            case = 2
        else:
            raise ValueError("expected two or three off-line points")
        n = len(us) + len(off) - 3
        if n < 2:
            raise ValueError("too few points: need n >= 2")
        for p in off:
            if b * p.coords[1] - a * p.coords[2] == 0:
                raise ValueError("off-line point lies on the line")
        if len(set(off)) != len(off):
            raise ValueError("off-line points must be distinct")
        self.n = n
        self.case = case
        self.a = a
        self.b = b
        self.aligned = tuple(ProjPoint((u, a, b), field) for u in us)
        self.off = tuple(off)
        self.field = field

    @property
    def points(self):
        return self.aligned + self.off

    def line(self) -> LinearSubspace:
        return LinearSubspace(2, [(self.field(0), self.b, -self.a)], self.field)

    def scheme(self) -> FiniteScheme:
        from zeroreg.scheme import reduced_germ

        return FiniteScheme([reduced_germ(p, self.field) for p in self.points], self.field)


def separator_forms(config: SeparatorConfig):
    """One degree-n separator per configuration point, each a linear
    combination of the n + 4 family monomials vanishing at every other
    point and not at its own; DegenerateConfiguration if some point
    admits none."""
    mons = separator_monomial_basis(config.n)
    pts = config.points
    values = [
        [evaluate_form({m: config.field(1)}, p.coords, config.field) for m in mons]
        for p in pts
    ]
    out = []
    for j in range(len(pts)):
        system = Matrix(
            [values[i] for i in range(len(pts)) if i != j],
            field=config.field,
            ncols=len(mons),
        )
        candidates = kernel_basis(system)
        chosen = None
        for v in candidates:
            val = sum((x * y for x, y in zip(values[j], v)), config.field(0))
            if val != 0:
                chosen = v
                break
        if chosen is None:
            raise DegenerateConfiguration(
                "no separator for point %d inside the monomial family" % j
            )
        out.append({m: c for m, c in zip(mons, chosen) if c != 0})
    return out
