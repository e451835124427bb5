"""Exact scalars and dense exact linear algebra.

Everything downstream (Hilbert functions, secant detection, separator
construction) reduces to exact rank / kernel / inhomogeneous-solve
questions, so elimination lives here and nowhere else.  Two coefficient
fields are supported:

* the rationals, represented by ``fractions.Fraction`` (authoritative);
* prime fields F_p for a caller-chosen odd prime (opt-in fast mode,
  useful for cross-checks with a large random prime).

Rational elimination is fraction-free: rows are cleared to integers and
reduced with Bareiss-style cross-multiplication so intermediate entries
stay integral and growth stays bounded by minor sizes.  Prime-field
elimination uses ordinary division.  Pivoting is deterministic (first
nonzero entry), so results are reproducible bit for bit.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from math import gcd, lcm


class RationalField:
    """Marker/constructor object for the field of rational numbers."""

    characteristic = 0

    def __call__(self, value=0):
        if isinstance(value, Fraction):
            return value
        return Fraction(value)

    def __repr__(self):
        return "QQ"


QQ = RationalField()

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24 (covers all 64-bit input)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@functools.lru_cache(maxsize=None)
def prime_field(p: int):
    """Return the element class for F_p.  p must be an odd prime.

    The returned class doubles as the field tag: calling it coerces ints,
    strings ("7", "3/4") and other elements of the same field.
    """
    if p < 3 or not is_probable_prime(p):
        raise ValueError(f"prime_field needs an odd prime, got {p}")

    class FpElement:
        __slots__ = ("value",)
        modulus = p
        characteristic = p

        def __init__(self, value=0):
            if isinstance(value, FpElement):
                self.value = value.value
            elif isinstance(value, str):
                if "/" in value:
                    num, den = value.split("/")
                    self.value = int(num) * pow(int(den), -1, p) % p
                else:
                    self.value = int(value) % p
            else:
                self.value = int(value) % p

        def __add__(self, other):
            return FpElement(self.value + FpElement(other).value)

        __radd__ = __add__

        def __sub__(self, other):
            return FpElement(self.value - FpElement(other).value)

        def __rsub__(self, other):
            return FpElement(FpElement(other).value - self.value)

        def __mul__(self, other):
            return FpElement(self.value * FpElement(other).value)

        __rmul__ = __mul__

        def __truediv__(self, other):
            o = FpElement(other)
            if o.value == 0:
                raise ZeroDivisionError("division by zero in F_p")
            return FpElement(self.value * pow(o.value, -1, p))

        def __rtruediv__(self, other):
            if self.value == 0:
                raise ZeroDivisionError("division by zero in F_p")
            return FpElement(FpElement(other).value * pow(self.value, -1, p))

        def __neg__(self):
            return FpElement(-self.value)

        def __pow__(self, e):
            return FpElement(pow(self.value, e, p))

        def __eq__(self, other):
            if isinstance(other, FpElement):
                return self.value == other.value
            if isinstance(other, int):
                return self.value == other % p
            return NotImplemented

        def __hash__(self):
            return hash((p, self.value))

        def __bool__(self):
            return self.value != 0

        def __str__(self):
            return str(self.value)

        def __repr__(self):
            return f"Fp({self.value} mod {p})"

    FpElement.__name__ = f"F{p}"
    FpElement.__qualname__ = f"F{p}"
    return FpElement


def field_of(x):
    """Field tag of a scalar: QQ for Fraction/int, the class for F_p elements."""
    if isinstance(x, Fraction) or isinstance(x, int):
        return QQ
    return type(x)


def parse_scalar(text, field=QQ):
    """Parse a canonical scalar string ("5", "-3/4") into the given field."""
    if field is QQ:
        return Fraction(text)
    return field(text)


def scalar_str(x) -> str:
    """Canonical string form of a scalar, inverse of parse_scalar."""
    return str(x)


def _clear_row(row):
    """Scale a row of Fractions to coprime integers (rank/kernel preserving)."""
    mult = lcm(*(f.denominator for f in row)) if row else 1
    ints = [int(f * mult) for f in row]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def _bareiss_echelon(rows, width):
    """In-place fraction-free echelon form of integer rows.

    Returns the list of pivot column indices; rows are left in echelon
    order (pivot rows first).
    """
    pivots = []
    r = 0
    prev = 1
    for c in range(width):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pivot = rows[r][c]
        for i in range(r + 1, len(rows)):
            # every lower row must be rescaled each step, even with a zero
            # head, or the exact-division invariant breaks later
            head = rows[i][c]
            row_i, row_r = rows[i], rows[r]
            if head == 0:
                for j in range(c, width):
                    q, rem = divmod(pivot * row_i[j], prev)
                    if rem:
                        raise ArithmeticError("inexact division in elimination")
                    row_i[j] = q
            else:
                for j in range(c, width):
                    q, rem = divmod(pivot * row_i[j] - head * row_r[j], prev)
                    if rem:
                        raise ArithmeticError("inexact division in elimination")
                    row_i[j] = q
        prev = pivot
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def _field_echelon(rows, width, field):
    """Ordinary row echelon over a prime field.  Returns pivot columns."""
    pivots = []
    r = 0
    for c in range(width):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = field(1) / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(r + 1, len(rows)):
            head = rows[i][c]
            if head != 0:
                rows[i] = [a - head * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


class Matrix:
    """Dense exact matrix.  Entries are Fractions or F_p elements."""

    __slots__ = ("nrows", "ncols", "data", "field")

    def __init__(self, data, field=None, ncols=None):
        self.data = [list(row) for row in data]
        self.nrows = len(self.data)
        if self.nrows:
            self.ncols = len(self.data[0])
            if any(len(row) != self.ncols for row in self.data):
                raise ValueError("ragged rows")
        else:
            self.ncols = 0 if ncols is None else ncols
        if field is None:
            if not self.nrows or not self.ncols:
                raise ValueError("field required for empty matrix")
            field = field_of(self.data[0][0])
        self.field = field
        if field is QQ:
            self.data = [[Fraction(v) for v in row] for row in self.data]
        else:
            self.data = [[field(v) for v in row] for row in self.data]

    @classmethod
    def identity(cls, n, field=QQ):
        return cls([[field(1) if i == j else field(0) for j in range(n)] for i in range(n)], field=field)

    def transpose(self):
        return Matrix([[self.data[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
                      field=self.field, ncols=self.nrows)

    def mul_vec(self, vec):
        vec = list(vec)
        if len(vec) != self.ncols:
            raise ValueError("dimension mismatch")
        zero = self.field(0)
        return tuple(sum((a * b for a, b in zip(row, vec)), zero) for row in self.data)

    def _echelon(self):
        """Echelon form of a working copy.  Returns (rows over field, pivots)."""
        if self.field is QQ:
            rows = [_clear_row(row) for row in self.data]
            pivots = _bareiss_echelon(rows, self.ncols)
            return [[Fraction(v) for v in row] for row in rows], pivots
        rows = [list(row) for row in self.data]
        pivots = _field_echelon(rows, self.ncols, self.field)
        return rows, pivots

    def rank(self) -> int:
        if not self.nrows or not self.ncols:
            return 0
        _, pivots = self._echelon()
        return len(pivots)

    def kernel_basis(self):
        """Basis of the right null space, as a list of tuples.

        len(result) == ncols - rank, and every basis vector v satisfies
        self.mul_vec(v) == 0.
        """
        if not self.ncols:
            return []
        if not self.nrows:
            one, zero = self.field(1), self.field(0)
            return [tuple(one if i == j else zero for i in range(self.ncols))
                    for j in range(self.ncols)]
        rows, pivots = self._echelon()
        return self._back_substitute_kernel(rows, pivots)

    def _back_substitute_kernel(self, rows, pivots):
        zero, one = self.field(0), self.field(1)
        pivot_set = set(pivots)
        free_cols = [c for c in range(self.ncols) if c not in pivot_set]
        basis = []
        for f in free_cols:
            x = [zero] * self.ncols
            x[f] = one
            for i in range(len(pivots) - 1, -1, -1):
                c = pivots[i]
                s = zero
                row = rows[i]
                for j in range(c + 1, self.ncols):
                    if x[j] != 0:
                        s = s + row[j] * x[j]
                x[c] = -s / row[c]
            basis.append(tuple(x))
        return basis

    def solve_affine(self, rhs):
        """Solve self * x = rhs exactly.

        Returns an AffineSolution (particular solution plus kernel basis)
        or None when the system is inconsistent.
        """
        rhs = list(rhs)
        if len(rhs) != self.nrows:
            raise ValueError("rhs length mismatch")
        if self.field is QQ:
            work = []
            for row, b in zip(self.data, rhs):
                cleared = _clear_row([Fraction(v) for v in row] + [Fraction(b)])
                work.append(cleared)
            pivots = _bareiss_echelon(work, self.ncols + 1)
            if pivots and pivots[-1] == self.ncols:
                return None
            rows = [[Fraction(v) for v in row] for row in work]
        else:
            rows = [[self.field(v) for v in row] + [self.field(b)]
                    for row, b in zip(self.data, rhs)]
            pivots = _field_echelon(rows, self.ncols + 1, self.field)
            if pivots and pivots[-1] == self.ncols:
                return None
        pivots = [c for c in pivots if c < self.ncols]
        for i in range(len(pivots), len(rows)):
            if any(v != 0 for v in rows[i]):
                return None
        zero = self.field(0)
        x = [zero] * self.ncols
        for i in range(len(pivots) - 1, -1, -1):
            c = pivots[i]
            row = rows[i]
            s = row[self.ncols]
            for j in range(c + 1, self.ncols):
                if x[j] != 0:
                    s = s - row[j] * x[j]
            x[c] = s / row[c]
        kernel = self._back_substitute_kernel(rows, pivots)
        return AffineSolution(tuple(x), kernel)

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols} over {self.field!r})"


class AffineSolution:
    """Solution set of a consistent linear system: particular + kernel span."""

    __slots__ = ("particular", "kernel")

    def __init__(self, particular, kernel):
        self.particular = particular
        self.kernel = kernel

    def __iter__(self):
        yield self.particular
        yield self.kernel


def rank(m: Matrix) -> int:
    return m.rank()


def kernel_basis(m: Matrix):
    return m.kernel_basis()


def solve_affine(m: Matrix, rhs):
    return m.solve_affine(rhs)


class ColumnSpace:
    """Incremental rank of a stream of vectors in K^d.

    Used for wide evaluation matrices: columns are fed one at a time and
    reduced against the pivots collected so far, so the rank computation
    can stop early once a target rank is reached.  Over the rationals the
    stored pivot vectors are coprime-integer rescalings and reduction is
    by cross-multiplication, keeping all arithmetic in integers.
    """

    __slots__ = ("field", "pivots")

    def __init__(self, field=QQ):
        self.field = field
        self.pivots = []  # list of (pivot_index, reduced_vector)

    @property
    def rank(self):
        return len(self.pivots)

    def add(self, vec) -> bool:
        """Reduce vec against the current basis; returns True if rank grew."""
        if self.field is QQ:
            v = _clear_row([Fraction(x) for x in vec])
        else:
            v = [self.field(x) for x in vec]
        for idx, piv in self.pivots:
            head = v[idx]
            if head == 0:
                continue
            if self.field is QQ:
                scale = piv[idx]
                v = [scale * a - head * b for a, b in zip(v, piv)]
                g = 0
                for a in v:
                    g = gcd(g, a)
                if g > 1:
                    v = [a // g for a in v]
            else:
                v = [a - head * b for a, b in zip(v, piv)]
        lead = next((i for i, a in enumerate(v) if a != 0), None)
        if lead is None:
            return False
        if self.field is not QQ:
            inv = self.field(1) / v[lead]
            v = [a * inv for a in v]
        self.pivots.append((lead, v))
        self.pivots.sort(key=lambda t: t[0])
        return True
