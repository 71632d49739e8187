"""Exact characteristic polynomial of the ancestral matrix over big integers.

Two genuinely independent exact pipelines are kept side by side:

* the primary route evaluates det(xI - C) at n+1 integer points by
  fraction-free (Bareiss) elimination and interpolates, which is exact
  because the polynomial is monic with integer coefficients;
* the cross-check route is Faddeev-LeVerrier, whose per-step division by k
  is exact for integer matrices.

Collapsing these into one would silently drop a built-in oracle, so both are
public and the test suite compares them coefficient by coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ancestral_matrices import ancestral_matrix
from .errors import NotDary
from .tree_core import RootedTree


@dataclass(frozen=True)
class IntPolynomial:
    """Exact integer coefficients, lowest degree first; always monic here."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def highest_first(self) -> tuple[int, ...]:
        return tuple(reversed(self.coeffs))


def bareiss_determinant(rows) -> int:
    """Exact determinant of a square integer matrix by fraction-free
    elimination.  Every division below is exact by the Bareiss identity.
    The empty matrix has determinant 1."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def _poly_mul_linear(coeffs: list, root) -> list:
    """Multiply a lowest-first coefficient list by (x - root)."""
    out = [0] * (len(coeffs) + 1)
    for t, c in enumerate(coeffs):
        out[t] -= root * c
        out[t + 1] += c
    return out


def charpoly_by_interpolation(rows) -> tuple[int, ...]:
    """det(xI - M) for an integer matrix M via n+1 evaluations at x = 0..n
    and exact Lagrange interpolation.  Coefficients lowest first."""
    n = len(rows)
    if n == 0:
        return (1,)
    points = list(range(n + 1))
    values = []
    for x in points:
        shifted = [[(x if i == j else 0) - rows[i][j] for j in range(n)]
                   for i in range(n)]
        values.append(bareiss_determinant(shifted))
    coeffs = [Fraction(0)] * (n + 1)
    for i in points:
        denom = 1
        num = [1]
        for j in points:
            if j == i:
                continue
            denom *= i - j
            num = _poly_mul_linear(num, j)
        scale = Fraction(values[i], denom)
        for t, c in enumerate(num):
            coeffs[t] += scale * c
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise AssertionError("interpolation produced a non-integer")
        out.append(int(c))
    if out[-1] != 1:
        raise AssertionError("characteristic polynomial is not monic")
    return tuple(out)


def _mat_mul(a, b):
    n = len(a)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for k in range(n):
            aik = ai[k]
            if aik:
                bk = b[k]
                for j in range(n):
                    oi[j] += aik * bk[j]
    return out


def charpoly_by_faddeev_leverrier(rows) -> tuple[int, ...]:
    """det(xI - M) by the Faddeev-LeVerrier recurrence over big integers.
    The division by k at each step is exact for integer input.  Coefficients
    lowest first."""
    n = len(rows)
    if n == 0:
        return (1,)
    a = [list(r) for r in rows]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    aux = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        m = _mat_mul(a, aux)
        tr = sum(m[i][i] for i in range(n))
        if tr % k != 0:
            raise AssertionError("non-exact division in the recurrence")
        ck = -(tr // k)
        coeffs[n - k] = ck
        for i in range(n):
            m[i][i] += ck
        aux = m
    return tuple(coeffs)


def char_poly(tree: RootedTree) -> IntPolynomial:
    """Exact det(xI - C(T)); independent of the leaf order."""
    return IntPolynomial(charpoly_by_interpolation(ancestral_matrix(tree).rows))


def gamma_coefficients(tree: RootedTree) -> list[int]:
    """gamma_k so that det(xI - C) = sum of (-1)^k gamma_k x^(n-k).

    gamma_1 is the trace, i.e. the sum of leaf levels; every gamma_k is a
    non-negative count (see path_collections for what it counts).
    """
    poly = char_poly(tree)
    n = poly.degree
    highest = poly.highest_first()
    return [highest[k] if k % 2 == 0 else -highest[k] for k in range(n + 1)]


def eval_det_shift(tree: RootedTree, c: Fraction | int) -> Fraction:
    """Exact det(cI + C(T)) for any rational c.

    Scales to an integer matrix first: det(cI + C) = det(pI + qC) / q^n
    with c = p/q in lowest terms, so a single fraction-free elimination
    suffices.
    """
    c = Fraction(c)
    rows = ancestral_matrix(tree).rows
    n = len(rows)
    p, q = c.numerator, c.denominator
    scaled = [[q * rows[i][j] + (p if i == j else 0) for j in range(n)]
              for i in range(n)]
    return Fraction(bareiss_determinant(scaled), q ** n)


@dataclass(frozen=True)
class DaryCheck:
    lhs: int
    rhs: int
    equal: bool


def dary_determinant_check(tree: RootedTree, d: int) -> DaryCheck:
    """Compare det(I + (d-1)C(T)) against d**(d * internal count).

    The tree must be d-ary: every internal vertex has exactly d children.
    """
    if d < 2:
        raise NotDary(tree.root)
    int_count = 0
    for v in range(tree.n_vertices):
        k = len(tree.children[v])
        if k == 0:
            continue
        if k != d:
            raise NotDary(v)
        int_count += 1
    rows = ancestral_matrix(tree).rows
    n = len(rows)
    shifted = [[(d - 1) * rows[i][j] + (1 if i == j else 0) for j in range(n)]
               for i in range(n)]
    lhs = bareiss_determinant(shifted)
    rhs = d ** (d * int_count)
    return DaryCheck(lhs=lhs, rhs=rhs, equal=lhs == rhs)
