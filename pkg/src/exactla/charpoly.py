"""Division-free characteristic polynomial and everything it buys.

The characteristic polynomial is computed as a product of lower-triangular
Toeplitz "column" matrices Col(1,A)...Col(n,A), each built from a trailing
principal submatrix and its first-row/first-column borders.  Only ring
operations are used, so the same code runs over Q, GF(p), F[X] and F(X).

The product is associated right-to-left: a column matrix times a vector is a
truncated convolution of first columns, which avoids materializing the
intermediate Toeplitz matrices.

Sign convention (validated against the cofactor oracle): the monic column
product equals det(YI - A), so det(A) = (-1)^n times its constant
coefficient.
"""

from .errors import IndexOutOfRange, NonSquare, SingularMatrix
from .matrix import Matrix
from .poly import Polynomial


class CharPoly:
    """Length n+1 coefficient vector, leading term first, always monic."""

    __slots__ = ("field", "coeffs", "n")

    def __init__(self, field, coeffs, n):
        self.field = field
        self.coeffs = tuple(coeffs)
        self.n = n
        assert len(self.coeffs) == n + 1

    def constant_first(self):
        return list(reversed(self.coeffs))

    def to_polynomial(self):
        """Constant-first Polynomial over the coefficient ring."""
        return Polynomial(self.field, self.constant_first())

    def coeff_of(self, i):
        """Coefficient of Y^i."""
        return self.coeffs[self.n - i]

    def __repr__(self):
        body = " ".join(self.field.format(c) for c in self.coeffs)
        return f"CharPoly({body})"


def _col_first_column(A, k):
    """First column of Col(k,A): [1, -a_kk, -R S, -R A' S, ..., -R A'^{n-k-1} S]
    with A' the trailing submatrix starting at row/column k+1 and R, S its
    borders along row k / column k."""
    F = A.field
    n = A.n
    col = [F.one(), F.neg(A.at(k, k))]
    if k == n:
        return col
    R = [A.at(k, j) for j in range(k + 1, n + 1)]
    S = [A.at(i, k) for i in range(k + 1, n + 1)]
    trailing = [[A.at(i, j) for j in range(k + 1, n + 1)] for i in range(k + 1, n + 1)]
    w = S
    for t in range(n - k):
        col.append(F.neg(F.sum(F.mul(r, x) for r, x in zip(R, w))))
        if t < n - k - 1:
            w = [F.sum(F.mul(a, x) for a, x in zip(row, w)) for row in trailing]
    return col


def berkowitz_col(k, A):
    """The (n-k+2) x (n-k+1) lower-triangular Toeplitz column matrix."""
    if not A.is_square():
        raise NonSquare("column matrices need a square input")
    n = A.n
    if not 1 <= k <= n:
        raise IndexOutOfRange(f"column index {k} for a {n}x{n} matrix")
    F = A.field
    c = _col_first_column(A, k)
    z = F.zero()
    return Matrix(F, [[c[i - j] if 0 <= i - j < len(c) else z
                       for j in range(n - k + 1)] for i in range(n - k + 2)])


def charpoly(A):
    """Monic characteristic polynomial det(YI - A), leading term first."""
    if not A.is_square():
        raise NonSquare("characteristic polynomial needs a square matrix")
    F = A.field
    n = A.n
    v = _col_first_column(A, n)
    for k in range(n - 1, 0, -1):
        c = _col_first_column(A, k)
        out_len = n - k + 2
        v = [F.sum(F.mul(c[i - j], v[j])
                   for j in range(max(0, i - len(c) + 1), min(i, len(v) - 1) + 1))
             for i in range(out_len)]
    return CharPoly(F, v, n)


def det(A):
    """(-1)^n times the constant coefficient of the characteristic polynomial."""
    p = charpoly(A)
    c0 = p.coeffs[-1]
    return c0 if A.n % 2 == 0 else A.field.neg(c0)


def adjugate(A, ch=None):
    """adj(A) with A*adj(A) = adj(A)*A = det(A)*I.

    Horner evaluation of the degree-(n-1) part of the characteristic
    polynomial: (-1)^(n-1) (A^(n-1) + c_(n-1) A^(n-2) + ... + c_1 I) where
    c_i is the coefficient of Y^i.
    """
    if not A.is_square():
        raise NonSquare("adjugate needs a square matrix")
    F = A.field
    n = A.n
    if ch is None:
        ch = charpoly(A)
    ident = Matrix.identity(F, n)
    S = ident
    for i in range(n - 1, 0, -1):
        S = (S @ A) + ident.scale(ch.coeff_of(i))
    if n % 2 == 0:
        S = -S
    return S


def inverse(A):
    if not A.is_square():
        raise NonSquare("inverse needs a square matrix")
    ch = charpoly(A)
    F = A.field
    d = ch.coeffs[-1] if A.n % 2 == 0 else F.neg(ch.coeffs[-1])
    if F.is_zero(d):
        raise SingularMatrix("determinant is zero")
    return adjugate(A, ch).scale(F.inv(d))


def quasi_inverse(A):
    """A nonzero B with A*B = det(A)*I, singular A included.

    For nonsingular A this is the adjugate.  Otherwise strip the Y^m factor
    (m = multiplicity of the root 0) from the characteristic polynomial to
    get ft with ft(0) != 0, and return A^i * ft(A) for the least i such that
    A^(i+1) * ft(A) = 0; Cayley-Hamilton guarantees i < m and A*B = 0.
    """
    if not A.is_square():
        raise NonSquare("quasi-inverse needs a square matrix")
    F = A.field
    ch = charpoly(A)
    coeffs = list(ch.coeffs)  # leading first
    m = 0
    while m <= A.n and F.is_zero(coeffs[A.n - m]):
        m += 1
    if m == 0:
        return adjugate(A, ch)
    ft = Polynomial(F, list(reversed(coeffs[:A.n - m + 1])))
    # Horner for ft(A)
    ident = Matrix.identity(F, A.n)
    B = Matrix.zeros(F, A.n, A.n)
    for c in ft.coeffs[::-1]:
        B = (B @ A) + ident.scale(c)
    while not (A @ B).is_zero():
        B = A @ B
    return B
