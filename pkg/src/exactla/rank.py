"""Rank via the characteristic polynomial over F(X), and its applications.

The pipeline: symmetrize A into [[0,A],[A^T,0]], scale row i by X^(i-1)
(polize), take the division-free characteristic polynomial over F(X), and
read the rank off the multiplicity of the root 0:

    rank(A) = (m + n - mul) / 2.

Solvability of Ax = b, explicit solutions, greedy image bases, maximal
nonsingular minors and kernel bases are all built from the same
characteristic polynomial, so no Gaussian elimination appears anywhere in
this module (elimination lives only in the test oracle).

Two execution paths compute identical answers:
  * a generic path over a RationalFunctionField instance, faithful to the
    matrix-over-F(X) formulation, usable over any base field;
  * a fast private kernel for rationals and prime fields.  It exploits that
    polize(A) = diag(X^0..X^(N-1)) * B with B numeric, so every matrix-vector
    step is one numeric matmul plus row shifts on coefficient arrays
    (numpy int64 mod p, or object arrays of Python ints for Q after clearing
    denominators with an exact rescale).
"""

from fractions import Fraction
from math import lcm

import numpy as np

from .errors import (DimensionMismatch, IndexOutOfRange, InvalidInput,
                     Unsolvable, ZeroMatrix)
from .field import PrimeField, Rationals
from .matrix import Matrix, mat_vec
from .poly import Polynomial
from .ratfunc import RationalFunctionField
from .charpoly import charpoly as _charpoly, inverse as _inverse


# ---------------------------------------------------------------------------
# index vectors and the counting gadget

def iota(field, v):
    """Denoted index of an index vector: 1-based position of its single 1."""
    hits = [i + 1 for i, x in enumerate(v) if not field.is_zero(x)]
    if len(hits) != 1 or not field.is_one(v[hits[0] - 1]):
        raise InvalidInput("not an index vector (need exactly one entry = 1)")
    return hits[0]


def count_nonzero(field, v, k):
    """Index vector of length n+1 whose denoted index, minus one, counts the
    nonzero entries among the first k coordinates of v.

    Computed by the matrix-product simulation T_k ... T_1 e_1 with
    T_j = (1-chi_j) I + chi_j S, S the shift matrix; no host-level counting.
    """
    n = len(v)
    if not 0 <= k <= n:
        raise IndexOutOfRange(f"prefix length {k} for a vector of length {n}")
    size = n + 1
    z, o = field.zero(), field.one()
    ident = Matrix.identity(field, size)
    shift = Matrix(field, [[o if r == c + 1 else z for c in range(size)]
                           for r in range(size)])
    w = [o] + [z] * n
    for j in range(1, k + 1):
        chi = field.indicator(not field.is_zero(v[j - 1]))
        T = ident.scale(field.sub(o, chi)) + shift.scale(chi)
        w = mat_vec(T, w)
    return w


# ---------------------------------------------------------------------------
# symm / chi / polize

def symm(A):
    """[[0, A], [A^T, 0]], symmetric of order m+n over the base field."""
    F = A.field
    top = Matrix.zeros(F, A.m, A.m).hstack(A)
    bottom = A.transpose().hstack(Matrix.zeros(F, A.n, A.n))
    return top.vstack(bottom)


def chi_matrix(fx, n):
    """diag(X^0, X^1, ..., X^(n-1)) over the rational-function field fx."""
    x = fx.gen()
    rows = []
    power = fx.one()
    for i in range(n):
        rows.append([power if j == i else fx.zero() for j in range(n)])
        if i < n - 1:
            power = fx.mul(power, x)
    return Matrix(fx, rows)


def polize(A, fx=None):
    """chi(m+n) * symm(A), a matrix over F(X) with row i scaled by X^(i-1)."""
    fx = fx or RationalFunctionField(A.field)
    S = symm(A)
    lifted = S.map(fx.from_base, fx)
    return chi_matrix(fx, S.n) @ lifted


# ---------------------------------------------------------------------------
# result records

class RankReport:
    __slots__ = ("m", "n", "charpoly_of_polize", "mul", "rank")

    def __init__(self, m, n, charpoly_of_polize, mul, rank):
        self.m = m
        self.n = n
        self.charpoly_of_polize = charpoly_of_polize
        self.mul = mul
        self.rank = rank

    def __repr__(self):
        return f"RankReport(m={self.m}, n={self.n}, mul={self.mul}, rank={self.rank})"


class BasisSelection:
    __slots__ = ("selected", "basis", "count", "coeffs")

    def __init__(self, selected, basis, count, coeffs):
        self.selected = selected
        self.basis = basis
        self.count = count
        self.coeffs = coeffs

    def indices(self):
        """1-based positions of the selected columns."""
        return [j + 1 for j, s in enumerate(self.selected) if s]

    def __repr__(self):
        return f"BasisSelection(count={self.count}, selected={self.indices()})"


class MinorSelection:
    __slots__ = ("U", "V")

    def __init__(self, U, V):
        self.U = U
        self.V = V

    def __repr__(self):
        return f"MinorSelection(U={self.U}, V={self.V})"


# ---------------------------------------------------------------------------
# fast numeric kernel (private): matrices diag(X^degs) * B with B numeric

class _Num:
    """Coefficient arithmetic on 1-D/2-D numpy arrays: plain Python ints
    (object dtype) or residues mod p (int64 when products cannot overflow)."""

    def __init__(self, p=None):
        self.p = p
        if p is not None and p * p * 8192 < 2 ** 62:
            self.dtype = np.int64
        else:
            self.dtype = object

    def red(self, a):
        return a if self.p is None else a % self.p

    def arr1(self, values):
        return self.red(np.array([int(x) for x in values], dtype=self.dtype))

    def zeros(self, shape):
        return np.zeros(shape, dtype=self.dtype)

    def matmul(self, A, w):
        return self.red(A.dot(w))

    def conv(self, a, b):
        return self.red(np.convolve(a, b))

    def is_zero(self, a):
        return not np.any(self.red(a))

    def monomial(self, coeff, deg):
        a = self.zeros(deg + 1)
        a[deg] = int(coeff)
        return self.red(a)


def _padd(num, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = np.array(a, dtype=num.dtype, copy=True)
    out[:len(b)] = out[:len(b)] + b
    return num.red(out)


def _matvec(num, B, degs, w):
    """(diag(X^degs) * B) applied to a coefficient-array vector w (L x W)."""
    u = num.matmul(B, w)
    maxd = max(degs)
    out = num.zeros((u.shape[0], u.shape[1] + maxd))
    for i, d in enumerate(degs):
        out[i, d:d + u.shape[1]] = u[i]
    return out


def _scalar_vec(num, t, w):
    """Scalar X-polynomial t times each row of the vector w."""
    out = num.zeros((w.shape[0], w.shape[1] + len(t) - 1))
    for i in range(w.shape[0]):
        out[i] = num.conv(t, w[i])
    return out


def _fast_first_column(num, B, degs, k0):
    """First column of Col(k0+1, diag*B): Y-coefficients as X-arrays."""
    N = B.shape[0]
    col = [num.arr1([1]), -num.monomial(B[k0, k0], degs[k0])]
    if k0 == N - 1:
        return col
    Bt = B[k0 + 1:, k0 + 1:]
    R = B[k0, k0 + 1:]
    sub_degs = degs[k0 + 1:]
    L = N - 1 - k0
    w = num.zeros((L, max(sub_degs) + 1))
    for i in range(L):
        w[i, sub_degs[i]] = int(B[k0 + 1 + i, k0])
    w = num.red(w)
    for t in range(L):
        val = num.matmul(R, w)  # 1-D array of X-coefficients
        entry = num.zeros(len(val) + degs[k0])
        entry[degs[k0]:] = val
        col.append(-num.red(entry))
        if t < L - 1:
            w = _matvec(num, Bt, sub_degs, w)
    return col


def _fast_charpoly(num, B, degs):
    """Leading-first Y-coefficients (as X-coefficient arrays) of the
    characteristic polynomial of diag(X^degs) * B."""
    N = B.shape[0]
    v = _fast_first_column(num, B, degs, N - 1)
    for k0 in range(N - 2, -1, -1):
        c = _fast_first_column(num, B, degs, k0)
        out_len = N - k0 + 1
        out = []
        for i in range(out_len):
            acc = None
            for j in range(max(0, i - len(c) + 1), min(i, len(v) - 1) + 1):
                term = num.conv(c[i - j], v[j])
                acc = term if acc is None else _padd(num, acc, term)
            out.append(acc if acc is not None else num.arr1([0]))
        v = out
    return v


def _mul_of(num, ch):
    """Multiplicity of the root 0: trailing all-zero Y-coefficients."""
    mul = 0
    while mul < len(ch) and num.is_zero(ch[len(ch) - 1 - mul]):
        mul += 1
    return mul


def _fast_supported(field):
    return isinstance(field, (Rationals, PrimeField))


def _clear_ints(field, elems):
    """Integer images of the elements plus the exact scale used."""
    if isinstance(field, PrimeField):
        return [int(e) % field.p for e in elems], 1
    scale = lcm(*(Fraction(e).denominator for e in elems)) if elems else 1
    return [int(e * scale) for e in elems], scale


def _sym_parts(field, A, b=None):
    """Numeric kernel data for polize(A): (num, B, degs, scale, b_ints, b_scale)."""
    m, n = A.m, A.n
    N = m + n
    ints, scale = _clear_ints(field, [e for r in A.rows for e in r])
    num = _Num(field.p if isinstance(field, PrimeField) else None)
    B = num.zeros((N, N))
    for i in range(m):
        for j in range(n):
            B[i, m + j] = ints[i * n + j]
            B[m + j, i] = ints[i * n + j]
    B = num.red(B)
    degs = list(range(N))
    if b is None:
        return num, B, degs, scale, None, None
    b_ints, b_scale = _clear_ints(field, list(b))
    return num, B, degs, scale, b_ints, b_scale


def _chi_b_vector(num, b_ints, N):
    """chi_N * [b; 0] as a coefficient-array vector: row i holds b_i X^i."""
    m = len(b_ints)
    w = num.zeros((N, max(m, 1)))
    for i in range(m):
        w[i, i] = b_ints[i]
    return num.red(w)


# ---------------------------------------------------------------------------
# rank

def mulmuley_rank(A, method="auto"):
    field = A.field
    N = A.m + A.n
    if method == "generic" or not (method in ("auto", "fast") and _fast_supported(field)):
        fx, ch = _generic_polize_charpoly(A)
        mul = 0
        while mul <= N and fx.is_zero(ch[N - mul]):
            mul += 1
        report_poly = Polynomial(fx, list(reversed(ch)))
    else:
        num, B, degs, scale, _, _ = _sym_parts(field, A)
        ch = _fast_charpoly(num, B, degs)
        mul = _mul_of(num, ch)
        report_poly = _report_polynomial(field, num, ch, scale)
    if (N - mul) % 2:
        raise InvalidInput("odd rank numerator; characteristic polynomial is corrupt")
    return RankReport(A.m, A.n, report_poly, mul, (N - mul) // 2)


def _generic_polize_charpoly(A):
    """charpoly(polize(A)) over F(X), leading-first list; asserts that no
    denominator ever appears (Berkowitz is division-free on polynomials)."""
    fx = RationalFunctionField(A.field)
    C = polize(A, fx)
    ch = _charpoly(C).coeffs
    assert all(fx.is_polynomial(c) for c in ch), \
        "rational-function denominators leaked into a division-free computation"
    return fx, list(ch)


def _report_polynomial(field, num, ch, scale):
    """Exact charpoly of polize(A) over F(X) from the (possibly scaled)
    integer coefficient arrays: t_i(cC) = c^(N-i) t_i(C)."""
    fx = RationalFunctionField(field)
    N = len(ch) - 1
    coeffs = []  # constant-first in Y
    for i in range(N + 1):
        arr = ch[N - i]
        if scale == 1:
            vals = [field.from_int(int(c)) for c in arr]
        else:
            vals = [Fraction(int(c), scale ** (N - i)) for c in arr]
        coeffs.append(fx.from_poly(Polynomial(field, vals)))
    return Polynomial(fx, coeffs)


def rank(A, method="auto"):
    return mulmuley_rank(A, method).rank


# ---------------------------------------------------------------------------
# solvability and explicit solutions

def solvable(A, b, method="auto"):
    """Whether Ax = b has a solution: p~(C)(chi * [b;0]) = 0 with C = polize(A)
    and p~ the characteristic polynomial with its Y^mul factor removed."""
    if len(b) != A.m:
        raise DimensionMismatch(f"right-hand side length {len(b)} vs {A.m} rows")
    field = A.field
    if method != "generic" and _fast_supported(field):
        num, B, degs, _, b_ints, _ = _sym_parts(field, A, b)
        N = A.m + A.n
        ch = _fast_charpoly(num, B, degs)
        mul = _mul_of(num, ch)
        w0 = _chi_b_vector(num, b_ints, N)
        acc = None
        for j in range(N - mul, -1, -1):
            term = _scalar_vec(num, ch[N - (j + mul)], w0)
            if acc is None:
                acc = term
            else:
                acc = _matvec(num, B, degs, acc)
                h = max(acc.shape[1], term.shape[1])
                padded = num.zeros((N, h))
                padded[:, :acc.shape[1]] = acc
                padded[:, :term.shape[1]] += term
                acc = num.red(padded)
        return num.is_zero(acc)
    return _generic_solvable(A, b)


def _generic_system(A, b):
    fx = RationalFunctionField(A.field)
    C = polize(A, fx)
    N = C.n
    ch = _charpoly(C).coeffs  # leading-first over F(X)
    mul = 0
    while mul <= N and fx.is_zero(ch[N - mul]):
        mul += 1
    x = fx.gen()
    w0 = []
    power = fx.one()
    for i in range(N):
        w0.append(fx.mul(power, fx.from_base(b[i])) if i < len(b) else fx.zero())
        if i < N - 1:
            power = fx.mul(power, x)
    return fx, C, ch, mul, w0


def _generic_solvable(A, b):
    fx, C, ch, mul, w0 = _generic_system(A, b)
    N = C.n
    acc = None
    for j in range(N - mul, -1, -1):
        t = ch[N - (j + mul)]
        term = [fx.mul(t, w) for w in w0]
        if acc is None:
            acc = term
        else:
            acc = mat_vec(C, acc)
            acc = [fx.add(u, v) for u, v in zip(acc, term)]
    return all(fx.is_zero(u) for u in acc)


def solve(A, b, method="auto"):
    """A particular solution of Ax = b via v = R(C)(chi [b;0]).

    Over F(X) the identity symm(A) v = p~(0) [b;0] holds with everything
    polynomial in X.  Let s be the multiplicity of the root 0 of the scalar
    p~(0); comparing X^s coefficients gives symm(A) v_s = tau [b;0] with tau
    the (nonzero) X^s coefficient of p~(0), so the lower n components of
    tau^(-1) v_s solve the system.  (With s = 0 this is evaluation at X = 0;
    the general s is needed because p~(0) can vanish at 0.)
    Raises Unsolvable when no solution exists."""
    if len(b) != A.m:
        raise DimensionMismatch(f"right-hand side length {len(b)} vs {A.m} rows")
    field = A.field
    m, n = A.m, A.n
    N = m + n
    if method != "generic" and _fast_supported(field):
        num, B, degs, scale, b_ints, b_scale = _sym_parts(field, A, b)
        ch = _fast_charpoly(num, B, degs)
        mul = _mul_of(num, ch)
        w0 = _chi_b_vector(num, b_ints, N)
        # Horner for S = sum_{j>=1} t_{j+mul} C^(j-1) applied to w0; v = -S w0
        acc = None
        for j in range(N - mul, 0, -1):
            term = _scalar_vec(num, ch[N - (j + mul)], w0)
            if acc is None:
                acc = term
            else:
                acc = _matvec(num, B, degs, acc)
                h = max(acc.shape[1], term.shape[1])
                padded = num.zeros((N, h))
                padded[:, :acc.shape[1]] = acc
                padded[:, :term.shape[1]] += term
                acc = num.red(padded)
        t0 = num.red(ch[N - mul])  # the scalar p~(0) as an X-array
        s = 0
        while s < len(t0) and not t0[s]:
            s += 1
        tau_hat = int(t0[s])
        vs = [0] * N
        if acc is not None and s < acc.shape[1]:
            vs = [int(acc[i, s]) for i in range(N)]
        if isinstance(field, PrimeField):
            tau_inv = field.inv(tau_hat)
            x = [field.mul(field.neg(vs[m + i] % field.p), tau_inv) for i in range(n)]
        else:
            # v_hat = scale^(N-mul-1) * b_scale * v;  tau_hat = scale^(N-mul) * tau
            x = [Fraction(-scale * vs[m + i], tau_hat * b_scale) for i in range(n)]
    else:
        fx, C, ch, mul, w0 = _generic_system(A, b)
        acc = None
        for j in range(N - mul, 0, -1):
            t = ch[N - (j + mul)]
            term = [fx.mul(t, w) for w in w0]
            if acc is None:
                acc = term
            else:
                acc = mat_vec(C, acc)
                acc = [fx.add(u, v) for u, v in zip(acc, term)]
        base = fx.base
        t0 = ch[N - mul]
        assert fx.is_polynomial(t0), "p~(0) must be polynomial for polize inputs"
        s = 0
        while base.is_zero(t0.num.coeff(s)):
            s += 1
        tau_inv = base.inv(t0.num.coeff(s))
        if acc is None:
            x = [base.zero()] * n
        else:
            for u in acc[m:]:
                assert fx.is_polynomial(u), "v must be polynomial for polize inputs"
            x = [base.mul(base.neg(acc[m + i].num.coeff(s)), tau_inv)
                 for i in range(n)]
    # contractual check: the formula only solves solvable systems
    got = mat_vec(A, x)
    if not all(field.eq(u, v) for u, v in zip(got, b)):
        raise Unsolvable("no solution exists for this right-hand side")
    return x


# ---------------------------------------------------------------------------
# decomposition along ker/im of polize(A)

def decompose(C, v):
    """Split v = u1 + u2 with C u1 = 0 and u2 in im(C), for C = polize(A).

    u1 = p~(0)^(-1) p~(C) v and u2 is the complement; relies on
    ker(C) and im(C) intersecting trivially.
    """
    if not C.is_square():
        raise InvalidInput("decomposition needs a square polize matrix")
    fx = C.field
    N = C.n
    ch = _charpoly(C).coeffs
    mul = 0
    while mul <= N and fx.is_zero(ch[N - mul]):
        mul += 1
    acc = None
    for j in range(N - mul, -1, -1):
        t = ch[N - (j + mul)]
        term = [fx.mul(t, w) for w in v]
        if acc is None:
            acc = term
        else:
            acc = mat_vec(C, acc)
            acc = [fx.add(u, w) for u, w in zip(acc, term)]
    s_inv = fx.inv(ch[N - mul])  # p~(0), a nonzero element of F(X)
    u1 = [fx.mul(s_inv, u) for u in acc]
    u2 = [fx.sub(w, u) for w, u in zip(v, u1)]
    return u1, u2


# ---------------------------------------------------------------------------
# image basis, maximal minor, kernel basis

def greedy_basis(A, with_coeffs=True, method="auto"):
    """Left-to-right greedy column selection: column j joins the basis iff it
    is not a combination of the strictly earlier columns."""
    field = A.field
    m, n = A.m, A.n
    cols = A.column_list()
    selected = []
    for j in range(n):
        if j == 0:
            sel = any(not field.is_zero(e) for e in cols[0])
        else:
            prefix = Matrix(field, [[cols[c][i] for c in range(j)] for i in range(m)])
            sel = not solvable(prefix, cols[j], method=method)
        selected.append(sel)
    z = field.zero()
    basis = Matrix(field, [[cols[j][i] if selected[j] else z for j in range(n)]
                           for i in range(m)])
    count = sum(selected)
    coeffs = None
    if with_coeffs:
        bcols = []
        for j in range(n):
            if selected[j]:
                bcols.append([field.indicator(i == j) for i in range(n)])
            elif all(field.is_zero(e) for e in cols[j]):
                bcols.append([z] * n)
            else:
                bcols.append(solve(basis, cols[j], method=method))
        coeffs = Matrix(field, [[bcols[j][i] for j in range(n)] for i in range(n)])
        assert A == basis @ coeffs, "basis reconstruction failed"
    return BasisSelection(selected, basis, count, coeffs)


def max_nonsingular_minor(A, method="auto"):
    """Row set U from the greedy basis of A^T, column set V from that of A;
    A[U:V] is square of full rank = rank(A)."""
    col_sel = greedy_basis(A, with_coeffs=False, method=method)
    if col_sel.count == 0:
        raise ZeroMatrix("the zero matrix has no nonsingular minor")
    row_sel = greedy_basis(A.transpose(), with_coeffs=False, method=method)
    return MinorSelection(row_sel.indices(), col_sel.indices())


def kernel_basis(A, method="auto"):
    """Basis of ker(A) as a list of n-vectors (n - rank of them).

    Built from a maximal nonsingular minor M = A[U:V]: for each column c
    outside V, solve M w = A[U, c] and place w at positions V, -1 at c.
    """
    field = A.field
    m, n = A.m, A.n
    col_sel = greedy_basis(A, with_coeffs=False, method=method)
    r = col_sel.count
    if r == 0:
        return [[field.indicator(i == j) for i in range(n)] for j in range(n)]
    row_sel = greedy_basis(A.transpose(), with_coeffs=False, method=method)
    U, V = row_sel.indices(), col_sel.indices()
    M = A.submatrix(U, V)
    M_inv = _inverse(M)
    out = []
    for c in range(1, n + 1):
        if c in V:
            continue
        y = [A.at(i, c) for i in U]
        w = mat_vec(M_inv, y)
        vec = [field.zero()] * n
        for t, j in enumerate(V):
            vec[j - 1] = w[t]
        vec[c - 1] = field.neg(field.one())
        out.append(vec)
    return out
