"""Numerical profile of an isolated hypersurface surface singularity.

Certification happens on the singular locus of the surface: the quotient by
(f) + Jacobian ideal must be finite-dimensional and supported at the origin.
The Milnor number is the length of the origin-local factor of the Jacobian
quotient; when the Jacobian ideal is itself supported only at the origin
(the usual case) that is just the global quotient dimension, and otherwise
the local factor is split off exactly with multiplication matrices.  The
deformed fibers of the shipped family need this: they acquire critical
points away from the surface.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import kernel
from .errors import (NotIsolatedError, NotQuasiHomogeneousError,
                     SingularLocusNotAtOriginError, SmoothInput)
from .groebner import (MonomialOrder, buchberger, graded_staircase_count,
                       quotient_dimension, staircase, supported_only_at_origin)
from .polynomials import (Polynomial, WeightSystem, euler_identity_check,
                          find_weights, partial_derivative)


@dataclass(frozen=True)
class SingularityProfile:
    f: Polynomial
    milnor: int
    tjurina: int
    weights: WeightSystem | None
    p_g: int | None
    torsion_omega2_length: int
    omega3_length: int


def jacobian_ideal(f):
    """The three partial derivatives of f."""
    if len(f.variables) != 3:
        raise ValueError("expected a polynomial in 3 variables")
    if not f.is_parameter_free():
        raise ValueError("substitute the parameter before analysis")
    f = f.drop_parameter()
    return [partial_derivative(f, i) for i in range(3)]


def _certify_tjurina(f, order):
    """Groebner basis of (f) + Jacobian ideal, certified isolated-at-origin.

    Returns (basis, tau).  Raises NotIsolatedError, SmoothInput, or
    SingularLocusNotAtOriginError.
    """
    partials = jacobian_ideal(f)
    basis = buchberger([f.drop_parameter()] + partials, order)
    dim = quotient_dimension(basis)
    if dim is None:
        raise NotIsolatedError(
            "the singular locus of {f=0} is positive-dimensional")
    if dim == 0:
        raise SmoothInput("the hypersurface {f=0} is smooth")
    if not supported_only_at_origin(basis):
        raise SingularLocusNotAtOriginError(
            "the singular locus of {f=0} is not the origin")
    return basis, dim


def tjurina_number(f, order=None):
    """length of Q[x,y,z]/((f) + Jacobian ideal), the Tjurina number."""
    order = order or MonomialOrder.grevlex()
    _, tau = _certify_tjurina(f, order)
    return tau


def milnor_number(f, order=None):
    """Milnor number at the origin.

    Computed as the dimension of the Jacobian quotient when that quotient is
    supported only at the origin; otherwise as the dimension of its
    origin-local factor (extra critical points of f away from {f=0} do not
    contribute).
    """
    order = order or MonomialOrder.grevlex()
    _certify_tjurina(f, order)
    basis = buchberger(jacobian_ideal(f), order)
    dim = quotient_dimension(basis)
    if dim is None:
        raise NotIsolatedError(
            "the critical locus of f is positive-dimensional away from "
            "the surface; the Milnor number is not available")
    if supported_only_at_origin(basis):
        return dim
    return _local_dimension_at_origin(basis)


# -- origin-local factor of an artinian quotient ------------------------------

def _multiplication_matrix(basis, monomials, index, var):
    """Matrix of multiplication by x_var on the staircase basis (Fractions)."""
    impl = kernel.active()
    code, weights = basis.order.codes()
    size = len(monomials)
    mat = [[Fraction(0)] * size for _ in range(size)]
    for j, e in enumerate(monomials):
        ne = e[:var] + (e[var] + 1,) + e[var + 1:]
        reduced, num, den = impl.reduce_full([(ne, 1)], basis._raw, code, weights)
        for ee, c in reduced:
            mat[index[ee]][j] = Fraction(num * c, den)
    return mat


def _integerize(mat):
    den = 1
    for row in mat:
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
    out = [[int(x * den) for x in row] for row in mat]
    return _strip_content(out)


def _strip_content(mat):
    g = 0
    for row in mat:
        for x in row:
            g = gcd(g, x)
    if g > 1:
        return [[x // g for x in row] for row in mat]
    return mat


def _matmul(a, b):
    n = len(a)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        row_a = a[i]
        row_out = out[i]
        for k in range(n):
            v = row_a[k]
            if v:
                row_b = b[k]
                for j in range(n):
                    row_out[j] += v * row_b[j]
    return out


def _rank(rows):
    """Exact rank over Q of an integer matrix."""
    rows = [list(map(Fraction, r)) for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][c]
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def _local_dimension_at_origin(basis):
    """Length of the origin-local factor of a finite quotient ring.

    The quotient splits over the support points; multiplication by x_i acts
    nilpotently exactly on the factors where the i-th coordinate vanishes, so
    the origin factor is the joint kernel of the D-th powers of the three
    multiplication operators (D bounds every nilpotency index).
    """
    s = staircase(basis)
    monomials = list(s.monomials)
    size = len(monomials)
    if size == 0:
        return 0
    index = {e: i for i, e in enumerate(monomials)}
    stacked = []
    for var in range(len(basis.variables)):
        mat = _integerize(_multiplication_matrix(basis, monomials, index, var))
        power = 1
        while power < size:
            mat = _strip_content(_matmul(mat, mat))
            power *= 2
        stacked.extend(mat)
    return size - _rank(stacked)


# -- geometric genus and the full profile -------------------------------------

def geometric_genus_qh(f, ws, cutoff=None):
    """Geometric genus of a quasi-homogeneous isolated singularity.

    Counts standard monomials of the Jacobian ideal with weighted degree at
    most d - (w1+w2+w3); the cutoff can be overridden explicitly.
    """
    f = f.drop_parameter()
    if not euler_identity_check(f, ws):
        raise NotQuasiHomogeneousError(
            "the weight system does not satisfy the Euler identity for f")
    if cutoff is None:
        cutoff = ws.degree - sum(ws.weights)
    basis = buchberger(jacobian_ideal(f), MonomialOrder.weighted(ws.weights))
    return graded_staircase_count(basis, ws, cutoff)


def analyze(f, order=None):
    """Full numerical profile: mu, tau, weights, p_g, torsion lengths.

    The lengths of the degree-3 forms module and of the torsion of the
    degree-2 forms both equal tau for these singularities, so they are
    reported from it directly.
    """
    order = order or MonomialOrder.grevlex()
    mu = milnor_number(f, order)
    tau = tjurina_number(f, order)
    g = f.drop_parameter()
    ws = find_weights(g)
    if ws is not None and not euler_identity_check(g, ws):
        ws = None
    p_g = geometric_genus_qh(g, ws) if ws is not None else None
    if ws is not None and tau != mu:
        raise AssertionError(
            f"internal inconsistency: quasi-homogeneous input with "
            f"tau={tau} != mu={mu}")
    return SingularityProfile(
        f=g, milnor=mu, tjurina=tau, weights=ws, p_g=p_g,
        torsion_omega2_length=tau, omega3_length=tau)
