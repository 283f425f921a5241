# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled term-arithmetic kernel.

Drop-in replacement for bassinv._core_py with the same contracts (see that
module for the data layout).  Exponents are unpacked into C integer buffers
inside the hot loops (divisibility scans, staircase walks); coefficients
remain Python ints so every result is exact.
"""

from heapq import heappush, heappop
from math import gcd

from libc.stdlib cimport free, malloc

from .errors import StaircaseLimitError

BACKEND = "cython"

GREVLEX = 0
LEX = 1
WGREVLEX = 2
WLEX = 3

cdef enum:
    MAX_VARS = 64


cdef inline tuple _add(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [None] * n
    for i in range(n):
        out[i] = a[i] + b[i]
    return tuple(out)


cdef inline tuple _sub(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [None] * n
    for i in range(n):
        out[i] = a[i] - b[i]
    return tuple(out)


cdef inline tuple _lcm(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [None] * n
    for i in range(n):
        out[i] = a[i] if a[i] > b[i] else b[i]
    return tuple(out)


cdef inline bint _divides(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef long long x, y
    for i in range(n):
        x = a[i]
        y = b[i]
        if x > y:
            return False
    return True


cdef tuple _order_key(tuple exp, int kind, tuple weights):
    cdef Py_ssize_t i, n = len(exp)
    cdef long long s = 0, wd = 0, e
    cdef list out
    if kind == LEX:
        return exp
    if kind == GREVLEX:
        out = [None] * (n + 1)
        for i in range(n):
            e = exp[i]
            s += e
            out[n - i] = -e
        out[0] = s
        return tuple(out)
    if kind == WGREVLEX:
        out = [None] * (n + 2)
        for i in range(n):
            e = exp[i]
            s += e
            wd += e * <long long>weights[i]
            out[n + 1 - i] = -e
        out[0] = wd
        out[1] = s
        return tuple(out)
    if kind == WLEX:
        out = [None] * (n + 1)
        for i in range(n):
            e = exp[i]
            wd += e * <long long>weights[i]
            out[i + 1] = e
        out[0] = wd
        return tuple(out)
    raise ValueError(f"unknown order kind {kind}")


cdef inline tuple _neg_key(tuple exp, int kind, tuple weights):
    cdef tuple key = _order_key(exp, kind, weights)
    cdef Py_ssize_t i, n = len(key)
    cdef list out = [None] * n
    for i in range(n):
        out[i] = -key[i]
    return tuple(out)


def order_key(exp, kind, weights):
    """Tuple that sorts ascending in the monomial order."""
    return _order_key(exp, kind, weights)


def exp_divides(a, b):
    return _divides(a, b)


def exp_add(a, b):
    return _add(a, b)


def exp_sub(a, b):
    return _sub(a, b)


def exp_lcm(a, b):
    return _lcm(a, b)


def sort_terms(pairs, int kind, tuple weights):
    """Combine duplicate exponents, drop zeros, sort descending."""
    cdef dict acc = {}
    for e, c in pairs:
        v = acc.get(e, 0) + c
        if v:
            acc[e] = v
        else:
            acc.pop(e, None)
    items = list(acc.items())
    items.sort(key=lambda t: _order_key(t[0], kind, weights), reverse=True)
    return items


def make_primitive(terms):
    """Divide by the signed content so gcd = 1 and the lead is positive."""
    if not terms:
        return terms, 0
    g = 0
    for _, c in terms:
        g = gcd(g, c)
        if g == 1:
            break
    if terms[0][1] < 0:
        g = -g
    if g == 1:
        return terms, 1
    return [(e, c // g) for e, c in terms], g


def reduce_full(terms, basis, int kind, tuple weights):
    """Complete normal form, fraction-free; see the pure kernel's docstring."""
    cdef dict poly = {}
    cdef list heap = []
    cdef list lead_coeffs = []
    cdef Py_ssize_t nb = len(basis), nvars = 0, i, j
    cdef int hit
    cdef long long *lead_flat = NULL
    cdef long long ebuf[MAX_VARS]
    cdef bint ok
    for e, c in terms:
        poly[e] = c
        nvars = len(<tuple>e)
    if not poly:
        return [], 1, 1
    if nvars > MAX_VARS:
        raise ValueError(f"too many variables for the compiled kernel "
                         f"({nvars} > {MAX_VARS})")
    for e in poly:
        heappush(heap, (_neg_key(<tuple>e, kind, weights), e))
    sn, sd = 1, 1
    if nb:
        lead_flat = <long long *>malloc(nb * nvars * sizeof(long long))
        if lead_flat == NULL:
            raise MemoryError()
    try:
        for j in range(nb):
            le = (<list>basis[j])[0][0]
            lead_coeffs.append((<list>basis[j])[0][1])
            for i in range(nvars):
                lead_flat[j * nvars + i] = (<tuple>le)[i]
        while heap:
            entry = heappop(heap)
            e = <tuple>((<tuple>entry)[1])
            c = poly.get(e, 0)
            if not c:
                poly.pop(e, None)
                continue
            for i in range(nvars):
                ebuf[i] = (<tuple>e)[i]
            hit = -1
            for j in range(nb):
                ok = True
                for i in range(nvars):
                    if lead_flat[j * nvars + i] > ebuf[i]:
                        ok = False
                        break
                if ok:
                    hit = <int>j
                    break
            if hit < 0:
                continue  # term is in normal form; keep it and move on
            reducer = <list>basis[hit]
            le = (<tuple>reducer[0][0])
            lc = lead_coeffs[hit]
            g = gcd(c, lc)
            scale = lc // g
            mult = c // g
            if scale != 1:
                for k in poly:
                    poly[k] = poly[k] * scale
                sd = sd * scale
            u = _sub(e, <tuple>le)
            for be, bc in reducer:
                ne = _add(<tuple>be, u)
                old = poly.get(ne)
                nv = (old if old is not None else 0) - mult * bc
                if nv:
                    poly[ne] = nv
                    if old is None and ne != e:
                        heappush(heap, (_neg_key(ne, kind, weights), ne))
                elif old is not None:
                    del poly[ne]
    finally:
        if lead_flat != NULL:
            free(lead_flat)
    items = list(poly.items())
    items.sort(key=lambda t: _order_key(t[0], kind, weights), reverse=True)
    if not items:
        return [], sn, sd
    items, content = make_primitive(items)
    sn = sn * content
    g = gcd(sn, sd)
    return items, sn // g, sd // g


def spoly(f, g, int kind, tuple weights):
    """Primitive S-polynomial of two nonzero term lists."""
    fe, fc = f[0]
    ge, gc = g[0]
    lcm = _lcm(<tuple>fe, <tuple>ge)
    h = gcd(fc, gc)
    a = gc // h
    b = fc // h
    uf = _sub(lcm, <tuple>fe)
    ug = _sub(lcm, <tuple>ge)
    cdef dict acc = {}
    for e, c in f:
        ne = _add(<tuple>e, uf)
        acc[ne] = acc.get(ne, 0) + a * c
    for e, c in g:
        ne = _add(<tuple>e, ug)
        v = acc.get(ne, 0) - b * c
        if v:
            acc[ne] = v
        else:
            acc.pop(ne, None)
    items = [(e, c) for e, c in acc.items() if c]
    items.sort(key=lambda t: _order_key(t[0], kind, weights), reverse=True)
    items, _ = make_primitive(items)
    return items


def enumerate_staircase(lead_exps, Py_ssize_t nvars, cap, int kind,
                        tuple weights):
    """Standard monomials below the staircase; see the pure kernel."""
    cdef Py_ssize_t nl = len(lead_exps), i, i2, j, qi = 0
    cdef long long *lead_flat = NULL
    cdef long long ebuf[MAX_VARS]
    cdef bint divisible
    if nvars > MAX_VARS:
        raise ValueError(f"too many variables for the compiled kernel "
                         f"({nvars} > {MAX_VARS})")
    origin = (0,) * nvars
    for le in lead_exps:
        if all(x == 0 for x in le):
            return []
    out = [origin]
    seen = {origin}
    queue = [origin]
    if nl:
        lead_flat = <long long *>malloc(nl * nvars * sizeof(long long))
        if lead_flat == NULL:
            raise MemoryError()
    try:
        for j in range(nl):
            le = lead_exps[j]
            for i in range(nvars):
                lead_flat[j * nvars + i] = (<tuple>le)[i]
        while qi < len(queue):
            e = <tuple>queue[qi]
            qi += 1
            for i in range(nvars):
                ne = (<tuple>e)[:i] + ((<tuple>e)[i] + 1,) + (<tuple>e)[i + 1:]
                if ne in seen:
                    continue
                seen.add(ne)
                for j in range(nvars):
                    ebuf[j] = (<tuple>ne)[j]
                divisible = False
                for j in range(nl):
                    divisible = True
                    for i2 in range(nvars):
                        if lead_flat[j * nvars + i2] > ebuf[i2]:
                            divisible = False
                            break
                    if divisible:
                        break
                if not divisible:
                    out.append(ne)
                    if len(out) > cap:
                        raise StaircaseLimitError(
                            f"staircase exceeds the enumeration cap ({cap}); "
                            f"raise BASSINV_MAX_STAIRCASE to allow larger "
                            f"quotients")
                    queue.append(ne)
    finally:
        if lead_flat != NULL:
            free(lead_flat)
    out.sort(key=lambda e: _order_key(e, kind, weights))
    return out
