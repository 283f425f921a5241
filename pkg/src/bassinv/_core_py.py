"""Pure-Python term-arithmetic kernel.

This is the reference implementation of the operations that dominate a
Buchberger run: complete fraction-free reduction, S-polynomials, and
staircase enumeration.  `bassinv._core_cy` is a compiled drop-in with the
same contracts; `bassinv.kernel` picks one at import time.

Data layout shared by both kernels:

  * an exponent is a tuple of non-negative ints (fixed width per ideal);
  * a term list is [(exponent, int coefficient), ...] sorted descending in
    the active monomial order, with no zero coefficients;
  * basis elements additionally have positive leading coefficient.

Coefficients are plain Python ints (exact, arbitrary precision); scaling by
rationals is tracked separately so reductions stay fraction-free.
"""

from heapq import heappush, heappop
from math import gcd

from .errors import StaircaseLimitError

BACKEND = "python"

GREVLEX = 0
LEX = 1
WGREVLEX = 2
WLEX = 3


def order_key(exp, kind, weights):
    """Tuple that sorts ascending in the monomial order."""
    if kind == GREVLEX:
        return (sum(exp),) + tuple(-e for e in reversed(exp))
    if kind == LEX:
        return tuple(exp)
    wd = 0
    for w, e in zip(weights, exp):
        wd += w * e
    if kind == WGREVLEX:
        return (wd, sum(exp)) + tuple(-e for e in reversed(exp))
    if kind == WLEX:
        return (wd,) + tuple(exp)
    raise ValueError(f"unknown order kind {kind}")


def _neg_key(exp, kind, weights):
    # negating every entry reverses tuple comparison, turning the min-heap
    # into a max-first queue
    return tuple(-x for x in order_key(exp, kind, weights))


def exp_divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def exp_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def exp_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def exp_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def sort_terms(pairs, kind, weights):
    """Combine duplicate exponents, drop zeros, sort descending."""
    acc = {}
    for e, c in pairs:
        v = acc.get(e, 0) + c
        if v:
            acc[e] = v
        else:
            acc.pop(e, None)
    items = list(acc.items())
    items.sort(key=lambda t: order_key(t[0], kind, weights), reverse=True)
    return items


def make_primitive(terms):
    """Divide by the signed content so gcd = 1 and the lead is positive.

    Returns (primitive_terms, content) with original = content * primitive.
    """
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


def reduce_full(terms, basis, kind, weights):
    """Complete normal form of `terms` against `basis`, fraction-free.

    Returns (reduced, num, den): the exact normal form of the input equals
    (num/den) * reduced, `reduced` is primitive with positive lead (or
    empty), and no term of `reduced` is divisible by any basis lead.
    """
    poly = {}
    for e, c in terms:
        poly[e] = c
    heap = []
    for e in poly:
        heappush(heap, (_neg_key(e, kind, weights), e))
    leads = [(b[0][0], b[0][1]) for b in basis]
    sn, sd = 1, 1
    while heap:
        _, e = heappop(heap)
        c = poly.get(e, 0)
        if not c:
            poly.pop(e, None)
            continue
        hit = -1
        for j, (le, lc) in enumerate(leads):
            if exp_divides(le, e):
                hit = j
                break
        if hit < 0:
            continue  # term is in normal form; keep it and move on
        le, lc = leads[hit]
        g = gcd(c, lc)
        scale = lc // g   # positive: basis leads are positive
        mult = c // g
        if scale != 1:
            for k in poly:
                poly[k] *= scale
            sd *= scale
        u = exp_sub(e, le)
        for be, bc in basis[hit]:
            ne = exp_add(be, u)
            old = poly.get(ne)
            nv = (old if old is not None else 0) - mult * bc
            if nv:
                poly[ne] = nv
                if old is None and ne != e:
                    heappush(heap, (_neg_key(ne, kind, weights), ne))
            elif old is not None:
                del poly[ne]
    items = list(poly.items())
    items.sort(key=lambda t: order_key(t[0], kind, weights), reverse=True)
    if not items:
        return [], sn, sd
    items, content = make_primitive(items)
    sn *= content
    g = gcd(sn, sd)
    return items, sn // g, sd // g


def spoly(f, g, kind, weights):
    """Primitive S-polynomial of two nonzero term lists."""
    fe, fc = f[0]
    ge, gc = g[0]
    lcm = exp_lcm(fe, ge)
    h = gcd(fc, gc)
    a = gc // h
    b = fc // h
    uf = exp_sub(lcm, fe)
    ug = exp_sub(lcm, ge)
    acc = {}
    for e, c in f:
        ne = exp_add(e, uf)
        acc[ne] = acc.get(ne, 0) + a * c
    for e, c in g:
        ne = exp_add(e, ug)
        v = acc.get(ne, 0) - b * c
        if v:
            acc[ne] = v
        else:
            acc.pop(ne, None)
    items = [(e, c) for e, c in acc.items() if c]
    items.sort(key=lambda t: order_key(t[0], kind, weights), reverse=True)
    items, _ = make_primitive(items)
    return items


def enumerate_staircase(lead_exps, nvars, cap, kind, weights):
    """All standard monomials below the staircase of `lead_exps`.

    Breadth-first walk from 1 (the staircase is closed under divisibility),
    output sorted ascending in the order.  Raises StaircaseLimitError when
    more than `cap` monomials appear; the caller guarantees finiteness.
    """
    origin = (0,) * nvars
    for le in lead_exps:
        if all(x == 0 for x in le):
            return []  # unit ideal
    out = [origin]
    seen = {origin}
    queue = [origin]
    qi = 0
    while qi < len(queue):
        e = queue[qi]
        qi += 1
        for i in range(nvars):
            ne = e[:i] + (e[i] + 1,) + e[i + 1:]
            if ne in seen:
                continue
            seen.add(ne)
            divisible = False
            for le in lead_exps:
                if exp_divides(le, ne):
                    divisible = True
                    break
            if not divisible:
                out.append(ne)
                if len(out) > cap:
                    raise StaircaseLimitError(
                        f"staircase exceeds the enumeration cap ({cap}); "
                        f"raise BASSINV_MAX_STAIRCASE to allow larger quotients")
                queue.append(ne)
    out.sort(key=lambda e: order_key(e, kind, weights))
    return out
