"""Brute-force oracle for non-commutative series computations.

Independent of the C++ engine: words are tuples of letters, coefficients are
sympy expressions, and the matrix-free Lie decomposition is solved as a dense
linear system over all words of the degree (not by triangular back-substitution).
Used only to freeze expected values for the test suites.
"""
import itertools
import sympy as sp


def mul(f, g, n):
    out = {}
    for u, cu in f.items():
        for v, cv in g.items():
            if len(u) + len(v) <= n:
                w = u + v
                out[w] = sp.expand(out.get(w, 0) + cu * cv)
    return {w: c for w, c in out.items() if c != 0}


def add(f, g, s=1):
    out = dict(f)
    for w, c in g.items():
        out[w] = sp.expand(out.get(w, 0) + s * c)
    return {w: c for w, c in out.items() if c != 0}


def exp(g, n):
    out = {(): sp.Integer(1)}
    term = {(): sp.Integer(1)}
    for j in range(1, n + 1):
        term = {w: c / j for w, c in mul(term, g, n).items()}
        out = add(out, term)
    return out


def log(f, n):
    x = add(f, {(): 1}, -1)
    out = {}
    power = {(): sp.Integer(1)}
    for j in range(1, n + 1):
        power = mul(power, x, n)
        out = add(out, {w: sp.Rational((-1) ** (j + 1), j) * c for w, c in power.items()})
    return out


def is_lyndon(w):
    return all(w < w[i:] + w[:i] for i in range(1, len(w)))


def lyndon_words(m, q):
    return sorted(w for w in itertools.product(range(m), repeat=q) if is_lyndon(w))


def bracket(w):
    if len(w) == 1:
        return {w: sp.Integer(1)}
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            u, v = w[:i], w[i:]
            break
    bu, bv = bracket(u), bracket(v)
    return add(mul(bu, bv, len(w)), mul(bv, bu, len(w)), -1)


def decompose(f, q, m=2):
    """Dense solve over all words; returns (coeffs, residual_is_zero)."""
    basis = lyndon_words(m, q)
    lam = sp.symbols("l0:%d" % len(basis))
    expr = {}
    for l, w in zip(lam, basis):
        expr = add(expr, {k: l * c for k, c in bracket(w).items()})
    eqs = []
    for word in itertools.product(range(m), repeat=q):
        eqs.append(sp.expand(expr.get(word, 0) - f.get(word, 0)))
    sol = sp.solve(eqs, lam, dict=True)
    if not sol:
        return None
    return {w: sp.factor(sol[0][l]) for l, w in zip(lam, basis)}


def part(f, q):
    return {w: c for w, c in f.items() if len(w) == q}


A, B = 0, 1


def splitting(a, b, n):
    f = {(): sp.Integer(1)}
    for aj, bj in zip(a, b):
        f = mul(f, exp({(A,): aj}, n), n)
        f = mul(f, exp({(B,): bj}, n), n)
    return f


def show(f):
    return {"".join("AB"[x] for x in w): c for w, c in f.items()}
