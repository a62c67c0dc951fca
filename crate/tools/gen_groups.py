#!/usr/bin/env python3
"""Regenerate the builtin permutation generators in crates/core/data/groups.

Each group is built from a classical action, closed under multiplication to
confirm its order, and reduced to a small generating pair. The Rust loader
re-checks order and spectrum, so this script is a convenience, not a source
of truth.
"""
import itertools
import json
import math
import os
import random

OUT = os.path.join(os.path.dirname(__file__), "..", "crates", "core", "data", "groups")


def compose(a, b):
    # apply a, then b
    return tuple(b[x] for x in a)


def closure(gens):
    n = len(gens[0])
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = compose(g, s)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return seen


def perm_order(p):
    n = len(p)
    seen = [False] * n
    o = 1
    for i in range(n):
        if not seen[i]:
            c = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = p[j]
                c += 1
            o = o * c // math.gcd(o, c)
    return o


def spectrum(elems):
    return sorted({perm_order(g) for g in elems})


def two_generators(gens, order, seed):
    elems = sorted(closure(gens))
    assert len(elems) == order, (len(elems), order)
    rng = random.Random(seed)
    while True:
        a, b = rng.choice(elems), rng.choice(elems)
        if len(closure([a, b])) == order:
            return [list(a), list(b)], elems


# --- finite fields -------------------------------------------------------

class GF:
    """GF(p^k) with elements encoded as ints 0..q-1 (base-p digits)."""

    def __init__(self, p, k, modpoly):
        self.p, self.k, self.q = p, k, p ** k
        self.modpoly = modpoly  # monic, low degree first, length k+1
        self.mul_t = [[self._mul(a, b) for b in range(self.q)] for a in range(self.q)]

    def digits(self, a):
        return [(a // self.p ** i) % self.p for i in range(self.k)]

    def enc(self, ds):
        return sum(d * self.p ** i for i, d in enumerate(ds))

    def add(self, a, b):
        return self.enc([(x + y) % self.p for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a):
        return self.enc([(-x) % self.p for x in self.digits(a)])

    def _mul(self, a, b):
        x, y = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.k)
        for i, u in enumerate(x):
            for j, v in enumerate(y):
                prod[i + j] = (prod[i + j] + u * v) % self.p
        for d in range(2 * self.k - 1, self.k - 1, -1):
            c = prod[d]
            if c:
                for i in range(self.k + 1):
                    prod[d - self.k + i] = (prod[d - self.k + i] - c * self.modpoly[i]) % self.p
        return self.enc(prod[: self.k])

    def mul(self, a, b):
        return self.mul_t[a][b]

    def inv(self, a):
        for b in range(1, self.q):
            if self.mul(a, b) == 1:
                return b
        raise ZeroDivisionError

    def pow(self, a, e):
        r = 1
        for _ in range(e):
            r = self.mul(r, a)
        return r


def vec_mat(F, v, m):
    n = len(v)
    out = []
    for j in range(n):
        s = 0
        for i in range(n):
            s = F.add(s, F.mul(v[i], m[i][j]))
        out.append(s)
    return tuple(out)


def normalize(F, v):
    for x in v:
        if x:
            inv = F.inv(x)
            return tuple(F.mul(inv, y) for y in v)
    return None


def projective_points(F, n):
    pts = set()
    for v in itertools.product(range(F.q), repeat=n):
        w = normalize(F, v)
        if w is not None:
            pts.add(w)
    return sorted(pts)


def action_on(points, fn):
    idx = {p: i for i, p in enumerate(points)}
    return tuple(idx[fn(p)] for p in points)


# --- projective lines ----------------------------------------------------

def psl2_prime(p):
    F = GF(p, 1, [0, 1])
    pts = projective_points(F, 2)
    t = [[1, 0], [1, 1]]
    w = [[0, F.neg(1)], [1, 0]]
    gens = [action_on(pts, lambda v, m=m: normalize(F, vec_mat(F, v, m))) for m in (t, w)]
    return gens


def psl2_8():
    F = GF(2, 3, [1, 1, 0, 1])  # x^3 + x + 1
    pts = projective_points(F, 2)
    gen = 2  # x is primitive
    mats = [[[1, 0], [1, 1]], [[0, 1], [1, 0]], [[gen, 0], [0, F.inv(gen)]]]
    return [action_on(pts, lambda v, m=m: normalize(F, vec_mat(F, v, m))) for m in mats]


def sl2_vectors(p):
    F = GF(p, 1, [0, 1])
    vecs = [v for v in itertools.product(range(p), repeat=2) if any(v)]
    t = [[1, 0], [1, 1]]
    w = [[0, F.neg(1)], [1, 0]]
    return [action_on(vecs, lambda v, m=m: vec_mat(F, v, m)) for m in (t, w)]


# --- PSL(3,3) ------------------------------------------------------------

def psl33():
    F = GF(3, 1, [0, 1])
    pts = projective_points(F, 3)
    mats = []
    for i in range(3):
        for j in range(3):
            if i != j:
                m = [[int(a == b) for b in range(3)] for a in range(3)]
                m[i][j] = 1
                mats.append(m)
    return [action_on(pts, lambda v, m=m: normalize(F, vec_mat(F, v, m))) for m in mats]


# --- U3(3) on the 28 isotropic points of PG(2,9) -------------------------

def u33():
    F = GF(3, 2, [1, 0, 1])  # i^2 + 1 = 0
    frob = lambda a: F.pow(a, 3)

    def herm(x, y):
        s = 0
        for a, b in zip(x, y):
            s = F.add(s, F.mul(a, frob(b)))
        return s

    pts = [p for p in projective_points(F, 3) if herm(p, p) == 0]
    assert len(pts) == 28
    trace_zero = [a for a in range(1, F.q) if F.add(a, frob(a)) == 0]
    gens = []
    for v in pts:
        for a in trace_zero:
            def tv(x, v=v, a=a):
                c = F.mul(a, herm(x, v))
                return normalize(F, tuple(F.add(xi, F.mul(c, vi)) for xi, vi in zip(x, v)))
            gens.append(action_on(pts, tv))
    return gens


# --- U4(2) = PSp(4,3) on the 40 points of PG(3,3) ------------------------

def u42():
    F = GF(3, 1, [0, 1])
    pts = projective_points(F, 4)

    def form(x, y):
        return (x[0] * y[2] + x[1] * y[3] - x[2] * y[0] - x[3] * y[1]) % 3

    gens = []
    for v in pts:
        def tv(x, v=v):
            c = form(x, v)
            return normalize(F, tuple((xi + c * vi) % 3 for xi, vi in zip(x, v)))
        gens.append(action_on(pts, tv))
    return gens


def cyc(n, c):
    p = list(range(n))
    for i, x in enumerate(c):
        p[x] = c[(i + 1) % len(c)]
    return tuple(p)


GROUPS = [
    ("A5", 60, lambda: [cyc(5, [0, 1, 2, 3, 4]), cyc(5, [0, 1, 2])]),
    ("PSL(2,7)", 168, lambda: psl2_prime(7)),
    ("A6", 360, lambda: [cyc(6, [0, 1, 2]), cyc(6, [1, 2, 3, 4, 5])]),
    ("PSL(2,8)", 504, psl2_8),
    ("PSL(2,17)", 2448, lambda: psl2_prime(17)),
    ("PSL(3,3)", 5616, psl33),
    ("U3(3)", 6048, u33),
    ("U4(2)", 25920, u42),
    ("SL(2,7)", 336, lambda: sl2_vectors(7)),
    ("SL(2,17)", 4896, lambda: sl2_vectors(17)),
]


def slug(name):
    return "".join(ch for ch in name.lower() if ch.isalnum())


def main():
    os.makedirs(OUT, exist_ok=True)
    for i, (name, order, build) in enumerate(GROUPS):
        gens, elems = two_generators(build(), order, seed=1000 + i)
        doc = {
            "name": name,
            "degree": len(gens[0]),
            "order": order,
            "spectrum": spectrum(elems),
            "generators": gens,
        }
        with open(os.path.join(OUT, slug(name) + ".json"), "w") as fh:
            json.dump(doc, fh, separators=(",", ":"))
            fh.write("\n")
        print(name, order, doc["degree"], doc["spectrum"])


if __name__ == "__main__":
    main()
