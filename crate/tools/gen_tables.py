#!/usr/bin/env python3
"""Regenerate the embedded character tables in crates/core/data/tables.

Values are written as sparse cyclotomic integers over the table conductor N:
either a plain integer or a list of [exponent, coefficient] pairs meaning
sum(c * zeta_N^e). A floating point orthogonality check runs before writing;
the exact check lives in the Rust crate.
"""
import cmath
import json
import math
import os
from collections import defaultdict

OUT = os.path.join(os.path.dirname(__file__), "..", "crates", "core", "data", "tables")


class Cyc:
    def __init__(self, n, terms=None):
        self.n = n
        self.t = defaultdict(int)
        for e, c in (terms or {}).items():
            self.t[e % n] += c

    @staticmethod
    def const(n, k):
        return Cyc(n, {0: k})

    @staticmethod
    def zeta(n, order, k, coeff=1):
        assert n % order == 0
        return Cyc(n, {(k * (n // order)) % n: coeff})

    def __add__(self, o):
        if isinstance(o, int):
            o = Cyc.const(self.n, o)
        r = Cyc(self.n, dict(self.t))
        for e, c in o.t.items():
            r.t[e] += c
        return r

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.n, {e: -c for e, c in self.t.items()})

    def __sub__(self, o):
        return self + (-o)

    def encode(self):
        terms = sorted((e, c) for e, c in self.t.items() if c)
        if not terms:
            return 0
        if len(terms) == 1 and terms[0][0] == 0:
            return terms[0][1]
        return [[e, c] for e, c in terms]

    def value(self):
        return sum(c * cmath.exp(2j * math.pi * e / self.n) for e, c in self.t.items())


def val(n, x):
    return x if isinstance(x, Cyc) else Cyc.const(n, x)


def check(name, order, classes, rows):
    sizes = [c[2] for c in classes]
    assert sum(sizes) == order, name
    for i, (_, a) in enumerate(rows):
        for j, (_, b) in enumerate(rows):
            s = sum(k * x.value() * y.value().conjugate() for k, x, y in zip(sizes, a, b)) / order
            want = 1 if i == j else 0
            assert abs(s - want) < 1e-9, (name, i, j, s)


def emit(name, order, n, classes, power_maps, rows):
    rows = [(rn, [val(n, v) for v in vs]) for rn, vs in rows]
    check(name, order, classes, rows)
    doc = {
        "name": name,
        "order": order,
        "conductor": n,
        "classes": [{"name": c, "order": o, "size": s} for c, o, s in classes],
        "power_maps": {str(p): m for p, m in power_maps.items()},
        "characters": [{"name": rn, "values": [v.encode() for v in vs]} for rn, vs in rows],
    }
    slug = "".join(ch for ch in name.lower() if ch.isalnum())
    dumps = lambda x: json.dumps(x, separators=(",", ":"))
    lines = ["{"]
    for key in ("name", "order", "conductor"):
        lines.append(f' "{key}": {dumps(doc[key])},')
    lines.append(' "classes": [')
    lines.append(",\n".join("  " + dumps(c) for c in doc["classes"]))
    lines.append(" ],")
    lines.append(' "power_maps": {')
    lines.append(",\n".join(f'  "{p}": {dumps(m)}' for p, m in doc["power_maps"].items()))
    lines.append(" },")
    lines.append(' "characters": [')
    lines.append(",\n".join("  " + dumps(c) for c in doc["characters"]))
    lines.append(" ]")
    lines.append("}")
    with open(os.path.join(OUT, slug + ".json"), "w") as fh:
        fh.write("\n".join(lines) + "\n")
    print(name, len(classes), "classes")


def psl27():
    n = 7
    z = lambda k: Cyc.zeta(n, 7, k)
    b7 = z(1) + z(2) + z(4)
    b7c = z(3) + z(5) + z(6)
    classes = [("1A", 1, 1), ("2A", 2, 21), ("3A", 3, 56), ("4A", 4, 42), ("7A", 7, 24), ("7B", 7, 24)]
    pm = {
        2: [0, 0, 2, 1, 4, 5],
        3: [0, 1, 0, 3, 5, 4],
        7: [0, 1, 2, 3, 0, 0],
    }
    rows = [
        ("1a", [1, 1, 1, 1, 1, 1]),
        ("3a", [3, -1, 0, 1, b7, b7c]),
        ("3b", [3, -1, 0, 1, b7c, b7]),
        ("6a", [6, 2, 0, 0, -1, -1]),
        ("7a", [7, -1, 1, -1, 0, 0]),
        ("8a", [8, 0, -1, 0, 1, 1]),
    ]
    emit("PSL(2,7)", 168, n, classes, pm, rows)


def a6():
    n = 5
    z = lambda k: Cyc.zeta(n, 5, k)
    mb5 = -(z(1) + z(4))
    mb5c = -(z(2) + z(3))
    classes = [("1A", 1, 1), ("2A", 2, 45), ("3A", 3, 40), ("3B", 3, 40), ("4A", 4, 90), ("5A", 5, 72), ("5B", 5, 72)]
    pm = {
        2: [0, 0, 2, 3, 1, 6, 5],
        3: [0, 1, 0, 0, 4, 6, 5],
        5: [0, 1, 2, 3, 4, 0, 0],
    }
    rows = [
        ("1a", [1, 1, 1, 1, 1, 1, 1]),
        ("5a", [5, 1, 2, -1, -1, 0, 0]),
        ("5b", [5, 1, -1, 2, -1, 0, 0]),
        ("8a", [8, 0, -1, -1, 0, mb5, mb5c]),
        ("8b", [8, 0, -1, -1, 0, mb5c, mb5]),
        ("9a", [9, 1, 0, 0, 1, -1, -1]),
        ("10a", [10, -2, 1, 1, 0, 0, 0]),
    ]
    emit("A6", 360, n, classes, pm, rows)


QR17 = sorted({(k * k) % 17 for k in range(1, 17)})
NR17 = [k for k in range(1, 17) if k not in QR17]


def gauss_halves(n):
    """(1+s)/2, (1-s)/2, (-1+s)/2, (-1-s)/2 for s = sqrt(17) in Q(zeta_n)."""
    qr = sum((Cyc.zeta(n, 17, k) for k in QR17), Cyc(n))
    nr = sum((Cyc.zeta(n, 17, k) for k in NR17), Cyc(n))
    return qr + 1, nr + 1, qr, nr


def psl217():
    n = 1224
    plus, minus, mplus, mminus = gauss_halves(n)
    classes = [("1A", 1, 1)]
    kinds = [("id", 0)]
    # split torus a (order 8), nonsplit torus b (order 9), unipotent classes
    order_list = [("2A", "s", 4), ("3A", "n", 3), ("4A", "s", 2), ("8A", "s", 1), ("8B", "s", 3),
                  ("9A", "n", 1), ("9B", "n", 2), ("9C", "n", 4), ("17A", "u", 1), ("17B", "u", 3)]
    for nm, kind, e in order_list:
        if kind == "s":
            classes.append((nm, 8 // math.gcd(8, e), 306 if e != 4 else 153))
        elif kind == "n":
            classes.append((nm, 9 // math.gcd(9, e), 272))
        else:
            classes.append((nm, 17, 144))
        kinds.append((kind, e))

    def index_of(kind, e):
        return kinds.index((kind, e))

    pm = {}
    for p in (2, 3, 17):
        m = []
        for kind, e in kinds:
            if kind == "id":
                m.append(0)
            elif kind == "s":
                x = (p * e) % 8
                m.append(0 if x == 0 else index_of("s", min(x, 8 - x)))
            elif kind == "n":
                y = (p * e) % 9
                m.append(0 if y == 0 else index_of("n", min(y, 9 - y)))
            else:
                if p == 17:
                    m.append(0)
                else:
                    sq = p % 17 in QR17
                    m.append(index_of("u", e if sq else (3 if e == 1 else 1)))
        pm[p] = m

    def row(f_id, f_s, f_n, f_u):
        out = []
        for kind, e in kinds:
            out.append({"id": f_id, "s": f_s, "n": f_n, "u": f_u}[kind](e))
        return out

    rows = [("1a", row(lambda e: 1, lambda e: 1, lambda e: 1, lambda e: 1))]
    rows.append(("9a", row(lambda e: 9, lambda e: (-1) ** e, lambda e: 0,
                           lambda e: plus if e == 1 else minus)))
    rows.append(("9b", row(lambda e: 9, lambda e: (-1) ** e, lambda e: 0,
                           lambda e: minus if e == 1 else plus)))
    for k in range(1, 5):
        rows.append((f"16{'abcd'[k - 1]}", row(
            lambda e: 16, lambda e: 0,
            lambda e, k=k: -(Cyc.zeta(n, 9, k * e) + Cyc.zeta(n, 9, -k * e)),
            lambda e: -1)))
    rows.append(("17a", row(lambda e: 17, lambda e: 1, lambda e: -1, lambda e: 0)))
    for j in range(1, 4):
        rows.append((f"18{'abc'[j - 1]}", row(
            lambda e: 18,
            lambda e, j=j: Cyc.zeta(n, 8, j * e) + Cyc.zeta(n, 8, -j * e),
            lambda e: 0, lambda e: 1)))
    emit("PSL(2,17)", 2448, n, classes, pm, rows)


def sl217():
    n = 2448
    plus, minus, mplus, mminus = gauss_halves(n)
    kinds = [("id", 0), ("z", 0), ("c", 0), ("d", 0), ("zc", 0), ("zd", 0)]
    kinds += [("a", l) for l in range(1, 8)]
    kinds += [("b", m) for m in range(1, 9)]
    classes = []
    for kind, e in kinds:
        if kind == "id":
            classes.append(("1A", 1, 1))
        elif kind == "z":
            classes.append(("2A", 2, 1))
        elif kind in ("c", "d"):
            classes.append(("17" + ("A" if kind == "c" else "B"), 17, 144))
        elif kind in ("zc", "zd"):
            classes.append(("34" + ("A" if kind == "zc" else "B"), 34, 144))
        elif kind == "a":
            classes.append((f"a{e}", 16 // math.gcd(16, e), 306))
        else:
            classes.append((f"b{e}", 18 // math.gcd(18, e), 272))
    # conventional names by order, suffixed by exponent for uniqueness
    classes = [(nm if nm[0] not in "ab" else f"{o}{nm}", o, s) for nm, o, s in classes]

    def idx(kind, e=0):
        return kinds.index((kind, e))

    pm = {}
    for p in (2, 3, 17):
        m = []
        sq = p % 17 in QR17
        for kind, e in kinds:
            if kind == "id":
                m.append(0)
            elif kind == "z":
                m.append(idx("id") if p == 2 else idx("z"))
            elif kind in ("c", "d", "zc", "zd"):
                base = kind[-1]
                if p == 17:
                    u = None
                else:
                    u = base if sq else ("d" if base == "c" else "c")
                central = kind.startswith("z") and p % 2 == 1
                if u is None:
                    m.append(idx("z") if central else idx("id"))
                else:
                    m.append(idx(("z" + u) if central else u))
            elif kind == "a":
                x = (p * e) % 16
                if x == 0:
                    m.append(idx("id"))
                elif x == 8:
                    m.append(idx("z"))
                else:
                    m.append(idx("a", min(x, 16 - x)))
            else:
                y = (p * e) % 18
                if y == 0:
                    m.append(idx("id"))
                elif y == 9:
                    m.append(idx("z"))
                else:
                    m.append(idx("b", min(y, 18 - y)))
        pm[p] = m

    def row(f):
        return [f(kind, e) for kind, e in kinds]

    rows = [("1a", row(lambda k, e: 1))]

    def steinberg(k, e):
        return {"id": 17, "z": 17, "c": 0, "d": 0, "zc": 0, "zd": 0}.get(k, 1 if k == "a" else -1)

    rows.append(("17a", row(steinberg)))
    for i in range(1, 8):
        sgn = (-1) ** i

        def chi(k, e, i=i, sgn=sgn):
            if k == "id":
                return 18
            if k == "z":
                return 18 * sgn
            if k in ("c", "d"):
                return 1
            if k in ("zc", "zd"):
                return sgn
            if k == "a":
                return Cyc.zeta(n, 16, i * e) + Cyc.zeta(n, 16, -i * e)
            return 0

        rows.append((f"18_{i}", row(chi)))
    for j in range(1, 9):
        sgn = (-1) ** j

        def theta(k, e, j=j, sgn=sgn):
            if k == "id":
                return 16
            if k == "z":
                return 16 * sgn
            if k in ("c", "d"):
                return -1
            if k in ("zc", "zd"):
                return -sgn
            if k == "a":
                return 0
            return -(Cyc.zeta(n, 18, j * e) + Cyc.zeta(n, 18, -j * e))

        rows.append((f"16_{j}", row(theta)))
    for name, cval, dval in (("9_1", plus, minus), ("9_2", minus, plus)):
        def xi(k, e, cval=cval, dval=dval):
            if k in ("id", "z"):
                return 9
            if k in ("c", "zc"):
                return cval
            if k in ("d", "zd"):
                return dval
            if k == "a":
                return (-1) ** e
            return 0

        rows.append((name, row(xi)))
    for name, cval, dval in (("8_1", mplus, mminus), ("8_2", mminus, mplus)):
        def eta(k, e, cval=cval, dval=dval):
            if k == "id":
                return 8
            if k == "z":
                return -8
            if k == "c":
                return cval
            if k == "d":
                return dval
            if k == "zc":
                return -cval
            if k == "zd":
                return -dval
            if k == "a":
                return 0
            return -((-1) ** e)

        rows.append((name, row(eta)))
    emit("SL(2,17)", 4896, n, classes, pm, rows)


def main():
    os.makedirs(OUT, exist_ok=True)
    psl27()
    a6()
    psl217()
    sl217()


if __name__ == "__main__":
    main()
