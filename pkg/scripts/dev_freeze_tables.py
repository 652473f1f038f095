"""Dev helper: compute the spherical von Dyck generator table and the corpus
group files.  Output is pasted into groups.py / data files; not shipped."""

import json
import math
import os
from itertools import permutations


def compose(p, q):
    return tuple(p[q[x]] for x in range(len(p)))


def closure(gens, cap=100000):
    n = len(gens[0])
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                h = compose(e, g)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
        assert len(seen) <= cap
    return seen


def perm_order(p):
    n = len(p)
    ident = tuple(range(n))
    q, k = p, 1
    while q != ident:
        q = compose(q, p)
        k += 1
    return k


def inv_perm(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def find_pair(G, k, l, m, prefer=None):
    n = len(next(iter(G)))
    ident = tuple(range(n))
    elems = sorted(G)
    order = len(G)
    pairs = [prefer] if prefer else []
    if not prefer:
        pairs = ((a, c) for a in elems for c in elems)
    for a, c in pairs:
        if perm_order(a) == 1 or perm_order(c) == 1:
            continue
        pk = a
        for _ in range(k - 1):
            pk = compose(pk, a)
        if pk != ident:
            continue
        pm = c
        for _ in range(m - 1):
            pm = compose(pm, c)
        if pm != ident:
            continue
        d = compose(inv_perm(a), c)
        pl = d
        for _ in range(l - 1):
            pl = compose(pl, d)
        if pl != ident:
            continue
        if len(closure([a, c])) == order:
            return a, c
    raise RuntimeError((k, l, m))


A4 = closure([(1, 0, 3, 2), (1, 2, 0, 3)])
S4 = closure([(1, 0, 2, 3), (1, 2, 3, 0)])
A5 = closure([(1, 2, 3, 4, 0), (1, 2, 0, 3, 4)])

table = {}
for base, sortedtrip, G in [("A4", (2, 3, 3), A4), ("S4", (2, 3, 4), S4), ("A5", (2, 3, 5), A5)]:
    for trip in sorted(set(permutations(sortedtrip))):
        prefer = None
        if trip == (2, 3, 3):
            prefer = ((1, 0, 3, 2), (1, 2, 0, 3))  # the classic realization
        a, c = find_pair(G, *trip, prefer=prefer)
        table[trip] = (a, c)
        expected = 2 * trip[0] * trip[1] * trip[2] // (
            trip[1] * trip[2] + trip[0] * trip[2] + trip[0] * trip[1]
            - trip[0] * trip[1] * trip[2]
        )
        assert expected == len(G), trip

print("_SPHERICAL_TABLE = {")
for trip, (a, c) in sorted(table.items()):
    print(f"    {trip}: ({a}, {c}),")
print("}")

# corpus group files (1-based images in files)
os.makedirs("src/triangle_words/data/groups", exist_ok=True)


def write_perm_group(name, gens):
    deg = len(gens[0])
    data = {"permutations": [[x + 1 for x in g] for g in gens], "degree": deg}
    with open(f"src/triangle_words/data/groups/{name}.json", "w") as f:
        json.dump(data, f)
        f.write("\n")


write_perm_group("s3", [(1, 0, 2), (1, 2, 0)])
write_perm_group("d4", [(1, 2, 3, 0), (2, 1, 0, 3)])
write_perm_group("a4", [(1, 0, 3, 2), (1, 2, 0, 3)])
write_perm_group("d5", [(1, 2, 3, 4, 0), (0, 4, 3, 2, 1)])
write_perm_group("s4", [(1, 0, 2, 3), (1, 2, 3, 0)])
write_perm_group("a5", [(1, 2, 3, 4, 0), (1, 2, 0, 3, 4)])

# Q8 multiplication table: elements 1,-1,i,-i,j,-j,k,-k
names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]


def q8_mul(x, y):
    sign = 1
    if x.startswith("-"):
        sign, x = -sign, x[1:]
    if y.startswith("-"):
        sign, y = -sign, y[1:]
    basetable = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("j", "1"): (1, "j"), ("k", "1"): (1, "k"),
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "i"): (-1, "k"),
        ("j", "k"): (1, "i"), ("k", "j"): (-1, "i"),
        ("k", "i"): (1, "j"), ("i", "k"): (-1, "j"),
    }
    s2, b = basetable[(x, y)]
    sign *= s2
    return b if sign == 1 else "-" + b


tab = [[names.index(q8_mul(x, y)) for y in names] for x in names]
with open("src/triangle_words/data/groups/q8.json", "w") as f:
    json.dump({"table": tab}, f)
    f.write("\n")
print("corpus written")
