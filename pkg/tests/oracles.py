"""Independent brute-force re-statements of the structural definitions.

They read only faces, rotations and degrees of a PlaneGraph, never the
package's classification or detectors.
"""


def classification_oracle(g):
    """Definitions re-evaluated directly on faces and degrees."""
    deg = g.degrees
    tri = [f for f, w in enumerate(g.faces) if len(w) == 3]
    on_tri = {u for f in tri for u in g.faces[f]}
    w2 = {v for v in range(g.n) if deg[v] == 2 and v not in on_tri}
    f2 = {f for f in tri if 2 in (deg[u] for u in g.faces[f])}
    f3 = {f for f in tri if 3 in (deg[u] for u in g.faces[f])}

    def pendent(u, f):
        (p,) = set(g.rotation[u]) - set(g.faces[f])
        return p

    terrible = set()
    for f in f3:
        threes = [u for u in g.faces[f] if deg[u] == 3]
        if len(threes) >= 2 and min(deg[pendent(u, f)] for u in threes) <= 4:
            terrible.add(f)
    bad = set()
    for v in range(g.n):
        d = deg[v]
        if d not in (6, 7, 8):
            continue
        mine = [f for f in tri if v in g.faces[f]]
        t = [f for f in mine if f in terrible]
        o = [f for f in mine if f not in terrible and (f in f2 or f in f3)]
        if len(t) == d - 5 and len(o) == 1:
            near = {u for f in t + o for u in g.faces[f]}
            if all(deg[u] <= 3 for u in g.rotation[v] if u not in near):
                bad.add(v)
    star = {f for f in f2 if any(deg[u] == 5 or u in bad for u in g.faces[f])}
    pend = {(pendent(u, f), u, f) for f in tri for u in g.faces[f] if deg[u] == 3}
    return w2, f2, f3, terrible, bad, star, pend


def config_oracle(g):
    """kind -> every admissible deletion vertex (faces for C1)."""
    deg = g.degrees
    w2, f2, f3, terrible, bad, star, pend = classification_oracle(g)
    tri = [f for f, w in enumerate(g.faces) if len(w) == 3]
    on_tri = {u for f in tri for u in g.faces[f]}
    tris_at = {v: [f for f in tri if v in g.faces[f]] for v in range(g.n)}

    def pendent(u, f):
        (p,) = set(g.rotation[u]) - set(g.faces[f])
        return p

    def terrible_xs(v):
        out = set()
        for f in tris_at[v]:
            if f in terrible:
                for u in g.faces[f]:
                    if u != v and deg[u] == 3 and deg[pendent(u, f)] <= 4:
                        out.add(u)
        return out

    found = {k: set() for k in ("C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12", "C13")}
    for f, walk in enumerate(g.faces):
        if len(walk) >= 7 and sum(1 for u in walk if deg[u] == 2 and u in on_tri) >= len(walk) - 5:
            found["C1"].add(f)
    for v in range(g.n):
        d = deg[v]
        nb = g.rotation[v]
        if d <= 1:
            found["C2"].add(v)
        if d == 2 and any(deg[u] <= 4 for u in nb):
            found["C3"].add(v)
        if d == 5 and all(deg[u] <= 3 for u in nb):
            found["C6"] |= {u for u in nb if u in w2}
        if d == 5:
            pf = {f for (o, a, f) in pend if o == v}
            if len(pf) >= 5 and sum(1 for f in pf if max(deg[u] for u in g.faces[f]) <= 5) >= 4:
                found["C7"].add(v)
        if v in bad and all(deg[u] <= 6 for u in nb):
            found["C8"] |= terrible_xs(v)
        if d == 6 and len(tris_at[v]) >= 3:
            found["C10"] |= terrible_xs(v)
        nt = sum(1 for f in tris_at[v] if f in terrible)
        if 6 <= d <= 10 and nt >= d - 4:
            found["C11"] |= terrible_xs(v)
        if 6 <= d <= 10 and nt >= d - 5 and all(deg[u] <= 3 for u in nb):
            found["C12"] |= terrible_xs(v)
        if 7 <= d <= 10 and v not in bad:
            stars = [f for f in tris_at[v] if f in star]
            for f1 in stars:
                others = [f for f in tris_at[v] if f != f1 and (f in terrible or f in star)]
                if len(others) >= d - 6:
                    found["C13"] |= {u for u in g.faces[f1] if u != v and deg[u] == 2}
    for f in tri:
        walk = g.faces[f]
        for x in walk:
            a, b = (deg[u] for u in walk if u != x)
            if deg[x] == 2 and ((a == 5 and b <= 6) or (b == 5 and a <= 6)):
                found["C4"].add(x)
            if deg[x] == 3 and max(a, b) <= 5 and deg[pendent(x, f)] <= 4:
                found["C5"].add(x)
        if f in f2 or f in f3:
            bads = [u for u in walk if u in bad]
            if len(bads) >= 2:
                for v in bads:
                    found["C9"] |= terrible_xs(v)
    return found


def final_charge_oracle(g):
    """Final charges in half units, element by element: what each vertex
    pays out and each face receives, without a transfer list."""
    deg = g.degrees
    w2, f2, f3, terrible, bad, star, pend = classification_oracle(g)
    tri = [f for f, w in enumerate(g.faces) if len(w) == 3]
    f23 = f2 | f3
    charge = {}
    # vertices
    for v in range(g.n):
        d = deg[v]
        c = 2 * (2 * d - 6)
        mine = [f for f in tri if v in g.faces[f]]
        if d in (4, 5):
            c -= 2 * len(mine)
        if d >= 5:
            c -= 2 * sum(1 for u in g.rotation[v] if u in w2)
            for (o, a, f) in pend:
                if o != v:
                    continue
                if d >= 6:
                    c -= 2
                elif max(deg[u] for u in g.faces[f]) <= 5:
                    c -= 2
                else:
                    c -= 1
        if 6 <= d <= 10:
            for f in mine:
                if f not in f23:
                    c -= 2
                elif f in terrible:
                    c -= 6
                elif f in star:
                    c -= 4 if v in bad else 6
                else:
                    c -= 4
        if d >= 11:
            c -= 6 * len(mine)
        if d == 2 or v in bad:
            c += 2 * sum(1 for f in mine if f in f23 and f not in terrible)
        if v in w2:
            c += 2 * sum(1 for u in g.rotation[v] if deg[u] >= 5)
        if d == 2 and v not in w2:
            c += 2 * sum(list(w).count(v) for w in g.faces if len(w) >= 7)
        charge[("v", v)] = c
    # faces
    for f, walk in enumerate(g.faces):
        k = len(walk)
        c = 2 * (k - 6)
        if k >= 7:
            c -= 2 * sum(1 for u in walk if deg[u] == 2 and u not in w2)
        if k == 3:
            for v in walk:
                d = deg[v]
                if d in (4, 5):
                    c += 2
                elif 6 <= d <= 10:
                    if f not in f23:
                        c += 2
                    elif f in terrible:
                        c += 6
                    elif f in star:
                        c += 4 if v in bad else 6
                    else:
                        c += 4
                elif d >= 11:
                    c += 6
            for (o, a, ff) in pend:
                if ff != f or deg[o] < 5:
                    continue
                if deg[o] >= 6 or max(deg[u] for u in walk) <= 5:
                    c += 2
                else:
                    c += 1
            if f in f23 and f not in terrible:
                c -= 2 * sum(1 for u in walk if deg[u] == 2 or u in bad)
        charge[("f", f)] = c
    return charge
