"""Pure-Python table kernels.

Every kernel takes dense integer tables (numpy arrays or nested lists) in
which ``-1`` marks an undefined entry.  Arrows and objects are indices.
``comp[g, f]`` is the composite ``g . f`` when ``cod f == dom g``.

This module is the reference implementation; ``_kernels.pyx`` mirrors it
line for line and must return identical lists.
"""

AXIOM_NAMES = {
    0: "mofun3",
    1: "mofun41",
    2: "mofun42",
    3: "symofun5",
    4: "f2-naturality",
    10: "assoc-naturality",
    11: "lunit-naturality",
    12: "runit-naturality",
    13: "sym-naturality",
    14: "mcaxiom1",
    15: "mcaxiom2",
    16: "smcaxiom3",
    17: "smcaxiom4",
    18: "smcaxiom5",
}


def assoc_violations(comp, dom, cod):
    n = len(dom)
    out = []
    for f in range(n):
        for g in range(n):
            if dom[g] != cod[f]:
                continue
            gf = comp[g][f]
            for h in range(n):
                if dom[h] != cod[g]:
                    continue
                if comp[h][gf] != comp[comp[h][g]][f]:
                    out.append((h, g, f))
    return out


def identity_violations(comp, ident, dom, cod):
    out = []
    for f in range(len(dom)):
        if comp[ident[cod[f]]][f] != f:
            out.append((f, 0))
        if comp[f][ident[dom[f]]] != f:
            out.append((f, 1))
    return out


def functor_violations(comp_s, comp_t, amap, dom_s, cod_s):
    n = len(dom_s)
    out = []
    for f in range(n):
        for g in range(n):
            if dom_s[g] != cod_s[f]:
                continue
            if amap[comp_s[g][f]] != comp_t[amap[g]][amap[f]]:
                out.append((g, f))
    return out


def naturality_violations(comp_t, amap_f, amap_g, comps, dom_s, cod_s):
    out = []
    for f in range(len(dom_s)):
        left = comp_t[comps[cod_s[f]]][amap_f[f]]
        right = comp_t[amap_g[f]][comps[dom_s[f]]]
        if left < 0 or left != right:
            out.append(f)
    return out


def bifunctor_violations(comp, tarr, dom, cod):
    """Pairs of composable pairs on which ``tarr`` fails to preserve composition."""
    n = len(dom)
    pairs = [(g, f) for f in range(n) for g in range(n) if dom[g] == cod[f]]
    out = []
    for g, f in pairs:
        gf = comp[g][f]
        for g2, f2 in pairs:
            if tarr[gf][comp[g2][f2]] != comp[tarr[g][g2]][tarr[f][f2]]:
                out.append((g, g2, f, f2))
    return out


def _c2(comp, g, f):
    if f < 0 or g < 0:
        return -1
    return comp[g][f]


def _c3(comp, h, g, f):
    return _c2(comp, h, _c2(comp, g, f))


def _t2(tarr, f, g):
    if f < 0 or g < 0:
        return -1
    return tarr[f][g]


def monoidal_functor_violations(n_obj_s, tobj_s, tarr_s, dom_s, cod_s,
                                assoc_s, lunit_s, runit_s, sym_s, unit_s,
                                tobj_t, tarr_t, comp_t, ident_t,
                                assoc_t, lunit_t, runit_t, sym_t,
                                omap, amap, f0, f2):
    """Check the lax symmetric monoidal functor laws; returns (code, instance)."""
    out = []
    for a in range(n_obj_s):
        fa = omap[a]
        for b in range(n_obj_s):
            fb = omap[b]
            ab = tobj_s[a][b]
            for c in range(n_obj_s):
                fc = omap[c]
                bc = tobj_s[b][c]
                left = _c3(comp_t, amap[assoc_s[a][b][c]], f2[a][bc],
                           _t2(tarr_t, ident_t[fa], f2[b][c]))
                right = _c3(comp_t, f2[ab][c], _t2(tarr_t, f2[a][b], ident_t[fc]),
                            assoc_t[fa][fb][fc])
                if left < 0 or left != right:
                    out.append((0, (a, b, c)))
    for a in range(n_obj_s):
        fa = omap[a]
        right = _c3(comp_t, amap[runit_s[a]], f2[a][unit_s], _t2(tarr_t, ident_t[fa], f0))
        if right < 0 or runit_t[fa] != right:
            out.append((1, (a,)))
        right = _c3(comp_t, amap[lunit_s[a]], f2[unit_s][a], _t2(tarr_t, f0, ident_t[fa]))
        if right < 0 or lunit_t[fa] != right:
            out.append((2, (a,)))
    for a in range(n_obj_s):
        for b in range(n_obj_s):
            left = _c2(comp_t, amap[sym_s[a][b]], f2[a][b])
            right = _c2(comp_t, f2[b][a], sym_t[omap[a]][omap[b]])
            if left < 0 or left != right:
                out.append((3, (a, b)))
    n_arr = len(dom_s)
    for f in range(n_arr):
        for g in range(n_arr):
            left = _c2(comp_t, amap[tarr_s[f][g]], f2[dom_s[f]][dom_s[g]])
            right = _c2(comp_t, f2[cod_s[f]][cod_s[g]], _t2(tarr_t, amap[f], amap[g]))
            if left < 0 or left != right:
                out.append((4, (f, g)))
    return out


def smc_violations(n_obj, tobj, tarr, comp, ident, dom, cod,
                   assoc, lunit, runit, sym, unit):
    """Naturality of the structure arrows and the five coherence axioms."""
    out = []
    n_arr = len(dom)
    for f in range(n_arr):
        for g in range(n_arr):
            for h in range(n_arr):
                x, y, z = dom[f], dom[g], dom[h]
                x2, y2, z2 = cod[f], cod[g], cod[h]
                left = _c2(comp, assoc[x2][y2][z2], _t2(tarr, f, tarr[g][h]))
                right = _c2(comp, _t2(tarr, tarr[f][g], h), assoc[x][y][z])
                if left < 0 or left != right:
                    out.append((10, (f, g, h)))
    iu = ident[unit]
    for f in range(n_arr):
        x, x2 = dom[f], cod[f]
        left = _c2(comp, lunit[x2], tarr[iu][f])
        if left < 0 or left != _c2(comp, f, lunit[x]):
            out.append((11, (f,)))
        left = _c2(comp, runit[x2], tarr[f][iu])
        if left < 0 or left != _c2(comp, f, runit[x]):
            out.append((12, (f,)))
        for g in range(n_arr):
            y, y2 = dom[g], cod[g]
            left = _c2(comp, sym[x2][y2], tarr[f][g])
            if left < 0 or left != _c2(comp, tarr[g][f], sym[x][y]):
                out.append((13, (f, g)))
    for a in range(n_obj):
        ia = ident[a]
        for b in range(n_obj):
            ib = ident[b]
            ab = tobj[a][b]
            for c in range(n_obj):
                bc = tobj[b][c]
                for d in range(n_obj):
                    cd = tobj[c][d]
                    left = _c2(comp, assoc[ab][c][d], assoc[a][b][cd])
                    right = _c3(comp, tarr[assoc[a][b][c]][ident[d]],
                                assoc[a][bc][d], tarr[ia][assoc[b][c][d]])
                    if left < 0 or left != right:
                        out.append((14, (a, b, c, d)))
            left = _c2(comp, tarr[runit[a]][ib], assoc[a][unit][b])
            if left < 0 or left != tarr[ia][lunit[b]]:
                out.append((15, (a, b)))
            if _c2(comp, sym[b][a], sym[a][b]) != ident[ab]:
                out.append((16, (a, b)))
            for c in range(n_obj):
                left = _c3(comp, assoc[c][a][b], sym[ab][c], assoc[a][b][c])
                right = _c3(comp, tarr[sym[a][c]][ib], assoc[a][c][b],
                            tarr[ia][sym[b][c]])
                if left < 0 or left != right:
                    out.append((17, (a, b, c)))
        if _c2(comp, lunit[a], sym[a][unit]) != runit[a]:
            out.append((18, (a,)))
    return out
