# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled table kernels; same signatures and results as ``_kernels_py``."""

import numpy as np
cimport numpy as cnp

ctypedef cnp.int32_t itype


cdef inline int c2(itype[:, :] comp, int g, int f) noexcept nogil:
    if f < 0 or g < 0:
        return -1
    return comp[g, f]


cdef inline int c3(itype[:, :] comp, int h, int g, int f) noexcept nogil:
    return c2(comp, h, c2(comp, g, f))


cdef inline int t2(itype[:, :] tarr, int f, int g) noexcept nogil:
    if f < 0 or g < 0:
        return -1
    return tarr[f, g]


def _i1(x):
    return np.ascontiguousarray(x, dtype=np.int32)


def assoc_violations(comp, dom, cod):
    cdef itype[:, :] c = _i1(comp)
    cdef itype[:] d = _i1(dom)
    cdef itype[:] k = _i1(cod)
    cdef int n = d.shape[0]
    cdef int f, g, h, gf
    out = []
    for f in range(n):
        for g in range(n):
            if d[g] != k[f]:
                continue
            gf = c[g, f]
            for h in range(n):
                if d[h] != k[g]:
                    continue
                if c[h, gf] != c[c[h, g], f]:
                    out.append((h, g, f))
    return out


def identity_violations(comp, ident, dom, cod):
    cdef itype[:, :] c = _i1(comp)
    cdef itype[:] e = _i1(ident)
    cdef itype[:] d = _i1(dom)
    cdef itype[:] k = _i1(cod)
    cdef int f
    out = []
    for f in range(d.shape[0]):
        if c[e[k[f]], f] != f:
            out.append((f, 0))
        if c[f, e[d[f]]] != f:
            out.append((f, 1))
    return out


def functor_violations(comp_s, comp_t, amap, dom_s, cod_s):
    cdef itype[:, :] cs = _i1(comp_s)
    cdef itype[:, :] ct = _i1(comp_t)
    cdef itype[:] m = _i1(amap)
    cdef itype[:] d = _i1(dom_s)
    cdef itype[:] k = _i1(cod_s)
    cdef int n = d.shape[0]
    cdef int f, g
    out = []
    for f in range(n):
        for g in range(n):
            if d[g] != k[f]:
                continue
            if m[cs[g, f]] != ct[m[g], m[f]]:
                out.append((g, f))
    return out


def naturality_violations(comp_t, amap_f, amap_g, comps, dom_s, cod_s):
    cdef itype[:, :] ct = _i1(comp_t)
    cdef itype[:] mf = _i1(amap_f)
    cdef itype[:] mg = _i1(amap_g)
    cdef itype[:] s = _i1(comps)
    cdef itype[:] d = _i1(dom_s)
    cdef itype[:] k = _i1(cod_s)
    cdef int f, left, right
    out = []
    for f in range(d.shape[0]):
        left = ct[s[k[f]], mf[f]]
        right = ct[mg[f], s[d[f]]]
        if left < 0 or left != right:
            out.append(f)
    return out


def bifunctor_violations(comp, tarr, dom, cod):
    cdef itype[:, :] c = _i1(comp)
    cdef itype[:, :] ta = _i1(tarr)
    cdef itype[:] d = _i1(dom)
    cdef itype[:] k = _i1(cod)
    cdef int n = d.shape[0]
    cdef int f, g, i, j, m, gf
    pg = []
    pf = []
    for f in range(n):
        for g in range(n):
            if d[g] == k[f]:
                pg.append(g)
                pf.append(f)
    cdef itype[:] ag = _i1(pg)
    cdef itype[:] af = _i1(pf)
    m = ag.shape[0]
    out = []
    for i in range(m):
        gf = c[ag[i], af[i]]
        for j in range(m):
            if ta[gf, c[ag[j], af[j]]] != c[ta[ag[i], ag[j]], ta[af[i], af[j]]]:
                out.append((ag[i], ag[j], af[i], af[j]))
    return out


def monoidal_functor_violations(int n_obj_s, tobj_s, tarr_s, dom_s, cod_s,
                                assoc_s, lunit_s, runit_s, sym_s, int unit_s,
                                tobj_t, tarr_t, comp_t, ident_t,
                                assoc_t, lunit_t, runit_t, sym_t,
                                omap, amap, int f0, f2):
    cdef itype[:, :] tos = _i1(tobj_s)
    cdef itype[:, :] tas = _i1(tarr_s)
    cdef itype[:] ds = _i1(dom_s)
    cdef itype[:] ks = _i1(cod_s)
    cdef itype[:, :, :] a_s = _i1(assoc_s)
    cdef itype[:] l_s = _i1(lunit_s)
    cdef itype[:] r_s = _i1(runit_s)
    cdef itype[:, :] s_s = _i1(sym_s)
    cdef itype[:, :] tat = _i1(tarr_t)
    cdef itype[:, :] ct = _i1(comp_t)
    cdef itype[:] it = _i1(ident_t)
    cdef itype[:, :, :] a_t = _i1(assoc_t)
    cdef itype[:] l_t = _i1(lunit_t)
    cdef itype[:] r_t = _i1(runit_t)
    cdef itype[:, :] s_t = _i1(sym_t)
    cdef itype[:] om = _i1(omap)
    cdef itype[:] am = _i1(amap)
    cdef itype[:, :] m2 = _i1(f2)
    cdef int a, b, c, fa, fb, fc, bc, ab, left, right, f, g, n_arr
    out = []
    for a in range(n_obj_s):
        fa = om[a]
        for b in range(n_obj_s):
            fb = om[b]
            ab = tos[a, b]
            for c in range(n_obj_s):
                fc = om[c]
                bc = tos[b, c]
                left = c3(ct, am[a_s[a, b, c]], m2[a, bc], t2(tat, it[fa], m2[b, c]))
                right = c3(ct, m2[ab, c], t2(tat, m2[a, b], it[fc]), a_t[fa, fb, fc])
                if left < 0 or left != right:
                    out.append((0, (a, b, c)))
    for a in range(n_obj_s):
        fa = om[a]
        right = c3(ct, am[r_s[a]], m2[a, unit_s], t2(tat, it[fa], f0))
        if right < 0 or r_t[fa] != right:
            out.append((1, (a,)))
        right = c3(ct, am[l_s[a]], m2[unit_s, a], t2(tat, f0, it[fa]))
        if right < 0 or l_t[fa] != right:
            out.append((2, (a,)))
    for a in range(n_obj_s):
        for b in range(n_obj_s):
            left = c2(ct, am[s_s[a, b]], m2[a, b])
            right = c2(ct, m2[b, a], s_t[om[a], om[b]])
            if left < 0 or left != right:
                out.append((3, (a, b)))
    n_arr = ds.shape[0]
    for f in range(n_arr):
        for g in range(n_arr):
            left = c2(ct, am[tas[f, g]], m2[ds[f], ds[g]])
            right = c2(ct, m2[ks[f], ks[g]], t2(tat, am[f], am[g]))
            if left < 0 or left != right:
                out.append((4, (f, g)))
    return out


def smc_violations(int n_obj, tobj, tarr, comp, ident, dom, cod,
                   assoc, lunit, runit, sym, int unit):
    cdef itype[:, :] to = _i1(tobj)
    cdef itype[:, :] ta = _i1(tarr)
    cdef itype[:, :] c = _i1(comp)
    cdef itype[:] e = _i1(ident)
    cdef itype[:] d = _i1(dom)
    cdef itype[:] k = _i1(cod)
    cdef itype[:, :, :] a3 = _i1(assoc)
    cdef itype[:] lu = _i1(lunit)
    cdef itype[:] ru = _i1(runit)
    cdef itype[:, :] sy = _i1(sym)
    cdef int n_arr = d.shape[0]
    cdef int f, g, h, x, y, z, x2, y2, z2, left, right, iu
    cdef int a, b, cc, dd, ia, ib, ab, bc, cd
    out = []
    for f in range(n_arr):
        for g in range(n_arr):
            for h in range(n_arr):
                x = d[f]; y = d[g]; z = d[h]
                x2 = k[f]; y2 = k[g]; z2 = k[h]
                left = c2(c, a3[x2, y2, z2], t2(ta, f, ta[g, h]))
                right = c2(c, t2(ta, ta[f, g], h), a3[x, y, z])
                if left < 0 or left != right:
                    out.append((10, (f, g, h)))
    iu = e[unit]
    for f in range(n_arr):
        x = d[f]; x2 = k[f]
        left = c2(c, lu[x2], ta[iu, f])
        if left < 0 or left != c2(c, f, lu[x]):
            out.append((11, (f,)))
        left = c2(c, ru[x2], ta[f, iu])
        if left < 0 or left != c2(c, f, ru[x]):
            out.append((12, (f,)))
        for g in range(n_arr):
            y = d[g]; y2 = k[g]
            left = c2(c, sy[x2, y2], ta[f, g])
            if left < 0 or left != c2(c, ta[g, f], sy[x, y]):
                out.append((13, (f, g)))
    for a in range(n_obj):
        ia = e[a]
        for b in range(n_obj):
            ib = e[b]
            ab = to[a, b]
            for cc in range(n_obj):
                bc = to[b, cc]
                for dd in range(n_obj):
                    cd = to[cc, dd]
                    left = c2(c, a3[ab, cc, dd], a3[a, b, cd])
                    right = c3(c, ta[a3[a, b, cc], e[dd]], a3[a, bc, dd], ta[ia, a3[b, cc, dd]])
                    if left < 0 or left != right:
                        out.append((14, (a, b, cc, dd)))
            left = c2(c, ta[ru[a], ib], a3[a, unit, b])
            if left < 0 or left != ta[ia, lu[b]]:
                out.append((15, (a, b)))
            if c2(c, sy[b, a], sy[a, b]) != e[ab]:
                out.append((16, (a, b)))
            for cc in range(n_obj):
                left = c3(c, a3[cc, a, b], sy[ab, cc], a3[a, b, cc])
                right = c3(c, ta[sy[a, cc], ib], a3[a, cc, b], ta[ia, sy[b, cc]])
                if left < 0 or left != right:
                    out.append((17, (a, b, cc)))
        if c2(c, lu[a], sy[a, unit]) != ru[a]:
            out.append((18, (a,)))
    return out
