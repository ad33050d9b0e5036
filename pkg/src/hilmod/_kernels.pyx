# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled dyadic kernels; same contracts as ``hilmod._kernels_py``."""

from array import array


def refine(const long long[:] levels_p, const long long[:] indices_p,
           const long long[:] levels_q, const long long[:] indices_q):
    cdef Py_ssize_t n_p = levels_p.shape[0]
    cdef Py_ssize_t n_q = levels_q.shape[0]
    cdef Py_ssize_t cap = n_p + n_q
    out_l = array("q", bytes(8 * cap))
    out_i = array("q", bytes(8 * cap))
    map_p = array("q", bytes(8 * cap))
    map_q = array("q", bytes(8 * cap))
    cdef long long[:] ol = out_l
    cdef long long[:] oi = out_i
    cdef long long[:] mp = map_p
    cdef long long[:] mq = map_q
    cdef Py_ssize_t a = 0, b = 0, r = 0
    cdef long long la, ia, lb, ib
    while a < n_p and b < n_q:
        la = levels_p[a]
        ia = indices_p[a]
        lb = levels_q[b]
        ib = indices_q[b]
        mp[r] = a
        mq[r] = b
        if la == lb:
            ol[r] = la
            oi[r] = ia
            a += 1
            b += 1
        elif la > lb:
            ol[r] = la
            oi[r] = ia
            a += 1
            if ia + 1 == (ib + 1) << (la - lb):
                b += 1
        else:
            ol[r] = lb
            oi[r] = ib
            b += 1
            if ib + 1 == (ia + 1) << (lb - la):
                a += 1
        r += 1
    # memoryviews pin the buffers, so trim by copying
    return out_l[:r], out_i[:r], map_p[:r], map_q[:r]


def merge_siblings(const long long[:] levels, const long long[:] indices, list values):
    cdef Py_ssize_t n = levels.shape[0]
    st_l_arr = array("q", bytes(8 * n))
    st_i_arr = array("q", bytes(8 * n))
    cdef long long[:] st_l = st_l_arr
    cdef long long[:] st_i = st_i_arr
    cdef list st_v = []
    cdef Py_ssize_t top = 0, pos
    cdef long long lv, ix
    for pos in range(n):
        lv = levels[pos]
        ix = indices[pos]
        val = values[pos]
        while (top > 0 and lv > 0 and st_l[top - 1] == lv and (ix & 1)
               and st_i[top - 1] == ix - 1 and st_v[top - 1] == val):
            top -= 1
            st_v.pop()
            lv -= 1
            ix >>= 1
        st_l[top] = lv
        st_i[top] = ix
        st_v.append(val)
        top += 1
    return st_l_arr[:top], st_i_arr[:top], st_v


def combine(const long long[:] levels_p, const long long[:] indices_p, list values_p,
            const long long[:] levels_q, const long long[:] indices_q, list values_q, int op):
    cdef Py_ssize_t n_p = levels_p.shape[0]
    cdef Py_ssize_t n_q = levels_q.shape[0]
    cdef Py_ssize_t cap = n_p + n_q
    st_l_arr = array("q", bytes(8 * cap))
    st_i_arr = array("q", bytes(8 * cap))
    cdef long long[:] st_l = st_l_arr
    cdef long long[:] st_i = st_i_arr
    cdef list st_v = []
    cdef Py_ssize_t a = 0, b = 0, top = 0
    cdef long long la, ia, lb, ib, lv, ix
    while a < n_p and b < n_q:
        la = levels_p[a]
        ia = indices_p[a]
        lb = levels_q[b]
        ib = indices_q[b]
        x = values_p[a]
        y = values_q[b]
        if op == 0:
            v = x + y
        elif op == 1:
            v = x - y
        else:
            v = x * y
        if type(v) is not int and v.denominator == 1:
            v = v.numerator
        if la == lb:
            lv = la
            ix = ia
            a += 1
            b += 1
        elif la > lb:
            lv = la
            ix = ia
            a += 1
            if ia + 1 == (ib + 1) << (la - lb):
                b += 1
        else:
            lv = lb
            ix = ib
            b += 1
            if ib + 1 == (ia + 1) << (lb - la):
                a += 1
        while (top > 0 and lv > 0 and st_l[top - 1] == lv and (ix & 1)
               and st_i[top - 1] == ix - 1 and st_v[top - 1] == v):
            top -= 1
            st_v.pop()
            lv -= 1
            ix >>= 1
        st_l[top] = lv
        st_i[top] = ix
        st_v.append(v)
        top += 1
    return st_l_arr[:top], st_i_arr[:top], st_v


def fwht(list values):
    cdef Py_ssize_t n = len(values)
    cdef Py_ssize_t h = 1, start, j
    if n & (n - 1):
        raise ValueError("length must be a power of two")
    while h < n:
        for start in range(0, n, 2 * h):
            for j in range(start, start + h):
                x = values[j]
                y = values[j + h]
                values[j] = x + y
                values[j + h] = x - y
        h *= 2
    return values
