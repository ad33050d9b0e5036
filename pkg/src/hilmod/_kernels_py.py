"""Pure-Python versions of the dyadic kernels.

Cells are encoded as parallel ``array('q')`` sequences of levels and indices;
cell ``(k, i)`` is the half-open interval ``[i / 2**k, (i + 1) / 2**k)``.
Both sequences must be sorted by left endpoint and tile ``[0, 1)``.
"""

from array import array


def refine(levels_p, indices_p, levels_q, indices_q):
    """Sweep two dyadic tilings and return their coarsest common refinement.

    Returns ``(levels, indices, parent_p, parent_q)`` where ``parent_p[r]`` is
    the position in ``p`` of the cell containing result cell ``r``.
    """
    n_p = len(levels_p)
    n_q = len(levels_q)
    out_l = []
    out_i = []
    map_p = []
    map_q = []
    a = b = 0
    while a < n_p and b < n_q:
        la = levels_p[a]
        ia = indices_p[a]
        lb = levels_q[b]
        ib = indices_q[b]
        map_p.append(a)
        map_q.append(b)
        if la == lb:
            out_l.append(la)
            out_i.append(ia)
            a += 1
            b += 1
        elif la > lb:
            out_l.append(la)
            out_i.append(ia)
            a += 1
            if ia + 1 == (ib + 1) << (la - lb):
                b += 1
        else:
            out_l.append(lb)
            out_i.append(ib)
            b += 1
            if ib + 1 == (ia + 1) << (lb - la):
                a += 1
    return array("q", out_l), array("q", out_i), array("q", map_p), array("q", map_q)


def _push(st_l, st_i, st_v, lv, ix, val):
    while (
        st_l
        and lv > 0
        and st_l[-1] == lv
        and ix & 1
        and st_i[-1] == ix - 1
        and st_v[-1] == val
    ):
        st_l.pop()
        st_i.pop()
        st_v.pop()
        lv -= 1
        ix >>= 1
    st_l.append(lv)
    st_i.append(ix)
    st_v.append(val)


def merge_siblings(levels, indices, values):
    """Collapse equal-valued sibling cells bottom-up.

    The result is the unique minimal dyadic representation of the step
    function described by ``(levels, indices, values)``.
    """
    st_l = []
    st_i = []
    st_v = []
    for pos in range(len(levels)):
        _push(st_l, st_i, st_v, levels[pos], indices[pos], values[pos])
    return array("q", st_l), array("q", st_i), st_v


def combine(levels_p, indices_p, values_p, levels_q, indices_q, values_q, op):
    """Pointwise ``op`` (0 add, 1 subtract, 2 multiply) of two step functions.

    Refines, applies ``op`` cell by cell and merges equal siblings in a single
    sweep; returns ``(levels, indices, values)`` in canonical form provided
    both inputs tile [0, 1).
    """
    n_p = len(levels_p)
    n_q = len(levels_q)
    st_l = []
    st_i = []
    st_v = []
    a = b = 0
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
        # integer-valued results stay int; Fraction arithmetic is far slower
        if type(v) is not int and v.denominator == 1:
            v = v.numerator
        if la == lb:
            lv, ix = la, ia
            a += 1
            b += 1
        elif la > lb:
            lv, ix = la, ia
            a += 1
            if ia + 1 == (ib + 1) << (la - lb):
                b += 1
        else:
            lv, ix = lb, ib
            b += 1
            if ib + 1 == (ia + 1) << (lb - la):
                a += 1
        _push(st_l, st_i, st_v, lv, ix, v)
    return array("q", st_l), array("q", st_i), st_v


def fwht(values):
    """In-place unnormalised Walsh-Hadamard butterfly in natural (Paley) order.

    ``values`` is a list of length ``2**m`` holding anything that supports
    ``+`` and ``-``. After the call ``values[k] = sum_i (-1)**popcount(k & i) * old[i]``.
    """
    n = len(values)
    if n & (n - 1):
        raise ValueError("length must be a power of two")
    h = 1
    while h < n:
        for start in range(0, n, 2 * h):
            for j in range(start, start + h):
                x = values[j]
                y = values[j + h]
                values[j] = x + y
                values[j + h] = x - y
        h *= 2
    return values
