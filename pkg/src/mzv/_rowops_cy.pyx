# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled sparse integer row kernel.

Same contract as ``mzv._rowops_py``: rows are (cols, vals) lists with
increasing columns and nonzero integer values.  When every operand fits
in 64 bits the merge runs on C integers with 128-bit intermediates and
falls back to exact Python-object arithmetic on overflow, so results
are always exact.
"""

from cpython.list cimport PyList_New, PyList_SET_ITEM
from cpython.ref cimport Py_INCREF
from libc.stdlib cimport free, malloc

BACKEND = "compiled"

cdef extern from *:
    """
    typedef __int128 int128_t;
    static const long long I64_MAX = 9223372036854775807LL;
    static const long long I64_MIN = (-9223372036854775807LL - 1);
    """
    ctypedef long long int128_t
    long long I64_MAX
    long long I64_MIN


cdef long long _gcd_ll(long long a, long long b) noexcept:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef object _combine_objects(object ca, list acols, list avals,
                             object cb, list bcols, list bvals):
    """Exact merge on Python integers (also the overflow path)."""
    from math import gcd
    cdef Py_ssize_t i = 0, j = 0, na = len(acols), nb = len(bcols)
    cdef long long c1, c2
    cols = []
    vals = []
    while i < na and j < nb:
        c1 = acols[i]
        c2 = bcols[j]
        if c1 < c2:
            cols.append(c1)
            vals.append(ca * <object> avals[i])
            i += 1
        elif c1 > c2:
            cols.append(c2)
            vals.append(cb * <object> bvals[j])
            j += 1
        else:
            v = ca * <object> avals[i] + cb * <object> bvals[j]
            if v:
                cols.append(c1)
                vals.append(v)
            i += 1
            j += 1
    while i < na:
        cols.append(acols[i])
        vals.append(ca * <object> avals[i])
        i += 1
    while j < nb:
        cols.append(bcols[j])
        vals.append(cb * <object> bvals[j])
        j += 1
    g = 0
    for v in vals:
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        vals = [v // g for v in vals]
    return cols, vals


def combine_primitive(ca, list acols, list avals, cb, list bcols, list bvals):
    """Return ``ca*A + cb*B`` as a content-reduced sparse row."""
    cdef Py_ssize_t na = len(acols), nb = len(bcols)
    cdef Py_ssize_t i, j, n
    cdef long long cca, ccb, v
    cdef int128_t t
    cdef int overflow = 0
    cdef long long *av
    cdef long long *bv
    cdef long *ac
    cdef long *bc
    cdef long *rcols
    cdef long long *rvals
    cdef long long g

    # try to pull everything into machine integers
    try:
        cca = ca
        ccb = cb
    except OverflowError:
        return _combine_objects(ca, acols, avals, cb, bcols, bvals)

    av = <long long *> malloc(na * sizeof(long long))
    bv = <long long *> malloc(nb * sizeof(long long))
    ac = <long *> malloc(na * sizeof(long))
    bc = <long *> malloc(nb * sizeof(long))
    rcols = <long *> malloc((na + nb) * sizeof(long))
    rvals = <long long *> malloc((na + nb) * sizeof(long long))
    if av == NULL or bv == NULL or ac == NULL or bc == NULL \
            or rcols == NULL or rvals == NULL:
        overflow = 1
    else:
        try:
            for i in range(na):
                av[i] = avals[i]
                ac[i] = acols[i]
            for j in range(nb):
                bv[j] = bvals[j]
                bc[j] = bcols[j]
        except OverflowError:
            overflow = 1

    if not overflow:
        i = 0
        j = 0
        n = 0
        while i < na and j < nb:
            if ac[i] < bc[j]:
                t = <int128_t> cca * av[i]
                if t > I64_MAX or t < I64_MIN:
                    overflow = 1
                    break
                rcols[n] = ac[i]
                rvals[n] = <long long> t
                n += 1
                i += 1
            elif ac[i] > bc[j]:
                t = <int128_t> ccb * bv[j]
                if t > I64_MAX or t < I64_MIN:
                    overflow = 1
                    break
                rcols[n] = bc[j]
                rvals[n] = <long long> t
                n += 1
                j += 1
            else:
                t = <int128_t> cca * av[i] + <int128_t> ccb * bv[j]
                if t > I64_MAX or t < I64_MIN:
                    overflow = 1
                    break
                if t != 0:
                    rcols[n] = ac[i]
                    rvals[n] = <long long> t
                    n += 1
                i += 1
                j += 1
        if not overflow:
            while i < na:
                t = <int128_t> cca * av[i]
                if t > I64_MAX or t < I64_MIN:
                    overflow = 1
                    break
                rcols[n] = ac[i]
                rvals[n] = <long long> t
                n += 1
                i += 1
        if not overflow:
            while j < nb:
                t = <int128_t> ccb * bv[j]
                if t > I64_MAX or t < I64_MIN:
                    overflow = 1
                    break
                rcols[n] = bc[j]
                rvals[n] = <long long> t
                n += 1
                j += 1

    if overflow:
        free(av); free(bv); free(ac); free(bc); free(rcols); free(rvals)
        return _combine_objects(ca, acols, avals, cb, bcols, bvals)

    g = 0
    for i in range(n):
        g = _gcd_ll(g, rvals[i])
        if g == 1:
            break
    if g > 1:
        for i in range(n):
            rvals[i] //= g

    cols = PyList_New(n)
    vals = PyList_New(n)
    for i in range(n):
        obj = <object> rcols[i]
        Py_INCREF(obj)
        PyList_SET_ITEM(cols, i, obj)
        obj = <object> rvals[i]
        Py_INCREF(obj)
        PyList_SET_ITEM(vals, i, obj)
    free(av); free(bv); free(ac); free(bc); free(rcols); free(rvals)
    return cols, vals
