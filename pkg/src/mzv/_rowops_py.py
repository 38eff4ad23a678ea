"""Pure-Python sparse integer row kernel.

A sparse row is a pair of equal-length lists ``(cols, vals)`` with
strictly increasing column indices and nonzero integer values.  The
single hot operation of the exact elimination is the primitive linear
combination of two rows; this module is the fallback twin of the
compiled ``mzv._rowops_cy``.
"""

from math import gcd

BACKEND = "python"


def combine_primitive(ca, acols, avals, cb, bcols, bvals):
    """Return ``ca*A + cb*B`` as a content-reduced sparse row.

    The result is divided by the gcd of its values, so repeated
    elimination steps stay fraction-free without coefficient blowup.
    """
    cols = []
    vals = []
    i = j = 0
    na = len(acols)
    nb = len(bcols)
    while i < na and j < nb:
        c1 = acols[i]
        c2 = bcols[j]
        if c1 < c2:
            cols.append(c1)
            vals.append(ca * avals[i])
            i += 1
        elif c1 > c2:
            cols.append(c2)
            vals.append(cb * bvals[j])
            j += 1
        else:
            v = ca * avals[i] + cb * bvals[j]
            if v:
                cols.append(c1)
                vals.append(v)
            i += 1
            j += 1
    while i < na:
        cols.append(acols[i])
        vals.append(ca * avals[i])
        i += 1
    while j < nb:
        cols.append(bcols[j])
        vals.append(cb * bvals[j])
        j += 1
    g = 0
    for v in vals:
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        vals = [v // g for v in vals]
    return cols, vals
