# cython: boundscheck=False, wraparound=False
"""Term-level arithmetic kernels (compiled twin of ``_kernels_py``).

Same contract as the pure module: dicts mapping ``(xexp, omask)`` to
nonzero Fraction coefficients, fresh dicts returned, inputs untouched.
The compiled version types the inner loops; coefficients stay exact
Python Fractions.
"""

BACKEND_NAME = "cython"


def odd_merge(tuple ma, tuple mb):
    cdef int inv = 0
    cdef int a, b
    if not ma:
        return 1, mb
    if not mb:
        return 1, ma
    for b in mb:
        for a in ma:
            if a == b:
                return None
            if a > b:
                inv += 1
    mask = tuple(sorted(ma + mb))
    return (1 if inv % 2 == 0 else -1), mask


def add_terms(dict a, dict b):
    cdef dict out = dict(a)
    for k, c in b.items():
        v = out.get(k)
        if v is None:
            out[k] = c
        else:
            v = v + c
            if v:
                out[k] = v
            else:
                del out[k]
    return out


def sub_terms(dict a, dict b):
    cdef dict out = dict(a)
    for k, c in b.items():
        v = out.get(k)
        if v is None:
            out[k] = -c
        else:
            v = v - c
            if v:
                out[k] = v
            else:
                del out[k]
    return out


def scale_terms(dict a, c):
    cdef dict out = {}
    if not c:
        return out
    for k, v in a.items():
        out[k] = v * c
    return out


def mul_terms(dict a, dict b):
    cdef dict out = {}
    cdef int inv, x, y, dead
    cdef Py_ssize_t n, t
    for ka, ca in a.items():
        ea = <tuple> (<tuple> ka)[0]
        ma = <tuple> (<tuple> ka)[1]
        n = len(ea)
        for kb, cb in b.items():
            eb = <tuple> (<tuple> kb)[0]
            mb = <tuple> (<tuple> kb)[1]
            inv = 0
            dead = 0
            if ma and mb:
                for x in mb:
                    for y in ma:
                        if y == x:
                            dead = 1
                            break
                        if y > x:
                            inv += 1
                    if dead:
                        break
                if dead:
                    continue
                mask = tuple(sorted(ma + mb))
            elif ma:
                mask = ma
            else:
                mask = mb
            e = tuple([ea[t] + eb[t] for t in range(n)])
            c = ca * cb if inv % 2 == 0 else -(ca * cb)
            k = (e, mask)
            v = out.get(k)
            if v is None:
                out[k] = c
            else:
                v = v + c
                if v:
                    out[k] = v
                else:
                    del out[k]
    return out


def div_linear_terms(dict a, int i, int j, int s):
    cdef dict quot = {}
    cdef dict rem = {}
    cdef int k, t, sign_pow
    for key0, c in a.items():
        e = <tuple> (<tuple> key0)[0]
        m = (<tuple> key0)[1]
        k = e[i]
        base = list(e)
        for t in range(k):
            q = list(base)
            q[i] = t
            q[j] = e[j] + (k - 1 - t)
            sign_pow = (k - 1 - t) % 2
            cc = c if (s > 0 or sign_pow == 0) else -c
            key = (tuple(q), m)
            v = quot.get(key)
            if v is None:
                quot[key] = cc
            else:
                v = v + cc
                if v:
                    quot[key] = v
                else:
                    del quot[key]
        r = list(base)
        r[i] = 0
        r[j] = e[j] + k
        cc = c if (s > 0 or k % 2 == 0) else -c
        key = (tuple(r), m)
        v = rem.get(key)
        if v is None:
            rem[key] = cc
        else:
            v = v + cc
            if v:
                rem[key] = v
            else:
                del rem[key]
    return quot, rem


def div_var_terms(dict a, int i):
    cdef dict quot = {}
    cdef dict rem = {}
    for key0, c in a.items():
        e = <tuple> (<tuple> key0)[0]
        m = (<tuple> key0)[1]
        if e[i] == 0:
            rem[key0] = c
        else:
            q = list(e)
            q[i] = e[i] - 1
            quot[(tuple(q), m)] = c
    return quot, rem
