# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled bitmask kernels; same contracts as ``_pykernels``.

Masks are 64-bit, so callers route programs with more than 63 atoms to the
pure-Python module.
"""

from libc.stdlib cimport malloc, free

ctypedef unsigned long long mask_t

cdef enum:
    OP_VAR = 0
    OP_TRUE = 1
    OP_FALSE = 2
    OP_NOT = 3
    OP_AND = 4
    OP_OR = 5
    OP_IMP = 6
    OP_IFF = 7

cdef enum:
    UNKNOWN = 2

BACKEND = "cython"
MAX_ATOMS = 63


cdef struct Rules:
    Py_ssize_t count
    int* heads
    mask_t* pos
    mask_t* neg


cdef int _load_rules(Rules* r, heads, pos, neg) except -1:
    cdef Py_ssize_t i, k = len(heads)
    r.count = k
    r.heads = <int*> malloc((k + 1) * sizeof(int))
    r.pos = <mask_t*> malloc((k + 1) * sizeof(mask_t))
    r.neg = <mask_t*> malloc((k + 1) * sizeof(mask_t))
    if r.heads == NULL or r.pos == NULL or r.neg == NULL:
        _free_rules(r)
        raise MemoryError()
    for i in range(k):
        r.heads[i] = heads[i]
        r.pos[i] = pos[i]
        r.neg[i] = neg[i]
    return 0


cdef void _free_rules(Rules* r):
    free(r.heads)
    free(r.pos)
    free(r.neg)
    r.heads = NULL
    r.pos = NULL
    r.neg = NULL


cdef mask_t _least(Rules* r, mask_t blocked) nogil:
    cdef Py_ssize_t i
    cdef mask_t m = 0, bit
    cdef bint changed = True
    while changed:
        changed = False
        for i in range(r.count):
            if r.neg[i] & blocked:
                continue
            bit = (<mask_t> 1) << r.heads[i]
            if m & bit:
                continue
            if r.pos[i] & m == r.pos[i]:
                m |= bit
                changed = True
    return m


def tp(heads, pos, neg, interp):
    cdef Rules r
    cdef mask_t i = interp, out = 0
    cdef Py_ssize_t k
    _load_rules(&r, heads, pos, neg)
    for k in range(r.count):
        if r.pos[k] & i == r.pos[k] and not (r.neg[k] & i):
            out |= (<mask_t> 1) << r.heads[k]
    _free_rules(&r)
    return out


def least_model(heads, pos, neg, blocked):
    cdef Rules r
    cdef mask_t m
    _load_rules(&r, heads, pos, neg)
    m = _least(&r, blocked)
    _free_rules(&r)
    return m


def stable_candidates(heads, pos, neg, naf_mask):
    cdef Rules r
    cdef mask_t nm = naf_mask, g = naf_mask, m
    out = []
    _load_rules(&r, heads, pos, neg)
    try:
        while True:
            m = _least(&r, g)
            if m & nm == g:
                out.append(m)
            if g == 0:
                break
            g = (g - 1) & nm
    finally:
        _free_rules(&r)
    return out


def partial_stable(heads, pos, neg, int n):
    cdef Rules r
    cdef mask_t full = ((<mask_t> 1) << n) - 1
    cdef mask_t t = full, f, rest, not_false
    out = []
    _load_rules(&r, heads, pos, neg)
    try:
        while True:
            rest = full & ~t
            f = rest
            while True:
                not_false = full & ~f
                if _least(&r, not_false) == t and _least(&r, t) == not_false:
                    out.append((t, f))
                if f == 0:
                    break
                f = (f - 1) & rest
            if t == 0:
                break
            t = (t - 1) & full
    finally:
        _free_rules(&r)
    return out


cdef int _eval3(long long* code, Py_ssize_t length, mask_t val, mask_t known,
                int* stack) nogil:
    cdef Py_ssize_t i = 0, sp = 0, j, k
    cdef long long op
    cdef int a, b, v, res
    while i < length:
        op = code[i]
        if op == OP_VAR:
            a = <int> code[i + 1]
            if (known >> a) & 1:
                stack[sp] = <int> ((val >> a) & 1)
            else:
                stack[sp] = UNKNOWN
            sp += 1
            i += 2
            continue
        if op == OP_TRUE:
            stack[sp] = 1
            sp += 1
        elif op == OP_FALSE:
            stack[sp] = 0
            sp += 1
        elif op == OP_NOT:
            v = stack[sp - 1]
            stack[sp - 1] = UNKNOWN if v == UNKNOWN else 1 - v
        elif op == OP_AND or op == OP_OR:
            k = <Py_ssize_t> code[i + 1]
            res = 1 if op == OP_AND else 0
            for j in range(sp - k, sp):
                v = stack[j]
                if op == OP_AND:
                    if v == 0:
                        res = 0
                    elif v == UNKNOWN and res != 0:
                        res = UNKNOWN
                else:
                    if v == 1:
                        res = 1
                    elif v == UNKNOWN and res != 1:
                        res = UNKNOWN
            sp -= k
            stack[sp] = res
            sp += 1
            i += 2
            continue
        else:
            b = stack[sp - 1]
            a = stack[sp - 2]
            sp -= 2
            if op == OP_IMP:
                if a == 0 or b == 1:
                    res = 1
                elif a == 1 and b == 0:
                    res = 0
                else:
                    res = UNKNOWN
            else:
                if a == UNKNOWN or b == UNKNOWN:
                    res = UNKNOWN
                else:
                    res = 1 if a == b else 0
            stack[sp] = res
            sp += 1
        i += 1
    return stack[sp - 1]


def eval3(code, val, known):
    cdef Py_ssize_t length = len(code), i
    cdef long long* c = <long long*> malloc((length + 1) * sizeof(long long))
    cdef int* stack = <int*> malloc((length + 1) * sizeof(int))
    cdef int res
    try:
        for i in range(length):
            c[i] = code[i]
        res = _eval3(c, length, val, known, stack)
    finally:
        free(c)
        free(stack)
    return res


cdef class _Enumerator:
    cdef long long* code
    cdef Py_ssize_t length
    cdef int* stack
    cdef int n
    cdef mask_t full
    cdef Py_ssize_t limit
    cdef list out

    cdef bint done(self):
        return self.limit >= 0 and len(self.out) >= self.limit

    cdef int fill(self, mask_t val, int depth) except -1:
        cdef mask_t free_bits = self.full & ~(((<mask_t> 1) << depth) - 1)
        cdef mask_t sub = free_bits
        while True:
            self.out.append(val | sub)
            if self.done() or sub == 0:
                return 0
            sub = (sub - 1) & free_bits

    cdef int dfs(self, mask_t val, int depth) except -1:
        cdef int v = _eval3(self.code, self.length, val,
                            ((<mask_t> 1) << depth) - 1, self.stack)
        if v == 0:
            return 0
        if v == 1:
            self.fill(val, depth)
            return 0
        if depth == self.n:
            raise AssertionError("formula undetermined under a total assignment")
        self.dfs(val, depth + 1)
        if self.done():
            return 0
        self.dfs(val | ((<mask_t> 1) << depth), depth + 1)
        return 0


def enumerate_models(code, int n, limit=-1):
    cdef _Enumerator e = _Enumerator()
    cdef Py_ssize_t i
    e.length = len(code)
    e.code = <long long*> malloc((e.length + 1) * sizeof(long long))
    e.stack = <int*> malloc((e.length + 1) * sizeof(int))
    e.n = n
    e.full = ((<mask_t> 1) << n) - 1
    e.limit = limit
    e.out = []
    try:
        for i in range(e.length):
            e.code[i] = code[i]
        e.dfs(0, 0)
    finally:
        free(e.code)
        free(e.stack)
    if limit >= 0:
        return e.out[:limit]
    return e.out
