"""Pure-Python bitmask kernels.

Reference implementation of the hot loops; ``_ckernels.pyx`` mirrors it
function by function. Interpretations are integers whose bit ``i`` is the
truth value of atom ``i``. Rules are parallel lists ``heads``/``pos``/``neg``
of head indices, positive-body masks and naf-body masks.

Formula bytecode is postfix: ``VAR i``, ``TRUE``, ``FALSE``, ``NOT``,
``AND k``, ``OR k``, ``IMP``, ``IFF``. Three-valued evaluation returns
0 (false), 1 (true) or 2 (unknown, some atom not yet assigned).
"""

OP_VAR, OP_TRUE, OP_FALSE, OP_NOT, OP_AND, OP_OR, OP_IMP, OP_IFF = range(8)
UNKNOWN = 2

BACKEND = "python"


def eval3(code, val, known):
    stack = []
    push = stack.append
    i, n = 0, len(code)
    while i < n:
        op = code[i]
        if op == OP_VAR:
            a = code[i + 1]
            push((val >> a) & 1 if (known >> a) & 1 else UNKNOWN)
            i += 2
            continue
        if op == OP_TRUE:
            push(1)
        elif op == OP_FALSE:
            push(0)
        elif op == OP_NOT:
            v = stack[-1]
            stack[-1] = UNKNOWN if v == UNKNOWN else 1 - v
        elif op == OP_AND or op == OP_OR:
            k = code[i + 1]
            args = stack[len(stack) - k:]
            del stack[len(stack) - k:]
            if op == OP_AND:
                push(0 if 0 in args else UNKNOWN if UNKNOWN in args else 1)
            else:
                push(1 if 1 in args else UNKNOWN if UNKNOWN in args else 0)
            i += 2
            continue
        else:
            b = stack.pop()
            a = stack.pop()
            if op == OP_IMP:
                push(1 if a == 0 or b == 1 else 0 if a == 1 and b == 0 else UNKNOWN)
            else:
                push(UNKNOWN if UNKNOWN in (a, b) else int(a == b))
        i += 1
    return stack[-1]


def enumerate_models(code, n, limit=-1):
    """All total assignments over ``n`` atoms satisfying ``code``, unordered.

    Atoms are assigned in index order; a branch is cut as soon as the
    formula is false and expanded wholesale once it is already true.
    """
    out = []
    full = (1 << n) - 1

    def fill(val, depth):
        free = full & ~((1 << depth) - 1)
        sub = free
        while True:
            out.append(val | sub)
            if 0 <= limit <= len(out):
                return
            if sub == 0:
                return
            sub = (sub - 1) & free

    def dfs(val, depth):
        v = eval3(code, val, (1 << depth) - 1)
        if v == 0:
            return
        if v == 1:
            fill(val, depth)
            return
        if depth == n:
            raise AssertionError("formula undetermined under a total assignment")
        for bit in (0, 1 << depth):
            dfs(val | bit, depth + 1)
            if 0 <= limit <= len(out):
                return

    dfs(0, 0)
    return out[:limit] if limit >= 0 else out


def tp(heads, pos, neg, interp):
    out = 0
    for h, p, q in zip(heads, pos, neg):
        if p & interp == p and not q & interp:
            out |= 1 << h
    return out


def least_model(heads, pos, neg, blocked):
    """Least model of the rules whose naf atoms avoid ``blocked``, naf dropped."""
    live = [(h, p) for h, p, q in zip(heads, pos, neg) if not q & blocked]
    m = 0
    changed = True
    while changed:
        changed = False
        rest = []
        for h, p in live:
            if p & m == p:
                if not (m >> h) & 1:
                    m |= 1 << h
                    changed = True
            else:
                rest.append((h, p))
        live = rest
    return m


def stable_candidates(heads, pos, neg, naf_mask):
    """Stable models found by guessing only the naf atoms.

    The reduct depends on a candidate only through its naf atoms, so each
    guess ``g`` yields at most one model ``least_model(reduct(g))`` and is
    kept iff that model agrees with ``g`` on the naf atoms.
    """
    out = []
    g = naf_mask
    while True:
        m = least_model(heads, pos, neg, g)
        if m & naf_mask == g:
            out.append(m)
        if g == 0:
            break
        g = (g - 1) & naf_mask
    return out


def partial_stable(heads, pos, neg, n):
    """Every disjoint pair (T, F) equal to the least 3-valued model of its reduct.

    Under the 3-valued reduct a naf literal ``not a`` becomes true when
    ``a`` is in F, false when ``a`` is in T and undefined otherwise. The
    truth-least model of the resulting positive program has as true atoms
    the least model of the rules whose naf atoms all lie in F, and as
    non-false atoms the least model of the rules with no naf atom in T.
    """
    full = (1 << n) - 1
    out = []
    t = full
    while True:
        rest = full & ~t
        f = rest
        while True:
            not_false = full & ~f
            if least_model(heads, pos, neg, not_false) == t and least_model(heads, pos, neg, t) == not_false:
                out.append((t, f))
            if f == 0:
                break
            f = (f - 1) & rest
        if t == 0:
            break
        t = (t - 1) & full
    return out
