"""Search kernels over integer-coded labellings.

Labels are coded 0=in, 1=out, 2=undec and -1 for "not yet assigned".
Frameworks arrive as CSR arrays (see ``ArgumentationFramework.csr``).
Each kernel is njit-compiled when numba is active; ``kernel.py_func`` is
the interpreted equivalent.
"""
import numpy as np

from ._accel import njit

IN = 0
OUT = 1
UNDEC = 2
UNSET = -1

MODE_ADMISSIBLE = 0
MODE_COMPLETE = 1


@njit(cache=True)
def consistent(j, labels, att_ptr, att_idx, mode):
    """False only if j's label is already illegal given the assigned attackers."""
    lab = labels[j]
    if lab == UNSET:
        return True
    n_in = 0
    n_undec = 0
    n_unset = 0
    for k in range(att_ptr[j], att_ptr[j + 1]):
        b = labels[att_idx[k]]
        if b == IN:
            n_in += 1
        elif b == UNDEC:
            n_undec += 1
        elif b == UNSET:
            n_unset += 1
    if lab == IN:
        return n_in == 0 and n_undec == 0
    if lab == OUT:
        return n_in > 0 or n_unset > 0
    if mode == MODE_ADMISSIBLE:
        return True
    return n_in == 0 and (n_undec > 0 or n_unset > 0)


@njit(cache=True)
def enumerate_kernel(n, att_ptr, att_idx, tgt_ptr, tgt_idx, mode):
    """All labellings satisfying ``mode``, as rows of an (m, n) int8 array.

    Depth-first over arguments 0..n-1 trying in, out, undec in that order,
    so rows come out in lexicographic order. After each assignment the
    argument itself and every argument it attacks are re-checked.
    """
    cap = 16
    out = np.empty((cap, n), dtype=np.int8)
    count = 0
    labels = np.full(n, UNSET, dtype=np.int8)
    i = 0
    while i >= 0:
        if i == n:
            if count == cap:
                cap *= 2
                grown = np.empty((cap, n), dtype=np.int8)
                grown[:count] = out[:count]
                out = grown
            out[count, :] = labels
            count += 1
            i -= 1
            continue
        nxt = labels[i] + 1
        if nxt > UNDEC:
            labels[i] = UNSET
            i -= 1
            continue
        labels[i] = nxt
        ok = consistent(i, labels, att_ptr, att_idx, mode)
        if ok:
            for k in range(tgt_ptr[i], tgt_ptr[i + 1]):
                if not consistent(tgt_idx[k], labels, att_ptr, att_idx, mode):
                    ok = False
                    break
        if ok:
            i += 1
    return out[:count].copy()


@njit(cache=True)
def grounded_kernel(n, att_ptr, att_idx):
    """Least fixpoint: in once every attacker is out, out once some attacker is in."""
    labels = np.full(n, UNSET, dtype=np.int8)
    changed = True
    while changed:
        changed = False
        for x in range(n):
            if labels[x] != UNSET:
                continue
            all_out = True
            some_in = False
            for k in range(att_ptr[x], att_ptr[x + 1]):
                b = labels[att_idx[k]]
                if b != OUT:
                    all_out = False
                if b == IN:
                    some_in = True
            if all_out:
                labels[x] = IN
                changed = True
            elif some_in:
                labels[x] = OUT
                changed = True
    for x in range(n):
        if labels[x] == UNSET:
            labels[x] = UNDEC
    return labels


@njit(cache=True)
def maximal_in_rows(rows):
    """Mask of rows whose in-set is not strictly contained in another row's."""
    m = rows.shape[0]
    n = rows.shape[1]
    keep = np.ones(m, dtype=np.bool_)
    for a in range(m):
        for b in range(m):
            if a == b:
                continue
            subset = True
            strict = False
            for j in range(n):
                ia = rows[a, j] == IN
                ib = rows[b, j] == IN
                if ia and not ib:
                    subset = False
                    break
                if ib and not ia:
                    strict = True
            if subset and strict:
                keep[a] = False
                break
    return keep
