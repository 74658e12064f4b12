"""Pure-Python edit-distance kernel.

Fallback used when the compiled extension is not built.  Semantics (including
the canonical backtrace order) are identical to ``_align_c``; the kernel
parity test enforces this.
"""


def align_counts_ids(ref, hyp):
    """Unit-cost substitution/deletion/insertion counts for two id sequences.

    Fills the full (len(ref)+1) x (len(hyp)+1) distance grid, then backtraces
    from the bottom-right cell preferring diagonal moves over deletions over
    insertions, which makes the count split deterministic even when several
    minimal alignments exist.
    """
    n = len(ref)
    m = len(hyp)
    width = m + 1
    d = [0] * ((n + 1) * width)
    for j in range(width):
        d[j] = j
    for i in range(1, n + 1):
        base = i * width
        prev = base - width
        d[base] = i
        ri = ref[i - 1]
        for j in range(1, width):
            best = d[prev + j - 1] + (0 if ri == hyp[j - 1] else 1)
            up = d[prev + j] + 1
            if up < best:
                best = up
            left = d[base + j - 1] + 1
            if left < best:
                best = left
            d[base + j] = best

    subs = dels = ins = 0
    i, j = n, m
    while i > 0 or j > 0:
        cur = d[i * width + j]
        if i > 0 and j > 0:
            cost = 0 if ref[i - 1] == hyp[j - 1] else 1
            if d[(i - 1) * width + j - 1] + cost == cur:
                subs += cost
                i -= 1
                j -= 1
                continue
        if i > 0 and d[(i - 1) * width + j] + 1 == cur:
            dels += 1
            i -= 1
            continue
        ins += 1
        j -= 1
    return subs, dels, ins
