"""Pure-Python reference kernels for the covector-axiom scans.

These are deliberately straightforward exhaustive scans; they double as the
oracle the compiled kernels are tested against.  The strong-elimination scan
only visits unordered pairs: the requirement "Z_e = 0 and Z agrees with
X o Y outside S(X, Y)" is symmetric in X and Y because the two compositions
agree outside the separator.
"""

from itertools import product


def compose_closed(rows) -> bool:
    rset = set(rows)
    for x in rows:
        for y in rows:
            if tuple(a if a else b for a, b in zip(x, y)) not in rset:
                return False
    return True


def face_symmetry_closed(rows) -> bool:
    rset = set(rows)
    for x in rows:
        for y in rows:
            if tuple(a if a else -b for a, b in zip(x, y)) not in rset:
                return False
    return True


def strong_elimination_holds(rows) -> bool:
    if not rows:
        return True
    n = len(rows[0])
    if n == 0:
        return True
    rset = set(rows)
    zero_at = [[z for z in rows if z[e] == 0] for e in range(n)]
    m = len(rows)
    for i in range(m):
        x = rows[i]
        for j in range(i, m):
            y = rows[j]
            sep = [e for e in range(n) if x[e] and x[e] == -y[e]]
            if not sep:
                continue
            comp = tuple(a if a else b for a, b in zip(x, y))
            off = [f for f in range(n) if f not in sep]
            for e in sep:
                if not _eliminable(rset, zero_at, comp, sep, off, e):
                    return False
    return True


def _eliminable(rset, zero_at, comp, sep, off, e) -> bool:
    """Is there a covector that is 0 at e and matches comp outside sep?"""
    others = [f for f in sep if f != e]
    if 3 ** len(others) <= len(zero_at[e]):
        # few free positions: enumerate the candidate vectors directly
        cand = list(comp)
        cand[e] = 0
        for assign in product((-1, 0, 1), repeat=len(others)):
            for f, s in zip(others, assign):
                cand[f] = s
            if tuple(cand) in rset:
                return True
        return False
    # otherwise scan the covectors that vanish at e
    for z in zero_at[e]:
        if all(z[f] == comp[f] for f in off):
            return True
    return False
