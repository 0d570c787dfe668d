"""Independent brute-force oracles used to freeze expected values.

These deliberately avoid the library's own algorithms: partition counts
come from exhaustive multiset enumeration, star/cht from box
enumeration over the full weight interval with a comparability DP.
"""

from __future__ import annotations

import itertools

from lieq.qpoly import QPolynomial


def partition_poly_oracle(system, gamma, roots) -> QPolynomial:
    """Exhaustive multiset enumeration of ways to write gamma as a sum
    of the given roots, graded by the number of summands."""
    rc = gamma.root_coords()
    if any(x.denominator != 1 or x < 0 for x in rc):
        return QPolynomial.zero()
    target = tuple(int(x) for x in rc)
    rcs = [r.rc for r in roots]
    counts: dict = {}

    def rec(i, remaining, used):
        if not any(remaining):
            counts[used] = counts.get(used, 0) + 1
            return
        if i == len(rcs):
            return
        root = rcs[i]
        max_mult = min(
            (rem // c for rem, c in zip(remaining, root) if c), default=0
        )
        for mult in range(max_mult + 1):
            rest = tuple(r - mult * c for r, c in zip(remaining, root))
            if all(x >= 0 for x in rest):
                rec(i + 1, rest, used + mult)

    rec(0, target, 0)
    return QPolynomial(counts)


def interval_weights_box(system, lo, hi):
    """Every weight between lo and hi in dominance order, by brute box
    enumeration (exponential; small cases only)."""
    diff = (hi - lo).root_coords()
    if any(x.denominator != 1 or x < 0 for x in diff):
        return []
    bounds = [int(x) for x in diff]
    out = []
    for coeffs in itertools.product(*[range(b + 1) for b in bounds]):
        w = lo
        for i, c in enumerate(coeffs):
            if c:
                root = system._root_by_rc[
                    tuple(1 if j == i else 0 for j in range(system.rank))
                ]
                w = w + c * system.weight(root.fc)
        out.append(w)
    return out


def star_oracle(system, lam):
    """Minimum of the dominant weights in [lam, lam+] under dominance;
    checks the minimum is comparable to every candidate."""
    hi = system.weight(system.dominant_weight_fc(lam.fc))
    dominants = [w for w in interval_weights_box(system, lam, hi) if w.is_dominant()]
    best = None
    for w in dominants:
        if best is None or system.dominance_leq(w, best):
            best = w
    assert best is not None
    for w in dominants:
        assert system.dominance_leq(best, w)
    return best


def cht_oracle(system, lam):
    """Longest chain of dominant weights from star to the dominant
    conjugate, via the full comparability DP on the box interval."""
    lo = star_oracle(system, lam)
    hi = system.weight(system.dominant_weight_fc(lam.fc))
    dominants = [w for w in interval_weights_box(system, lo, hi) if w.is_dominant()]
    dominants.sort(key=lambda w: system.height_of(w - lo))
    longest = {}
    for w in dominants:
        best = 0 if w.fc == lo.fc else None
        for v in dominants:
            if v.fc != w.fc and v.fc in longest and system.dominance_leq(v, w):
                cand = longest[v.fc] + 1
                if best is None or cand > best:
                    best = cand
        if best is not None:
            longest[w.fc] = best
    return longest[hi.fc]


def weyl_orbit(system, weight):
    seen = {weight.fc}
    frontier = [weight.fc]
    while frontier:
        nxt = []
        for fc in frontier:
            for i in range(system.rank):
                img = system.simple_reflection(i).apply_fc(fc)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return seen
