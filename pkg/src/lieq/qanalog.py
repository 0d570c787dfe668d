"""q-analogs of weight multiplicity and their classical cross-checks.

q_partition grades the partition count of a weight into sums of positive
roots outside a parabolic's Levi by the number of summands.  The
alternating Weyl sum of those polynomials over the shifted action gives
the q-analog of weight multiplicity; at q = 1 it collapses to the
ordinary multiplicity, which Freudenthal's recursion and the Weyl
dimension formula compute independently.
"""

from __future__ import annotations

import functools
import itertools
import warnings
from fractions import Fraction

from .config import DEFAULT_CAPS
from .qpoly import QPolynomial
from .rootsystem import Parabolic, RootSystem, Weight, build_root_system

_QP_CACHE: dict = {}


def _nilradical_roots(system: RootSystem, parabolic: Parabolic | None):
    if parabolic is None:
        return list(system.positive_roots)
    inside = {r.rc for r in parabolic.positive_roots}
    return [r for r in system.positive_roots if r.rc not in inside]


def q_partition(gamma: Weight, parabolic: Parabolic | None = None) -> QPolynomial:
    """Graded count of ways to write gamma as a sum of positive roots
    outside the parabolic (all positive roots when parabolic is None);
    the q^n coefficient counts expressions with exactly n summands.
    Zero polynomial when gamma is outside the Z>=0 span."""
    system = gamma.system
    rc = gamma.root_coords()
    if any(x.denominator != 1 or x < 0 for x in rc):
        return QPolynomial.zero()
    rc = tuple(int(x) for x in rc)
    pkey = parabolic.key if parabolic is not None else None
    cache_key = (system.key, pkey, rc)
    hit = _QP_CACHE.get(cache_key)
    if hit is not None:
        return hit
    roots = [r.rc for r in _nilradical_roots(system, parabolic)]
    sizes = [c + 1 for c in rc]
    strides = [0] * len(sizes)
    acc = 1
    for i in range(len(sizes) - 1, -1, -1):
        strides[i] = acc
        acc *= sizes[i]
    total = acc
    points = list(itertools.product(*[range(s) for s in sizes]))
    dp: list = [None] * total
    dp[0] = {0: 1}
    for root in roots:
        offset = sum(root[i] * strides[i] for i in range(len(sizes)))
        for idx, point in enumerate(points):
            if all(point[i] >= root[i] for i in range(len(point))):
                src = dp[idx - offset]
                if src:
                    cell = dp[idx]
                    if cell is None:
                        cell = dp[idx] = {}
                    for deg, c in src.items():
                        cell[deg + 1] = cell.get(deg + 1, 0) + c
    out = QPolynomial(dp[total - 1] or {})
    _QP_CACHE[cache_key] = out
    return out


def lusztig_q_analog(
    mu: Weight, lam: Weight, parabolic: Parabolic | None = None
) -> QPolynomial:
    """Alternating sum over the Weyl group of q_partition(w*mu - lam)
    for the shifted action.  parabolic=None is the Borel case."""
    system = mu.system
    if not mu.is_dominant():
        warnings.warn("q-analog requested for a non-dominant highest weight")
    acc = QPolynomial.zero()
    for w in system.weyl_group():
        gamma = system.shifted_action(w, mu) - lam
        rc = gamma.root_coords()
        if any(x.denominator != 1 or x < 0 for x in rc):
            continue
        term = q_partition(gamma, parabolic)
        if term:
            acc = acc + term if w.sign > 0 else acc - term
    return acc


def weyl_dimension(mu: Weight) -> int:
    """Dimension of the irreducible module with highest weight mu."""
    system = mu.system
    if not mu.is_dominant():
        raise ValueError("highest weight must be dominant")
    shifted = mu + system.rho
    num = 1
    den = 1
    for root in system.positive_roots:
        num *= system.pair(shifted, root)
        den *= system.pair(system.rho, root)
    if num % den:
        raise RuntimeError("Weyl dimension did not come out integral; bug")
    return num // den


def _dominant_weights_below(system: RootSystem, mu: Weight) -> list:
    """Dominant weights <= mu in dominance order, via the fact that
    covers between dominant weights differ by a positive root."""
    seen = {mu.fc}
    frontier = [mu]
    while frontier:
        nxt = []
        for w in frontier:
            for root in system.positive_roots:
                cand = w - system.weight(root.fc)
                if cand.fc in seen or not cand.is_dominant():
                    continue
                if system.dominance_leq(cand, mu):
                    seen.add(cand.fc)
                    nxt.append(cand)
        frontier = nxt
    out = [system.weight(fc) for fc in seen]
    out.sort(key=lambda w: (system.height_of(mu - w), w.fc))
    return out


@functools.lru_cache(maxsize=512)
def _multiplicity_table(system_key, mu_fc) -> dict:
    system = build_root_system(*system_key)
    mu = system.weight(mu_fc)
    dominants = _dominant_weights_below(system, mu)
    mu_norm = system.norm_sq(mu)
    shifted_mu_norm = system.norm_sq(mu + system.rho)
    table: dict = {mu.fc: 1}
    for delta in dominants:
        if delta.fc == mu.fc:
            continue
        total = Fraction(0)
        for root in system.positive_roots:
            beta = system.weight(root.fc)
            k = 1
            while True:
                nu = delta + k * beta
                if system.norm_sq(nu) > mu_norm:
                    break
                m = table.get(system.dominant_weight_fc(nu.fc), 0)
                if m:
                    total += m * system.inner(nu, beta)
                k += 1
        denom = shifted_mu_norm - system.norm_sq(delta + system.rho)
        value = 2 * total / denom
        if value.denominator != 1:
            raise RuntimeError("Freudenthal recursion gave a non-integer; bug")
        table[delta.fc] = int(value)
    return table


def freudenthal_multiplicity(mu: Weight, lam: Weight) -> int:
    """dim of the lam weight space in the irreducible module V(mu),
    by Freudenthal's recursion."""
    system = mu.system
    if not mu.is_dominant():
        raise ValueError("highest weight must be dominant")
    if not (mu - lam).in_root_lattice():
        return 0
    table = _multiplicity_table(system.key, mu.fc)
    return table.get(system.dominant_weight_fc(lam.fc), 0)


def dominant_multiplicities(mu: Weight) -> dict:
    """{dominant weight fc: multiplicity} for all weights of V(mu)."""
    system = mu.system
    table = _multiplicity_table(system.key, mu.fc)
    return {fc: m for fc, m in table.items() if m}


def _orbit_size(system: RootSystem, fc) -> int:
    zero_set = tuple(sorted(i for i, x in enumerate(fc) if x == 0))
    return len(system.weyl_group()) // len(system._enumerate_weyl(zero_set))


def total_dimension_check(mu: Weight) -> tuple[int, int]:
    """(sum of all weight multiplicities, weyl_dimension) for V(mu)."""
    system = mu.system
    table = dominant_multiplicities(mu)
    total = sum(m * _orbit_size(system, fc) for fc, m in table.items())
    return total, weyl_dimension(mu)


def all_weights(mu: Weight) -> list:
    """Every weight of V(mu), each listed once."""
    system = mu.system
    out = []
    seen = set()
    for fc in dominant_multiplicities(mu):
        for w in system.weyl_group():
            img = w.apply_fc(fc)
            if img not in seen:
                seen.add(img)
                out.append(system.weight(img))
    out.sort(key=lambda w: w.fc, reverse=True)
    return out
