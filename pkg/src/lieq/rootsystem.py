"""Finite root systems, weights, and Weyl groups for types A-D, G2, F4.

Conventions fixed here and relied on everywhere else:

* Weights are stored in fundamental-weight coordinates (integer tuples);
  roots additionally carry simple-root coordinates.  cartan[i][j] is the
  pairing of alpha_j against the i-th simple coroot, so the j-th column
  of the Cartan matrix is alpha_j in fundamental coordinates.
* The invariant inner product is normalized so short simple roots have
  squared length 1.  In the simply-laced types every root counts as
  short.
* Simple roots are numbered 1..rank left to right on the Dynkin diagram.
  In type B the last node is short, in type C it is long.  In F4 nodes
  3 and 4 are the long ones.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .config import DEFAULT_CAPS, CapExceeded, Caps


def _cartan_and_norms(type_label: str, rank: int):
    """Cartan matrix rows and squared lengths of the simple roots."""
    n = rank

    def chain(norms, bonds):
        # bonds: {(i, j): entry c[i][j]}; unlisted adjacent pairs get -1
        cartan = [[0] * n for _ in range(n)]
        for i in range(n):
            cartan[i][i] = 2
        for (i, j), c in bonds.items():
            cartan[i][j] = c
        return cartan, norms

    if type_label == "A" and n >= 1:
        bonds = {}
        for i in range(n - 1):
            bonds[(i, i + 1)] = bonds[(i + 1, i)] = -1
        return chain([1] * n, bonds)
    if type_label == "B" and n >= 2:
        bonds = {}
        for i in range(n - 2):
            bonds[(i, i + 1)] = bonds[(i + 1, i)] = -1
        bonds[(n - 2, n - 1)] = -1   # <alpha_n, alpha_{n-1}^vee>
        bonds[(n - 1, n - 2)] = -2   # <alpha_{n-1}, alpha_n^vee>
        return chain([2] * (n - 1) + [1], bonds)
    if type_label == "C" and n >= 2:
        bonds = {}
        for i in range(n - 2):
            bonds[(i, i + 1)] = bonds[(i + 1, i)] = -1
        bonds[(n - 2, n - 1)] = -2
        bonds[(n - 1, n - 2)] = -1
        return chain([1] * (n - 1) + [2], bonds)
    if type_label == "D" and n >= 3:
        bonds = {}
        for i in range(n - 2):
            bonds[(i, i + 1)] = bonds[(i + 1, i)] = -1
        bonds[(n - 3, n - 1)] = bonds[(n - 1, n - 3)] = -1
        return chain([1] * n, bonds)
    if type_label == "G2" and n == 2:
        # node 1 short, node 2 long (squared length 3)
        return chain([1, 3], {(0, 1): -3, (1, 0): -1})
    if type_label == "F4" and n == 4:
        # nodes 1,2 short; nodes 3,4 long
        bonds = {(0, 1): -1, (1, 0): -1, (2, 3): -1, (3, 2): -1,
                 (1, 2): -2, (2, 1): -1}
        return chain([1, 1, 2, 2], bonds)
    raise ValueError(f"no finite root system of type {type_label}{rank}")


def weyl_group_order(type_label: str, rank: int) -> int:
    n = rank
    if type_label == "A":
        return factorial(n + 1)
    if type_label in ("B", "C"):
        return 2**n * factorial(n)
    if type_label == "D":
        return 2 ** (n - 1) * factorial(n)
    if type_label == "G2":
        return 12
    if type_label == "F4":
        return 1152
    raise ValueError(f"unknown type {type_label}")


@dataclass(frozen=True)
class Root:
    """A positive root with both coordinate systems precomputed."""

    index: int
    rc: tuple            # simple-root coordinates
    fc: tuple            # fundamental-weight coordinates
    norm_sq: int
    long: bool
    coroot_fc: tuple     # <lam, beta^vee> = sum(coroot_fc[j] * lam.fc[j])

    @property
    def height(self) -> int:
        return sum(self.rc)

    def __repr__(self):
        return f"Root{self.rc}"


class Weight:
    """Integer weight in fundamental coordinates, bound to its system."""

    __slots__ = ("system", "fc")

    def __init__(self, system: "RootSystem", fc):
        self.system = system
        self.fc = tuple(int(x) for x in fc)
        if len(self.fc) != system.rank:
            raise ValueError("coordinate length does not match rank")

    def __eq__(self, other):
        return (
            isinstance(other, Weight)
            and self.system is other.system
            and self.fc == other.fc
        )

    def __hash__(self):
        return hash((self.system.key, self.fc))

    def __add__(self, other):
        return Weight(self.system, [a + b for a, b in zip(self.fc, other.fc)])

    def __sub__(self, other):
        return Weight(self.system, [a - b for a, b in zip(self.fc, other.fc)])

    def __neg__(self):
        return Weight(self.system, [-a for a in self.fc])

    def __mul__(self, k: int):
        return Weight(self.system, [k * a for a in self.fc])

    __rmul__ = __mul__

    def root_coords(self) -> tuple:
        """Coordinates on the simple roots, as Fractions."""
        return self.system.root_coords(self.fc)

    def in_root_lattice(self) -> bool:
        return all(x.denominator == 1 for x in self.root_coords())

    def is_dominant(self) -> bool:
        return all(x >= 0 for x in self.fc)

    def is_zero(self) -> bool:
        return not any(self.fc)

    def __repr__(self):
        return f"Weight{self.fc}"


class WeylElement:
    """Weyl group element as an integer matrix on fundamental coordinates."""

    __slots__ = ("system", "matrix", "word", "_length")

    def __init__(self, system, matrix, word):
        self.system = system
        self.matrix = matrix
        self.word = tuple(word)
        self._length = None

    def apply_fc(self, fc):
        return tuple(sum(row[c] * fc[c] for c in range(len(fc))) for row in self.matrix)

    def apply(self, weight: Weight) -> Weight:
        return Weight(self.system, self.apply_fc(weight.fc))

    @property
    def length(self) -> int:
        """Coxeter length, computed as the number of positive roots sent
        to negative ones."""
        if self._length is None:
            count = 0
            for root in self.system.positive_roots:
                image = self.apply_fc(root.fc)
                if self.system.root_sign(image) < 0:
                    count += 1
            self._length = count
        return self._length

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def compose(self, other: "WeylElement") -> "WeylElement":
        """self after other: (self*other)(x) = self(other(x))."""
        n = self.system.rank
        a, b = self.matrix, other.matrix
        rows = tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
            for i in range(n)
        )
        return WeylElement(self.system, rows, self.word + other.word)

    def inverse(self) -> "WeylElement":
        out = self.system.identity_element()
        for i in reversed(self.word):
            out = out.compose(self.system.simple_reflection(i))
        return out

    def is_identity(self) -> bool:
        return self.matrix == self.system.identity_element().matrix

    def __eq__(self, other):
        return (
            isinstance(other, WeylElement)
            and self.system is other.system
            and self.matrix == other.matrix
        )

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        if not self.word:
            return "WeylElement(e)"
        return "WeylElement(%s)" % "*".join(f"s{i+1}" for i in self.word)


class Parabolic:
    """Standard parabolic subset, given by 0-based simple-root indices."""

    def __init__(self, system: "RootSystem", indices):
        self.system = system
        self.indices = frozenset(int(i) for i in indices)
        for i in self.indices:
            if not 0 <= i < system.rank:
                raise ValueError(f"simple-root index {i} out of range")
        self.key = tuple(sorted(self.indices))

    @property
    def positive_roots(self) -> list:
        """Positive roots supported on the chosen simple roots."""
        return [
            r
            for r in self.system.positive_roots
            if all(c == 0 or i in self.indices for i, c in enumerate(r.rc))
        ]

    @property
    def rho_doubled(self) -> Weight:
        """2*rho_P, the sum of the parabolic's positive roots."""
        fc = [0] * self.system.rank
        for r in self.positive_roots:
            fc = [a + b for a, b in zip(fc, r.fc)]
        return Weight(self.system, fc)

    def rho_pairing(self, root: Root) -> int:
        """<rho_P, beta^vee> for beta in the parabolic's root set."""
        doubled = self.system.pair(self.rho_doubled, root)
        if doubled % 2:
            raise ValueError("rho_P pairing is not integral on this root")
        return doubled // 2

    def weyl_elements(self) -> list:
        """The subgroup W_P, ordered by (length, word)."""
        return self.system._enumerate_weyl(sorted(self.indices))

    def is_dominant(self, weight: Weight) -> bool:
        return all(weight.fc[i] >= 0 for i in self.indices)

    def is_regular_dominant(self, weight: Weight) -> bool:
        return all(weight.fc[i] > 0 for i in self.indices)

    def __eq__(self, other):
        return (
            isinstance(other, Parabolic)
            and self.system is other.system
            and self.indices == other.indices
        )

    def __hash__(self):
        return hash((self.system.key, self.key))

    def __repr__(self):
        inside = ",".join(str(i + 1) for i in self.key)
        return f"Parabolic({{{inside}}})"


class RootSystem:
    """Immutable root-system data for one (type, rank) pair."""

    def __init__(self, type_label: str, rank: int, caps: Caps = DEFAULT_CAPS):
        if rank > caps.rank:
            raise CapExceeded(f"rank {rank} exceeds rank cap {caps.rank}")
        cartan, norms = _cartan_and_norms(type_label, rank)
        self.type_label = type_label
        self.rank = rank
        self.caps = caps
        self.key = (type_label, rank)
        self.cartan_matrix = tuple(tuple(row) for row in cartan)
        self._cartan_cols = tuple(
            tuple(self.cartan_matrix[r][i] for r in range(rank)) for i in range(rank)
        )
        self.simple_norms = tuple(norms)
        self._cartan_inv = self._invert_cartan()
        self.positive_roots = self._close_positive_roots()
        self._root_by_rc = {r.rc: r for r in self.positive_roots}
        self._weyl_cache: dict = {}
        self._simple_refs: list = []
        self.rho = Weight(self, [1] * rank)

    # -- construction ------------------------------------------------

    def _invert_cartan(self):
        n = self.rank
        aug = [
            [Fraction(self.cartan_matrix[i][j]) for j in range(n)]
            + [Fraction(1 if j == i else 0) for j in range(n)]
            for i in range(n)
        ]
        for col in range(n):
            piv = next(r for r in range(col, n) if aug[r][col])
            aug[col], aug[piv] = aug[piv], aug[col]
            lead = aug[col][col]
            aug[col] = [x / lead for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    c = aug[r][col]
                    aug[r] = [x - c * y for x, y in zip(aug[r], aug[col])]
        return tuple(tuple(row[n:]) for row in aug)

    def _fc_of_rc(self, rc):
        return tuple(
            sum(self.cartan_matrix[i][j] * rc[j] for j in range(self.rank))
            for i in range(self.rank)
        )

    def _close_positive_roots(self):
        n = self.rank
        known = set()
        simples = []
        for i in range(n):
            rc = tuple(1 if j == i else 0 for j in range(n))
            simples.append(rc)
            known.add(rc)
        levels = [simples]
        while levels[-1]:
            nxt = []
            for rc in levels[-1]:
                fc = self._fc_of_rc(rc)
                for i in range(n):
                    down = 0
                    step = list(rc)
                    while True:
                        step[i] -= 1
                        if tuple(step) in known or (
                            step[i] < 0 and tuple(-x for x in step) in known
                        ):
                            down += 1
                        else:
                            break
                    up_len = down - fc[i]
                    if up_len > 0:
                        cand = list(rc)
                        cand[i] += 1
                        cand = tuple(cand)
                        if cand not in known:
                            known.add(cand)
                            nxt.append(cand)
            levels.append(nxt)
        ordered = sorted(known, key=lambda rc: (sum(rc), rc))
        roots = []
        short_sq = 1
        for idx, rc in enumerate(ordered):
            nsq = self._norm_sq_rc(rc)
            if nsq.denominator != 1:
                raise RuntimeError("non-integral root length; construction bug")
            nsq = int(nsq)
            coroot = tuple(
                Fraction(rc[j] * self.simple_norms[j], nsq) for j in range(n)
            )
            if any(c.denominator != 1 for c in coroot):
                raise RuntimeError("non-integral coroot; construction bug")
            roots.append(
                Root(
                    index=idx,
                    rc=rc,
                    fc=self._fc_of_rc(rc),
                    norm_sq=nsq,
                    long=nsq > short_sq,
                    coroot_fc=tuple(int(c) for c in coroot),
                )
            )
        return tuple(roots)

    def _norm_sq_rc(self, rc) -> Fraction:
        fc = self._fc_of_rc(rc)
        return sum(
            Fraction(self.simple_norms[j], 2) * fc[j] * rc[j] for j in range(self.rank)
        )

    # -- basic accessors ----------------------------------------------

    def weight(self, coords, basis: str = "fundamental") -> Weight:
        if basis == "fundamental":
            return Weight(self, coords)
        if basis == "root":
            return Weight(self, self._fc_of_rc(tuple(int(c) for c in coords)))
        raise ValueError("basis must be 'fundamental' or 'root'")

    def zero_weight(self) -> Weight:
        return Weight(self, [0] * self.rank)

    def fundamental_weight(self, i: int) -> Weight:
        return Weight(self, [1 if j == i else 0 for j in range(self.rank)])

    def root_coords(self, fc) -> tuple:
        return tuple(
            sum(self._cartan_inv[i][j] * fc[j] for j in range(self.rank))
            for i in range(self.rank)
        )

    def root_from_weight(self, weight: Weight) -> Root:
        """The positive root equal to the given weight; raises otherwise."""
        rc = weight.root_coords()
        if all(x.denominator == 1 for x in rc):
            root = self._root_by_rc.get(tuple(int(x) for x in rc))
            if root is not None:
                return root
        raise ValueError(f"{weight!r} is not a positive root")

    def root_sign(self, fc) -> int:
        """+1/-1 if fc is a (positive/negative) root, else 0."""
        rc = self.root_coords(fc)
        if any(x.denominator != 1 for x in rc):
            return 0
        rc = tuple(int(x) for x in rc)
        if rc in self._root_by_rc:
            return 1
        if tuple(-x for x in rc) in self._root_by_rc:
            return -1
        return 0

    @property
    def highest_root(self) -> Root:
        return max(self.positive_roots, key=lambda r: r.height)

    @property
    def dimension(self) -> int:
        """Dimension of the ambient Lie algebra."""
        return self.rank + 2 * len(self.positive_roots)

    def inner(self, a: Weight, b: Weight) -> Fraction:
        """Invariant inner product (short simple roots have norm 1)."""
        rc_b = self.root_coords(b.fc)
        return sum(
            Fraction(self.simple_norms[j], 2) * a.fc[j] * rc_b[j]
            for j in range(self.rank)
        )

    def norm_sq(self, a: Weight) -> Fraction:
        return self.inner(a, a)

    @property
    def inner_product_matrix(self) -> tuple:
        """Gram matrix of the simple roots."""
        return tuple(
            tuple(
                Fraction(self.simple_norms[i], 2) * self.cartan_matrix[i][j]
                for j in range(self.rank)
            )
            for i in range(self.rank)
        )

    def pair(self, weight: Weight, root: Root) -> int:
        """Coroot pairing <weight, root^vee>."""
        return sum(k * x for k, x in zip(root.coroot_fc, weight.fc))

    def is_regular(self, weight: Weight) -> bool:
        return all(self.pair(weight, r) != 0 for r in self.positive_roots)

    def height_of(self, weight: Weight) -> int:
        """Sum of root coordinates; weight must be in the root lattice."""
        rc = weight.root_coords()
        if any(x.denominator != 1 for x in rc):
            raise ValueError("weight is not in the root lattice")
        return int(sum(rc))

    def dominance_leq(self, a: Weight, b: Weight) -> bool:
        """True iff b - a is a nonnegative integer sum of simple roots."""
        rc = (b - a).root_coords()
        return all(x.denominator == 1 and x >= 0 for x in rc)

    # -- Weyl group ----------------------------------------------------

    def identity_element(self) -> WeylElement:
        n = self.rank
        rows = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        return WeylElement(self, rows, ())

    def simple_reflection(self, i: int) -> WeylElement:
        if not self._simple_refs:
            n = self.rank
            for k in range(n):
                rows = tuple(
                    tuple(
                        (1 if r == c else 0)
                        - (self.cartan_matrix[r][k] if c == k else 0)
                        for c in range(n)
                    )
                    for r in range(n)
                )
                w = WeylElement(self, rows, (k,))
                w._length = 1
                self._simple_refs.append(w)
        return self._simple_refs[i]

    def _enumerate_weyl(self, generator_indices) -> list:
        key = tuple(generator_indices)
        cached = self._weyl_cache.get(key)
        if cached is not None:
            return cached
        gens = [self.simple_reflection(i) for i in generator_indices]
        seen = {self.identity_element().matrix: self.identity_element()}
        frontier = [self.identity_element()]
        while frontier:
            nxt = []
            for w in frontier:
                for g in gens:
                    cand = w.compose(g)
                    if cand.matrix not in seen:
                        cand._length = len(cand.word)
                        seen[cand.matrix] = cand
                        nxt.append(cand)
            frontier = nxt
        out = sorted(seen.values(), key=lambda w: (len(w.word), w.word))
        self._weyl_cache[key] = out
        return out

    def weyl_group(self) -> list:
        """All Weyl group elements, ordered by (length, word)."""
        order = weyl_group_order(self.type_label, self.rank)
        if order > self.caps.weyl_order:
            raise CapExceeded(
                f"|W| = {order} exceeds the Weyl order cap {self.caps.weyl_order}"
            )
        return self._enumerate_weyl(range(self.rank))

    def parabolic(self, indices) -> Parabolic:
        return Parabolic(self, indices)

    def borel(self) -> Parabolic:
        return Parabolic(self, ())

    # -- actions --------------------------------------------------------

    def dominant_weight_fc(self, fc) -> tuple:
        """Fundamental coordinates of the dominant Weyl conjugate."""
        fc = list(fc)
        n = self.rank
        while True:
            for i in range(n):
                if fc[i] < 0:
                    c = fc[i]
                    col = self._cartan_cols[i]
                    fc = [x - c * col[r] for r, x in enumerate(fc)]
                    break
            else:
                return tuple(fc)

    def dominant_representative(self, weight: Weight):
        """(dominant conjugate, w) with w(weight) dominant; w picks the
        least-index negative coordinate at every step."""
        fc = list(weight.fc)
        w = self.identity_element()
        while True:
            for i in range(self.rank):
                if fc[i] < 0:
                    s = self.simple_reflection(i)
                    fc = list(s.apply_fc(fc))
                    w = s.compose(w)
                    break
            else:
                return Weight(self, fc), w

    def shifted_action(self, w: WeylElement, weight: Weight) -> Weight:
        """Affine action w(weight + rho) - rho."""
        shifted = [a + 1 for a in weight.fc]
        moved = w.apply_fc(shifted)
        return Weight(self, [a - 1 for a in moved])

    def parabolic_shift(self, weight: Weight, parabolic: Parabolic):
        """Minimal-length w in W_P with w(weight+rho)-rho P-dominant, or
        None exactly when weight+rho is singular for the parabolic's
        root subsystem."""
        singular = any(
            self.pair(weight, beta) + self.rho_pairing_on(beta) == 0
            for beta in parabolic.positive_roots
        )
        found = None
        for w in parabolic.weyl_elements():
            cand = self.shifted_action(w, weight)
            if parabolic.is_dominant(cand):
                found = (w, cand)
                break
        if (found is None) != singular:
            raise RuntimeError("parabolic shift criterion mismatch; bug")
        return found

    def rho_pairing_on(self, root: Root) -> int:
        return self.pair(self.rho, root)

    def __repr__(self):
        return f"RootSystem({self.type_label}{self.rank})"


@functools.lru_cache(maxsize=None)
def _cached_system(type_label: str, rank: int) -> RootSystem:
    return RootSystem(type_label, rank, DEFAULT_CAPS)


def build_root_system(type_label: str, rank: int, caps: Caps | None = None) -> RootSystem:
    """Construct (and cache, for default caps) the root system."""
    type_label = type_label.upper()
    if caps is None or caps == DEFAULT_CAPS:
        return _cached_system(type_label, rank)
    return RootSystem(type_label, rank, caps)
