"""Conical T-stable subvarieties of the odd part of the detecting subalgebra.

A `BasicVariety` is the zero set of a list of bihomogeneous generators
(homogeneous in total degree and for the torus action); coordinate
generators are kept in a normalized sublist, all other generators are
reduced modulo the vanishing coordinates.  A `Variety` is a finite union of
basic pieces with no piece contained in another where that is decidable
cheaply.

Normalization splits generators with monomial content: Z(S, mono*h) equals
the union of Z(S, v) over the variables v of the monomial together with
Z(S, h).  This keeps the whole coordinate-subspace calculus (the V(s,t,p)
identities) inside pure set logic, with Groebner radical membership as the
exact fallback for hypersurface pieces.

Coordinates are 1-based to match the X_1..X_m / Y_1..Y_m naming.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .errors import BudgetExceededError
from .groebner import Ideal, radical_member
from .poly import Poly, grevlex_key

PRODUCT_CAP = 50_000


def _poly_key(p: Poly):
    return tuple(
        sorted(((mono, c) for mono, c in p.terms.items()), key=lambda t: grevlex_key(t[0]))
    )


class BasicVariety:
    """One conical piece: Z(coordinate vars, reduced polynomial generators)."""

    __slots__ = ("m", "coords_x", "coords_y", "polys", "_key")

    def __init__(
        self,
        m: int,
        coords_x: Iterable[int],
        coords_y: Iterable[int],
        polys: Iterable[Poly] = (),
        check_torus: bool = True,
    ):
        self.m = m
        self.coords_x: FrozenSet[int] = frozenset(coords_x)
        self.coords_y: FrozenSet[int] = frozenset(coords_y)
        if any(not 1 <= j <= m for j in self.coords_x | self.coords_y):
            raise ValueError("coordinate index out of range")
        cleaned = []
        for p in polys:
            if p.nvars != 2 * m:
                raise ValueError("generator lives in the wrong ring")
            if p.is_zero():
                continue
            if not p.is_homogeneous():
                raise ValueError(f"generator {p} is not homogeneous in total degree")
            if check_torus and not p.is_torus_homogeneous():
                raise ValueError(f"generator {p} is not torus-homogeneous")
            cleaned.append(p.monic())
        cleaned = sorted(set(cleaned), key=_poly_key)
        self.polys: Tuple[Poly, ...] = tuple(cleaned)
        self._key = None

    @property
    def key(self):
        if self._key is None:
            self._key = (
                tuple(sorted(self.coords_x)),
                tuple(sorted(self.coords_y)),
                tuple(_poly_key(p) for p in self.polys),
            )
        return self._key

    def __eq__(self, other):
        return isinstance(other, BasicVariety) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def coord_indices(self) -> FrozenSet[int]:
        """0-based variable indices of the vanishing coordinates."""
        return frozenset(j - 1 for j in self.coords_x) | frozenset(
            self.m + j - 1 for j in self.coords_y
        )

    def is_coordinate(self) -> bool:
        return not self.polys

    def is_whole_space(self) -> bool:
        return not self.coords_x and not self.coords_y and not self.polys

    def generators(self) -> List[Poly]:
        gens = [Poly.x_var(self.m, j) for j in sorted(self.coords_x)]
        gens += [Poly.y_var(self.m, j) for j in sorted(self.coords_y)]
        gens += list(self.polys)
        return gens

    def ideal(self) -> Ideal:
        return Ideal(self.generators())

    def dim(self) -> Optional[int]:
        """Affine dimension; only defined for coordinate components."""
        if not self.is_coordinate():
            return None
        return 2 * self.m - len(self.coords_x) - len(self.coords_y)

    def contains_point(self, point: Sequence) -> bool:
        pt = [Fraction(v) for v in point]
        if len(pt) != 2 * self.m:
            raise ValueError("point has wrong length")
        for i in self.coord_indices():
            if pt[i] != 0:
                return False
        return all(p.evaluate(pt) == 0 for p in self.polys)

    def __repr__(self):
        names = [f"X{j}" for j in sorted(self.coords_x)]
        names += [f"Y{j}" for j in sorted(self.coords_y)]
        names += [str(p) for p in self.polys]
        return "Z(" + ", ".join(names) + ")" if names else "A^{2m}"


def _normalize_states(
    m: int,
    coords_x: FrozenSet[int],
    coords_y: FrozenSet[int],
    polys: Sequence[Poly],
) -> List[Tuple[FrozenSet[int], FrozenSet[int], Tuple[Poly, ...]]]:
    """Reduce generators modulo coordinates and split monomial content."""
    final = {}
    stack = [(coords_x, coords_y, tuple(polys))]
    visited = set()
    while stack:
        cx, cy, ps = stack.pop()
        zero_idx = frozenset(j - 1 for j in cx) | frozenset(m + j - 1 for j in cy)
        reduced: List[Poly] = []
        split = None
        for p in ps:
            q = p.set_vars_zero(zero_idx)
            if q.is_zero():
                continue
            content = q.monomial_content()
            if split is None and any(content):
                split = (q, content)
            else:
                reduced.append(q.monic())
        if split is not None:
            q, content = split
            others = tuple(reduced)
            for i, e in enumerate(content):
                if not e:
                    continue
                if i < m:
                    branch = (cx | {i + 1}, cy, others)
                else:
                    branch = (cx, cy | {i - m + 1}, others)
                if branch not in visited:
                    visited.add(branch)
                    stack.append(branch)
            h = q.divide_monomial(content)
            if h.total_degree() > 0:
                branch = (cx, cy, others + (h.monic(),))
                if branch not in visited:
                    visited.add(branch)
                    stack.append(branch)
            continue
        state = (cx, cy, tuple(sorted(set(reduced), key=_poly_key)))
        key = (
            tuple(sorted(cx)),
            tuple(sorted(cy)),
            tuple(_poly_key(p) for p in state[2]),
        )
        if key not in final:
            final[key] = state
    return [final[k] for k in sorted(final)]


def _light_contains_basic(big: BasicVariety, small: BasicVariety) -> bool:
    """Cheap sound test small <= big (no Groebner); may return False
    negatives for hypersurface pieces, never a wrong True."""
    zero_idx = small.coord_indices()
    small_set = {p for p in small.polys}
    for g in big.generators():
        q = g.set_vars_zero(zero_idx)
        if q.is_zero():
            continue
        q = q.monic()
        if q in small_set:
            continue
        if small.polys and _divides_to_zero(q, small.polys):
            continue
        return False
    return True


def _exact_contains_in_coordinate(big: BasicVariety, small: BasicVariety) -> bool:
    """Exact small <= big when `small` is a coordinate subspace."""
    zero_idx = small.coord_indices()
    return all(g.set_vars_zero(zero_idx).is_zero() for g in big.generators())


def _divides_to_zero(p: Poly, basis: Sequence[Poly]) -> bool:
    from .groebner import normal_form

    return normal_form(p, basis).is_zero()


def _contains_basic_groebner(
    big: BasicVariety, small: BasicVariety, budget: Optional[int]
) -> bool:
    """Exact small <= big via radical membership of big's generators."""
    ideal = small.ideal()
    return all(radical_member(g, ideal, budget=budget) for g in big.generators())


class Variety:
    """A finite union of basic conical pieces, kept in normalized form."""

    __slots__ = ("m", "components", "_key")

    def __init__(self, m: int, components: Iterable[BasicVariety] = (), absorb: bool = True):
        self.m = m
        comps = []
        seen = set()
        for c in components:
            if c.m != m:
                raise ValueError("component has the wrong m")
            if c.key not in seen:
                seen.add(c.key)
                comps.append(c)
        if absorb:
            comps = _absorb(comps)
        self.components = tuple(sorted(comps, key=lambda c: c.key))
        self._key = None

    # -- constructors --------------------------------------------------------

    @staticmethod
    def whole_space(m: int) -> "Variety":
        return Variety(m, [BasicVariety(m, (), ())])

    @staticmethod
    def empty(m: int) -> "Variety":
        return Variety(m, [])

    @staticmethod
    def from_generators(
        m: int, gens: Sequence[Poly], check_torus: bool = True
    ) -> "Variety":
        """Z(gens), normalized (coordinate extraction + monomial splitting)."""
        coords_x, coords_y, rest = set(), set(), []
        for g in gens:
            if g.is_zero():
                continue
            if g.is_monomial() and sum(next(iter(g.terms))) == 1:
                idx = next(iter(g.terms)).index(1)
                if idx < m:
                    coords_x.add(idx + 1)
                else:
                    coords_y.add(idx - m + 1)
            else:
                rest.append(g)
        states = _normalize_states(m, frozenset(coords_x), frozenset(coords_y), rest)
        comps = [
            BasicVariety(m, cx, cy, ps, check_torus=check_torus)
            for cx, cy, ps in states
        ]
        return Variety(m, comps)

    @property
    def key(self):
        if self._key is None:
            self._key = tuple(c.key for c in self.components)
        return self._key

    def __eq__(self, other):
        return isinstance(other, Variety) and self.m == other.m and self.key == other.key

    def __hash__(self):
        return hash((self.m, self.key))

    def is_empty(self) -> bool:
        return not self.components

    def is_whole_space(self) -> bool:
        return any(c.is_whole_space() for c in self.components)

    def __repr__(self):
        if not self.components:
            return "EmptyVariety"
        return " u ".join(repr(c) for c in self.components)

    # -- set operations ------------------------------------------------------

    def intersect(self, other: "Variety") -> "Variety":
        if self.m != other.m:
            raise ValueError("varieties have different m")
        comps: List[BasicVariety] = []
        for a in self.components:
            for b in other.components:
                check = True
                for p in a.polys + b.polys:
                    if not p.is_torus_homogeneous():
                        check = False
                states = _normalize_states(
                    self.m,
                    a.coords_x | b.coords_x,
                    a.coords_y | b.coords_y,
                    list(a.polys) + list(b.polys),
                )
                comps.extend(
                    BasicVariety(self.m, cx, cy, ps, check_torus=check)
                    for cx, cy, ps in states
                )
        return Variety(self.m, comps)

    def union(self, other: "Variety") -> "Variety":
        if self.m != other.m:
            raise ValueError("varieties have different m")
        return Variety(self.m, list(self.components) + list(other.components))

    def apply_permutation(self, perm: Sequence[int]) -> "Variety":
        """Simultaneous coordinate permutation (1-based image tuple)."""
        comps = []
        for c in self.components:
            cx = frozenset(perm[j - 1] for j in c.coords_x)
            cy = frozenset(perm[j - 1] for j in c.coords_y)
            perm0 = [v - 1 for v in perm]
            polys = [p.permute_pairs(perm0) for p in c.polys]
            check = all(p.is_torus_homogeneous() for p in polys)
            comps.append(BasicVariety(self.m, cx, cy, polys, check_torus=check))
        return Variety(self.m, comps)

    def sigma_saturate(self) -> "Variety":
        comps: List[BasicVariety] = []
        for perm in itertools.permutations(range(1, self.m + 1)):
            comps.extend(self.apply_permutation(perm).components)
        return Variety(self.m, comps)

    def substitute_generators(self, images: Sequence[Poly]) -> "Variety":
        """Apply a linear change of coordinates given by variable images."""
        comps = []
        for c in self.components:
            gens = [g.substitute(images) for g in c.generators()]
            check = all(g.is_torus_homogeneous() for g in gens)
            comps.append(Variety.from_generators(self.m, gens, check_torus=check))
        out = Variety.empty(self.m)
        for v in comps:
            out = out.union(v)
        return out

    # -- predicates ----------------------------------------------------------

    def contains_point(self, point: Sequence) -> bool:
        return any(c.contains_point(point) for c in self.components)

    def contains(
        self,
        other: "Variety",
        budget: Optional[int] = None,
        method: str = "auto",
    ) -> bool:
        """Exact test: other <= self.

        method "auto": coordinate shortcut for irreducible coordinate
        components, product-ideal radical criterion as fallback.
        method "groebner": radical membership all the way (the cross-check
        path); requires every component of `other` to be a coordinate
        subspace or a single basic piece.
        """
        if self.m != other.m:
            raise ValueError("varieties have different m")
        if self.is_whole_space():
            return True
        for c in other.components:
            if not self._contains_component(c, budget, method):
                return False
        return True

    def _contains_component(
        self, c: BasicVariety, budget: Optional[int], method: str
    ) -> bool:
        if method == "groebner":
            if any(_contains_basic_groebner(a, c, budget) for a in self.components):
                return True
            if c.is_coordinate() or len(self.components) <= 1:
                return False
            return self._contains_by_product(c, budget)
        if c.is_coordinate():
            # irreducible: lands in a single component
            return any(_exact_contains_in_coordinate(a, c) for a in self.components)
        if any(_light_contains_basic(a, c) for a in self.components):
            return True
        return self._contains_by_product(c, budget)

    def _contains_by_product(self, c: BasicVariety, budget: Optional[int]) -> bool:
        if not self.components:
            return False
        count = 1
        for a in self.components:
            count *= len(a.generators())
            if count > PRODUCT_CAP:
                raise BudgetExceededError(
                    "product-ideal criterion exceeds the generator cap"
                )
        ideal = c.ideal()
        for combo in itertools.product(*(a.generators() for a in self.components)):
            prod = combo[0]
            for g in combo[1:]:
                prod = prod * g
            if not radical_member(prod, ideal, budget=budget):
                return False
        return True

    def equal(
        self, other: "Variety", budget: Optional[int] = None, method: str = "auto"
    ) -> bool:
        if self.key == other.key:
            return True
        return self.contains(other, budget, method) and other.contains(
            self, budget, method
        )

    def is_proj_empty(self, budget: Optional[int] = None) -> bool:
        """True iff the variety is at most the affine origin."""
        for c in self.components:
            missing = [
                v
                for v in range(2 * self.m)
                if v not in c.coord_indices()
            ]
            if not missing:
                continue
            if c.is_coordinate():
                return False
            ideal = c.ideal()
            for v in missing:
                if not radical_member(Poly.variable(2 * self.m, v), ideal, budget=budget):
                    return False
        return True

    # -- io -------------------------------------------------------------------

    def to_json(self) -> dict:
        comps = []
        for c in self.components:
            comps.append(
                {
                    "coords_x": sorted(c.coords_x),
                    "coords_y": sorted(c.coords_y),
                    "polys": [p.to_json()["terms"] for p in c.polys],
                }
            )
        return {"m": self.m, "components": comps}

    @staticmethod
    def from_json(data: dict) -> "Variety":
        m = int(data["m"])
        comps = []
        for c in data["components"]:
            polys = [Poly.from_json({"m": m, "terms": t}) for t in c.get("polys", [])]
            check = all(p.is_torus_homogeneous() for p in polys)
            comps.append(
                BasicVariety(
                    m, c.get("coords_x", ()), c.get("coords_y", ()), polys,
                    check_torus=check,
                )
            )
        return Variety(m, comps)


def _absorb(comps: List[BasicVariety]) -> List[BasicVariety]:
    out: List[BasicVariety] = []
    for c in sorted(comps, key=lambda c: c.key):
        absorbed = False
        for o in comps:
            if o.key == c.key:
                continue
            if _light_contains_basic(o, c):
                # mutual light containment: keep the lexicographically first
                if _light_contains_basic(c, o) and c.key < o.key:
                    continue
                absorbed = True
                break
        if not absorbed:
            out.append(c)
    return out


# -- the coordinate variety calculus ----------------------------------------


def v_stp(m: int, s: int, t: int, p: int) -> Variety:
    """V(s,t,p) = Z(X_1..X_s, Y_{s-p+1}..Y_{s-p+t})."""
    if not (m >= s >= p >= 0 and m >= t >= p and s - p + t <= m):
        raise ValueError(f"inadmissible parameters (m,s,t,p)=({m},{s},{t},{p})")
    coords_x = range(1, s + 1)
    coords_y = range(s - p + 1, s - p + t + 1)
    return Variety(m, [BasicVariety(m, coords_x, coords_y)])


def admissible_stp(m: int):
    for s in range(m + 1):
        for t in range(m + 1):
            for p in range(min(s, t) + 1):
                if s - p + t <= m:
                    yield (s, t, p)


def sigma_saturate(v: Variety) -> Variety:
    return v.sigma_saturate()


def intersect(a: Variety, b: Variety) -> Variety:
    return a.intersect(b)


def union(a: Variety, b: Variety) -> Variety:
    return a.union(b)


def contains(a: Variety, b: Variety, budget=None, method: str = "auto") -> bool:
    return a.contains(b, budget, method)


def equal(a: Variety, b: Variety, budget=None, method: str = "auto") -> bool:
    return a.equal(b, budget, method)


def point_member(point: Sequence, v: Variety) -> bool:
    return v.contains_point(point)


def elementary_symmetric_z(m: int, k: int) -> Poly:
    """The degree-k elementary symmetric polynomial in Z_1..Z_m."""
    if not 0 <= k <= m:
        raise ValueError("k out of range")
    terms: Dict[Tuple[int, ...], Fraction] = {}
    for subset in itertools.combinations(range(m), k):
        ze = tuple(1 if j in subset else 0 for j in range(m))
        terms[ze] = Fraction(1)
    return Poly.from_z_terms(m, terms)


def y_set_polynomials(m: int, gens: Sequence[Poly]) -> List[Poly]:
    """The finite Sigma_m-invariant family cutting out Sigma_m Z(g_1..g_r).

    Degree-q monomials in the g_i (q = m!) with the q factors twisted by the
    q distinct permutations in every possible order.
    """
    q = 1
    for i in range(2, m + 1):
        q *= i
    perms = list(itertools.permutations(range(1, m + 1)))
    out = set()
    r = len(gens)
    for expo in _compositions(q, r):
        factors = []
        for i, e in enumerate(expo):
            factors.extend([gens[i]] * e)
        for order in itertools.permutations(perms):
            prod = Poly.const(2 * m, 1)
            for sigma, g in zip(order, factors):
                from .poly import sigma_act

                prod = prod * sigma_act(sigma, g)
            out.add(prod.monic())
    return sorted(out, key=_poly_key)


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def symmetrize_y_set(m: int, yset: Sequence[Poly]) -> List[Poly]:
    """Elementary symmetric polynomials over each Sigma_m-orbit of the Y set."""
    from .poly import sigma_act

    perms = list(itertools.permutations(range(1, m + 1)))
    remaining = set(p.monic() for p in yset)
    out: List[Poly] = []
    while remaining:
        p = min(remaining, key=_poly_key)
        orbit = sorted({sigma_act(s, p).monic() for s in perms}, key=_poly_key)
        remaining -= set(orbit)
        for k in range(1, len(orbit) + 1):
            e = Poly.zero(2 * m)
            for subset in itertools.combinations(orbit, k):
                prod = Poly.const(2 * m, 1)
                for f in subset:
                    prod = prod * f
                e = e + prod
            if not e.is_zero():
                out.append(e.monic())
    return sorted(set(out), key=_poly_key)


# -- coordinate poset ---------------------------------------------------------


class CoordinatePoset:
    """All Sigma_m-classes of coordinate subspaces with their Hasse diagram."""

    def __init__(self, m: int):
        if m > 6:
            raise BudgetExceededError("coordinate poset enumeration capped at m=6")
        self.m = m
        self.classes: List[Tuple[int, int, int]] = sorted(admissible_stp(m))
        self.representatives = {
            stp: v_stp(m, *stp) for stp in self.classes
        }
        self.saturations = {
            stp: self.representatives[stp].sigma_saturate() for stp in self.classes
        }
        self._leq = {}
        for a in self.classes:
            for b in self.classes:
                self._leq[(a, b)] = self._class_leq(a, b)
        self.hasse_edges = self._hasse()

    def _class_leq(self, a, b) -> bool:
        """True iff Sigma_m V(a) <= Sigma_m V(b) (containment of saturations)."""
        sa, ta, pa = a
        sb, tb, pb = b
        # exists sigma with sigma(coords of V(b)) <= coords of V(a):
        # check injection of index types none<=x,y,both; x<=x,both; ...
        va = self.representatives[a].components[0]
        vb = self.representatives[b].components[0]
        for perm in itertools.permutations(range(1, self.m + 1)):
            cx = {perm[j - 1] for j in vb.coords_x}
            cy = {perm[j - 1] for j in vb.coords_y}
            if cx <= va.coords_x and cy <= va.coords_y:
                return True
        return False

    def leq(self, a, b) -> bool:
        return self._leq[(a, b)]

    def _hasse(self):
        edges = []
        for a in self.classes:
            for b in self.classes:
                if a == b or not self.leq(a, b):
                    continue
                # covering: no c strictly between
                if any(
                    c != a and c != b and self.leq(a, c) and self.leq(c, b)
                    for c in self.classes
                ):
                    continue
                edges.append((a, b))
        return edges

    def to_dot(self) -> str:
        lines = ["digraph coordinate_poset {"]
        for stp in self.classes:
            label = f"SV({stp[0]},{stp[1]},{stp[2]})"
            lines.append(f'  "{stp}" [label="{label}"];')
        for a, b in self.hasse_edges:
            lines.append(f'  "{b}" -> "{a}";')
        lines.append("}")
        return "\n".join(lines)


def coordinate_poset(m: int) -> CoordinatePoset:
    return CoordinatePoset(m)
