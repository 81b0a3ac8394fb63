"""Exact sparse multivariate polynomial arithmetic over the rationals.

The coordinate ring of the odd part of the detecting subalgebra is the
polynomial ring Q[X_1..X_m, Y_1..Y_m].  A polynomial is a dictionary mapping
monomial exponent tuples to nonzero Fraction coefficients:

    Monomial = Tuple[int, ...]   (x-exponents then y-exponents, length 2m)
    terms    = Dict[Monomial, Fraction]

The zero polynomial has an empty term dict.  All arithmetic is exact; there
is no floating-point mode.

Two gradings are tracked:

* total degree (sum of all exponents), and
* the torus weight: the vector whose j-th entry is exp(X_j) - exp(Y_j).
  A polynomial of torus weight zero is precisely a polynomial in the
  products Z_j = X_j * Y_j.

The canonical monomial order is graded reverse lexicographic (grevlex) with
X_1 > ... > X_m > Y_1 > ... > Y_m.  The Groebner layer may extend the ring by
one auxiliary variable; such polynomials have an odd number of variables and
no torus structure.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Sequence, Tuple

Monomial = Tuple[int, ...]
Coeff = Fraction


def grevlex_key(mono: Monomial):
    """Sort key: bigger key means bigger monomial in grevlex."""
    return (sum(mono), tuple(-e for e in reversed(mono)))


class Poly:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Dict[Monomial, Coeff] | None = None):
        self.nvars = nvars
        clean: Dict[Monomial, Coeff] = {}
        if terms:
            for mono, c in terms.items():
                if len(mono) != nvars:
                    raise ValueError(f"monomial {mono} has wrong length for nvars={nvars}")
                c = Fraction(c)
                if c != 0:
                    clean[mono] = c
        self.terms = clean
        self._hash = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(nvars: int) -> "Poly":
        return Poly(nvars, {})

    @staticmethod
    def const(nvars: int, value) -> "Poly":
        return Poly(nvars, {(0,) * nvars: Fraction(value)})

    @staticmethod
    def variable(nvars: int, idx: int) -> "Poly":
        exps = [0] * nvars
        exps[idx] = 1
        return Poly(nvars, {tuple(exps): Fraction(1)})

    @staticmethod
    def x_var(m: int, j: int) -> "Poly":
        """X_j (1-based) in the 2m-variable ring."""
        if not 1 <= j <= m:
            raise ValueError(f"X index {j} out of range for m={m}")
        return Poly.variable(2 * m, j - 1)

    @staticmethod
    def y_var(m: int, j: int) -> "Poly":
        """Y_j (1-based) in the 2m-variable ring."""
        if not 1 <= j <= m:
            raise ValueError(f"Y index {j} out of range for m={m}")
        return Poly.variable(2 * m, m + j - 1)

    @staticmethod
    def z_var(m: int, j: int) -> "Poly":
        """Z_j = X_j * Y_j (1-based)."""
        exps = [0] * (2 * m)
        exps[j - 1] = 1
        exps[m + j - 1] = 1
        return Poly(2 * m, {tuple(exps): Fraction(1)})

    @staticmethod
    def from_z_terms(m: int, zterms: Dict[Monomial, Coeff]) -> "Poly":
        """Build a weight-zero polynomial from exponents in Z_1..Z_m."""
        terms: Dict[Monomial, Coeff] = {}
        for ze, c in zterms.items():
            if len(ze) != m:
                raise ValueError("Z-monomial has wrong length")
            terms[tuple(ze) + tuple(ze)] = Fraction(c)
        return Poly(2 * m, terms)

    # -- basic protocol ----------------------------------------------------

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- arithmetic --------------------------------------------------------

    def _check_ring(self, other: "Poly"):
        if self.nvars != other.nvars:
            raise ValueError(
                f"variable-count mismatch: {self.nvars} vs {other.nvars}"
            )

    def __add__(self, other: "Poly") -> "Poly":
        self._check_ring(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono)
            if s is None:
                out[mono] = c
            else:
                s = s + c
                if s:
                    out[mono] = s
                else:
                    del out[mono]
        p = Poly.__new__(Poly)
        p.nvars = self.nvars
        p.terms = out
        p._hash = None
        return p

    def __neg__(self) -> "Poly":
        p = Poly.__new__(Poly)
        p.nvars = self.nvars
        p.terms = {mono: -c for mono, c in self.terms.items()}
        p._hash = None
        return p

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check_ring(other)
        out: Dict[Monomial, Coeff] = {}
        if len(self.terms) > len(other.terms):
            a, b = other, self
        else:
            a, b = self, other
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                mono = tuple(e1 + e2 for e1, e2 in zip(m1, m2))
                s = out.get(mono)
                if s is None:
                    out[mono] = c1 * c2
                else:
                    s = s + c1 * c2
                    if s:
                        out[mono] = s
                    else:
                        del out[mono]
        p = Poly.__new__(Poly)
        p.nvars = self.nvars
        p.terms = out
        p._hash = None
        return p

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return Poly.zero(self.nvars)
        p = Poly.__new__(Poly)
        p.nvars = self.nvars
        p.terms = {mono: cc * c for mono, cc in self.terms.items()}
        p._hash = None
        return p

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        result = Poly.const(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- structure ---------------------------------------------------------

    def total_degree(self) -> int:
        """Max total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def leading(self) -> Tuple[Monomial, Coeff]:
        """Leading (monomial, coeff) in grevlex; raises on zero."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        mono = max(self.terms, key=grevlex_key)
        return mono, self.terms[mono]

    def monic(self) -> "Poly":
        if not self.terms:
            return self
        _, c = self.leading()
        return self.scale(Fraction(1) / c)

    # -- torus structure (only for even nvars = 2m) -------------------------

    @property
    def m(self) -> int:
        if self.nvars % 2:
            raise ValueError("ring has an auxiliary variable; no X/Y pairing")
        return self.nvars // 2

    def monomial_torus_weight(self, mono: Monomial) -> Tuple[int, ...]:
        m = self.m
        return tuple(mono[j] - mono[m + j] for j in range(m))

    def torus_weight(self):
        """Common torus weight of all monomials, or None if inhomogeneous.

        The weight of X_j is +e_j and of Y_j is -e_j; weight zero means the
        polynomial is a polynomial in the Z_j = X_j Y_j.  The zero polynomial
        is homogeneous of every weight; we return the zero vector.
        """
        m = self.m
        if not self.terms:
            return (0,) * m
        weights = {self.monomial_torus_weight(mono) for mono in self.terms}
        if len(weights) == 1:
            return next(iter(weights))
        return None

    def is_torus_homogeneous(self) -> bool:
        return self.torus_weight() is not None

    def is_weight_zero(self) -> bool:
        return self.torus_weight() == (0,) * self.m

    def z_exponents(self) -> Dict[Monomial, Coeff]:
        """Rewrite a weight-zero polynomial in Z_1..Z_m; raises otherwise."""
        if not self.is_weight_zero():
            raise ValueError("polynomial is not of torus weight zero")
        m = self.m
        return {mono[:m]: c for mono, c in self.terms.items()}

    # -- maps ---------------------------------------------------------------

    def permute_pairs(self, perm: Sequence[int]) -> "Poly":
        """Simultaneous X_j -> X_perm(j), Y_j -> Y_perm(j).

        `perm` is 0-based: index j maps to perm[j].
        """
        m = self.m
        out: Dict[Monomial, Coeff] = {}
        for mono, c in self.terms.items():
            new = [0] * (2 * m)
            for j in range(m):
                new[perm[j]] = mono[j]
                new[m + perm[j]] = mono[m + j]
            out[tuple(new)] = c
        return Poly(self.nvars, out)

    def evaluate(self, point: Sequence) -> Coeff:
        if len(point) != self.nvars:
            raise ValueError(
                f"point length {len(point)} != number of variables {self.nvars}"
            )
        pt = [Fraction(v) for v in point]
        total = Fraction(0)
        for mono, c in self.terms.items():
            val = c
            for e, v in zip(mono, pt):
                if e:
                    val *= v ** e
            total += val
        return total

    def substitute(self, images: Sequence["Poly"]) -> "Poly":
        """Substitute variable i -> images[i] (all in a common target ring)."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        target = images[0].nvars if images else self.nvars
        result = Poly.zero(target)
        for mono, c in self.terms.items():
            term = Poly.const(target, c)
            for i, e in enumerate(mono):
                for _ in range(e):
                    term = term * images[i]
            result = result + term
        return result

    def set_vars_zero(self, indices: Iterable[int]) -> "Poly":
        """Substitute 0 for the given (0-based) variables."""
        idx = set(indices)
        out: Dict[Monomial, Coeff] = {}
        for mono, c in self.terms.items():
            if any(mono[i] for i in idx):
                continue
            out[mono] = out.get(mono, Fraction(0)) + c
        return Poly(self.nvars, out)

    def monomial_content(self) -> Monomial:
        """Exponent vector of the largest monomial dividing every term."""
        if not self.terms:
            return (0,) * self.nvars
        it = iter(self.terms)
        content = list(next(it))
        for mono in it:
            for i, e in enumerate(mono):
                if e < content[i]:
                    content[i] = e
            if not any(content):
                break
        return tuple(content)

    def divide_monomial(self, mono: Monomial) -> "Poly":
        out = {}
        for mo, c in self.terms.items():
            new = tuple(e - d for e, d in zip(mo, mono))
            if any(e < 0 for e in new):
                raise ValueError("monomial does not divide every term")
            out[new] = c
        return Poly(self.nvars, out)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def variables_used(self) -> Tuple[int, ...]:
        used = set()
        for mono in self.terms:
            for i, e in enumerate(mono):
                if e:
                    used.add(i)
        return tuple(sorted(used))

    # -- display / io -------------------------------------------------------

    def var_name(self, i: int) -> str:
        if self.nvars % 2 == 0:
            m = self.nvars // 2
            return f"X{i + 1}" if i < m else f"Y{i - m + 1}"
        # auxiliary ring: t is variable 0
        if i == 0:
            return "t"
        m = (self.nvars - 1) // 2
        return f"X{i}" if i <= m else f"Y{i - m}"

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=grevlex_key, reverse=True):
            c = self.terms[mono]
            factors = [
                self.var_name(i) + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(mono)
                if e
            ]
            body = "*".join(factors) if factors else "1"
            if c == 1 and factors:
                parts.append(body)
            elif c == -1 and factors:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}" if factors else f"{c}")
        s = " + ".join(parts).replace("+ -", "- ")
        return s

    def to_json(self) -> dict:
        m = self.m
        terms = []
        for mono in sorted(self.terms, key=grevlex_key, reverse=True):
            c = self.terms[mono]
            terms.append(
                {"coeff": str(c), "x": list(mono[:m]), "y": list(mono[m:])}
            )
        return {"m": m, "terms": terms}

    @staticmethod
    def from_json(data: dict) -> "Poly":
        m = int(data["m"])
        terms: Dict[Monomial, Coeff] = {}
        for t in data["terms"]:
            mono = tuple(int(e) for e in t["x"]) + tuple(int(e) for e in t["y"])
            if len(mono) != 2 * m:
                raise ValueError("exponent vectors must have length m each")
            c = Fraction(t["coeff"])
            if c:
                terms[mono] = terms.get(mono, Fraction(0)) + c
        return Poly(2 * m, terms)


# -- module-level operations matching the public contract -------------------

def poly_add(a: Poly, b: Poly) -> Poly:
    return a + b


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def torus_weight(p: Poly):
    """Common torus weight or the string "inhomogeneous"."""
    w = p.torus_weight()
    return w if w is not None else "inhomogeneous"


def sigma_act(perm: Sequence[int], p: Poly) -> Poly:
    """Apply a permutation of {1..m} simultaneously to the X and Y variables.

    `perm` is given 1-based as the image tuple (perm[j-1] = image of j).
    """
    perm0 = [v - 1 for v in perm]
    if sorted(perm0) != list(range(p.m)):
        raise ValueError("not a permutation of 1..m")
    return p.permute_pairs(perm0)


def evaluate(p: Poly, point: Sequence) -> Coeff:
    return p.evaluate(point)
