"""Sparse multivariate polynomials over the error variables (P_X, P_Y, P_Z, p)."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping

VARIABLES = ("px", "py", "pz", "p")
NVARS = len(VARIABLES)

Exponents = tuple[int, int, int, int]


@dataclass(frozen=True)
class Polynomial:
    """Immutable sum of ``coeff * px^a py^b pz^c p^e`` terms.

    Terms are kept sorted by exponent vector with zero coefficients dropped,
    so structurally equal polynomials compare equal.
    """

    terms: tuple[tuple[float, Exponents], ...] = ()

    @classmethod
    def from_dict(cls, mapping: Mapping[Exponents, float]) -> "Polynomial":
        items = sorted((tuple(e), c) for e, c in mapping.items() if c != 0)
        for e, _ in items:
            if len(e) != NVARS or any(k < 0 for k in e):
                raise ValueError(f"bad exponent vector {e}")
        return cls(tuple((c, e) for e, c in items))

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[float, Exponents]]) -> "Polynomial":
        acc: dict[Exponents, float] = defaultdict(float)
        for c, e in terms:
            acc[tuple(e)] += c
        return cls.from_dict(acc)

    @classmethod
    def variable(cls, name: str) -> "Polynomial":
        e = [0] * NVARS
        e[VARIABLES.index(name)] = 1
        return cls(((1.0, tuple(e)),))

    @classmethod
    def constant(cls, c: float) -> "Polynomial":
        return cls.from_dict({(0, 0, 0, 0): c})

    def as_dict(self) -> dict[Exponents, float]:
        return {e: c for c, e in self.terms}

    def __call__(self, px: float, py: float, pz: float, p: float = 0.0) -> float:
        vals = (px, py, pz, p)
        total = 0.0
        for c, e in self.terms:
            term = c
            for v, k in zip(vals, e):
                if k:
                    term *= v ** k
            total += term
        return total

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial.from_terms(self.terms + other.terms)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + other.scale(-1.0)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        out = []
        for c1, e1 in self.terms:
            for c2, e2 in other.terms:
                out.append((c1 * c2, tuple(a + b for a, b in zip(e1, e2))))
        return Polynomial.from_terms(out)

    def scale(self, k: float) -> "Polynomial":
        return Polynomial.from_terms((c * k, e) for c, e in self.terms)

    def input_order(self, e: Exponents) -> int:
        return e[0] + e[1] + e[2]

    def input_terms(self) -> "Polynomial":
        """Terms with no dependence on the Clifford error ``p``."""
        return Polynomial(tuple((c, e) for c, e in self.terms if e[3] == 0))

    def clifford_terms(self) -> "Polynomial":
        return Polynomial(tuple((c, e) for c, e in self.terms if e[3] > 0))

    def truncate(self, order: int) -> "Polynomial":
        """Drop terms whose total degree in (px, py, pz) exceeds ``order``."""
        return Polynomial(tuple((c, e) for c, e in self.terms
                                if self.input_order(e) <= order))

    def lowest_order(self) -> "Polynomial":
        """Input-error terms of minimal total degree."""
        inp = self.input_terms()
        if not inp.terms:
            return inp
        m = min(self.input_order(e) for _, e in inp.terms)
        return inp.truncate(m)

    def permute(self, perm: tuple[int, int, int]) -> "Polynomial":
        """Relabel (px, py, pz): variable ``i`` becomes variable ``perm[i]``."""
        out = []
        for c, e in self.terms:
            new = [0, 0, 0, e[3]]
            for i in range(3):
                new[perm[i]] += e[i]
            out.append((c, tuple(new)))
        return Polynomial.from_terms(out)

    def has_nonnegative_coefficients(self) -> bool:
        return all(c >= 0 for c, _ in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for c, e in self.terms:
            mono = "*".join(
                f"{v}^{k}" if k > 1 else v
                for v, k in zip(VARIABLES, e) if k)
            parts.append(f"{c:g}*{mono}" if mono else f"{c:g}")
        return " + ".join(parts)


def poly(spec: str) -> Polynomial:
    """Parse a small ``'2*px + 2*px*pz + 0.8*p'`` style expression.

    Only sums of products of one coefficient and variables (``^`` for powers)
    are understood; this is used for writing catalog constants legibly.
    """
    terms = []
    for raw in spec.replace(" ", "").replace("-", "+-").split("+"):
        raw = raw.strip()
        if not raw:
            continue
        coeff = 1.0
        if raw.startswith("-"):
            coeff, raw = -1.0, raw[1:]
        exps = [0] * NVARS
        for factor in raw.split("*"):
            factor = factor.strip()
            name, _, power = factor.partition("^")
            if name in VARIABLES:
                exps[VARIABLES.index(name)] += int(power or 1)
            else:
                coeff *= float(factor)
        terms.append((coeff, tuple(exps)))
    return Polynomial.from_terms(terms)
