"""Exact sparse polynomials, Demazure operators, key polynomials and atoms.

Exponents are dense tuples of fixed length; a polynomial in ``x`` and ``y``
over ``[n]`` has ``2n`` variables with ``y_j`` at position ``n + j - 1``.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .bruhat import orbit_poset, simple_swap
from .core import Composition, sort_to_partition
from .ssaf import Ssaf, psi, ssafs_of_shape
from .tableaux import key_of, ssyts_of_shape

Exponent = tuple[int, ...]


class Polynomial:
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, int] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exponent, int] = {}
        for exp, c in items:
            exp = tuple(exp)
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent {exp} for {nvars} variables")
            if c:
                clean[exp] = clean.get(exp, 0) + int(c)
                if not clean[exp]:
                    del clean[exp]
        self.nvars = nvars
        self.terms = clean
        self._hash = None

    @classmethod
    def zero(cls, nvars: int) -> Polynomial:
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> Polynomial:
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff: int = 1) -> Polynomial:
        return cls(len(exp), {tuple(exp): coeff})

    @classmethod
    def variable(cls, i: int, nvars: int) -> Polynomial:
        exp = [0] * nvars
        exp[i - 1] = 1
        return cls(nvars, {tuple(exp): 1})

    def _same(self, other: Polynomial):
        if self.nvars != other.nvars:
            raise ValueError(f"variable counts differ: {self.nvars} vs {other.nvars}")

    def __add__(self, other: Polynomial) -> Polynomial:
        self._same(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            out[exp] = out.get(exp, 0) + c
        return Polynomial(self.nvars, out)

    def __neg__(self) -> Polynomial:
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, int):
            return Polynomial(self.nvars, {e: c * other for e, c in self.terms.items()})
        self._same(other)
        out: dict[Exponent, int] = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return Polynomial(self.nvars, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == Polynomial(self.nvars, {(0,) * self.nvars: other})
        return isinstance(other, Polynomial) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def truncate(self, d: int) -> Polynomial:
        return Polynomial(self.nvars, {e: c for e, c in self.terms.items() if sum(e) <= d})

    def homogeneous_part(self, d: int) -> Polynomial:
        return Polynomial(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def swap(self, i: int, j: int) -> Polynomial:
        """Exchange variables ``i`` and ``j`` (1-based)."""
        out = {}
        for e, c in self.terms.items():
            e = list(e)
            e[i - 1], e[j - 1] = e[j - 1], e[i - 1]
            out[tuple(e)] = c
        return Polynomial(self.nvars, out)

    def embed(self, nvars: int, offset: int = 0) -> Polynomial:
        """Place these variables at positions ``offset + 1 ...`` of a larger ring."""
        pad_right = nvars - offset - self.nvars
        if pad_right < 0:
            raise ValueError("target ring too small")
        return Polynomial(nvars, {
            (0,) * offset + e + (0,) * pad_right: c for e, c in self.terms.items()
        })

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        """Graded lexicographic order, highest first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def to_str(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = [f"x{i}" for i in range(1, self.nvars + 1)]
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(exp) if e
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {self.to_str()})"

    def to_json(self) -> list:
        return [[list(e), c] for e, c in self.sorted_terms()]


def xy_names(n: int) -> list[str]:
    return [f"x{i}" for i in range(1, n + 1)] + [f"y{j}" for j in range(1, n + 1)]


class DivisionError(ArithmeticError):
    """Raised when a divided difference leaves a remainder."""


def divide_by_difference(f: Polynomial, i: int, j: int) -> Polynomial:
    """Exact quotient ``f / (v_i - v_j)`` by synthetic division in ``v_i``."""
    by_power: dict[int, dict[Exponent, int]] = defaultdict(dict)
    for exp, c in f.terms.items():
        d = exp[i - 1]
        rest = exp[:i - 1] + (0,) + exp[i:]
        by_power[d][rest] = c
    if not by_power:
        return Polynomial.zero(f.nvars)
    top = max(by_power)
    vj = Polynomial.variable(j, f.nvars)
    quotient: dict[int, Polynomial] = {}
    carry = Polynomial.zero(f.nvars)
    # coefficient of v_i^(d-1) in the quotient is a_d + v_j * q_d
    for d in range(top, 0, -1):
        q = Polynomial(f.nvars, by_power.get(d, {})) + vj * carry
        quotient[d - 1] = q
        carry = q
    remainder = Polynomial(f.nvars, by_power.get(0, {})) + vj * carry
    if remainder:
        raise DivisionError(f"{f} is not divisible by v{i} - v{j}")
    out: dict[Exponent, int] = {}
    for d, q in quotient.items():
        for exp, c in q.terms.items():
            e = list(exp)
            e[i - 1] += d
            out[tuple(e)] = out.get(tuple(e), 0) + c
    return Polynomial(f.nvars, out)


def demazure_pi(i: int, f: Polynomial, offset: int = 0, n: int | None = None) -> Polynomial:
    """``pi_i f = (v_i f - v_{i+1} s_i f) / (v_i - v_{i+1})`` with ``v = x`` or the block at ``offset``."""
    block = n if n is not None else f.nvars - offset
    if not 1 <= i < block:
        raise IndexError(f"pi_{i} undefined on {block} variables")
    a, b = offset + i, offset + i + 1
    va, vb = Polynomial.variable(a, f.nvars), Polynomial.variable(b, f.nvars)
    return divide_by_difference(va * f - vb * f.swap(a, b), a, b)


def demazure_pi_hat(i: int, f: Polynomial, offset: int = 0, n: int | None = None) -> Polynomial:
    return demazure_pi(i, f, offset, n) - f


def apply_pis(word: Sequence[int], f: Polynomial, offset: int = 0, n: int | None = None) -> Polynomial:
    """``pi_{w_1} ... pi_{w_m} f``: the rightmost operator acts first."""
    for i in reversed(word):
        f = demazure_pi(i, f, offset, n)
    return f


def pi_on_monomial(i: int, exp: Exponent) -> Polynomial:
    """Closed form of ``pi_i`` on a monomial, used to cross-check the division."""
    a, b = exp[i - 1], exp[i]
    nv = len(exp)
    out = {}
    if a >= b:
        for k in range(b, a + 1):
            e = list(exp)
            e[i - 1], e[i] = a + b - k, k
            out[tuple(e)] = 1
    else:
        for k in range(a + 1, b):
            e = list(exp)
            e[i - 1], e[i] = k, a + b - k
            out[tuple(e)] = -1
    return Polynomial(nv, out)


def _ascent(nu: Composition) -> int | None:
    return next((i for i in range(1, len(nu)) if nu[i - 1] < nu[i]), None)


@lru_cache(maxsize=None)
def key_polynomial_operator(nu: Composition) -> Polynomial:
    nu = tuple(nu)
    i = _ascent(nu)
    if i is None:
        return Polynomial.monomial(nu)
    return demazure_pi(i, key_polynomial_operator(simple_swap(i, nu)))


@lru_cache(maxsize=None)
def atom_operator(nu: Composition) -> Polynomial:
    nu = tuple(nu)
    i = _ascent(nu)
    if i is None:
        return Polynomial.monomial(nu)
    return demazure_pi_hat(i, atom_operator(simple_swap(i, nu)))


def generating_function(fillings: Iterable[Ssaf], n: int) -> Polynomial:
    out: dict[Exponent, int] = defaultdict(int)
    for F in fillings:
        out[F.content] += 1
    return Polynomial(n, out)


@lru_cache(maxsize=None)
def atom_polynomial(nu: Composition) -> Polynomial:
    """Sum of ``x^F`` over SSAFs of shape exactly ``nu``."""
    nu = tuple(nu)
    return generating_function(ssafs_of_shape(nu), len(nu))


@lru_cache(maxsize=None)
def key_polynomial(nu: Composition) -> Polynomial:
    """Sum of ``x^F`` over SSAFs whose shape is below ``nu``."""
    nu = tuple(nu)
    poset = orbit_poset(sort_to_partition(nu))
    total = Polynomial.zero(len(nu))
    for alpha in poset.elements:
        if poset.leq(alpha, nu):
            total = total + atom_polynomial(alpha)
    return total


def key_leq(K1, K2) -> bool:
    """Entrywise comparison of two key tableaux of the same shape."""
    if K1.shape != K2.shape:
        return False
    return all(a <= b for r1, r2 in zip(K1.rows, K2.rows) for a, b in zip(r1, r2))


def _right_key_sum(nu: Composition, accept) -> Polynomial:
    n = len(nu)
    target = key_of(nu)
    out: dict[Exponent, int] = defaultdict(int)
    for T in ssyts_of_shape(sort_to_partition(nu), n):
        if accept(key_of(psi(T, n).shape), target):
            out[T.content(n)] += 1
    return Polynomial(n, out)


def atom_via_right_keys(nu: Composition) -> Polynomial:
    return _right_key_sum(tuple(nu), lambda K, target: K == target)


def key_via_right_keys(nu: Composition) -> Polynomial:
    return _right_key_sum(tuple(nu), key_leq)


def is_symmetric(f: Polynomial, n: int, offset: int = 0) -> bool:
    return all(f.swap(offset + i, offset + i + 1) == f for i in range(1, n))
