# src/homfly/polynomial.py
"""
Exact sparse Laurent polynomials with integer coefficients.

LaurentPoly2 maps exponent pairs (a, b) of v^a z^b to non-zero Python ints;
LaurentPoly1 is the one-variable version used for highest-z-degree parts and
Conway polynomials. Both are immutable and hashable.

Text form: monomials joined by " + " / " - ", ordered by ascending z-degree
and then descending v-degree, e.g. "-v^4 + 2*v^2 + v^2*z^2". Parsing goes
through sympy and accepts "^" or "**" for powers.
"""
from collections import defaultdict
from typing import Iterable, Iterator, Mapping

import sympy

from src.errors import MalformedSyntax, ZeroPolynomial

_V, _Z = sympy.symbols("v z")


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


def _join(terms: Iterable[tuple[int, str]]) -> str:
    out = []
    for coeff, mono in terms:
        magnitude = abs(coeff)
        if not mono:
            body = str(magnitude)
        elif magnitude == 1:
            body = mono
        else:
            body = f"{magnitude}*{mono}"
        if not out:
            out.append(f"-{body}" if coeff < 0 else body)
        else:
            out.append(f" - {body}" if coeff < 0 else f" + {body}")
    return "".join(out) or "0"


class LaurentPoly2:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        for (a, b), c in (terms or {}).items():
            if c:
                clean[(int(a), int(b))] = int(c)
        self._terms = clean
        self._hash = None

    # ── constructors ────────────────────────────────────────────────────────

    @classmethod
    def one(cls) -> "LaurentPoly2":
        return cls({(0, 0): 1})

    @classmethod
    def zero(cls) -> "LaurentPoly2":
        return cls()

    @classmethod
    def monomial(cls, a: int, b: int, coeff: int = 1) -> "LaurentPoly2":
        return cls({(a, b): coeff})

    @classmethod
    def from_text(cls, text: str) -> "LaurentPoly2":
        try:
            expr = sympy.expand(sympy.sympify(text.replace("^", "**"), locals={"v": _V, "z": _Z}))
        except (sympy.SympifyError, SyntaxError, TypeError, AttributeError) as e:
            raise MalformedSyntax(f"cannot parse polynomial {text!r}: {e}") from None
        terms: dict[tuple[int, int], int] = defaultdict(int)
        for mono, coeff in expr.as_coefficients_dict().items():
            if not coeff.is_Integer:
                raise MalformedSyntax(f"non-integer coefficient {coeff} in {text!r}")
            a = b = 0
            for base, exp in mono.as_powers_dict().items():
                if base == 1:
                    continue
                if not exp.is_Integer:
                    raise MalformedSyntax(f"non-integer exponent {exp} in {text!r}")
                if base == _V:
                    a += int(exp)
                elif base == _Z:
                    b += int(exp)
                else:
                    raise MalformedSyntax(f"unexpected factor {base} in {text!r}")
            terms[(a, b)] += int(coeff)
        return cls(terms)

    # ── ring structure ──────────────────────────────────────────────────────

    def __add__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        terms = dict(self._terms)
        for k, c in other._terms.items():
            terms[k] = terms.get(k, 0) + c
        return LaurentPoly2(terms)

    def __neg__(self) -> "LaurentPoly2":
        return LaurentPoly2({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly2 | int") -> "LaurentPoly2":
        if isinstance(other, int):
            return LaurentPoly2({k: c * other for k, c in self._terms.items()})
        terms: dict[tuple[int, int], int] = defaultdict(int)
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                terms[(a1 + a2, b1 + b2)] += c1 * c2
        return LaurentPoly2(terms)

    __rmul__ = __mul__

    def shift(self, a: int, b: int, coeff: int = 1) -> "LaurentPoly2":
        """Multiply by the monomial coeff * v^a z^b."""
        return LaurentPoly2({(x + a, y + b): c * coeff for (x, y), c in self._terms.items()})

    def __pow__(self, k: int) -> "LaurentPoly2":
        if k < 0:
            raise ValueError("negative powers are not Laurent polynomials in general")
        result, base = LaurentPoly2.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # ── inspection ──────────────────────────────────────────────────────────

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly2({(0, 0): other})
        return isinstance(other, LaurentPoly2) and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[tuple[int, int, int]]:
        for (a, b), c in self._sorted():
            yield a, b, c

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def _sorted(self):
        return sorted(self._terms.items(), key=lambda kv: (kv[0][1], -kv[0][0]))

    def to_text(self) -> str:
        return _join(
            (c, "*".join(p for p in (_power("v", a), _power("z", b)) if p))
            for (a, b), c in self._sorted()
        )

    def to_sympy(self) -> sympy.Expr:
        return sympy.Add(*(c * _V**a * _Z**b for (a, b), c in self._terms.items()))

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"LaurentPoly2({self.to_text()!r})"


class LaurentPoly1:
    __slots__ = ("_terms", "var")

    def __init__(self, terms: Mapping[int, int] | None = None, var: str = "v"):
        self._terms = {int(a): int(c) for a, c in (terms or {}).items() if c}
        self.var = var

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly1) and self._terms == other._terms and self.var == other.var

    def __hash__(self) -> int:
        return hash((self.var, frozenset(self._terms.items())))

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def coefficient(self, a: int) -> int:
        return self._terms.get(a, 0)

    def min_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("degree of the zero polynomial")
        return min(self._terms)

    def max_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("degree of the zero polynomial")
        return max(self._terms)

    def to_text(self) -> str:
        return _join((c, _power(self.var, a)) for a, c in sorted(self._terms.items(), reverse=True))

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"LaurentPoly1({self.to_text()!r})"


# ── module-level operations ──────────────────────────────────────────────────

DELTA = LaurentPoly2({(-1, -1): 1, (1, -1): -1})


def add(p: LaurentPoly2, q: LaurentPoly2) -> LaurentPoly2:
    return p + q


def mul(p: LaurentPoly2, q: LaurentPoly2) -> LaurentPoly2:
    return p * q


def mono_mul(p: LaurentPoly2, a: int, b: int, coeff: int = 1) -> LaurentPoly2:
    return p.shift(a, b, coeff)


def delta_power(k: int) -> LaurentPoly2:
    """(v^-1 - v)^k / z^k, the polynomial of the (k+1)-component unlink."""
    if k < 0:
        raise ValueError(f"delta_power needs k >= 0, got {k}")
    return DELTA ** k


def _require_nonzero(p: LaurentPoly2) -> None:
    if not p:
        raise ZeroPolynomial("degree query on the zero polynomial")


def min_deg_v(p: LaurentPoly2) -> int:
    _require_nonzero(p)
    return min(a for a, _ in p.terms)


def max_deg_v(p: LaurentPoly2) -> int:
    _require_nonzero(p)
    return max(a for a, _ in p.terms)


def max_deg_z(p: LaurentPoly2) -> int:
    _require_nonzero(p)
    return max(b for _, b in p.terms)


def highest_z_term(p: LaurentPoly2) -> LaurentPoly1:
    top = max_deg_z(p)
    return LaurentPoly1({a: c for (a, b), c in p.terms.items() if b == top})


def coefficient(p: LaurentPoly2, a: int, b: int) -> int:
    return p.terms.get((a, b), 0)


def mirror_poly(p: LaurentPoly2) -> LaurentPoly2:
    """Polynomial of the mirror image: v -> v^-1, z -> -z."""
    return LaurentPoly2({(-a, b): c if b % 2 == 0 else -c for (a, b), c in p.terms.items()})


def split_union_poly(p: LaurentPoly2, q: LaurentPoly2) -> LaurentPoly2:
    return DELTA * p * q


def conway(p: LaurentPoly2) -> LaurentPoly1:
    """Specialisation v = 1, a Laurent polynomial in z."""
    terms: dict[int, int] = defaultdict(int)
    for (_, b), c in p.terms.items():
        terms[b] += c
    return LaurentPoly1(terms, var="z")


def unit_check(p: LaurentPoly2) -> bool:
    """Every link polynomial specialises to 1 at z = v^-1 - v."""
    value = p.to_sympy().subs(_Z, 1 / _V - _V)
    return sympy.cancel(value - 1) == 0


def parity_ok(p: LaurentPoly2, components: int) -> bool:
    """Every monomial v^a z^b has a and b congruent to components - 1 mod 2."""
    r = (components - 1) % 2
    return all(a % 2 == r and b % 2 == r for a, b in p.terms)
