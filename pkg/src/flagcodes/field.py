"""Exact arithmetic in GF(p^m).

Elements are encoded as plain integers: the coefficient vector
``(c_0, ..., c_{m-1})`` of the polynomial ``c_0 + c_1 x + ... + c_{m-1} x^{m-1}``
is read as the base-p integer ``sum(c_i * p**i)``.  This encoding fixes the
enumeration order of the field (zero first, then ascending integers) and is
the serialized form used everywhere else in the package.

:class:`FieldElement` wraps an encoded value together with its field for
callers who prefer operator syntax; the linear algebra layers work on the
raw integers for speed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

__all__ = [
    "FieldError",
    "FieldSpec",
    "FieldElement",
    "is_prime",
    "make_field",
    "field_arith",
    "enumerate_field",
    "find_irreducible",
    "field_to_json",
    "field_from_json",
    "split_prime_power",
]

# beyond this size the add table is not cached
_ADD_TABLE_LIMIT = 256
_MAX_ORDER = 1 << 16


class FieldError(ValueError):
    """Invalid field parameters or an undefined field operation."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def split_prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, m)`` with ``q == p**m``, or raise :class:`FieldError`."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    p = next(d for d in itertools.count(2) if q % d == 0)
    if not is_prime(p):  # pragma: no cover - smallest divisor is always prime
        raise FieldError(f"{q} is not a prime power")
    m, rest = 0, q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        raise FieldError(f"{q} is not a prime power")
    return p, m


# --- polynomials over a field, coefficient lists with x^0 first ---------------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(field: "FieldSpec", a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Remainder of ``a`` divided by the monic-or-not polynomial ``b``."""
    a = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise FieldError("polynomial division by zero")
    lead_inv = field.inv(b[-1])
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        coef = field.mul(a[-1], lead_inv)
        shift = len(a) - 1 - db
        for i, bi in enumerate(b):
            a[shift + i] = field.sub(a[shift + i], field.mul(coef, bi))
        _trim(a)
    return a


def _monic_polys(field: "FieldSpec", degree: int) -> Iterator[list[int]]:
    """Monic polynomials of a degree in ascending base-q order of the low coefficients.

    The x^{degree-1} coefficient is the most significant digit.
    """
    q = field.order
    for code in range(q**degree):
        coeffs = []
        for _ in range(degree):
            code, digit = divmod(code, q)
            coeffs.append(digit)
        yield coeffs + [1]


def _is_irreducible(field: "FieldSpec", poly: Sequence[int]) -> bool:
    degree = len(poly) - 1
    for d in range(1, degree // 2 + 1):
        for divisor in _monic_polys(field, d):
            if not _poly_mod(field, poly, divisor):
                return False
    return True


# --- the field ----------------------------------------------------------------


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^m) with a fixed monic irreducible modulus (x^0 coefficient first).

    Build through :func:`make_field`, which validates the parameters.
    """

    p: int
    m: int
    modulus: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.p**self.m

    @property
    def q(self) -> int:
        return self.p**self.m

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}, modulus={list(self.modulus)})"

    # encoding helpers

    def to_coeffs(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.m):
            a, digit = divmod(a, self.p)
            out.append(digit)
        return tuple(out)

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) != self.m:
            raise FieldError(f"expected {self.m} coefficients, got {len(coeffs)}")
        value = 0
        for c in reversed(coeffs):
            if not 0 <= c < self.p:
                raise FieldError(f"coefficient {c} outside [0, {self.p})")
            value = value * self.p + c
        return value

    def elements(self) -> range:
        return range(self.order)

    def check(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise FieldError(f"{a} is not an element of {self!r}")
        return a

    # tables, built on first use

    def _poly_mulmod(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        ac, bc = self.to_coeffs(a), self.to_coeffs(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(ac):
            if x:
                for j, y in enumerate(bc):
                    if y:
                        prod[i + j] = (prod[i + j] + x * y) % p
        mod = self.modulus
        for deg in range(2 * m - 2, m - 1, -1):
            c = prod[deg]
            if c:
                for i in range(m + 1):
                    prod[deg - m + i] = (prod[deg - m + i] - c * mod[i]) % p
        return self.from_coeffs(prod[:m])

    @cached_property
    def _exp_log(self) -> tuple[list[int], list[int]]:
        q = self.order
        for g in range(1, q):
            exp = [1]
            x = self._poly_mulmod(1, g)
            while x != 1:
                exp.append(x)
                x = self._poly_mulmod(x, g)
            if len(exp) == q - 1:
                log = [0] * q
                for i, v in enumerate(exp):
                    log[v] = i
                return exp, log
        raise FieldError(f"no primitive element in {self!r}; modulus is not irreducible")  # pragma: no cover

    @cached_property
    def _add_table(self) -> list[list[int]] | None:
        if self.order > _ADD_TABLE_LIMIT:
            return None
        return [[self._digit_add(a, b) for b in range(self.order)] for a in range(self.order)]

    def _digit_add(self, a: int, b: int, sign: int = 1) -> int:
        p = self.p
        out, scale = 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += ((x + sign * y) % p) * scale
            scale *= p
        return out

    # arithmetic on encoded integers

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        table = self._add_table
        if table is not None:
            return table[a][b]
        return self._digit_add(a, b)

    def neg(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return self._digit_add(0, a, -1)

    def sub(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a - b) % self.p
        if self.p == 2:
            return a ^ b
        return self._digit_add(a, b, -1)

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        exp, log = self._exp_log
        return exp[(log[a] + log[b]) % (self.order - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("inversion of zero")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        exp, log = self._exp_log
        return exp[(-log[a]) % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        if self.m == 1:
            return pow(a, e, self.p)
        exp, log = self._exp_log
        return exp[(log[a] * e) % (self.order - 1)]

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, self.check(value))


def make_field(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Build GF(p^m).

    Without a modulus the smallest monic irreducible of degree m is chosen,
    ordering candidates by their low coefficients read as a base-p integer
    (x^{m-1} most significant).  For m = 1 the modulus is the placeholder x.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if not isinstance(m, int) or m < 1:
        raise FieldError(f"extension degree must be >= 1, got {m}")
    if p**m > _MAX_ORDER:
        raise FieldError(f"fields of order > 2^16 are not supported (got {p}^{m})")
    prime = FieldSpec(p, 1, (0, 1))
    if modulus is None:
        if m == 1:
            return prime
        for candidate in _monic_polys(prime, m):
            if _is_irreducible(prime, candidate):
                return FieldSpec(p, m, tuple(candidate))
        raise FieldError(f"no irreducible polynomial of degree {m} over GF({p})")  # pragma: no cover
    coeffs = [int(c) for c in modulus]
    if len(coeffs) != m + 1:
        raise FieldError(f"modulus must have {m + 1} coefficients, got {len(coeffs)}")
    if any(not 0 <= c < p for c in coeffs):
        raise FieldError(f"modulus coefficients must lie in [0, {p})")
    if coeffs[-1] != 1:
        raise FieldError("modulus is not monic")
    if m == 1:
        return prime
    if not _is_irreducible(prime, coeffs):
        raise FieldError(f"modulus {coeffs} is reducible over GF({p})")
    return FieldSpec(p, m, tuple(coeffs))


@dataclass(frozen=True)
class FieldElement:
    """An element of ``field``; ``value`` is the base-p integer encoding."""

    field: FieldSpec
    value: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.to_coeffs(self.value)

    def _other(self, other: "FieldElement | int") -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError(f"mismatched fields {self.field!r} and {other.field!r}")
            return other.value
        return self.field.check(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        if self.field.m == 1:
            return str(self.value)
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            terms.append(str(c) if i == 0 else (mono if c == 1 else f"{c}{mono}"))
        return " + ".join(reversed(terms)) or "0"


_BINARY = {"add": "add", "sub": "sub", "mul": "mul"}


def field_arith(spec: FieldSpec, op: str, a: FieldElement, b: FieldElement | int | None = None) -> FieldElement:
    """Apply ``op`` in {add, sub, mul, neg, inv, pow}; ``pow`` takes an integer exponent."""
    if a.field != spec:
        raise FieldError(f"element belongs to {a.field!r}, not {spec!r}")
    if op in _BINARY:
        if not isinstance(b, FieldElement):
            raise FieldError(f"{op} needs a second field element")
        if b.field != spec:
            raise FieldError(f"element belongs to {b.field!r}, not {spec!r}")
        return FieldElement(spec, getattr(spec, op)(a.value, b.value))
    if op == "neg":
        return FieldElement(spec, spec.neg(a.value))
    if op == "inv":
        return FieldElement(spec, spec.inv(a.value))
    if op == "pow":
        if not isinstance(b, int) or isinstance(b, bool):
            raise FieldError("pow needs an integer exponent")
        return FieldElement(spec, spec.pow(a.value, b))
    raise FieldError(f"unknown operation {op!r}")


def enumerate_field(spec: FieldSpec) -> list[FieldElement]:
    return [FieldElement(spec, v) for v in spec.elements()]


def find_irreducible(spec: FieldSpec, k: int) -> tuple[int, ...]:
    """Smallest monic irreducible polynomial of degree ``k`` over ``spec``.

    Candidates are ordered by their low coefficients read as a base-q integer
    with x^{k-1} most significant; irreducibility is checked by trial
    division by every monic polynomial of degree 1..k//2.
    """
    if k < 1:
        raise FieldError(f"degree must be >= 1, got {k}")
    for candidate in _monic_polys(spec, k):
        if _is_irreducible(spec, candidate):
            return tuple(candidate)
    raise FieldError(f"no irreducible of degree {k} over {spec!r}")  # pragma: no cover


def field_to_json(spec: FieldSpec) -> dict:
    return {"p": spec.p, "m": spec.m, "modulus": list(spec.modulus)}


def field_from_json(data: dict) -> FieldSpec:
    try:
        p, m, modulus = int(data["p"]), int(data["m"]), data.get("modulus")
    except (KeyError, TypeError, ValueError) as exc:
        raise FieldError(f"malformed field record: {data!r}") from exc
    if m == 1:
        return make_field(p, 1)
    return make_field(p, m, modulus)
