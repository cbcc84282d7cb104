"""The map phi(z) = (z - 1)^p + 2 - zeta and its iterates over Z[zeta_p].

Points are iterated by repeated Horner evaluation of phi; the expanded
n-th iterate is only ever built when explicitly requested, because its
degree is p^n while a point's coefficients merely grow p-fold per step.
Both directions carry explicit size caps (SizeLimitError) since growth
is doubly exponential in n.

Structural checks operationalized here:

* eisenstein_check: the expanded iterate is monic, every intermediate
  coefficient is divisible by p, and the constant term is exactly
  1 - zeta (so its valuation at the prime above p is 1).
* fixed_point_check: 1 - zeta is fixed by phi and is hit from 0 in one
  step, hence by every further iterate of 0.
* orbit_congruence_check: the forward orbit of 1 stays congruent to 1
  modulo the prime above p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .cyclotomic import CycInt, one_minus_zeta, require_ring_prime
from .errors import RingMismatchError, SizeLimitError

DEFAULT_MAX_COEFF_BITS = 1 << 20
DEFAULT_MAX_POLY_COEFFS = 10_000


class CycPoly:
    """Polynomial in z with CycInt coefficients, ascending, canonical."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs=()):
        require_ring_prime(p)
        coeffs = list(coeffs)
        for c in coeffs:
            if not isinstance(c, CycInt):
                raise TypeError("CycPoly coefficients must be CycInt")
            if c.p != p:
                raise RingMismatchError(f"coefficient ring Z[zeta_{c.p}] does not match p={p}")
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("CycPoly is immutable")

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def constant_term(self) -> CycInt:
        return self.coeffs[0] if self.coeffs else CycInt.zero(self.p)

    def leading_coefficient(self) -> CycInt:
        return self.coeffs[-1] if self.coeffs else CycInt.zero(self.p)

    def __eq__(self, other):
        if isinstance(other, CycPoly):
            return self.p == other.p and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        return f"CycPoly({self.p}, degree={self.degree})"

    def __call__(self, x: CycInt) -> CycInt:
        """Evaluate by Horner's rule."""
        if not isinstance(x, CycInt):
            raise TypeError("evaluation point must be a CycInt")
        if x.p != self.p:
            raise RingMismatchError(f"point in Z[zeta_{x.p}], polynomial over Z[zeta_{self.p}]")
        acc = CycInt.zero(self.p)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return CycPoly(self.p, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return CycPoly(self.p, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return CycPoly(self.p, ())
        out = [CycInt.zero(self.p)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return CycPoly(self.p, out)

    __rmul__ = __mul__

    def _coerce(self, other):
        if isinstance(other, CycPoly):
            if other.p != self.p:
                raise RingMismatchError(f"cannot combine polynomials over p={self.p} and p={other.p}")
            return other
        if isinstance(other, CycInt):
            return CycPoly(self.p, (other,))
        if isinstance(other, int) and not isinstance(other, bool):
            return CycPoly(self.p, (CycInt.from_int(self.p, other),))
        return None

    def _pow(self, e: int) -> CycPoly:
        result = CycPoly(self.p, (CycInt.one(self.p),))
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result


def phi(p: int) -> CycPoly:
    """The degree-p monic map (z - 1)^p + 2 - zeta over Z[zeta_p]."""
    require_ring_prime(p)
    coeffs = [one_minus_zeta(p)]  # (-1)^p + 2 - zeta
    for i in range(1, p + 1):
        c = math.comb(p, i)
        if (p - i) % 2:
            c = -c
        coeffs.append(CycInt.from_int(p, c))
    return CycPoly(p, coeffs)


def _coeff_bits(x: CycInt) -> int:
    return max((c.bit_length() for c in x.coeffs), default=0)


def orbit_points(
    p: int,
    x0: CycInt,
    n: int,
    *,
    max_coeff_bits: int = DEFAULT_MAX_COEFF_BITS,
) -> Iterator[CycInt]:
    """Yield phi^k(x0) for k = 1..n, guarding coefficient growth.

    Raises SizeLimitError before a step whose result would clearly
    exceed the cap (one step multiplies bit sizes by about p), or after
    a step that did.
    """
    require_ring_prime(p)
    if n < 1:
        raise ValueError("need n >= 1")
    if x0.p != p:
        raise RingMismatchError(f"start point lives in Z[zeta_{x0.p}], expected p={p}")
    f = phi(p)
    x = x0
    for _ in range(n):
        if (_coeff_bits(x) + 8) * p > max_coeff_bits:
            raise SizeLimitError(
                f"iterate coefficients near {_coeff_bits(x)} bits; next step would exceed "
                f"the {max_coeff_bits}-bit cap"
            )
        x = f(x)
        if _coeff_bits(x) > max_coeff_bits:
            raise SizeLimitError(f"iterate coefficients exceed the {max_coeff_bits}-bit cap")
        yield x


def iterate_point(
    p: int,
    n: int,
    x0: CycInt,
    *,
    max_coeff_bits: int = DEFAULT_MAX_COEFF_BITS,
) -> CycInt:
    """phi^n(x0) by repeated evaluation (never by expanding phi^n)."""
    x = x0
    for x in orbit_points(p, x0, n, max_coeff_bits=max_coeff_bits):
        pass
    return x


def max_feasible_poly_level(p: int, max_coeffs: int = DEFAULT_MAX_POLY_COEFFS) -> int:
    """Largest n whose expanded iterate fits in max_coeffs coefficients."""
    n = 0
    d = 1
    while d * p + 1 <= max_coeffs:
        d *= p
        n += 1
    return n


def iterate_poly(
    p: int,
    n: int,
    *,
    max_coeffs: int = DEFAULT_MAX_POLY_COEFFS,
) -> CycPoly:
    """The fully expanded n-th iterate of phi, of degree p^n."""
    require_ring_prime(p)
    if n < 1:
        raise ValueError("need n >= 1")
    if p**n + 1 > max_coeffs:
        raise SizeLimitError(
            f"degree p^n = {p}^{n} needs {p ** n + 1} coefficients, cap is {max_coeffs}"
        )
    tail = CycInt(p, (2, -1))  # 2 - zeta
    g = phi(p)
    for _ in range(n - 1):
        g = (g - 1)._pow(p) + tail
    return g


# -- structural fact checks --------------------------------------------


@dataclass(frozen=True)
class StructureReport:
    """Outcome of one structural check, with failures spelled out."""

    check: str
    p: int
    limit: int
    passed: bool
    failures: tuple[str, ...] = ()

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "REFUTED"


def eisenstein_check(
    p: int,
    n: int,
    *,
    max_coeffs: int = DEFAULT_MAX_POLY_COEFFS,
) -> StructureReport:
    """Check the expanded iterate is Eisenstein at the prime above p.

    Monic; every coefficient strictly between the constant and leading
    term has all basis coordinates divisible by p; the constant term is
    exactly 1 - zeta.
    """
    f = iterate_poly(p, n, max_coeffs=max_coeffs)
    failures = []
    if f.leading_coefficient() != 1:
        failures.append("leading coefficient differs from 1")
    if f.constant_term() != one_minus_zeta(p):
        failures.append("constant term differs from 1 - zeta")
    for i in range(1, f.degree):
        if any(c % p for c in f.coeffs[i].coeffs):
            failures.append(f"coefficient of z^{i} is not divisible by {p}")
    return StructureReport("eisenstein", p, n, not failures, tuple(failures))


def fixed_point_check(p: int, s_max: int) -> StructureReport:
    """Check that 1 - zeta absorbs the orbit of 0."""
    require_ring_prime(p)
    if s_max < 1:
        raise ValueError("need s_max >= 1")
    f = phi(p)
    target = one_minus_zeta(p)
    failures = []
    if f(CycInt.zero(p)) != target:
        failures.append("phi(0) differs from 1 - zeta")
    if f(target) != target:
        failures.append("1 - zeta is not a fixed point of phi")
    x = CycInt.zero(p)
    for s in range(1, s_max + 1):
        x = f(x)
        if x != target:
            failures.append(f"iterate {s} of 0 differs from 1 - zeta")
    return StructureReport("fixed_point", p, s_max, not failures, tuple(failures))


def orbit_congruence_check(p: int, t_max: int) -> StructureReport:
    """Check phi^t(1) stays congruent to 1 mod (1 - zeta), t = 0..t_max."""
    require_ring_prime(p)
    if t_max < 0:
        raise ValueError("need t_max >= 0")
    f = phi(p)
    one = CycInt.one(p)
    failures = []
    x = one
    for t in range(t_max + 1):
        if t:
            x = f(x)
        if not x.congruent_mod_pi(one):
            failures.append(f"iterate {t} of 1 is not congruent to 1 mod (1 - zeta)")
    return StructureReport("orbit_congruence", p, t_max, not failures, tuple(failures))
