"""Exact arithmetic in the ring of integers Z[zeta_p], p an odd prime.

Elements are stored in the power basis {1, zeta, ..., zeta^(p-2)} as a
tuple of p-1 arbitrary-precision integers, always fully reduced: a
zeta^(p-1) term is eliminated through zeta^(p-1) = -(1 + zeta + ... +
zeta^(p-2)), so equality is a plain vector comparison.

The absolute norm is available through two independent algorithms:

* CycInt.norm() computes the resultant of the p-th cyclotomic
  polynomial with the element's representative polynomial, by a
  multi-modular CRT scheme over word-size primes.
* CycInt.norm_via_conjugates() multiplies all Galois conjugates inside
  the ring and reads off the rational constant.

Both are exact; tests cross-check one against the other.

The prime ideal generated by (1 - zeta) is the unique prime above p
(p factors as its (p-1)-st power).  Divisibility by (1 - zeta) is
decided through the complement product prod_{k=2}^{p-1} (1 - zeta^k):
multiplying by it turns division by (1 - zeta) into division of every
coordinate by p, because the full product over k = 1..p-1 equals p.

All values are immutable; every operation returns a new element.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .errors import RingMismatchError
from .factoring import is_prime

# Ring degree is p-1; construction rejects larger primes so vector
# sizes stay sane.  Pure-integer checks (Wieferich etc.) do not go
# through this bound.
MAX_RING_PRIME = 101


@lru_cache(maxsize=None)
def require_odd_prime(p: int) -> int:
    """Validate that p is an odd prime (deterministically); return it."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise TypeError(f"prime must be an int, got {type(p).__name__}")
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    return p


def require_ring_prime(p: int) -> int:
    """Validate p for ring arithmetic: odd prime and <= MAX_RING_PRIME."""
    require_odd_prime(p)
    if p > MAX_RING_PRIME:
        raise ValueError(f"ring arithmetic supports p <= {MAX_RING_PRIME}, got {p}")
    return p


class CycInt:
    """An element of Z[zeta_p] in canonical power-basis form."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs=()):
        """Build from raw coefficients for zeta^0..zeta^(p-1).

        Accepts up to p entries; a zeta^(p-1) entry is folded into the
        stored p-1 coordinates.  Longer input is rejected.
        """
        require_ring_prime(p)
        raw = list(coeffs)
        if len(raw) > p:
            raise ValueError(f"got {len(raw)} coefficients, at most {p} allowed for p={p}")
        for c in raw:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"coefficients must be ints, got {type(c).__name__}")
        raw.extend([0] * (p - len(raw)))
        top = raw[p - 1]
        if top:
            stored = tuple(c - top for c in raw[: p - 1])
        else:
            stored = tuple(raw[: p - 1])
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", stored)

    def __setattr__(self, name, value):
        raise AttributeError("CycInt is immutable")

    # -- constructors ------------------------------------------------

    @classmethod
    def from_int(cls, p: int, value: int) -> CycInt:
        return cls(p, (value,))

    @classmethod
    def zero(cls, p: int) -> CycInt:
        return cls.from_int(p, 0)

    @classmethod
    def one(cls, p: int) -> CycInt:
        return cls.from_int(p, 1)

    # -- basic protocol ----------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, CycInt):
            return self.p == other.p and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        return f"CycInt({self.p}, {list(self.coeffs)})"

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                power = "zeta" if i == 1 else f"zeta^{i}"
                body = power if abs(c) == 1 else f"{abs(c)}*{power}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts) if parts else "0"

    def _coerce(self, other):
        if isinstance(other, CycInt):
            if other.p != self.p:
                raise RingMismatchError(f"cannot combine Z[zeta_{self.p}] with Z[zeta_{other.p}]")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return CycInt.from_int(self.p, other)
        return None

    # -- ring operations ---------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CycInt(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CycInt(self.p, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return CycInt(self.p, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.p
        n = p - 1
        a, b = self.coeffs, other.coeffs
        prod = [0] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        # exponents >= p wrap around through zeta^p = 1
        for e in range(p, 2 * n - 1):
            prod[e - p] += prod[e]
        return CycInt(p, prod[:p])

    __rmul__ = __mul__

    # -- Galois action ------------------------------------------------

    def conjugate(self, k: int) -> CycInt:
        """Apply the automorphism zeta -> zeta^k (k coprime to p)."""
        k %= self.p
        if k == 0:
            raise ValueError("automorphism index must be nonzero mod p")
        raw = [0] * self.p
        for i, c in enumerate(self.coeffs):
            if c:
                raw[i * k % self.p] += c
        return CycInt(self.p, raw)

    # -- norms ---------------------------------------------------------

    def norm(self) -> int:
        """Absolute norm, as the resultant with the p-th cyclotomic polynomial.

        Computed by CRT over word-size primes; the modulus is grown past
        twice an a-priori bound on |N|, so the lift is exact.
        """
        if self.is_zero():
            return 0
        p = self.p
        size = sum(abs(c) for c in self.coeffs)
        bound = size ** (p - 1)  # |A(zeta^k)| <= sum |c_i| for every conjugate
        residues: list[int] = []
        moduli: list[int] = []
        modulus = 1
        for q in _crt_primes():
            residues.append(_resultant_with_cyclotomic(self.coeffs, p, q))
            moduli.append(q)
            modulus *= q
            if modulus > 2 * bound:
                break
        return _crt_lift(residues, moduli, modulus)

    def norm_via_conjugates(self) -> int:
        """Absolute norm as the in-ring product of all Galois conjugates.

        Independent of norm(); the reduced product must be a rational
        integer, anything else indicates an arithmetic bug.
        """
        acc = CycInt.one(self.p)
        for k in range(1, self.p):
            acc = acc * self.conjugate(k)
        if any(acc.coeffs[1:]):
            raise AssertionError(f"conjugate product is not rational: {acc!r}")
        return acc.coeffs[0]

    # -- the prime above p ---------------------------------------------

    def divide_by_pi(self) -> CycInt | None:
        """Exact quotient by (1 - zeta), or None when not divisible.

        Multiplies by the complement product of the other (1 - zeta^k)
        factors; divisibility then shows up as every coordinate being
        divisible by p.
        """
        p = self.p
        if sum(self.coeffs) % p:
            # image under zeta -> 1 is nonzero mod p, so not in the ideal
            return None
        prod = self * _pi_complement(p)
        if any(c % p for c in prod.coeffs):
            raise AssertionError("residue test and complement division disagree")
        return CycInt(p, tuple(c // p for c in prod.coeffs))

    def pi_valuation(self) -> int | float:
        """Exact (1 - zeta)-adic valuation; math.inf for zero."""
        if self.is_zero():
            return math.inf
        v = 0
        x = self
        while True:
            y = x.divide_by_pi()
            if y is None:
                return v
            v += 1
            x = y

    def congruent_mod_pi(self, other) -> bool:
        """True when self - other lies in the ideal (1 - zeta)."""
        other = self._coerce(other)
        if other is None:
            raise TypeError("expected a ring element or int")
        return sum(a - b for a, b in zip(self.coeffs, other.coeffs)) % self.p == 0


def zeta(p: int, k: int = 1) -> CycInt:
    """The root of unity zeta_p^k as a ring element."""
    require_ring_prime(p)
    raw = [0] * p
    raw[k % p] = 1
    return CycInt(p, raw)


def one_minus_zeta(p: int) -> CycInt:
    """Generator of the unique prime ideal above p."""
    return CycInt(p, (1, -1))


@lru_cache(maxsize=None)
def _pi_complement(p: int) -> CycInt:
    """prod_{k=2}^{p-1} (1 - zeta^k); times (1 - zeta) this equals p."""
    acc = CycInt.one(p)
    for k in range(2, p):
        acc = acc * (CycInt.one(p) - zeta(p, k))
    return acc


# -- multi-modular resultant machinery --------------------------------

_CRT_PRIME_CACHE: list[int] = []
_CRT_PRIME_FLOOR = (1 << 61) - 1


def _crt_primes():
    """Yield a deterministic stream of word-size primes, largest first."""
    i = 0
    while True:
        while i >= len(_CRT_PRIME_CACHE):
            _extend_crt_primes()
        yield _CRT_PRIME_CACHE[i]
        i += 1


def _extend_crt_primes() -> None:
    q = (_CRT_PRIME_CACHE[-1] if _CRT_PRIME_CACHE else _CRT_PRIME_FLOOR + 2) - 2
    while not is_prime(q):
        q -= 2
    _CRT_PRIME_CACHE.append(q)


def _resultant_with_cyclotomic(coeffs, p: int, q: int) -> int:
    """Res(Phi_p, A) mod q, A the representative polynomial of coeffs.

    Phi_p stays monic of full degree mod any q, so the reduction of the
    integer resultant equals the resultant of the reductions; the value
    is the product of A over the roots of Phi_p, computed by a monic
    Euclidean remainder cascade.
    """
    f = [1] * p  # Phi_p = 1 + x + ... + x^(p-1)
    g = [c % q for c in coeffs]
    res = 1
    while True:
        while g and g[-1] == 0:
            g.pop()
        n = len(f) - 1
        if not g:
            return 0 if n >= 1 else res
        if n == 0:
            return res
        m = len(g) - 1
        if m == 0:
            return res * pow(g[0], n, q) % q
        b = g[-1]
        res = res * pow(b, n, q) % q
        if (n & 1) and (m & 1):
            res = q - res if res else 0
        inv = pow(b, -1, q)
        gm = [x * inv % q for x in g]
        r = list(f)
        for i in range(n - m, -1, -1):
            c = r[i + m]
            if c:
                r[i + m] = 0
                for j in range(m):
                    r[i + j] = (r[i + j] - c * gm[j]) % q
        del r[m:]
        f, g = gm, r


def _crt_lift(residues, moduli, modulus: int) -> int:
    """Symmetric CRT lift of residues to (-modulus/2, modulus/2)."""
    x = 0
    for r, q in zip(residues, moduli):
        mq = modulus // q
        x += r * mq * pow(mq, -1, q)
    x %= modulus
    if 2 * x > modulus:
        x -= modulus
    return x
