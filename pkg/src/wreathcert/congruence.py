"""Norm congruences along the orbit of 1, and Wieferich machinery.

The headline congruence: the absolute norm of every iterate of 1 under
phi is congruent to 2^p - 1 modulo p^2.  It is checked directly along
the orbit (norm_congruence_check) and in the generalized form for
random points congruent to 1 mod (1 - zeta) (general_congruence_check).

Wieferich primes (2^(p-1) = 1 mod p^2) are the one hypothesis the
certificate pipeline cannot discharge; wieferich_check / wieferich_scan
cover them, and wief_equivalence_check ties the Wieferich condition to
2^p - 1 being a p-th power mod p^2, cross-checked against brute-force
enumeration at small p.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import CycInt, one_minus_zeta, require_odd_prime, require_ring_prime
from .dynamics import DEFAULT_MAX_COEFF_BITS, orbit_points, phi
from .errors import SizeLimitError

PASS = "PASS"
FAIL = "FAIL"
ABORTED = "ABORTED"


def expected_residue(p: int) -> int:
    """(2^p - 1) mod p^2, the constant every orbit norm must hit."""
    require_odd_prime(p)
    return (2**p - 1) % p**2


@dataclass(frozen=True)
class CongruenceItem:
    index: int  # iterate level, or trial number
    residue: int | None
    status: str
    note: str = ""


@dataclass(frozen=True)
class CongruenceReport:
    p: int
    expected: int
    mode: str  # "orbit-norms" or "randomized-lift"
    seed: int | None
    coeff_bound: int | None
    items: tuple[CongruenceItem, ...]
    passed: bool


def norm_congruence_check(
    p: int,
    n_max: int,
    *,
    max_coeff_bits: int = DEFAULT_MAX_COEFF_BITS,
) -> CongruenceReport:
    """Check norm(phi^n(1)) mod p^2 for n = 1..n_max.

    A size-cap abort is recorded on the level that hit it; later levels
    are skipped rather than guessed at.
    """
    require_ring_prime(p)
    if n_max < 1:
        raise ValueError("need n_max >= 1")
    want = expected_residue(p)
    p2 = p * p
    items: list[CongruenceItem] = []
    points = orbit_points(p, CycInt.one(p), n_max, max_coeff_bits=max_coeff_bits)
    n = 0
    while n < n_max:
        n += 1
        try:
            x = next(points)
        except SizeLimitError as exc:
            items.append(CongruenceItem(n, None, ABORTED, str(exc)))
            break
        residue = x.norm() % p2
        items.append(CongruenceItem(n, residue, PASS if residue == want else FAIL))
    return CongruenceReport(
        p=p,
        expected=want,
        mode="orbit-norms",
        seed=None,
        coeff_bound=None,
        items=tuple(items),
        passed=all(item.status == PASS for item in items) and len(items) == n_max,
    )


def general_congruence_check(
    p: int,
    trials: int,
    coeff_bound: int,
    seed: int,
) -> CongruenceReport:
    """Check norm(phi(x)) mod p^2 for random x congruent to 1 mod (1 - zeta).

    Samples x = 1 + (1 - zeta) * r with the coordinates of r uniform in
    [-coeff_bound, coeff_bound], reproducibly from the seed.
    """
    require_ring_prime(p)
    if trials < 1:
        raise ValueError("need trials >= 1")
    if coeff_bound < 1:
        raise ValueError("need coeff_bound >= 1")
    want = expected_residue(p)
    p2 = p * p
    f = phi(p)
    pi = one_minus_zeta(p)
    one = CycInt.one(p)
    rng = random.Random(seed)
    items = []
    for t in range(1, trials + 1):
        r = CycInt(p, [rng.randint(-coeff_bound, coeff_bound) for _ in range(p - 1)])
        x = one + pi * r
        residue = f(x).norm() % p2
        items.append(CongruenceItem(t, residue, PASS if residue == want else FAIL))
    return CongruenceReport(
        p=p,
        expected=want,
        mode="randomized-lift",
        seed=seed,
        coeff_bound=coeff_bound,
        items=tuple(items),
        passed=all(item.status == PASS for item in items),
    )


# -- Wieferich primes ---------------------------------------------------


def wieferich_check(p: int) -> bool:
    """True iff 2^(p-1) = 1 mod p^2.  Works for any odd prime."""
    require_odd_prime(p)
    return pow(2, p - 1, p * p) == 1


def _odd_primes_up_to(limit: int) -> list[int]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for q in range(2, int(limit**0.5) + 1):
        if sieve[q]:
            start = q * q
            sieve[start :: q] = b"\x00" * ((limit - start) // q + 1)
    return [q for q in range(3, limit + 1) if sieve[q]]


def wieferich_scan(limit: int) -> list[int]:
    """All Wieferich primes up to limit, ascending."""
    if limit < 3:
        raise ValueError("need limit >= 3")
    return [q for q in _odd_primes_up_to(limit) if pow(2, q - 1, q * q) == 1]


# -- p-th powers mod p^2 -------------------------------------------------


def is_pth_power_mod_p2(a: int, p: int) -> bool:
    """Decide whether a is a p-th power mod p^2 (fast criterion).

    The unit group mod p^2 is cyclic of order p(p-1), so a unit is a
    p-th power exactly when its (p-1)-st power is 1; a multiple of p is
    a p-th power exactly when it is 0 mod p^2.
    """
    require_odd_prime(p)
    a %= p * p
    if a % p == 0:
        return a == 0
    return pow(a, p - 1, p * p) == 1


def is_pth_power_mod_p2_bruteforce(a: int, p: int) -> bool:
    """Enumeration oracle: try every residue x in [0, p^2)."""
    require_odd_prime(p)
    p2 = p * p
    a %= p2
    return any(pow(x, p, p2) == a for x in range(p2))


@lru_cache(maxsize=None)
def pth_power_residues_mod_p2(p: int) -> frozenset[int]:
    """The set {x^p mod p^2} over all residues x, enumerated once."""
    require_odd_prime(p)
    p2 = p * p
    return frozenset(pow(x, p, p2) for x in range(p2))


@dataclass(frozen=True)
class WiefEquivalenceReport:
    """Wieferich condition versus p-th-power condition on 2^p - 1."""

    p: int
    wieferich: bool
    pth_power: bool
    equivalent: bool
    enumeration_checked: bool
    enumeration_agrees: bool | None
    passed: bool


def wief_equivalence_check(p: int, *, enumeration_limit: int = 97) -> WiefEquivalenceReport:
    """Check: p Wieferich iff 2^p - 1 is a p-th power mod p^2.

    For p up to enumeration_limit, additionally sweep every residue
    class and compare the fast criterion with brute-force enumeration.
    """
    require_odd_prime(p)
    p2 = p * p
    wief = wieferich_check(p)
    pth = is_pth_power_mod_p2((2**p - 1) % p2, p)
    equivalent = wief == pth
    enum_checked = p <= enumeration_limit
    enum_agrees: bool | None = None
    if enum_checked:
        residues = pth_power_residues_mod_p2(p)
        enum_agrees = all(is_pth_power_mod_p2(a, p) == (a in residues) for a in range(p2))
    return WiefEquivalenceReport(
        p=p,
        wieferich=wief,
        pth_power=pth,
        equivalent=equivalent,
        enumeration_checked=enum_checked,
        enumeration_agrees=enum_agrees,
        passed=equivalent and enum_agrees is not False,
    )
