"""Exact integer helpers: primality, factorization, prime sets, primitive
prime divisors.

Everything is deterministic.  Primality uses a fixed Miller-Rabin witness
set, factorization uses trial division plus Brent's cycle method with a
deterministic parameter sweep, so repeated runs always agree.
"""

from __future__ import annotations

import math
from functools import lru_cache

# Strong-pseudoprime witnesses making Miller-Rabin deterministic for every
# n < 3.3e24.  That bound covers all integers handled here, in particular
# m**n - 1 over the exhaustive sweep m <= 50, n <= 12 (50**12 exceeds 2**64,
# so the more common 64-bit witness claim would not be enough).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test (exact for n < 3.3e24)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    """Some non-trivial factor of an odd composite n (Brent's variant).

    The polynomial constant c is swept in fixed order, so the factor found
    is a deterministic function of n.
    """
    for c in range(1, 10_000):
        y, m = 2, 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"factor search exhausted for {n}")


def _factor_into(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_brent(n)
    _factor_into(d, out)
    _factor_into(n // d, out)


@lru_cache(maxsize=8192)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as an ascending tuple of (prime, exp)."""
    if n < 1:
        raise ValueError(f"cannot factor {n}; need n >= 1")
    out: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            n //= p
            out[p] = out.get(p, 0) + 1
    _factor_into(n, out)
    return tuple(sorted(out.items()))


def prime_set(n: int) -> tuple[int, ...]:
    """Ascending tuple of the distinct primes dividing n (n >= 1).

    prime_set(1) is empty; n = 0 is rejected since every prime divides 0.
    """
    if n < 1:
        raise ValueError(f"prime_set needs n >= 1, got {n}")
    return tuple(p for p, _ in factorize(n))


def is_prime_power(n: int):
    """(t, a) with n == t**a and t prime, or None if n is not a prime power."""
    if n < 2:
        return None
    f = factorize(n)
    if len(f) != 1:
        return None
    return f[0]


def primitive_prime_divisors(m: int, n: int) -> tuple[int, ...]:
    """Primes q dividing m**n - 1 but no earlier m**b - 1 (1 <= b < n).

    Requires m, n >= 2.  The result can be empty; the two classical
    exceptional families fall out of the computation rather than a table.
    """
    if m < 2 or n < 2:
        raise ValueError(f"need m, n >= 2, got m={m}, n={n}")
    earlier = [m**b - 1 for b in range(1, n)]
    out = []
    for q in prime_set(m**n - 1):
        if all(e % q != 0 for e in earlier):
            out.append(q)
    return tuple(out)


def multiplicative_order(m: int, q: int) -> int:
    """Order of m in the unit group modulo a prime q."""
    if not is_prime(q):
        raise ValueError(f"modulus {q} is not prime")
    if m % q == 0:
        raise ValueError(f"{m} is not a unit modulo {q}")
    e = q - 1
    for p, _ in factorize(e):
        while e % p == 0 and pow(m, e // p, q) == 1:
            e //= p
    return e


def sqrt_mod(a: int, p: int) -> int:
    """One square root of a modulo an odd prime p (Tonelli-Shanks).

    Raises ValueError when a is a non-residue.  The companion root is p - r.
    """
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        raise ValueError(f"{a} is not a quadratic residue mod {p}")
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q = p - 1
    s = 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    mm, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        t2, i = t, 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (mm - i - 1), p)
        mm, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def least_prime_one_mod(e: int, above: int) -> int:
    """Smallest prime p with p ≡ 1 (mod e) and p > above."""
    k = max(above // e, 0) + 1
    while True:
        p = k * e + 1
        if p > above and is_prime(p):
            return p
        k += 1
