"""Small exact integer helpers: valuations, factorisation, inverses, CRT."""

from math import gcd, isqrt


def valuation(x: int, p: int) -> int:
    """Exponent of the prime ``p`` in the nonzero integer ``x``."""
    if x == 0:
        raise ValueError("valuation of 0 is undefined")
    x = abs(x)
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def strip(x: int, p: int) -> int:
    """Return the p-free part of ``x``, i.e. ``x / p**valuation(x, p)``."""
    return x // p ** valuation(x, p)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def primes_below(n: int) -> list[int]:
    return [p for p in range(2, n) if is_prime(p)]


def prime_factors(n: int) -> dict[int, int]:
    """Trial-division factorisation of ``n >= 1`` as ``{prime: exponent}``."""
    if n < 1:
        raise ValueError("expected a positive integer")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b)``."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def inverse_mod(a: int, m: int) -> int:
    if m == 1:
        return 0
    g, s, _ = egcd(a % m, m)
    if g != 1:
        raise ValueError("%d is not invertible modulo %d" % (a, m))
    return s % m


def crt(residues, moduli) -> tuple[int, int]:
    """Combine congruences ``x = r_i (mod m_i)`` for pairwise coprime moduli.

    Returns ``(x, M)`` with ``0 <= x < M`` and ``M`` the product of the moduli.
    """
    x, modulus = 0, 1
    for r, m in zip(residues, moduli):
        if gcd(modulus, m) != 1:
            raise ValueError("moduli must be pairwise coprime")
        # x + modulus*k = r (mod m)
        k = ((r - x) * inverse_mod(modulus, m)) % m
        x += modulus * k
        modulus *= m
    return x % modulus, modulus
