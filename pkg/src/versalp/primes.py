"""Small prime utilities shared by the enumeration modules."""


def is_prime(n: int) -> bool:
    """Trial division; the primes used here are tiny, speed is irrelevant.

    >>> [k for k in range(20) if is_prime(k)]
    [2, 3, 5, 7, 11, 13, 17, 19]
    """
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def require_prime(p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"expected a prime, got {p}")
    return p
