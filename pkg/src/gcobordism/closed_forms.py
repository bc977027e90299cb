"""Divisor functions and closed forms for r on cyclic and elementary abelian groups."""


def divisors(n):
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def tau(n):
    """Number of divisors."""
    return len(divisors(n))


def sigma(n):
    """Sum of divisors."""
    return sum(divisors(n))


def is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _check_prime(p):
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def r_elementary_abelian(p, n):
    """r(Z_p^n) = (p^(2n-1) + p^(n+1) - p^(n-1) + p^2 - p - 1) / (p^2 - 1)."""
    _check_prime(p)
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return 1
    num = p ** (2 * n - 1) + p ** (n + 1) - p ** (n - 1) + p * p - p - 1
    q, rem = divmod(num, p * p - 1)
    assert rem == 0, (p, n, num)
    return q


def f_increment(p, n):
    """
    F(n) = r(Z_p^(n+1)) - r(Z_p^n) = p^(n-1) (p^n + p - 1), with F(0) = 1.

    Asserts the recurrence F(n) = p F(n-1) + p^(2n-2) (p-1) and the
    telescoping difference of ``r_elementary_abelian``.
    """
    _check_prime(p)
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        value = 1
    else:
        value = p ** (n - 1) * (p ** n + p - 1)
        assert value == p * f_increment(p, n - 1) + p ** (2 * n - 2) * (p - 1)
    assert value == r_elementary_abelian(p, n + 1) - r_elementary_abelian(p, n)
    return value


def f_recurrence(p, n):
    """F(n) computed only from the recurrence, starting at F(0) = 1."""
    f = 1
    for i in range(1, n + 1):
        f = p * f + p ** (2 * i - 2) * (p - 1)
    return f


def z2_sequence(n):
    """(2^n + 1)(2^(n-1) + 1) / 3: 2, 5, 15, 51, 187, 715, ..."""
    if n < 1:
        raise ValueError("n must be >= 1")
    q, rem = divmod((2 ** n + 1) * (2 ** (n - 1) + 1), 3)
    assert rem == 0
    return q

