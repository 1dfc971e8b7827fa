"""Dimension formulas for free Lie algebras.

The degree-d homogeneous component of the free Lie algebra on g generators
has dimension (1/d) * sum over e | d of mu(e) * g^(d/e); a free nilpotent
algebra of class l is the sum of the first l components.
"""


def mobius(n):
    """Moebius function by trial factorization."""
    if n < 1:
        raise ValueError("argument must be positive")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def witt_dims(gens, max_degree):
    """Per-degree dimensions for degrees 1..max_degree."""
    if gens < 1 or max_degree < 1:
        raise ValueError("generator count and degree must be at least 1")
    out = []
    for d in range(1, max_degree + 1):
        total = 0
        for e in range(1, d + 1):
            if d % e == 0:
                total += mobius(e) * gens ** (d // e)
        assert total % d == 0
        out.append(total // d)
    return out


def free_nilpotent_dim(gens, nil_class):
    """Dimension of the free nilpotent Lie algebra of the given class."""
    return sum(witt_dims(gens, nil_class))
