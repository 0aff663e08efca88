"""Deliberately naive reference implementations used by the tests."""

from math import factorial


def matmul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def transpose(a):
    return [list(c) for c in zip(*a)]


def power(m, k):
    """M M^t M ... with k factors, by repeated multiplication."""
    m = [list(r) for r in m]
    mt = transpose(m)
    out = m
    for i in range(2, k + 1):
        out = matmul(out, mt if i % 2 == 0 else m)
    return out


def support(a):
    return {(i, j) for i, row in enumerate(a) for j, x in enumerate(row) if x}


def depth(m):
    """Least n >= 2 with supp(M^(n+1)) inside supp(M^(n-1))."""
    n = 2
    while True:
        if support(power(m, n + 1)) <= support(power(m, n - 1)):
            return n
        n += 1


def hook_dimension(lam):
    conj = [sum(1 for p in lam if p > j) for j in range(lam[0])] if lam else []
    hooks = 1
    for i, p in enumerate(lam):
        for j in range(p):
            hooks *= (p - j - 1) + (conj[j] - i - 1) + 1
    return factorial(sum(lam)) // hooks
