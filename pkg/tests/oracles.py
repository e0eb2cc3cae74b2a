"""Test-only reference implementations, written independently of the library code paths."""
from fractions import Fraction
from itertools import product
from math import gcd


def schoolbook_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i in range(len(a)):
        for j in range(len(b)):
            out[i + j] += a[i] * b[j]
    while out and out[-1] == 0:
        out.pop()
    return out


def partitions_in_box(rows, cols):
    """Number of partitions of d fitting in a rows x cols box, for every d."""
    counts = [0] * (rows * cols + 1)

    def walk(parts_left, max_part, total):
        counts[total] += 1
        if parts_left == 0:
            return
        for part in range(1, max_part + 1):
            walk(parts_left - 1, part, total + part)

    walk(rows, cols, 0)
    return counts


def gauss_by_partitions(r, k):
    """q-binomial in t (q = t^2) from the partition-counting definition."""
    counts = partitions_in_box(k, r - k)
    out = [0] * (2 * len(counts) - 1)
    for d, c in enumerate(counts):
        out[2 * d] = c
    return out


def gauss_other_pascal(r, k, _memo={}):
    """[r, k] = q^k [r-1, k] + [r-1, k-1], in t."""
    if k == 0 or k == r:
        return [1]
    key = (r, k)
    if key not in _memo:
        a = [0] * (2 * k) + gauss_other_pascal(r - 1, k)
        b = gauss_other_pascal(r - 1, k - 1)
        n = max(len(a), len(b))
        s = [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
        _memo[key] = s
    return _memo[key]


def signed_sums(alpha):
    """Every sum of +-alpha_i, brute force over all sign vectors."""
    alpha = [Fraction(a) for a in alpha]
    den = 1
    for a in alpha:
        den = den * a.denominator // gcd(den, a.denominator)
    ints = [int(a * den) for a in alpha]
    for signs in product((1, -1), repeat=len(ints)):
        yield Fraction(sum(s * a for s, a in zip(signs, ints)), den)


def naive_is_generic(alpha):
    return all(s != 0 for s in signed_sums(alpha))


def naive_margin(alpha):
    return min(abs(s) for s in signed_sums(alpha))
