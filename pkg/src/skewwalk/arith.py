"""Number theory for length composition.

All length-valued quantities are plain Python ints, so arbitrary precision
comes for free; the target lengths of interest reach 10**13 and beyond.
"""

from dataclasses import dataclass
from math import gcd

from .errors import GcdNotDividingError, NegativeWindingError


def minimal_nondivisor(ell):
    """Smallest integer k >= 3 that does not divide ell."""
    if ell < 1:
        raise ValueError("ell must be a positive integer")
    k = 3
    while ell % k == 0:
        k += 1
    return k


def is_prime_power(k):
    """True iff k = p**s for a prime p and s >= 1."""
    if k < 2:
        return False
    p = 2
    while p * p <= k:
        if k % p == 0:
            while k % p == 0:
                k //= p
            return k == 1
        p += 1
    return True  # k itself is prime


@dataclass(frozen=True)
class DivisibilityProfile:
    """A length together with its minimal non-divisor k >= 3.

    Invariants: k does not divide ell, every integer in [3, k-1] does, and
    k is consequently a prime power.
    """

    ell: int
    k: int

    @classmethod
    def from_length(cls, ell):
        k = minimal_nondivisor(ell)
        assert all(ell % i == 0 for i in range(3, k))
        assert is_prime_power(k), f"minimal non-divisor {k} is not a prime power"
        return cls(ell=ell, k=k)

    @property
    def in_large_length_regime(self):
        """True when k >= 7 and ell is large enough for the direct composer."""
        return self.k >= 7 and self.ell >= 10**7 * self.k**6


def _ext_gcd(a, b):
    """(g, x, y) with a*x + b*y = g = gcd(a, b)."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def bezout_qp(l1, l2):
    """Witnesses (h, q, p) with h = gcd(2*l1, l2), q*2*l1 + p*l2 = h, 0 <= q < l2.

    q is normalised to the smallest nonnegative representative, which keeps
    -p < 2*l1 as well.
    """
    if l1 < 1 or l2 < 1:
        raise ValueError("walk lengths must be positive")
    a = 2 * l1
    h, x, _ = _ext_gcd(a, l2)
    q = x % (l2 // h)
    p = (h - q * a) // l2
    return h, q, p


@dataclass(frozen=True)
class ComposerCertificate:
    """Arithmetic witnesses of a successful direct composition.

    Satisfies h = gcd(2*l1, l2), q*2*l1 + p*l2 = h with 0 <= q < l2, and
    u*l1 + v*l2 = ell_prime*h.
    """

    l1: int
    l2: int
    h: int
    p: int
    q: int
    ell_prime: int
    r: int
    u: int
    v: int

    @property
    def ell(self):
        return self.ell_prime * self.h

    def check(self):
        assert self.h == gcd(2 * self.l1, self.l2)
        assert self.q * 2 * self.l1 + self.p * self.l2 == self.h
        assert 0 <= self.q < self.l2
        assert -self.p < 2 * self.l1
        assert self.u >= 0 and self.v >= 0
        assert self.u * self.l1 + self.v * self.l2 == self.ell

    def to_json_dict(self):
        return {
            "l1": self.l1,
            "l2": self.l2,
            "h": self.h,
            "p": self.p,
            "q": self.q,
            "ell_prime": str(self.ell_prime),
            "r": str(self.r),
            "u": str(self.u),
            "v": str(self.v),
        }


def bezout_compose(l1, l2, ell):
    """Direct composition: winding counts (u, v) with u*l1 + v*l2 = ell.

    Requires h = gcd(2*l1, l2) to divide ell.  The computed pair always
    satisfies the length identity; it is returned only when both counts are
    nonnegative, which is guaranteed for ell >= 10**7 * k**6 over the walk
    lengths the search pipeline produces, but can fail for small ell
    (callers then fall back to solve_nonneg).
    """
    if l1 < 1 or l2 < 1:
        raise ValueError("walk lengths must be positive")
    h = gcd(2 * l1, l2)
    if ell % h:
        raise GcdNotDividingError(f"h={h} does not divide ell={ell}")
    h, q, p = bezout_qp(l1, l2)
    ell_prime = ell // h
    period = 2 * l1 + l2
    r = ell_prime // period
    rem = ell_prime - period * r
    u = 2 * r * h + rem * 2 * q
    v = r * h + rem * p
    # the identity holds unconditionally, even when v < 0
    assert u * l1 + v * l2 == ell
    if u < 0 or v < 0:
        raise NegativeWindingError(u, v)
    return ComposerCertificate(
        l1=l1, l2=l2, h=h, p=p, q=q, ell_prime=ell_prime, r=r, u=u, v=v
    )


def solve_nonneg(l1, l2, ell):
    """Smallest-v nonnegative solution of u*l1 + v*l2 = ell, or None.

    Runs in O(log) arithmetic steps via modular inversion; never iterates
    over ell.
    """
    if l1 < 1 or l2 < 1:
        raise ValueError("walk lengths must be positive")
    if ell < 1:
        return None
    g = gcd(l1, l2)
    if ell % g:
        return None
    a, b, e = l1 // g, l2 // g, ell // g
    v = (e * pow(b, -1, a)) % a if a > 1 else 0
    u = (e - v * b) // a
    if u < 0:
        return None
    return u, v
