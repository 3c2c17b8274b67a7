"""Double-double (compensated) arithmetic primitives.

A double-double value is a pair (hi, lo) of floats with hi + lo representing
the value and |lo| <= 0.5 ulp(hi), giving ~31 significant decimal digits.
Only the handful of operations needed for compensated series summation are
provided.  All functions accept plain floats or numpy arrays elementwise;
no fma is assumed (Dekker splitting is used for the exact product).

The splitting constant limits operands to |a| < 2^996; series terms here
stay far below that.
"""

_SPLIT = 134217729.0  # 2**27 + 1


def two_sum(a, b):
    """s, e with s = fl(a+b) and s + e == a + b exactly."""
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def quick_two_sum(a, b):
    """As two_sum but requires |a| >= |b|."""
    s = a + b
    return s, b - (s - a)


def two_prod(a, b):
    """p, e with p = fl(a*b) and p + e == a * b exactly."""
    p = a * b
    c = _SPLIT * a
    ah = c - (c - a)
    al = a - ah
    c = _SPLIT * b
    bh = c - (c - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def dd_add(ahi, alo, bhi, blo):
    s, e = two_sum(ahi, bhi)
    e = e + alo + blo
    return quick_two_sum(s, e)


def dd_mul(ahi, alo, bhi, blo):
    p, e = two_prod(ahi, bhi)
    e = e + ahi * blo + alo * bhi
    return quick_two_sum(p, e)


def dd_mul_d(ahi, alo, b):
    """Double-double times plain double."""
    p, e = two_prod(ahi, b)
    e = e + alo * b
    return quick_two_sum(p, e)
