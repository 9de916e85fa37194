"""secp256k1 group arithmetic: the algebra every key, tweak and signature lives in.

Points are affine ``(x, y)`` tuples with ``None`` as the identity element.
All functions are pure and operate on immutable values, so they are safe to
call from any thread.

WARNING: this is a simulator-grade implementation.  Nothing here is
constant-time; scalar multiplications leak timing information about their
operands.  Do not reuse for real funds.
"""

from typing import Optional, Tuple

# Curve y^2 = x^3 + 7 over F_P; group order Q; generator G.
P = 0xFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFEFFFFFC2F
Q = 0xFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFEBAAEDCE6AF48A03BBFD25E8CD0364141
G = (
    0x79BE667EF9DCBBAC55A06295CE870B07029BFCDB2DCE28D959F2815B16F81798,
    0x483ADA7726A3C4655DA4FBFC0E1108A8FD17B448A68554199C47D08FFB10D4B8,
)

Point = Optional[Tuple[int, int]]

IDENTITY: Point = None


def is_on_curve(point: Point) -> bool:
    """True for the identity and for affine points satisfying y^2 = x^3 + 7."""
    if point is None:
        return True
    x, y = point
    if not (0 <= x < P and 0 <= y < P):
        return False
    return (y * y - x * x * x - 7) % P == 0


def point_add(a: Point, b: Point) -> Point:
    """Group addition; handles identity, doubling and inverse pairs."""
    if a is None:
        return b
    if b is None:
        return a
    if a[0] == b[0] and (a[1] + b[1]) % P == 0:
        return None
    if a == b:
        lam = (3 * a[0] * a[0]) * pow(2 * a[1], P - 2, P) % P
    else:
        lam = (b[1] - a[1]) * pow(b[0] - a[0], P - 2, P) % P
    x3 = (lam * lam - a[0] - b[0]) % P
    y3 = (lam * (a[0] - x3) - a[1]) % P
    return (x3, y3)


def point_negate(a: Point) -> Point:
    if a is None:
        return None
    return (a[0], (P - a[1]) % P)


def scalar_mul(k: int, point: Point) -> Point:
    """k * point via a fixed 256-iteration double-and-add ladder.

    The ladder always walks all 256 bit positions regardless of k, so the
    loop structure does not depend on the scalar (the branch on each bit
    still does; see the module warning).  scalar_mul(0, P) is the identity.
    """
    k %= Q
    result: Point = None
    addend = point
    for _ in range(256):
        if k & 1:
            result = point_add(result, addend)
        addend = point_add(addend, addend)
        k >>= 1
    return result


# 4-bit fixed-base windows for G, built lazily: _G_WINDOWS[w][j] = (j << 4w) * G.
_G_WINDOWS: list = []


def _build_g_windows() -> None:
    base: Point = G
    for _ in range(64):
        row = [None] * 16
        acc: Point = None
        for j in range(1, 16):
            acc = point_add(acc, base)
            row[j] = acc
        _G_WINDOWS.append(row)
        base = point_add(acc, base)  # base * 16


def generator_mul(k: int) -> Point:
    """k * G through precomputed 4-bit windows; same result as scalar_mul(k, G)."""
    if not _G_WINDOWS:
        _build_g_windows()
    k %= Q
    result: Point = None
    for w in range(64):
        nibble = (k >> (4 * w)) & 0xF
        if nibble:
            result = point_add(result, _G_WINDOWS[w][nibble])
    return result


def serialize_point(point: Point) -> bytes:
    """33-byte compressed encoding: parity prefix 0x02/0x03 then big-endian x."""
    if point is None:
        raise ValueError("identity point has no serialization")
    x, y = point
    return bytes([0x02 + (y & 1)]) + x.to_bytes(32, "big")


def deserialize_point(data: bytes) -> Point:
    """Parse a compressed point, validating curve membership.

    Rejects malformed prefixes and x coordinates without a square y^2, so
    invalid points cannot be injected into escrow-key derivation.
    """
    if len(data) != 33:
        raise ValueError(f"compressed point must be 33 bytes, got {len(data)}")
    prefix = data[0]
    if prefix not in (0x02, 0x03):
        raise ValueError(f"invalid compressed-point prefix {prefix:#04x}")
    x = int.from_bytes(data[1:], "big")
    if x >= P:
        raise ValueError("x coordinate out of field range")
    y_sq = (x * x * x + 7) % P
    y = pow(y_sq, (P + 1) // 4, P)
    if y * y % P != y_sq:
        raise ValueError("x coordinate is not on the curve")
    if y & 1 != prefix & 1:
        y = P - y
    return (x, y)


def serialize_scalar(k: int) -> bytes:
    """32-byte big-endian encoding of a reduced scalar."""
    if not 0 <= k < Q:
        raise ValueError("scalar out of range")
    return k.to_bytes(32, "big")


def deserialize_scalar(data: bytes) -> int:
    if len(data) != 32:
        raise ValueError(f"scalar must be 32 bytes, got {len(data)}")
    k = int.from_bytes(data, "big")
    if k >= Q:
        raise ValueError("scalar not reduced mod group order")
    return k
