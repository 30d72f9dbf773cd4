class SolenoidError(ValueError):
    """Base class for invalid inputs rejected by the library."""


class PrimeMismatch(SolenoidError):
    pass


class SymbolMismatch(SolenoidError):
    """Two distinct irrational symbols met in one computation."""


class UndecidableSign(SolenoidError):
    """The stored approximant of a symbol is too coarse to settle a sign or floor."""


class NotPrime(SolenoidError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def check_prime(p: int) -> int:
    if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
        raise NotPrime(f"p must be prime (composite bases are out of scope), got {p!r}")
    return p


def same_prime(a: int, b: int) -> int:
    if a != b:
        raise PrimeMismatch(f"prime mismatch: {a} vs {b}")
    return a
