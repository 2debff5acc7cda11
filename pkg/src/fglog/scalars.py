"""Exact rational scalars.

The whole kernel computes over arbitrary-precision rationals. gmpy2.mpq is
used when available (noticeably faster on the dense series benchmarks) with
fractions.Fraction as the portable fallback; both share the numeric protocol
the kernel relies on (exact +, *, /, **, comparison against int).
"""

from fractions import Fraction

try:
    from gmpy2 import mpq as Q  # type: ignore[import-not-found]

    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - exercised only without gmpy2
    Q = Fraction
    HAVE_GMPY2 = False

ZERO = Q(0)
ONE = Q(1)


def rational(value):
    """Coerce an int, Fraction, mpq or 'p/q' string to the scalar type."""
    if isinstance(value, str):
        return parse_rational(value)
    return Q(value)


def parse_rational(text):
    """Parse 'p' or 'p/q' with optional sign and surrounding whitespace."""
    body = text.strip()
    num, sep, den = body.partition("/")
    try:
        if sep:
            return Q(int(num), int(den))
        return Q(int(body))
    except (ValueError, ZeroDivisionError) as exc:
        from .errors import ParseError

        raise ParseError(f"invalid rational {text!r}") from exc


def format_rational(q):
    """Canonical 'p' or 'p/q' string (q > 0, gcd reduced by construction)."""
    num, den = q.numerator, q.denominator
    if den == 1:
        return str(num)
    return f"{num}/{den}"
