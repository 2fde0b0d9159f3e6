"""Exact rational arithmetic for all geometric predicates.

Backed by gmpy2.mpq when available (C speed), falling back to
fractions.Fraction. Both are canonically normalized (reduced, positive
denominator) and hashable with the standard numeric hash, so rationals can
key the vertex maps in the overlay machinery and compare across backends.

JSON form: the string "p" for integers, "p/q" otherwise; plain ints are
accepted on input. Round-trips are bit-exact; floats are rejected rather
than approximated.
"""

from __future__ import annotations

from typing import Union

try:
    from gmpy2 import mpq as _mpq

    Rational = type(_mpq(0))

    def rational(num: Union[int, str, "Rational"], den: Union[int, None] = None) -> "Rational":
        if den is None:
            return _mpq(num)
        return _mpq(num, den)

except ImportError:  # pragma: no cover - only without gmpy2 installed
    from fractions import Fraction as _Fraction

    Rational = _Fraction

    def rational(num, den=None):
        if den is None:
            return _Fraction(num)
        return _Fraction(num, den)


RAT0 = rational(0)
RAT1 = rational(1)


def is_rational(value) -> bool:
    return isinstance(value, (Rational, int))


def rational_to_json(value) -> str:
    value = rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rational_from_json(data) -> "Rational":
    if isinstance(data, bool):
        raise ValueError(f"expected rational, got boolean {data!r}")
    if isinstance(data, int):
        return rational(data)
    if isinstance(data, str):
        try:
            return rational(data)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed rational string {data!r}") from exc
    raise ValueError(f"expected int or 'p/q' string, got {type(data).__name__}")
