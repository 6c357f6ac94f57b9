"""Exact Gaussian-rational scalars.

Every coefficient in the library is an element of sympy's ``QQ_I``. Its
elements compare unequal to plain ints, so zero tests use truthiness
(``not s``) and equality is only ever taken against other ``QQ_I`` values.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Any, Union

from sympy import QQ, QQ_I, binomial, ff

from .errors import HVError

Scalar = type(QQ_I.one)
ScalarLike = Union[int, str, Any]

ZERO = QQ_I.zero
ONE = QQ_I.one
IMAG = QQ_I(0, 1)

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")
_TERM_RE = re.compile(r"([+-]?)(\d+(?:/\d+)?)?(\*?i)?")


class ScalarParseError(HVError, ValueError):
    """Raised when a scalar string is not an exact Gaussian rational."""

    def __init__(self, message: str, column: int = 1):
        super().__init__(message)
        self.column = column


def rational(value: Any):
    """Convert an int, "p/q" string or QQ element into QQ."""
    if isinstance(value, str):
        match = _RATIONAL_RE.match(value.strip())
        if not match:
            raise ScalarParseError(f"invalid rational {value!r}")
        num, den = match.group(1), match.group(2)
        if den is not None and int(den) == 0:
            raise ScalarParseError(f"zero denominator in {value!r}")
        return QQ(int(num), int(den) if den else 1)
    if isinstance(value, bool):
        raise ScalarParseError(f"invalid rational {value!r}")
    if isinstance(value, int):
        return QQ(value)
    return QQ.convert(value)


def scalar(re_part: Any = 0, im_part: Any = 0) -> Scalar:
    """Build a Gaussian rational from its real and imaginary parts."""
    if isinstance(re_part, Scalar) and not im_part:
        return re_part
    return QQ_I(rational(re_part), rational(im_part))


def parse_scalar(text: ScalarLike) -> Scalar:
    """Parse "p/q", "p/q+r/s*i", "-i", ... into a Scalar."""
    if isinstance(text, Scalar):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return scalar(text)
    source = str(text).replace(" ", "")
    if not source:
        raise ScalarParseError("empty scalar")
    re_part, im_part = QQ(0), QQ(0)
    pos = 0
    while pos < len(source):
        match = _TERM_RE.match(source, pos)
        sign, number, imag = match.groups()
        if match.end() == pos or (number is None and imag is None):
            raise ScalarParseError(f"invalid scalar {text!r}", column=pos + 1)
        if pos > 0 and not sign:
            raise ScalarParseError(f"missing sign between terms in {text!r}", column=pos + 1)
        value = rational(number) if number is not None else QQ(1)
        if sign == "-":
            value = -value
        if imag:
            im_part += value
        else:
            re_part += value
        pos = match.end()
    return QQ_I(re_part, im_part)


def conj(s: Scalar) -> Scalar:
    return QQ_I(s.x, -s.y)


def is_real(s: Scalar) -> bool:
    return not s.y


def real_part(s: Scalar):
    return s.x


def format_rational(q) -> str:
    """Lowest-terms "p/q" with q > 0; integers print without a denominator."""
    num, den = int(q.numerator), int(q.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def scalar_to_json(s: Scalar) -> dict[str, str]:
    return {"re": format_rational(s.x), "im": format_rational(s.y)}


def scalar_from_json(data: dict[str, str]) -> Scalar:
    return scalar(data.get("re", "0"), data.get("im", "0"))


def scalar_to_text(s: Scalar) -> str:
    if not s.y:
        return format_rational(s.x)
    im = "i" if s.y == 1 else "-i" if s.y == -1 else f"{format_rational(s.y)}*i"
    if not s.x:
        return im
    return f"{format_rational(s.x)}{'' if im.startswith('-') else '+'}{im}"


@lru_cache(maxsize=4096)
def binom(n: int, k: int) -> int:
    """Binomial coefficient for any integer n; zero for k < 0."""
    if k < 0:
        return 0
    return int(binomial(n, k))


@lru_cache(maxsize=4096)
def falling(n: int, k: int) -> int:
    """Falling factorial n (n-1) ... (n-k+1)."""
    return int(ff(n, k))
