"""Text form of ring elements.

Gaussian ``a+bi``, golden ``a+bt``, cyclotomic ``c0+c1*x+c2*x^2+c3*x^3``.
Whitespace is ignored; golden entries may carry rational coefficients
(``1/2+1/2t``), which parse to :class:`QTau`.
"""

from fractions import Fraction
import re

from ..errors import DomainError
from .cyclotomic import CycloInt
from .gaussian import GaussInt
from .golden import QTau

_TERM = re.compile(r"([+-]?)(\d+(?:/\d+)?)?\*?([a-z]?)(?:\^(\d+))?")

SYMBOLS = {"gauss": "i", "golden": "t", "cyclo": "x"}


def parse_poly(text: str, symbol: str) -> dict:
    """Parse a sum of monomials in one symbol into ``{power: Fraction}``."""
    s = "".join(text.split())
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if not s:
        raise DomainError("empty element text")
    out = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise DomainError(f"cannot parse {text!r} near position {pos}")
        sign, coeff, sym, power = m.groups()
        if pos > 0 and not sign:
            raise DomainError(f"missing operator in {text!r}")
        if coeff is None and not sym:
            raise DomainError(f"dangling sign in {text!r}")
        if sym and sym != symbol:
            raise DomainError(f"unexpected symbol {sym!r} in {text!r} (expected {symbol!r})")
        if power is not None and not sym:
            raise DomainError(f"exponent without symbol in {text!r}")
        c = Fraction(coeff) if coeff is not None else Fraction(1)
        if sign == "-":
            c = -c
        k = (int(power) if power is not None else 1) if sym else 0
        out[k] = out.get(k, Fraction(0)) + c
        pos = m.end()
    return out


def _as_int(c: Fraction, text):
    if c.denominator != 1:
        raise DomainError(f"non-integral coefficient in {text!r}")
    return c.numerator


def parse_element(text: str, ring: str):
    if ring == "gauss":
        poly = parse_poly(text, "i")
        acc = GaussInt(0, 0)
        powers = (GaussInt(1, 0), GaussInt(0, 1), GaussInt(-1, 0), GaussInt(0, -1))
        for k, c in poly.items():
            acc = acc + _as_int(c, text) * powers[k % 4]
        return acc
    if ring == "golden":
        poly = parse_poly(text, "t")
        acc = QTau(0)
        for k, c in poly.items():
            t = QTau(1)
            for _ in range(k):
                t = t * QTau(0, 1)
            acc = acc + t * c
        return acc.to_golden_int() if acc.is_integral() else acc
    if ring == "cyclo":
        poly = parse_poly(text, "x")
        acc = CycloInt(0)
        for k, c in poly.items():
            acc = acc + _as_int(c, text) * CycloInt.xi_power(k)
        return acc
    raise DomainError(f"unknown ring {ring!r}")


def parse_scalar(text: str):
    """Rational or golden-rational scalar: ``-3/5``, ``2+t``, ``1/2-1/2t``."""
    s = "".join(text.split())
    if "t" in s:
        return parse_element(s, "golden")
    try:
        return Fraction(s)
    except ValueError:
        raise DomainError(f"cannot parse scalar {text!r}") from None


def format_scalar(x) -> str:
    if isinstance(x, QTau):
        return str(x) if not x.is_rational() else str(x.a)
    return str(x)


def format_element(x) -> str:
    return str(x)
