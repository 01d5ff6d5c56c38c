"""Exact scalar arithmetic over the rationals and over prime fields.

Scalars are plain Python values: ``fractions.Fraction`` over the rationals,
``int`` residues in ``[0, p)`` over a prime field.  Both are canonical, so
equality of scalars is plain ``==``.
"""
from __future__ import annotations

from fractions import Fraction


class FieldError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Field:
    """Common interface of the two scalar fields."""

    kind: str

    def normalize(self, x):
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, x) -> str:
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self.normalize(0)

    @property
    def one(self):
        return self.normalize(1)

    def spec(self) -> str:
        raise NotImplementedError


class RationalField(Field):
    kind = "rational"

    def normalize(self, x):
        if isinstance(x, Fraction):
            return x
        return Fraction(x)

    def parse(self, text: str):
        text = text.strip()
        try:
            if "/" in text:
                num, _, den = text.partition("/")
                return Fraction(int(num), int(den))
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"bad rational scalar {text!r}: {exc}") from None

    def format(self, x) -> str:
        return str(Fraction(x))

    def inv(self, x):
        if x == 0:
            raise FieldError("division by zero")
        return 1 / Fraction(x)

    def spec(self) -> str:
        return "rational"

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")


class PrimeField(Field):
    kind = "prime"

    def __init__(self, p: int):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p

    def normalize(self, x):
        return int(x) % self.p

    def parse(self, text: str):
        text = text.strip()
        # Accept a/b and reduce it; the canonical form is a plain residue.
        if "/" in text:
            num, _, den = text.partition("/")
            try:
                n, d = int(num), int(den)
            except ValueError:
                raise FieldError(f"bad scalar {text!r}") from None
            if d % self.p == 0:
                raise FieldError(f"bad scalar {text!r}: denominator not invertible mod {self.p}")
            return self.normalize(n * self.inv(d % self.p))
        try:
            return self.normalize(int(text))
        except ValueError:
            raise FieldError(f"bad scalar {text!r}") from None

    def format(self, x) -> str:
        return str(x % self.p)

    def inv(self, x):
        x = x % self.p
        if x == 0:
            raise FieldError("division by zero")
        return pow(x, self.p - 2, self.p)

    def spec(self) -> str:
        return f"prime:{self.p}"

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))


QQ = RationalField()

_gf_cache: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    if p not in _gf_cache:
        _gf_cache[p] = PrimeField(p)
    return _gf_cache[p]


def field_from_spec(spec: str) -> Field:
    """Parse a field spec string: ``rational`` or ``prime:P``."""
    spec = spec.strip()
    if spec == "rational":
        return QQ
    if spec.startswith("prime:"):
        try:
            p = int(spec.split(":", 1)[1])
        except ValueError:
            raise FieldError(f"bad field spec {spec!r}") from None
        return GF(p)
    raise FieldError(f"bad field spec {spec!r}")
