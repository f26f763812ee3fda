"""
Laurent Polynomial Module

Exact arithmetic in Z[T^(1/2), T^(-1/2)].

Exponents are stored doubled, so the term c * T^(k/2) is the pair (k, c) and
every exponent is an integer. Coefficients are Python ints (arbitrary
precision).
"""
import re
from typing import Dict, Iterable, List, Mapping, Tuple, Union

Terms = Union[Mapping[int, int], Iterable[Tuple[int, int]]]


class HalfLaurent:
    """Immutable Laurent polynomial in T^(1/2) kept in canonical form."""

    __slots__ = ('_terms',)

    def __init__(self, terms: Terms = ()):
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[int, int] = {}
        for k, c in pairs:
            k = int(k)
            acc[k] = acc.get(k, 0) + int(c)
        self._terms = tuple(sorted((k, c) for k, c in acc.items() if c != 0))

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls) -> 'HalfLaurent':
        return cls()

    @classmethod
    def one(cls) -> 'HalfLaurent':
        return cls({0: 1})

    @classmethod
    def monomial(cls, two_exponent: int, coefficient: int = 1) -> 'HalfLaurent':
        """c * T^(two_exponent/2)."""
        return cls({two_exponent: coefficient})

    @classmethod
    def _coerce(cls, other) -> 'HalfLaurent':
        if isinstance(other, HalfLaurent):
            return other
        if isinstance(other, int):
            return cls({0: other})
        return NotImplemented

    # ------------------------------------------------------------------
    # Accessors
    # ------------------------------------------------------------------

    @property
    def terms(self) -> Dict[int, int]:
        return dict(self._terms)

    def items(self) -> Tuple[Tuple[int, int], ...]:
        """(doubled exponent, coefficient) pairs, increasing exponent."""
        return self._terms

    def coefficient(self, two_exponent: int) -> int:
        return dict(self._terms).get(two_exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def evaluate_at_one(self) -> int:
        """Value at T = 1 (sum of coefficients)."""
        return sum(c for _, c in self._terms)

    # ------------------------------------------------------------------
    # Ring operations
    # ------------------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return HalfLaurent(self._terms + other._terms)

    __radd__ = __add__

    def __neg__(self) -> 'HalfLaurent':
        return HalfLaurent((k, -c) for k, c in self._terms)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return HalfLaurent()
        return HalfLaurent(
            (k1 + k2, c1 * c2)
            for k1, c1 in self._terms
            for k2, c2 in other._terms
        )

    __rmul__ = __mul__

    def __pow__(self, n: int) -> 'HalfLaurent':
        if n < 0:
            raise ValueError("Negative powers are not supported")
        result = HalfLaurent.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"HalfLaurent({dict(self._terms)!r})"

    def __str__(self) -> str:
        return render(self)


# T^(1/2) and T^(-1/2), the two units the skein relations use
T_HALF = HalfLaurent.monomial(1)
T_MINUS_HALF = HalfLaurent.monomial(-1)


def add(p: HalfLaurent, q: HalfLaurent) -> HalfLaurent:
    return p + q


def sub(p: HalfLaurent, q: HalfLaurent) -> HalfLaurent:
    return p - q


def mul(p: HalfLaurent, q: HalfLaurent) -> HalfLaurent:
    return p * q


def one_minus_T_power(ell: int) -> HalfLaurent:
    """
    Return (1 - T)^ell.

    Args:
        ell: Non-negative exponent

    Returns:
        The binomial expansion as a HalfLaurent

    Example:
        >>> str(one_minus_T_power(2))
        'T^2 - 2*T + 1'
    """
    if ell < 0:
        raise ValueError(f"ell must be non-negative, got {ell}")
    return HalfLaurent({0: 1, 2: -1}) ** ell


def invert_T(p: HalfLaurent) -> HalfLaurent:
    """Substitute T -> T^(-1)."""
    return HalfLaurent((-k, c) for k, c in p.items())


def is_symmetric(p: HalfLaurent) -> bool:
    return p == invert_T(p)


def to_json(p: HalfLaurent) -> List[List[int]]:
    """Sorted [doubled exponent, coefficient] pairs."""
    return [[k, c] for k, c in p.items()]


def from_json(pairs: Iterable[Iterable[int]]) -> HalfLaurent:
    return HalfLaurent((k, c) for k, c in pairs)


# ----------------------------------------------------------------------
# Text rendering
# ----------------------------------------------------------------------

def _monomial(two_exponent: int, style: str) -> str:
    if two_exponent == 0:
        return ''
    if style == 't-half':
        return 't' if two_exponent == 1 else f't^{two_exponent}'
    if two_exponent % 2 == 0:
        e = two_exponent // 2
        return 'T' if e == 1 else f'T^{e}'
    return f'T^({two_exponent}/2)'


def render(p: HalfLaurent, style: str = 'T') -> str:
    """
    Render with descending exponents.

    Args:
        p: Polynomial to render
        style: 'T' prints T^k and T^(k/2); 't-half' prints powers of t = T^(1/2)

    Returns:
        Text such as 'T^2 + 5*T + 9 + 5*T^-1 + T^-2'; '0' for zero
    """
    if style not in ('T', 't-half'):
        raise ValueError(f"Unknown style: {style}")
    if p.is_zero():
        return '0'

    pieces = []
    for k, c in reversed(p.items()):
        mon = _monomial(k, style)
        magnitude = abs(c)
        if not mon:
            body = str(magnitude)
        elif magnitude == 1:
            body = mon
        else:
            body = f'{magnitude}*{mon}'

        if not pieces:
            pieces.append(f'-{body}' if c < 0 else body)
        else:
            pieces.append(f' - {body}' if c < 0 else f' + {body}')
    return ''.join(pieces)


_TERM = re.compile(
    r'^(?P<coef>\d+)?\*?'
    r'(?:(?P<var>[Tt])(?:\^(?:\((?P<num>-?\d+)/2\)|(?P<exp>-?\d+)))?)?$'
)


def parse_half_laurent(text: str) -> HalfLaurent:
    """
    Parse text produced by render() in either style.

    Example:
        >>> parse_half_laurent('-T^(1/2) - T^(-1/2)') == HalfLaurent({1: -1, -1: -1})
        True
    """
    text = text.strip()
    if text == '0':
        return HalfLaurent()

    sign = 1
    if text.startswith('-'):
        sign, text = -1, text[1:]
    tokens = re.split(r'\s+([+-])\s+', text)

    terms = []
    signs = [sign] + [1 if op == '+' else -1 for op in tokens[1::2]]
    for s, token in zip(signs, tokens[0::2]):
        m = _TERM.match(token.strip())
        if not m or (m.group('coef') is None and m.group('var') is None):
            raise ValueError(f"Cannot parse term: {token!r}")
        coef = int(m.group('coef')) if m.group('coef') else 1
        var = m.group('var')
        if var is None:
            k = 0
        elif var == 't':
            k = int(m.group('exp')) if m.group('exp') else 1
        elif m.group('num') is not None:
            k = int(m.group('num'))
        else:
            k = 2 * (int(m.group('exp')) if m.group('exp') else 1)
        terms.append((k, s * coef))
    return HalfLaurent(terms)
