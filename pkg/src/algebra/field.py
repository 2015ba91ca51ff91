"""
精确标量域 Q(i, √2)

元素表示为 a + b·i + c·√2 + d·i√2，四个分量均为有理数（Fraction）。
所有运算精确，无舍入。
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Tuple, Union

from ..core.exceptions import FieldError

Number = Union[int, Fraction, "Scalar"]


def _q(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise FieldError(f"无法转换为有理数: {value!r}")


class Scalar:
    """Q(i, √2) 中的元素，不可变"""

    __slots__ = ("_a", "_b", "_c", "_d")

    def __init__(self, a=0, b=0, c=0, d=0):
        self._a = _q(a)
        self._b = _q(b)
        self._c = _q(c)
        self._d = _q(d)

    # ============ 构造 ============

    @classmethod
    def coerce(cls, value: Number) -> "Scalar":
        """将 int / Fraction / Scalar 统一为 Scalar"""
        if isinstance(value, Scalar):
            return value
        return cls(value)

    @classmethod
    def i(cls) -> "Scalar":
        return cls(0, 1)

    @classmethod
    def sqrt2(cls) -> "Scalar":
        return cls(0, 0, 1)

    @classmethod
    def sqrt_minus2(cls) -> "Scalar":
        """√−2 = i√2"""
        return cls(0, 0, 0, 1)

    # ============ 属性 ============

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def c(self) -> Fraction:
        return self._c

    @property
    def d(self) -> Fraction:
        return self._d

    @property
    def components(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self._a, self._b, self._c, self._d)

    def is_zero(self) -> bool:
        return not (self._a or self._b or self._c or self._d)

    def is_rational(self) -> bool:
        return not (self._b or self._c or self._d)

    def to_fraction(self) -> Fraction:
        """有理元素转为 Fraction"""
        if not self.is_rational():
            raise FieldError(f"非有理元素: {self}")
        return self._a

    # ============ 运算 ============

    def __add__(self, other):
        if isinstance(other, Scalar):
            return Scalar(self._a + other._a, self._b + other._b, self._c + other._c, self._d + other._d)
        if isinstance(other, (int, Fraction)):
            return Scalar(self._a + other, self._b, self._c, self._d)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self._a, -self._b, -self._c, -self._d)

    def __sub__(self, other):
        if isinstance(other, Scalar):
            return Scalar(self._a - other._a, self._b - other._b, self._c - other._c, self._d - other._d)
        if isinstance(other, (int, Fraction)):
            return Scalar(self._a - other, self._b, self._c, self._d)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return Scalar(other - self._a, -self._b, -self._c, -self._d)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Scalar(self._a * other, self._b * other, self._c * other, self._d * other)
        if not isinstance(other, Scalar):
            return NotImplemented
        a, b, c, d = self._a, self._b, self._c, self._d
        e, f, g, h = other._a, other._b, other._c, other._d
        if not (f or g or h):
            return Scalar(a * e, b * e, c * e, d * e)
        if not (b or c or d):
            return Scalar(a * e, a * f, a * g, a * h)
        # i² = −1, (√2)² = 2, (i√2)² = −2
        return Scalar(
            a * e - b * f + 2 * c * g - 2 * d * h,
            a * f + b * e + 2 * c * h + 2 * d * g,
            a * g + c * e - b * h - d * f,
            a * h + d * e + b * g + c * f,
        )

    __rmul__ = __mul__

    def conjugate_sqrt2(self) -> "Scalar":
        """√2 ↦ −√2 的 Galois 共轭"""
        return Scalar(self._a, self._b, -self._c, -self._d)

    def inverse(self) -> "Scalar":
        """乘法逆元，经 Galois 共轭化为 Q(i) 中的除法"""
        if self.is_zero():
            raise FieldError("除以零")
        if self.is_rational():
            return Scalar(1 / self._a)
        a, b, c, d = self._a, self._b, self._c, self._d
        # x · conj(x) = p + q·i ∈ Q(i)
        p = a * a - b * b - 2 * (c * c - d * d)
        q = 2 * a * b - 4 * c * d
        n = p * p + q * q
        return self.conjugate_sqrt2() * Scalar(p / n, -q / n)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise FieldError("除以零")
            return Scalar(self._a / other, self._b / other, self._c / other, self._d / other)
        if isinstance(other, Scalar):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Scalar(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def sqrt(self) -> "Scalar":
        """
        有理平方数的精确平方根（取非负根）

        Raises:
            FieldError: 非有理数或非有理平方
        """
        value = self.to_fraction()
        negative = value < 0
        value = abs(value)
        num, den = _isqrt_exact(value.numerator), _isqrt_exact(value.denominator)
        if num is None or den is None:
            raise FieldError(f"{self} 在 Q 中无平方根")
        root = Fraction(num, den)
        return Scalar(0, root) if negative else Scalar(root)

    # ============ 比较 ============

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.components == other.components
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self._a == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self._a)
        return hash(self.components)

    def __bool__(self):
        return not self.is_zero()

    # ============ 展示 ============

    def __repr__(self) -> str:
        return f"Scalar({self._a}, {self._b}, {self._c}, {self._d})"

    def __str__(self) -> str:
        parts = []
        for coef, unit in zip(self.components, ("", "i", "√2", "i√2")):
            if coef:
                parts.append(f"{coef}{unit}" if not unit else f"({coef}){unit}")
        return " + ".join(parts) if parts else "0"

    def to_json(self):
        """JSON 表示：有理数为字符串，否则为四分量字符串列表"""
        if self.is_rational():
            return str(self._a)
        return [str(x) for x in self.components]


def _isqrt_exact(n: int):
    if n < 0:
        return None
    root = int(n ** 0.5)
    for candidate in (root - 1, root, root + 1):
        if candidate >= 0 and candidate * candidate == n:
            return candidate
    # 大整数时浮点可能不准，退回整数牛顿迭代
    x = n
    y = (x + 1) // 2
    while y < x:
        x = y
        y = (x + n // x) // 2
    return x if x * x == n else None


def to_scalar(value: Number) -> Scalar:
    """将数值统一为 Scalar"""
    return Scalar.coerce(value)


def parse_rational(text) -> Fraction:
    """解析 '3/4'、'-2' 等有理数文本"""
    try:
        return _q(text)
    except (ValueError, ZeroDivisionError) as e:
        raise FieldError(f"非法有理数: {text!r}") from e


def is_zero(value) -> bool:
    """通用零判定（int / Fraction / Scalar）"""
    if isinstance(value, Scalar):
        return value.is_zero()
    return value == 0
