"""
高斯有理数

实部、虚部均为任意精度有理数的复数标量，精确层里的 α、β、σ、a、b 以及全部多项式系数都用它表示。
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from core.errors import DomainError

_RATIONAL = r"\d+(?:/\d+)?"
_PURE_IMAG = re.compile(rf"^(?P<sign>[+-]?)(?P<mag>{_RATIONAL})?i$")
_FULL = re.compile(rf"^(?P<re>[+-]?{_RATIONAL})(?P<sign>[+-])(?P<mag>{_RATIONAL})?i$")
_PURE_REAL = re.compile(rf"^[+-]?{_RATIONAL}$")

Scalar = Union["GaussRational", int, Fraction]


def _rational(text: str) -> Fraction:
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise DomainError(f"分母为零: {text!r}")
    return Fraction(int(num), int(den) if den else 1)


@dataclass(frozen=True)
class GaussRational:
    """精确复数 re + im·i，分量为约分后的 Fraction"""
    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("re", "im"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
                raise TypeError(f"GaussRational 分量必须是 int 或 Fraction，收到 {type(value).__name__}")
            object.__setattr__(self, name, Fraction(value))

    # ==================== 构造 ====================

    @classmethod
    def of(cls, value: Union[Scalar, str]) -> GaussRational:
        """把 int / Fraction / 字面量字符串统一转换为 GaussRational"""
        if isinstance(value, GaussRational):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return cls(Fraction(value))
        raise TypeError(f"无法转换为 GaussRational: {value!r}")

    @classmethod
    def parse(cls, text: str) -> GaussRational:
        """
        解析复有理字面量

        接受 "2"、"-3/4"、"i"、"-1/3i"、"3/2+1/3i"、"1-i" 等形式。
        """
        s = text.replace(" ", "")
        m = _PURE_IMAG.match(s)
        if m:
            mag = _rational(m.group("mag")) if m.group("mag") else Fraction(1)
            return cls(Fraction(0), -mag if m.group("sign") == "-" else mag)
        m = _FULL.match(s)
        if m:
            mag = _rational(m.group("mag")) if m.group("mag") else Fraction(1)
            return cls(_rational(m.group("re").lstrip("+")), -mag if m.group("sign") == "-" else mag)
        if _PURE_REAL.match(s):
            return cls(_rational(s.lstrip("+")))
        raise DomainError(f"无效的复有理字面量: {text!r}")

    @classmethod
    def zero(cls) -> GaussRational:
        return cls(Fraction(0))

    @classmethod
    def one(cls) -> GaussRational:
        return cls(Fraction(1))

    @classmethod
    def imag_unit(cls) -> GaussRational:
        return cls(Fraction(0), Fraction(1))

    # ==================== 算术 ====================

    @staticmethod
    def _coerce(other) -> GaussRational | None:
        if isinstance(other, GaussRational):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return GaussRational(Fraction(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = o.abs2()
        if d == 0:
            raise DomainError("除数为零")
        num = self * o.conjugate()
        return GaussRational(num.re / d, num.im / d)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return GaussRational.one() / (self ** (-n))
        result, base = GaussRational.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    # ==================== 查询 ====================

    def conjugate(self) -> GaussRational:
        return GaussRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        """|z|²，精确"""
        return self.re * self.re + self.im * self.im

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def real_value(self) -> Fraction:
        """实数时返回 Fraction，否则报错"""
        if not self.is_real:
            raise DomainError(f"需要实数，收到 {self}")
        return self.re

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __complex__(self):
        return self.to_complex()

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        mag = abs(self.im)
        imag = "i" if mag == 1 else f"{mag}i"
        if self.re == 0:
            return imag if self.im > 0 else f"-{imag}"
        return f"{self.re}{'+' if self.im > 0 else '-'}{imag}"

    def __repr__(self):
        return f"GaussRational('{self}')"


def gr(value: Union[Scalar, str]) -> GaussRational:
    """GaussRational.of 的简写"""
    return GaussRational.of(value)
