"""
基域 K_0 = Q(s, λ, q₁) 上的精确有理函数运算

s 是 q 的平方根，λ 记作 l，q₁ 记作 p。δ、q₀、x、A 全部由这三个自由变量导出。
除符号域外还提供两类特化基域：有理数求值点，以及张量表示使用的 Q(s) 特化。
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple

from sympy import QQ, Symbol, SympifyError, sympify
from sympy.polys.fields import field
from sympy.polys.polyerrors import CoercionFailed

from config import Config

K0, s, l, p = field("s,l,p", QQ)

# 张量表示的特化域，t1、t2 为谱参数
KT, ts, t1, t2 = field("s,t1,t2", QQ)


class PoleError(ZeroDivisionError):
    """在求值点处遇到极点，或除以零标量"""


class ScalarParseError(ValueError):
    """标量字符串无法解析"""


@dataclass(frozen=True)
class DerivedConstants:
    q: object
    delta: object
    q0: object
    x: object
    A: object
    lam: object
    q1: object


@lru_cache(maxsize=None)
def derived_constants() -> DerivedConstants:
    """由 s, λ, q₁ 导出 q, δ, q₀, x, A（取 q₀ = q^{-1}）"""
    q = s**2
    q0 = 1 / q
    delta = q - q0
    x = (delta - l + 1 / l) / delta
    A = p * x / (1 - q0 * l)
    return DerivedConstants(q=q, delta=delta, q0=q0, x=x, A=A, lam=l, q1=p)


def scalar_arith(a, b, op: str):
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    if op == 'div':
        if not b:
            raise PoleError("除数为零标量")
        return a / b
    raise ValueError(f"未知运算: {op}")


def _substitute(a, images, one):
    """按 numer/denom 的单项式逐项代入像，分母为零时抛出 PoleError"""
    def evaluate(poly):
        total = one - one
        for monom, coef in poly.terms():
            term = one * coef
            for image, exp in zip(images, monom):
                if exp:
                    term = term * image**exp
            total = total + term
        return total

    numer = evaluate(a.numer)
    denom = evaluate(a.denom)
    if not denom:
        raise PoleError(f"分母在求值点处为零: {render_scalar(a)}")
    return numer / denom


def star_scalar(a):
    """对合 s ↦ s^{-1}, λ ↦ λ^{-1}, q₁ ↦ -q₁q₀^{-1}"""
    return _substitute(a, (1 / s, 1 / l, -p * s**2), K0.one)


def _to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    return Fraction(int(value.numerator), int(value.denominator))


def _qq(value):
    f = _to_fraction(value)
    return QQ(f.numerator, f.denominator)


def _render_poly(poly, names) -> str:
    parts = []
    for i, (monom, coef) in enumerate(sorted(poly.terms(), reverse=True)):
        c = _to_fraction(coef)
        factors = [name if e == 1 else f"{name}^{e}" for name, e in zip(names, monom) if e]
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = f"{mag}*" + "*".join(factors)
        if i == 0:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(parts) or "0"


def render_scalar(a) -> str:
    """
    规范字符串：项形如 c*s^a*l^b*p^c，按指数向量字典序降序排列，
    分式写作 (<num>)/(<den>)，分母为 1 时省略
    """
    if not hasattr(a, 'numer') or not hasattr(a, 'field'):
        return str(_to_fraction(a))
    names = [str(sym) for sym in a.field.symbols]
    numer = _render_poly(a.numer, names)
    if a.denom == a.field.ring.one:
        return numer
    return f"({numer})/({_render_poly(a.denom, names)})"


_S, _L, _P = Symbol('s'), Symbol('l'), Symbol('p')


def _scalar_names() -> dict:
    c = derived_constants()
    names = {'s': _S, 'l': _L, 'p': _P, 'lam': _L, 'q1': _P}
    for key in ('q', 'q0', 'delta', 'x', 'A'):
        names[key] = getattr(c, key).as_expr()
    return names


def parse_scalar(text: str):
    """解析规范字符串（也接受 q, q0, q1, lam, delta, x, A 等名称）"""
    try:
        expr = sympify(text.replace('^', '**'), locals=_scalar_names())
        return K0.from_expr(expr)
    except (SympifyError, ValueError, TypeError, CoercionFailed, ZeroDivisionError) as e:
        raise ScalarParseError(f"无法解析标量 '{text}': {e}") from e


@dataclass(frozen=True)
class EvalPoint:
    s: Fraction
    l: Fraction
    p: Fraction

    def __post_init__(self):
        for name in ('s', 'l', 'p'):
            object.__setattr__(self, name, _to_fraction(getattr(self, name)))
        if self.s == 0 or self.l == 0:
            raise PoleError("s 与 λ 不能为零")
        q = self.s**2
        delta = q - 1 / q
        if delta == 0:
            raise PoleError("δ 在该点为零")
        if 1 - self.l / q == 0:
            raise PoleError("1 - q₀λ 在该点为零")
        if delta - self.l + 1 / self.l == 0:
            raise PoleError("x 在该点为零")

    @classmethod
    def random(cls, rng: Optional[random.Random] = None, bound: int = Config.EVAL_BOUND) -> 'EvalPoint':
        rng = rng or random.Random(Config.SEED)

        def draw() -> Fraction:
            while True:
                value = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
                if value:
                    return value

        while True:
            try:
                return cls(draw(), draw(), draw())
            except PoleError:
                continue


def specialize(a, point: EvalPoint) -> Fraction:
    return _to_fraction(_substitute(a, (_qq(point.s), _qq(point.l), _qq(point.p)), QQ.one))


class Ground:
    """
    标量运算所在的基域。引擎按基域缓存，因此基域以 key 判等并可哈希。
    lift 把 K_0 中的标量送入本基域。
    """

    def __init__(self, key: tuple, target, images: tuple):
        self.key = key
        self.target = target
        self.domain = QQ if target is QQ else target.to_domain()
        self.zero = self.domain.zero
        self.one = self.domain.one
        self.images = images
        c = derived_constants()
        self.constants = DerivedConstants(*(self.lift(getattr(c, k)) for k in c.__dataclass_fields__))

    def __eq__(self, other):
        return isinstance(other, Ground) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"{type(self).__name__}{self.key[1:]}"

    @property
    def is_symbolic(self) -> bool:
        return False

    def lift(self, a):
        if hasattr(a, 'field') and a.field == K0:
            return _substitute(a, self.images, self.one)
        return self.coerce(a)

    def coerce(self, value):
        if hasattr(value, 'field') and value.field == self.target:
            return value
        return self.one * _qq(value)

    def star(self, a):
        raise ValueError(f"{self!r} 上没有定义标量对合，请使用符号基域")

    def render(self, a) -> str:
        return render_scalar(a)


class SymbolicGround(Ground):
    def __init__(self):
        super().__init__(('symbolic',), K0, (s, l, p))

    @property
    def is_symbolic(self) -> bool:
        return True

    def lift(self, a):
        if hasattr(a, 'field') and a.field == K0:
            return a
        return self.coerce(a)

    def star(self, a):
        return star_scalar(a)


class PointGround(Ground):
    """把 K_0 特化到有理数求值点"""

    def __init__(self, point: EvalPoint):
        self.point = point
        super().__init__(('point', point.s, point.l, point.p), QQ,
                         (_qq(point.s), _qq(point.l), _qq(point.p)))


class TensorGround(Ground):
    """
    张量表示的参数：λ = q^{1-N}，q₁ = q^{-1} - 1。
    point 为 None 时系数在 Q(s, t1, t2) 中，否则 (s, t1, t2) 取有理数值。
    """

    def __init__(self, N: int, point: Optional[Tuple[Fraction, Fraction, Fraction]] = None):
        if N < 3 or N % 2 == 0:
            raise ValueError(f"N 必须是不小于3的奇数: {N}")
        self.N = N
        self.point = None if point is None else tuple(_to_fraction(v) for v in point)
        if self.point is None:
            target, sv, spectral = KT, ts, (t1, t2)
        else:
            target = QQ
            sv = _qq(self.point[0])
            spectral = (_qq(self.point[1]), _qq(self.point[2]))
            if sv == 0 or sv**4 == 1:
                raise PoleError("张量求值点需要 s ≠ 0 且 s⁴ ≠ 1")
        one = QQ.one if target is QQ else target.one
        self.s = sv
        self.spectral = spectral
        super().__init__(('tensor', N, self.point), target,
                         (sv, one / sv**(2 * N - 2), one / sv**2 - one))


@lru_cache(maxsize=None)
def symbolic_ground() -> SymbolicGround:
    return SymbolicGround()
