"""
B 型辫子单词、态射 π: ZB_n → BB_n 与实心环面链环的 B 型 Kauffman 多项式

L(β̂, n) = x^{n-1}·λ^{e(β)}·tr(π(β))，π(τ_i) = X_i，π(τ₀) = Y。
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from algebra import Element
from coeffs import Ground, symbolic_ground
from markov_trace import markov_trace
from words import Letter, X, Xinv, Y, YINV, invert_letter, render_letter

_TOKEN = re.compile(r'^([xX])(\d+)$')


class BraidParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (位置 {position})")
        self.position = position


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError(f"股数必须不小于1: {self.strands}")
        for kind, index in self.letters:
            if kind in ('x', 'X') and not 1 <= index <= self.strands - 1:
                raise ValueError(f"τ_{index} 不在 ZB_{self.strands} 中")

    def render(self) -> str:
        return render_braid(self)


def parse_braid(text: str, strands: int) -> BraidWord:
    """y = τ₀，Y = τ₀^{-1}，x<i> = τ_i，X<i> = τ_i^{-1}"""
    letters = []
    for position, token in enumerate(text.split(), 1):
        if token in ('y', 'Y'):
            letters.append(Y if token == 'y' else YINV)
            continue
        match = _TOKEN.match(token)
        if not match:
            raise BraidParseError(f"未知记号 '{token}'", position)
        index = int(match.group(2))
        if index == 0:
            raise BraidParseError(f"τ₀ 应写作 y / Y，而不是 '{token}'", position)
        if index >= strands:
            raise BraidParseError(f"下标 {index} 超出 ZB_{strands}", position)
        letters.append((match.group(1), index))
    return BraidWord(strands, tuple(letters))


def render_braid(braid: BraidWord) -> str:
    return ' '.join(render_letter(letter) for letter in braid.letters)


def exponent_sum(braid: BraidWord) -> int:
    """τ_i^{±1} ↦ ±1，τ₀^{±1} ↦ 0"""
    return sum(1 if kind == 'x' else -1 for kind, _ in braid.letters if kind in ('x', 'X'))


def to_element(braid: BraidWord, ground: Optional[Ground] = None) -> Element:
    return Element.from_word(braid.letters, braid.strands, ground)


@dataclass(frozen=True)
class InvariantResult:
    strands: int
    braid: str
    exponent_sum: int
    value: object
    ground: Ground

    def render(self) -> str:
        return self.ground.render(self.value)

    def to_dict(self) -> Dict[str, object]:
        return {
            'strands': self.strands,
            'braid': self.braid,
            'exponent_sum': self.exponent_sum,
            'invariant': self.render(),
        }


def kauffman_b(braid: BraidWord, ground: Optional[Ground] = None) -> InvariantResult:
    ground = ground or symbolic_ground()
    c = ground.constants
    e = exponent_sum(braid)
    lam_power = c.lam**e if e >= 0 else ground.one / c.lam**(-e)
    value = c.x**(braid.strands - 1) * lam_power * markov_trace(to_element(braid, ground))
    return InvariantResult(braid.strands, render_braid(braid), e, value, ground)


def inverse_braid(braid: BraidWord) -> BraidWord:
    return BraidWord(braid.strands, tuple(invert_letter(letter) for letter in reversed(braid.letters)))


def markov_conjugate(braid: BraidWord, alpha: BraidWord) -> BraidWord:
    """β ↦ αβα^{-1}"""
    if alpha.strands != braid.strands:
        raise ValueError(f"股数不一致: {alpha.strands} 与 {braid.strands}")
    return BraidWord(braid.strands, alpha.letters + braid.letters + inverse_braid(alpha).letters)


def markov_stabilize(braid: BraidWord, sign: int = 1) -> BraidWord:
    """β ∈ ZB_n ↦ β·τ_n^{±1} ∈ ZB_{n+1}"""
    if sign not in (1, -1):
        raise ValueError(f"sign 必须是 ±1: {sign}")
    n = braid.strands
    last = X(n) if sign == 1 else Xinv(n)
    return BraidWord(n + 1, braid.letters + (last,))


def random_braid(strands: int, length: int, rng: random.Random) -> BraidWord:
    """长度为 length 的随机辫子单词"""
    alphabet = [Y, YINV]
    for i in range(1, strands):
        alphabet.extend((X(i), Xinv(i)))
    return BraidWord(strands, tuple(rng.choice(alphabet) for _ in range(length)))
