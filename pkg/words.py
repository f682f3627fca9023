"""
BB_n 的生成元字母与单词

字母是 (kind, index) 二元组：('y', 0) = Y，('Y', 0) = Y^{-1}，
('x', i) = X_i，('X', i) = X_i^{-1}，('e', i) = e_i。单词是字母元组，空元组为单位元。
"""

from __future__ import annotations

import re
from typing import Optional, Tuple

Letter = Tuple[str, int]
Word = Tuple[Letter, ...]

Y: Letter = ('y', 0)
YINV: Letter = ('Y', 0)

_TOKEN = re.compile(r'^([xXe])(\d+)$')
_INVERT = {'y': 'Y', 'Y': 'y', 'x': 'X', 'X': 'x', 'e': 'e'}


class WordParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (位置 {position})")
        self.position = position


def X(i: int) -> Letter:
    return ('x', i)


def Xinv(i: int) -> Letter:
    return ('X', i)


def E(i: int) -> Letter:
    return ('e', i)


def parse_word(text: str, n: Optional[int] = None) -> Word:
    """
    解析空白分隔的单词文本，位置从 1 开始计数
    """
    letters = []
    for position, token in enumerate(text.split(), 1):
        if token == '1':
            continue
        if token in ('y', 'Y'):
            if n is not None and n < 1:
                raise WordParseError(f"BB_{n} 中没有 Y", position)
            letters.append((token, 0))
            continue
        match = _TOKEN.match(token)
        if not match:
            raise WordParseError(f"未知记号 '{token}'", position)
        index = int(match.group(2))
        if index < 1 or (n is not None and index > n - 1):
            raise WordParseError(f"下标超出范围 '{token}'", position)
        letters.append((match.group(1), index))
    return tuple(letters)


def render_letter(letter: Letter) -> str:
    kind, index = letter
    return kind if kind in ('y', 'Y') else f"{kind}{index}"


def render_word(word: Word) -> str:
    return ' '.join(render_letter(letter) for letter in word) or '1'


def letter_level(letter: Letter) -> int:
    kind, index = letter
    return 1 if kind in ('y', 'Y') else index + 1


def word_level(word: Word) -> int:
    """包含该单词的最小 BB_m 的 m"""
    return max((letter_level(letter) for letter in word), default=0)


def invert_letter(letter: Letter) -> Letter:
    return (_INVERT[letter[0]], letter[1])


def inverse_word(word: Word) -> Word:
    """反转并逐字母取逆；e_i 保持不变，因此这也是单词上的 star 对合"""
    return tuple(invert_letter(letter) for letter in reversed(word))


star_word = inverse_word


def bar_word(word: Word) -> Word:
    return tuple(reversed(word))


def has_e(word: Word) -> bool:
    return any(kind == 'e' for kind, _ in word)


def yprime(i: int) -> Word:
    """Y'_i = X_{i-1}···X_1 Y X_1···X_{i-1}"""
    down = tuple(X(j) for j in range(i - 1, 0, -1))
    return down + (Y,) + tuple(reversed(down))


def ysub(i: int) -> Word:
    """Y_i = X_{i-1}···X_1 Y X_1^{-1}···X_{i-1}^{-1}"""
    down = tuple(X(j) for j in range(i - 1, 0, -1))
    return down + (Y,) + tuple(Xinv(j) for j in range(1, i))


_MACROS = {
    'Yprime': yprime,
    'Ysub': ysub,
    'YprimeInv': lambda i: inverse_word(yprime(i)),
    'YsubInv': lambda i: inverse_word(ysub(i)),
}


def expand_macro(symbol: str, i: int, n: Optional[int] = None) -> Word:
    if symbol not in _MACROS:
        raise ValueError(f"未知宏: {symbol}")
    if i < 1 or (n is not None and i > n):
        raise ValueError(f"宏 {symbol}({i}) 的下标超出范围")
    return _MACROS[symbol](i)
