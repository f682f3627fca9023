"""
约化B型BMW代数 BB_n 的元素与重写引擎

单词按字母从左到右折叠进 w₁·γ·w₂ 形式（w₁, w₂ ∈ BB_{n-1}，γ ∈ {1, e_{n-1}, X_{n-1}, Y'_n}），
所用乘积表全部来自定义关系和两组引理关系。BB_2 及以下直接给出结构范式；
n ≥ 3 时通过迹形式的 Gram 矩阵求坐标，零判定则通过条件期望递归到 BB_2。
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Tuple

from config import Config
from coeffs import Ground, parse_scalar, symbolic_ground
from diagrams import word_diagram
from words import (E, Word, X, Xinv, Y, has_e, inverse_word, parse_word,
                   render_word, star_word, bar_word, word_level, yprime)

SplitKey = Tuple[Word, str, Word]

# 下一层分解中 γ 的记号：1, W = X_{n-2}, F = e_{n-2}, V = Y'_{n-1}
_ALPHA = {'1': '1', 'X': 'W', 'E': 'F', 'Z': 'V'}


class AlgebraMismatchError(ValueError):
    """股数或基域不一致"""


class StepLimitExceeded(RuntimeError):
    """单个单词的重写步数超过上限"""


def _accumulate(target: dict, key, coef):
    if not coef:
        return
    total = target.get(key)
    total = coef if total is None else total + coef
    if total:
        target[key] = total
    else:
        target.pop(key, None)


def _split_top(text: str, sep: str) -> List[str]:
    parts, depth, start, i = [], 0, 0, 0
    while i < len(text):
        ch = text[i]
        if ch == '(':
            depth += 1
        elif ch == ')':
            depth -= 1
        elif depth == 0 and text.startswith(sep, i):
            parts.append(text[start:i])
            i += len(sep)
            start = i
            continue
        i += 1
    parts.append(text[start:])
    return parts


class Element:
    """
    BB_n 中单词的有限线性组合。reduced 标记系数已是生成集坐标。
    乘号 * 只做单词拼接，需要范式时使用 mul 或 reduce。
    """

    __slots__ = ('terms', 'n', 'ground', 'reduced')

    def __init__(self, terms: Dict[Word, object], n: int, ground: Optional[Ground] = None,
                 reduced: bool = False):
        ground = ground or symbolic_ground()
        for word in terms:
            if word_level(word) > n:
                raise AlgebraMismatchError(f"单词 '{render_word(word)}' 不在 BB_{n} 中")
        self.terms = {w: c for w, c in terms.items() if c}
        self.n = n
        self.ground = ground
        self.reduced = reduced

    @classmethod
    def from_word(cls, word: Word, n: int, ground: Optional[Ground] = None) -> 'Element':
        ground = ground or symbolic_ground()
        return cls({tuple(word): ground.one}, n, ground)

    @classmethod
    def from_terms(cls, pairs: Iterable[Tuple[object, Word]], n: int,
                   ground: Optional[Ground] = None) -> 'Element':
        ground = ground or symbolic_ground()
        terms: Dict[Word, object] = {}
        for coef, word in pairs:
            _accumulate(terms, tuple(word), ground.lift(coef))
        return cls(terms, n, ground)

    @classmethod
    def scalar(cls, value, n: int, ground: Optional[Ground] = None) -> 'Element':
        return cls.from_terms([(value, ())], n, ground)

    def _check(self, other: 'Element'):
        if not isinstance(other, Element):
            raise TypeError(f"期望 Element，得到 {type(other).__name__}")
        if self.n != other.n:
            raise AlgebraMismatchError(f"股数不一致: {self.n} 与 {other.n}")
        if self.ground != other.ground:
            raise AlgebraMismatchError(f"基域不一致: {self.ground!r} 与 {other.ground!r}")

    def __add__(self, other: 'Element') -> 'Element':
        self._check(other)
        terms = dict(self.terms)
        for word, coef in other.terms.items():
            _accumulate(terms, word, coef)
        return Element(terms, self.n, self.ground, self.reduced and other.reduced)

    def __neg__(self) -> 'Element':
        return Element({w: -c for w, c in self.terms.items()}, self.n, self.ground, self.reduced)

    def __sub__(self, other: 'Element') -> 'Element':
        return self + (-other)

    def scale(self, value) -> 'Element':
        c = self.ground.lift(value)
        return Element({w: c * v for w, v in self.terms.items()}, self.n, self.ground, self.reduced)

    def __mul__(self, other) -> 'Element':
        if not isinstance(other, Element):
            return self.scale(other)
        self._check(other)
        terms: Dict[Word, object] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                _accumulate(terms, w1 + w2, c1 * c2)
        return Element(terms, self.n, self.ground)

    def __rmul__(self, value) -> 'Element':
        return self.scale(value)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Element) and self.n == other.n
                and self.ground == other.ground and self.terms == other.terms)

    __hash__ = None

    def render(self) -> str:
        if not self.terms:
            return '0'
        parts = []
        for word in sorted(self.terms, key=lambda w: (len(w), render_word(w))):
            scalar = self.ground.render(self.terms[word])
            if ' ' in scalar:
                scalar = f"({scalar})"
            parts.append(f"{scalar} * {render_word(word)}")
        return ' + '.join(parts)

    def __repr__(self):
        return f"Element(n={self.n}, {self.render()})"


def parse_element(text: str, n: int, ground: Optional[Ground] = None) -> Element:
    """解析 '<scalar> * <word> + ...'；单独的单词系数为 1"""
    pairs = []
    for term in _split_top(text.strip(), ' + '):
        pieces = _split_top(term.strip(), ' * ')
        if len(pieces) == 1:
            pairs.append((1, parse_word(pieces[0], n)))
        else:
            pairs.append((parse_scalar(' * '.join(pieces[:-1])), parse_word(pieces[-1], n)))
    return Element.from_terms(pairs, n, ground)


@lru_cache(maxsize=None)
def chains(n: int) -> Tuple[Word, ...]:
    """
    左链集合 T_n，满足 BB_n = Σ_t t·BB_{n-1}：
    T_1 = {1, Y}，T_n = {1, Y'_n} ∪ {t·X_{n-1} : t 不含 e} ∪ {t·e_{n-1}}
    """
    if n <= 0:
        return ((),)
    if n == 1:
        return ((), (Y,))
    lower = chains(n - 1)
    out = [(), yprime(n)]
    out.extend(t + (X(n - 1),) for t in lower if not has_e(t))
    out.extend(t + (E(n - 1),) for t in lower)
    return tuple(out)


@lru_cache(maxsize=None)
def spanning_pairs(n: int) -> Tuple[Tuple[Word, Word], ...]:
    """按 T_n × S_{n-1} 顺序贪心选取，点状 Brauer 影子首次出现的乘积保留"""
    if n <= 0:
        return (((), ()),)
    if n == 1:
        return (((), ()), ((Y,), ()))
    seen = set()
    out = []
    lower = spanning_set(n - 1)
    for t in chains(n):
        for b in lower:
            diagram = word_diagram(t + b, n)[0]
            if diagram not in seen:
                seen.add(diagram)
                out.append((t, b))
    return tuple(out)


@lru_cache(maxsize=None)
def spanning_set(n: int) -> Tuple[Word, ...]:
    return tuple(t + b for t, b in spanning_pairs(n))


def hecke_dimension(n: int) -> int:
    """不含 e 的生成单词个数，即商代数 HB_n 的维数"""
    return sum(1 for word in spanning_set(n) if not has_e(word))


class BBAlgebra:
    """某一基域上的重写引擎，分解结果按 (单词, 层) 缓存"""

    def __init__(self, ground: Ground, step_cap: int = Config.STEP_CAP):
        self.ground = ground
        self.step_cap = step_cap
        c = ground.constants
        one = ground.one
        self.one = one
        self.zero = ground.zero
        self.q0, self.q1, self.lam = c.q0, c.q1, c.lam
        self.delta, self.x, self.A = c.delta, c.x, c.A
        self.q0_inv = one / c.q0
        self.lam_inv = one / c.lam
        self.x_inv = one / c.x
        self._split_cache: Dict[Tuple[Word, int], Dict[SplitKey, object]] = {}
        self._tables: Dict[Tuple[str, str, str, int], list] = {}

    def fold(self, word: Word) -> Tuple[object, object]:
        """BB_1 中的单词化为 a + bY"""
        a, b = self.one, self.zero
        for kind, _ in word:
            if kind == 'y':
                a, b = b * self.q0, a + b * self.q1
            elif kind == 'Y':
                a, b = b - a * self.q1 * self.q0_inv, a * self.q0_inv
            else:
                raise ValueError(f"BB_1 中不应出现字母 {kind}")
        return a, b

    def split(self, word: Word, n: int) -> Dict[SplitKey, object]:
        """把单词写成 Σ c·w₁γw₂；γ 为 '1' 或 'Z'(= Y'_n) 时 w₂ 为空"""
        key = (word, n)
        cached = self._split_cache.get(key)
        if cached is None:
            cached = self._split_uncached(word, n)
            self._split_cache[key] = cached
        return cached

    def _split_uncached(self, word: Word, n: int) -> Dict[SplitKey, object]:
        state: Dict[SplitKey, object] = {((), '1', ()): self.one}
        steps = 0
        for letter in word:
            advanced: Dict[SplitKey, object] = {}
            for (w1, g, w2), coef in state.items():
                steps += 1
                if steps > self.step_cap:
                    raise StepLimitExceeded(
                        f"单词 '{render_word(word)}' 在 BB_{n} 中超过 {self.step_cap} 步")
                for key, c in self._step(w1, g, w2, letter, n):
                    _accumulate(advanced, key, coef * c)
            state = advanced
        return state

    def _step(self, w1: Word, g: str, w2: Word, letter, n: int) -> list:
        kind, index = letter
        top = n - 1
        if kind in ('y', 'Y') or index < top:
            if g in ('1', 'Z'):
                return [((w1 + (letter,), g, ()), self.one)]
            return [((w1, g, w2 + (letter,)), self.one)]
        if index > top:
            raise AlgebraMismatchError(f"字母 {kind}{index} 超出 BB_{n}")
        if kind == 'X':
            # X^{-1} = X - δ + δe
            out = list(self._step(w1, g, w2, X(top), n))
            out.append(((w1, g, w2), -self.delta))
            out.extend((k, c * self.delta) for k, c in self._step(w1, g, w2, E(top), n))
            return out

        gamma = 'X' if kind == 'x' else 'E'
        if g == '1':
            return [((w1, gamma, ()), self.one)]
        if g == 'Z':
            v = yprime(n - 1)
            v_inv = inverse_word(v)
            if gamma == 'X':
                return [((w1, 'X', v), self.one),
                        ((w1, 'Z', ()), self.delta),
                        ((w1 + v_inv, 'E', ()), -self.delta * self.lam)]
            return [((w1 + v_inv, 'E', ()), self.lam)]

        out = []
        for (u1, alpha, u2), cu in self._decompose(w2, n):
            for v1, g2, v2, ct in self._table(g, alpha, gamma, n):
                if g2 in ('1', 'Z'):
                    key = (w1 + u1 + v1 + v2 + u2, g2, ())
                else:
                    key = (w1 + u1 + v1, g2, v2 + u2)
                out.append((key, cu * ct))
        return out

    def _decompose(self, word: Word, n: int) -> list:
        """把 BB_{n-1} 中的单词写成 Σ u₁αu₂，u₁, u₂ ∈ BB_{n-2}"""
        if n == 2:
            a, b = self.fold(word)
            return [(((), alpha, ()), c) for alpha, c in (('1', a), ('V', b)) if c]
        return [((u1, _ALPHA[g], u2), c) for (u1, g, u2), c in self.split(word, n - 1).items()]

    def _table(self, g: str, alpha: str, gamma: str, n: int) -> list:
        """γ₁·α·γ₂ 的乘积，γ₁, γ₂ ∈ {X_{n-1}, e_{n-1}}，结果为 (v₁, γ, v₂, 系数) 列表"""
        key = (g, alpha, gamma, n)
        cached = self._tables.get(key)
        if cached is not None:
            return cached
        one, lam, delta = self.one, self.lam, self.delta
        if alpha == '1':
            table = {
                ('E', 'X'): [((), 'E', (), lam)],
                ('E', 'E'): [((), 'E', (), self.x)],
                ('X', 'X'): [((), '1', (), one), ((), 'X', (), delta), ((), 'E', (), -delta * lam)],
                ('X', 'E'): [((), 'E', (), lam)],
            }
        elif alpha == 'V':
            v = yprime(n - 1)
            v_inv = inverse_word(v)
            eve = [((), 'E', (), self.A)]
            for j in range(1, n - 1):
                eve.append((yprime(j), 'E', (), delta * self.lam_inv))
                eve.append((inverse_word(yprime(j)), 'E', (), -delta))
            table = {
                ('E', 'X'): [((), 'E', v_inv, one)],
                ('E', 'E'): eve,
                ('X', 'X'): [((), 'Z', (), one)],
                ('X', 'E'): [(v_inv, 'E', (), one)],
            }
        else:
            w, w_inv, f = (X(n - 2),), (Xinv(n - 2),), (E(n - 2),)
            if alpha == 'W':
                table = {
                    ('E', 'X'): [((), 'E', f, one)],
                    ('E', 'E'): [((), 'E', (), self.lam_inv)],
                    ('X', 'X'): [(w, 'X', w, one)],
                    ('X', 'E'): [(f, 'E', (), one)],
                }
            else:
                table = {
                    ('E', 'X'): [((), 'E', w_inv, one)],
                    ('E', 'E'): [((), 'E', (), one)],
                    ('X', 'X'): [(w_inv, 'E', w_inv, one)],
                    ('X', 'E'): [(w_inv, 'E', (), one)],
                }
        result = table[(g, gamma)]
        self._tables[key] = result
        return result

    def normal_form_small(self, terms: Dict[Word, object]) -> Dict[Word, object]:
        """BB_2 及以下的结构范式，单词取自 spanning_set(2)"""
        out: Dict[Word, object] = {}
        z = yprime(2)
        for word, coef in terms.items():
            if word_level(word) <= 1:
                a, b = self.fold(word)
                _accumulate(out, (), coef * a)
                _accumulate(out, (Y,), coef * b)
                continue
            for (w1, g, w2), c in self.split(word, 2).items():
                a1, b1 = self.fold(w1)
                c = coef * c
                if g == '1':
                    _accumulate(out, (), c * a1)
                    _accumulate(out, (Y,), c * b1)
                elif g == 'Z':
                    _accumulate(out, z, c * a1)
                    _accumulate(out, z + (Y,), c * b1)
                else:
                    mid = (X(1),) if g == 'X' else (E(1),)
                    a2, b2 = self.fold(w2)
                    _accumulate(out, mid, c * a1 * a2)
                    _accumulate(out, mid + (Y,), c * a1 * b2)
                    _accumulate(out, (Y,) + mid, c * b1 * a2)
                    _accumulate(out, (Y,) + mid + (Y,), c * b1 * b2)
        return out

    def reduce(self, element: Element) -> Element:
        if element.reduced:
            return element
        terms = element.terms
        level = max((word_level(w) for w in terms), default=0)
        if level <= 2:
            normal = self.normal_form_small(terms)
        else:
            from markov_trace import trace_for
            normal = trace_for(self.ground).coordinates(terms, level)
        return Element(normal, element.n, self.ground, reduced=True)

    def is_zero(self, element: Element) -> bool:
        from markov_trace import trace_for
        return trace_for(self.ground).is_zero_terms(element.terms)

    def star(self, element: Element) -> Element:
        terms: Dict[Word, object] = {}
        for word, coef in element.terms.items():
            _accumulate(terms, star_word(word), self.ground.star(coef))
        return Element(terms, element.n, self.ground)

    def bar(self, element: Element) -> Element:
        return Element({bar_word(w): c for w, c in element.terms.items()}, element.n, self.ground)


@lru_cache(maxsize=None)
def algebra_for(ground: Ground) -> BBAlgebra:
    return BBAlgebra(ground)


def reduce(element: Element) -> Element:
    return algebra_for(element.ground).reduce(element)


def mul(a: Element, b: Element) -> Element:
    return reduce(a * b)


def star(element: Element) -> Element:
    return algebra_for(element.ground).star(element)


def bar(element: Element) -> Element:
    return algebra_for(element.ground).bar(element)


def project_hecke(element: Element) -> Element:
    """丢弃含 e 的生成单词，得到 BB_n/I_n ≅ HB_n 中的代表元"""
    reduced = reduce(element)
    kept = {w: c for w, c in reduced.terms.items() if not has_e(w)}
    return Element(kept, element.n, element.ground, reduced=True)


def is_zero(element: Element) -> bool:
    return algebra_for(element.ground).is_zero(element)


def verify_relation(lhs: Element, rhs: Element, mode: str = 'symbolic',
                    N: int = Config.TENSOR_N, seed: int = Config.SEED) -> bool:
    """
    symbolic：在基域上精确判定 lhs - rhs = 0；
    numeric：比较张量表示在随机有理数 q 处的矩阵像
    """
    lhs._check(rhs)
    if mode == 'symbolic':
        return is_zero(lhs - rhs)
    if mode == 'numeric':
        from tensor_rep import images_agree
        return images_agree(lhs, rhs, N=N, seed=seed)
    raise ValueError(f"未知模式: {mode}")
