"""
BB_n 在 V^{⊗n} 上的张量表示 φ、矩阵迹 Ψ，以及 Baxter 化的 YBE / 反射方程检查

矩阵使用稀疏 DomainMatrix，系数域取自 TensorGround：符号模式为 Q(s, t1, t2)，
数值模式为 Q。参数特化为 λ = q^{1-N}，q₁ = q^{-1} - 1。
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from sympy.polys.matrices import DomainMatrix

from algebra import Element
from coeffs import PoleError, TensorGround
from config import Config
from markov_trace import markov_trace
from words import E, Letter, Word, X, Y


class RepresentationError(ValueError):
    """元素、股数或基域与张量表示不匹配"""


@dataclass(frozen=True)
class RepConfig:
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise RepresentationError(f"m 必须不小于1: {self.m}")

    @classmethod
    def from_N(cls, N: int) -> 'RepConfig':
        if N < 3 or N % 2 == 0:
            raise RepresentationError(f"N 必须是不小于3的奇数: {N}")
        return cls((N - 1) // 2)

    @property
    def N(self) -> int:
        return 2 * self.m + 1

    @property
    def I(self) -> Tuple[int, ...]:
        """{-N+2, …, -1, 0, 1, …, N-2}，升序"""
        return tuple(i for i in range(-(self.N - 2), self.N - 1) if i == 0 or i % 2)

    def position(self, i: int) -> int:
        return self.I.index(i)


def _entries(matrix: DomainMatrix):
    for i, row in matrix.to_sparse().rep.items():
        for j, value in row.items():
            if value:
                yield i, j, value


def _from_entries(entries: Dict[Tuple[int, int], object], size: int, domain) -> DomainMatrix:
    rows: Dict[int, Dict[int, object]] = {}
    for (i, j), value in entries.items():
        if value:
            rows.setdefault(i, {})[j] = value
    return DomainMatrix(rows, (size, size), domain)


def is_zero_matrix(matrix: DomainMatrix) -> bool:
    return next(_entries(matrix), None) is None


class TensorRep:
    """固定 TensorGround 上的表示；字母与单词的矩阵按股数缓存"""

    def __init__(self, ground: TensorGround):
        if not isinstance(ground, TensorGround):
            raise RepresentationError(f"张量表示需要 TensorGround，得到 {ground!r}")
        self.ground = ground
        self.cfg = RepConfig.from_N(ground.N)
        self.domain = ground.domain
        self.one = ground.one
        self.zero = ground.zero
        self.s = ground.s
        c = ground.constants
        self.q, self.delta, self.q0, self.q1 = c.q, c.delta, c.q0, c.q1
        self.lam, self.x = c.lam, c.x
        self._letters: Dict[Tuple[Letter, int], DomainMatrix] = {}
        self._words: Dict[Tuple[Word, int], DomainMatrix] = {}

    def spow(self, e: int):
        """s^e，负指数取倒数"""
        return self.s**e if e >= 0 else self.one / self.s**(-e)

    def _pair(self, a: int, c: int) -> int:
        pos = self.cfg.position
        return pos(a) * self.cfg.N + pos(c)

    def combine(self, terms: List[Tuple[object, DomainMatrix]]) -> DomainMatrix:
        """Σ c·M，所有矩阵同阶"""
        size = terms[0][1].shape[0]
        entries: Dict[Tuple[int, int], object] = {}
        for coef, matrix in terms:
            if not coef:
                continue
            for i, j, value in _entries(matrix):
                entries[(i, j)] = entries.get((i, j), self.zero) + coef * value
        return _from_entries(entries, size, self.domain)

    def identity(self, size: int) -> DomainMatrix:
        return _from_entries({(k, k): self.one for k in range(size)}, size, self.domain)

    def kron(self, a: DomainMatrix, b: DomainMatrix) -> DomainMatrix:
        rb = b.shape[0]
        entries = {}
        b_entries = list(_entries(b))
        for i, j, x in _entries(a):
            for k, m, y in b_entries:
                entries[(i * rb + k, j * rb + m)] = x * y
        return _from_entries(entries, a.shape[0] * rb, self.domain)

    @lru_cache(maxsize=None)
    def build_B(self) -> DomainMatrix:
        """置换 R 矩阵；f_{a,b}⊗f_{c,d} 把 v_b⊗v_d 送到 v_a⊗v_c"""
        I = self.cfg.I
        q_inv = self.one / self.q
        entries: Dict[Tuple[int, int], object] = {}

        def add(row, col, value):
            entries[(row, col)] = entries.get((row, col), self.zero) + value

        for i in I:
            if i != 0:
                add(self._pair(i, i), self._pair(i, i), self.q)
                add(self._pair(i, -i), self._pair(-i, i), q_inv)
            for j in I:
                if j != i and j != -i:
                    add(self._pair(i, j), self._pair(j, i), self.one)
                if i < j:
                    add(self._pair(i, j), self._pair(i, j), self.delta)
                if j < -i:
                    add(self._pair(i, -i), self._pair(j, -j), -self.delta * self.spow(i + j))
        add(self._pair(0, 0), self._pair(0, 0), self.one)
        return _from_entries(entries, self.cfg.N**2, self.domain)

    @lru_cache(maxsize=None)
    def build_E(self) -> DomainMatrix:
        I = self.cfg.I
        entries = {(self._pair(i, -i), self._pair(j, -j)): self.spow(i + j) for i in I for j in I}
        return _from_entries(entries, self.cfg.N**2, self.domain)

    @lru_cache(maxsize=None)
    def build_F(self) -> DomainMatrix:
        """Y 的表示矩阵：-f_{0,0} + s^{-1}Σ_{i≠0} f_{-i,i} + (q^{-1}-1)Σ_{i>0} f_{i,i}"""
        pos = self.cfg.position
        entries = {(pos(0), pos(0)): -self.one}
        for i in self.cfg.I:
            if i != 0:
                entries[(pos(-i), pos(i))] = self.spow(-1)
            if i > 0:
                entries[(pos(i), pos(i))] = self.one / self.q - self.one
        return _from_entries(entries, self.cfg.N, self.domain)

    @lru_cache(maxsize=None)
    def build_D(self) -> DomainMatrix:
        pos = self.cfg.position
        return _from_entries({(pos(i), pos(i)): self.spow(2 * i) for i in self.cfg.I},
                             self.cfg.N, self.domain)

    @lru_cache(maxsize=None)
    def inverses(self) -> Tuple[DomainMatrix, DomainMatrix]:
        """B^{-1} = B - δ + δE，F^{-1} = q₀^{-1}F - q₁q₀^{-1}"""
        q0_inv = self.one / self.q0
        b_inv = self.combine([(self.one, self.build_B()), (-self.delta, self.identity(self.cfg.N**2)),
                              (self.delta, self.build_E())])
        f_inv = self.combine([(q0_inv, self.build_F()), (-self.q1 * q0_inv, self.identity(self.cfg.N))])
        return b_inv, f_inv

    def letter_matrix(self, letter: Letter, n: int) -> DomainMatrix:
        key = (letter, n)
        cached = self._letters.get(key)
        if cached is not None:
            return cached
        kind, index = letter
        N = self.cfg.N
        b_inv, f_inv = self.inverses()
        if kind in ('y', 'Y'):
            core, before, after = (self.build_F() if kind == 'y' else f_inv), 0, n - 1
        else:
            if not 1 <= index <= n - 1:
                raise RepresentationError(f"字母 {kind}{index} 超出 {n} 股")
            core = {'x': self.build_B(), 'X': b_inv, 'e': self.build_E()}[kind]
            before, after = index - 1, n - index - 1
        matrix = core
        if before:
            matrix = self.kron(self.identity(N**before), matrix)
        if after:
            matrix = self.kron(matrix, self.identity(N**after))
        self._letters[key] = matrix
        return matrix

    def word_matrix(self, word: Word, n: int) -> DomainMatrix:
        key = (word, n)
        cached = self._words.get(key)
        if cached is None:
            cached = self.identity(self.cfg.N**n)
            for letter in word:
                cached = cached.matmul(self.letter_matrix(letter, n))
            self._words[key] = cached
        return cached

    def represent(self, element: Element, n: Optional[int] = None) -> DomainMatrix:
        n = element.n if n is None else n
        if n < element.n:
            raise RepresentationError(f"BB_{element.n} 的元素不能在 {n} 股上表示")
        if element.ground != self.ground and not element.ground.is_symbolic:
            raise RepresentationError(f"无法把 {element.ground!r} 上的系数送入 {self.ground!r}")
        if not element.terms:
            return _from_entries({}, self.cfg.N**n, self.domain)
        terms = [(self.ground.lift(coef), self.word_matrix(word, n))
                 for word, coef in element.terms.items()]
        return self.combine(terms)

    def psi(self, matrix: DomainMatrix, n: int):
        """Ψ(M) = Tr(M·D^{⊗n}) / Tr(D^{⊗n})"""
        weights = [self.one]
        diag = [self.spow(2 * i) for i in self.cfg.I]
        for _ in range(n):
            weights = [w * d for w in weights for d in diag]
        rows = matrix.to_sparse().rep
        total = self.zero
        for k, weight in enumerate(weights):
            value = rows.get(k, {}).get(k)
            if value:
                total += value * weight
        return total / sum(weights, self.zero)


@lru_cache(maxsize=None)
def rep_for(ground: TensorGround) -> TensorRep:
    return TensorRep(ground)


def _rep(cfg: RepConfig, ground: Optional[TensorGround]) -> TensorRep:
    ground = ground or TensorGround(cfg.N)
    if ground.N != cfg.N:
        raise RepresentationError(f"基域的 N={ground.N} 与配置 N={cfg.N} 不一致")
    return rep_for(ground)


def build_B(cfg: RepConfig, ground: Optional[TensorGround] = None) -> DomainMatrix:
    return _rep(cfg, ground).build_B()


def build_E(cfg: RepConfig, ground: Optional[TensorGround] = None) -> DomainMatrix:
    return _rep(cfg, ground).build_E()


def build_F(cfg: RepConfig, ground: Optional[TensorGround] = None) -> DomainMatrix:
    return _rep(cfg, ground).build_F()


def build_D(cfg: RepConfig, ground: Optional[TensorGround] = None) -> DomainMatrix:
    return _rep(cfg, ground).build_D()


def represent(element: Element, n: int, ground: TensorGround) -> DomainMatrix:
    return rep_for(ground).represent(element, n)


def psi(matrix: DomainMatrix, n: int, ground: TensorGround):
    return rep_for(ground).psi(matrix, n)


def dump_matrix(matrix: DomainMatrix, ground: TensorGround) -> List[str]:
    """按行优先输出标量字符串"""
    return [ground.render(value) for row in matrix.to_list() for value in row]


def baxter_R(i: int, t, n: int, ground: TensorGround) -> Element:
    """R_i(t) = -δt(t+qλ^{-1}) + (t-1)(t+qλ^{-1})X_i + δt(t-1)e_i"""
    c = ground.constants
    t = ground.coerce(t)
    shift = t + c.q / c.lam
    one = ground.one
    return Element.from_terms([(-c.delta * t * shift, ()),
                               ((t - one) * shift, (X(i),)),
                               (c.delta * t * (t - one), (E(i),))], n, ground)


def reflection_K(t, n: int, ground: TensorGround) -> Element:
    """K(t) = t²q₁/(1-t²) + Y，取 f₁ ≡ 1"""
    c = ground.constants
    t = ground.coerce(t)
    pole = ground.one - t * t
    if not pole:
        raise PoleError("K(t) 在 t = ±1 处有极点")
    return Element.from_terms([(t * t * c.q1 / pole, ()), (ground.one, (Y,))], n, ground)


def _product(rep: TensorRep, factors: List[Element], n: int) -> DomainMatrix:
    matrix = rep.identity(rep.cfg.N**n)
    for factor in factors:
        matrix = matrix.matmul(rep.represent(factor, n))
    return matrix


def ybe_residual(ground: TensorGround, n: int = 3) -> DomainMatrix:
    """R₁(t₁)R₂(t₁t₂)R₁(t₂) - R₂(t₂)R₁(t₁t₂)R₂(t₁)"""
    if n < 3:
        raise RepresentationError("YBE 需要至少3股")
    rep = rep_for(ground)
    a, b = ground.spectral
    lhs = _product(rep, [baxter_R(1, a, n, ground), baxter_R(2, a * b, n, ground),
                         baxter_R(1, b, n, ground)], n)
    rhs = _product(rep, [baxter_R(2, b, n, ground), baxter_R(1, a * b, n, ground),
                         baxter_R(2, a, n, ground)], n)
    return rep.combine([(rep.one, lhs), (-rep.one, rhs)])


def reflection_residual(ground: TensorGround, n: int = 2) -> DomainMatrix:
    """R(t₁/t₂)K₁(t₁)R(t₁t₂)K₁(t₂) - K₁(t₂)R(t₁t₂)K₁(t₁)R(t₁/t₂)"""
    if n < 2:
        raise RepresentationError("反射方程需要至少2股")
    rep = rep_for(ground)
    a, b = ground.spectral
    ratio = a / b
    lhs = _product(rep, [baxter_R(1, ratio, n, ground), reflection_K(a, n, ground),
                         baxter_R(1, a * b, n, ground), reflection_K(b, n, ground)], n)
    rhs = _product(rep, [reflection_K(b, n, ground), baxter_R(1, a * b, n, ground),
                         reflection_K(a, n, ground), baxter_R(1, ratio, n, ground)], n)
    return rep.combine([(rep.one, lhs), (-rep.one, rhs)])


def cubic_residual(ground: TensorGround) -> DomainMatrix:
    """(B - λ)(B + q^{-1})(B - q)"""
    rep = rep_for(ground)
    size = rep.cfg.N**2
    b, eye = rep.build_B(), rep.identity(size)
    out = eye
    for root in (rep.lam, -rep.one / rep.q, rep.q):
        out = out.matmul(rep.combine([(rep.one, b), (-root, eye)]))
    return out


def matrix_identities(ground: TensorGround) -> List[Tuple[str, bool]]:
    """E = 1 - (B - B^{-1})/δ，E² = xE，F² = q₁F + q₀，E(F⊗1)B(F⊗1) = E"""
    rep = rep_for(ground)
    N = rep.cfg.N
    B, E, F = rep.build_B(), rep.build_E(), rep.build_F()
    b_inv, _ = rep.inverses()
    eye2 = rep.identity(N**2)
    d_inv = rep.one / rep.delta
    checks = []
    from_bb = rep.combine([(rep.one, eye2), (-d_inv, B), (d_inv, b_inv), (-rep.one, E)])
    checks.append(("E = 1 - (B - B^-1)/δ", is_zero_matrix(from_bb)))
    checks.append(("B·B^-1 = 1", is_zero_matrix(rep.combine([(rep.one, B.matmul(b_inv)),
                                                              (-rep.one, eye2)]))))
    checks.append(("E² = xE", is_zero_matrix(rep.combine([(rep.one, E.matmul(E)), (-rep.x, E)]))))
    eye1 = rep.identity(N)
    checks.append(("F² = q₁F + q₀", is_zero_matrix(rep.combine(
        [(rep.one, F.matmul(F)), (-rep.q1, F), (-rep.q0, eye1)]))))
    f1 = rep.kron(F, eye1)
    efbf = E.matmul(f1).matmul(B).matmul(f1)
    checks.append(("E(F⊗1)B(F⊗1) = E", is_zero_matrix(rep.combine([(rep.one, efbf), (-rep.one, E)]))))
    return checks


def random_tensor_ground(N: int, rng: random.Random, bound: int = Config.EVAL_BOUND) -> TensorGround:
    """随机有理数 (s, t1, t2)，避开 s⁴ = 1 与 t = ±1 等极点"""
    while True:
        values = [Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(3)]
        s_value, a, b = values
        if not a or not b or a * a == 1 or b * b == 1 or (a * b)**2 == 1 or a == b:
            continue
        try:
            return TensorGround(N, (s_value, a, b))
        except PoleError:
            continue


def images_agree(lhs: Element, rhs: Element, N: int = Config.TENSOR_N,
                 seed: int = Config.SEED, trials: int = Config.NUMERIC_TRIALS) -> bool:
    """在若干随机有理数 s 处比较两侧的矩阵像"""
    rng = random.Random(seed)
    n = max(lhs.n, rhs.n)
    done = 0
    while done < trials:
        ground = random_tensor_ground(N, rng)
        try:
            difference = rep_for(ground).combine([(ground.one, represent(lhs, n, ground)),
                                                  (-ground.one, represent(rhs, n, ground))])
        except PoleError:
            continue
        if not is_zero_matrix(difference):
            return False
        done += 1
    return True


def trace_matches_psi(word: Word, n: int, ground: TensorGround) -> Tuple[bool, str, str]:
    """特化后的抽象迹与 Ψ∘φ 比较，返回 (是否一致, tr, Ψ)"""
    rep = rep_for(ground)
    abstract = markov_trace(Element.from_word(word, n, ground))
    matrix = rep.psi(rep.word_matrix(word, n), n)
    return abstract == matrix, ground.render(abstract), ground.render(matrix)
