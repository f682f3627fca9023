"""
条件期望 ε_n、Markov 迹、迹形式的 Gram 矩阵以及 H_n 闭包恒等式
"""

from __future__ import annotations

import os
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

import pandas as pd
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from algebra import (BBAlgebra, Element, _accumulate, algebra_for, chains, is_zero,
                     spanning_pairs, spanning_set)
from coeffs import EvalPoint, Ground, PointGround, TensorGround, symbolic_ground
from words import (E, Word, X, Xinv, bar_word, inverse_word, render_word, star_word,
                   word_level, yprime)


class MarkovTrace:
    """
    tr 按约化形式结构递归计算：tr(w₁γw₂) = tr(γ)·tr(w₁w₂)，
    其中 tr(e_{n-1}) = x^{-1}，tr(X_{n-1}) = x^{-1}λ^{-1}，Y'_n 的期望为 c_n ∈ BB_{n-1}。
    """

    def __init__(self, algebra: BBAlgebra):
        self.algebra = algebra
        self.ground = algebra.ground
        self._trace_cache: Dict[Word, object] = {}
        self._c_cache: Dict[int, list] = {}
        self._gram_cache: Dict[int, DomainMatrix] = {}
        self._solver_cache: Dict[int, list] = {}

    def c_terms(self, k: int) -> List[Tuple[Word, object]]:
        """ε_{k-1}(Y'_k) = Ax^{-1} + δx^{-1}·Σ_{j<k}(λ^{-1}Y'_j - Y'_j^{-1})"""
        cached = self._c_cache.get(k)
        if cached is None:
            alg = self.algebra
            scale = alg.delta * alg.x_inv
            cached = [((), alg.A * alg.x_inv)]
            for j in range(1, k):
                cached.append((yprime(j), scale * alg.lam_inv))
                cached.append((inverse_word(yprime(j)), -scale))
            self._c_cache[k] = cached
        return cached

    def cond_expect_word(self, word: Word, n: int) -> Dict[Word, object]:
        """ε_{n-1}: BB_n → BB_{n-1}，结果为未约化的单词组合"""
        alg = self.algebra
        if word_level(word) < n:
            return {word: alg.one}
        if n == 1:
            a, b = alg.fold(word)
            value = a + b * alg.A * alg.x_inv
            return {(): value} if value else {}
        out: Dict[Word, object] = {}
        for (w1, g, w2), c in alg.split(word, n).items():
            if g == '1':
                _accumulate(out, w1, c)
            elif g == 'E':
                _accumulate(out, w1 + w2, c * alg.x_inv)
            elif g == 'X':
                _accumulate(out, w1 + w2, c * alg.x_inv * alg.lam_inv)
            else:
                for w, cc in self.c_terms(n):
                    _accumulate(out, w1 + w, c * cc)
        return out

    def cond_expect_terms(self, terms: Dict[Word, object], n: int) -> Dict[Word, object]:
        out: Dict[Word, object] = {}
        for word, coef in terms.items():
            for w, c in self.cond_expect_word(word, n).items():
                _accumulate(out, w, coef * c)
        return out

    def trace_word(self, word: Word):
        cached = self._trace_cache.get(word)
        if cached is not None:
            return cached
        alg = self.algebra
        level = word_level(word)
        if level == 0:
            value = alg.one
        elif level == 1:
            a, b = alg.fold(word)
            value = a + b * alg.A * alg.x_inv
        else:
            value = alg.zero
            for (w1, g, w2), c in alg.split(word, level).items():
                if g == '1':
                    value += c * self.trace_word(w1)
                elif g == 'E':
                    value += c * alg.x_inv * self.trace_word(w1 + w2)
                elif g == 'X':
                    value += c * alg.x_inv * alg.lam_inv * self.trace_word(w1 + w2)
                else:
                    for w, cc in self.c_terms(level):
                        value += c * cc * self.trace_word(w1 + w)
        self._trace_cache[word] = value
        return value

    def trace_terms(self, terms: Dict[Word, object]):
        value = self.algebra.zero
        for word, coef in terms.items():
            value += coef * self.trace_word(word)
        return value

    def is_zero_terms(self, terms: Dict[Word, object]) -> bool:
        """
        a ∈ BB_m 为零当且仅当对所有左链 t ∈ T_m 有 ε_{m-1}(a·t) = 0，
        递归到 BB_2 用结构范式判定。

        m ≥ 3 时依赖迹形式非退化：符号基域上成立；PointGround 只在一般求值点成立，
        恰好落在 Gram 行列式零点上时可能把非零元判为零；TensorGround 上不成立，直接拒绝。
        """
        terms = {w: c for w, c in terms.items() if c}
        if not terms:
            return True
        level = max(word_level(w) for w in terms)
        if level <= 2:
            return not self.algebra.normal_form_small(terms)
        if isinstance(self.ground, TensorGround):
            raise ValueError(f"{self.ground!r} 上迹形式退化，BB_{level} 的零判定请改用矩阵像比较")
        for t in chains(level):
            shifted = {}
            for word, coef in terms.items():
                _accumulate(shifted, word + t, coef)
            if not self.is_zero_terms(self.cond_expect_terms(shifted, level)):
                return False
        return True

    def _lower(self, terms: Dict[Word, object], n: int) -> Dict[Word, object]:
        """BB_{n-1} 中的组合在 n-1 ≤ 2 时压缩为结构范式以减少迹调用"""
        return self.algebra.normal_form_small(terms) if n - 1 <= 2 else terms

    def gram_matrix(self, n: int) -> DomainMatrix:
        """
        G_ij = tr(v_i·v_j*)。v = t·b 时利用 tr(v_i v_j*) = tr(ε_{n-1}(t_j* t_i)·b_i·b_j*)
        """
        cached = self._gram_cache.get(n)
        if cached is not None:
            return cached
        pairs = spanning_pairs(n)
        size = len(pairs)
        rows: Dict[int, Dict[int, object]] = {}
        if n <= 1:
            for i, (ti, bi) in enumerate(pairs):
                for j, (tj, bj) in enumerate(pairs):
                    value = self.trace_word(ti + bi + star_word(tj + bj))
                    if value:
                        rows.setdefault(i, {})[j] = value
        else:
            eps: Dict[Tuple[Word, Word], Dict[Word, object]] = {}
            for i, (ti, bi) in enumerate(pairs):
                for j, (tj, bj) in enumerate(pairs):
                    key = (tj, ti)
                    if key not in eps:
                        eps[key] = self._lower(self.cond_expect_word(star_word(tj) + ti, n), n)
                    tail = bi + star_word(bj)
                    value = self.algebra.zero
                    for w, c in eps[key].items():
                        value += c * self.trace_word(w + tail)
                    if value:
                        rows.setdefault(i, {})[j] = value
        gram = DomainMatrix(rows, (size, size), self.ground.domain)
        self._gram_cache[n] = gram
        return gram

    def _solver(self, n: int) -> list:
        cached = self._solver_cache.get(n)
        if cached is None:
            try:
                inverse = self.gram_matrix(n).transpose().inv()
            except DMNonInvertibleMatrixError as e:
                raise ValueError(f"BB_{n} 的 Gram 矩阵在 {self.ground!r} 上奇异") from e
            cached = inverse.to_list()
            self._solver_cache[n] = cached
        return cached

    def coordinates(self, terms: Dict[Word, object], n: int) -> Dict[Word, object]:
        """解 G^T c = (tr(a·v_j*))_j 得到 a 在 spanning_set(n) 上的坐标"""
        pairs = spanning_pairs(n)
        inverse = self._solver(n)
        by_chain: Dict[Word, Dict[Word, object]] = {}
        rhs = []
        for tj, bj in pairs:
            if tj not in by_chain:
                shifted = {}
                for word, coef in terms.items():
                    _accumulate(shifted, star_word(tj) + word, coef)
                by_chain[tj] = self._lower(self.cond_expect_terms(shifted, n), n)
            tail = star_word(bj)
            value = self.algebra.zero
            for w, c in by_chain[tj].items():
                value += c * self.trace_word(w + tail)
            rhs.append(value)
        out: Dict[Word, object] = {}
        for (t, b), row in zip(pairs, inverse):
            value = self.algebra.zero
            for coef, r in zip(row, rhs):
                if coef and r:
                    value += coef * r
            _accumulate(out, t + b, value)
        return out


@lru_cache(maxsize=None)
def trace_for(ground: Ground) -> MarkovTrace:
    return MarkovTrace(algebra_for(ground))


def cond_expect(a: Element) -> Element:
    if a.n < 1:
        raise ValueError("BB_0 上没有条件期望")
    engine = trace_for(a.ground)
    return Element(engine.cond_expect_terms(a.terms, a.n), a.n - 1, a.ground)


def markov_trace(a: Element):
    return trace_for(a.ground).trace_terms(a.terms)


def gram_matrix(n: int, ground: Optional[Ground] = None) -> DomainMatrix:
    return trace_for(ground or symbolic_ground()).gram_matrix(n)


def gram_rank(n: int, point: EvalPoint) -> int:
    return gram_matrix(n, PointGround(point)).rank()


def chain_x(i: int, j: int, inverse: bool = False) -> Word:
    """X(i,j) = X_i X_{i+1}···X_j，j < i 时为空"""
    make = Xinv if inverse else X
    return tuple(make(k) for k in range(i, j + 1))


def chain_e(i: int, j: int) -> Word:
    """E(i,j) = e_i e_{i+2}···e_j"""
    return tuple(E(k) for k in range(i, j + 1, 2))


@lru_cache(maxsize=None)
def closure_element(n: int) -> Word:
    """H_1 = e_1，H_{k+1} = e_{k+1}·X(k+2,2k+1)·X(k+1,2k)·H_k，位于 BB_{2n}"""
    if n < 1:
        raise ValueError("H_n 需要 n ≥ 1")
    h: Word = (E(1),)
    for k in range(1, n):
        h = (E(k + 1),) + chain_x(k + 2, 2 * k + 1) + chain_x(k + 1, 2 * k) + h
    return h


def closure_identity_check(n: int, a: Element) -> bool:
    """H̄_n·a·H_n = x^n·tr(a)·E(1,2n-1) 在 BB_{2n} 中成立"""
    if a.n > n:
        raise ValueError(f"元素必须位于 BB_{n} 中")
    ground = a.ground
    h = closure_element(n)
    hb = bar_word(h)
    m = 2 * n
    lhs = Element({hb + w + h: c for w, c in a.terms.items()}, m, ground)
    value = ground.constants.x**n * markov_trace(a)
    rhs = Element({chain_e(1, 2 * n - 1): value}, m, ground)
    return is_zero(lhs - rhs)


def trace_table(n: int, ground: Optional[Ground] = None) -> pd.DataFrame:
    ground = ground or symbolic_ground()
    engine = trace_for(ground)
    rows = [{'word': render_word(w), 'trace': ground.render(engine.trace_word(w))}
            for w in spanning_set(n)]
    return pd.DataFrame(rows, columns=['word', 'trace'])


def write_golden_file(n: int, path: str, ground: Optional[Ground] = None) -> str:
    """每个生成单词一行：<word> TAB <scalar>"""
    table = trace_table(n, ground)
    os.makedirs(os.path.dirname(path) or '.', exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        for word, value in zip(table['word'], table['trace']):
            f.write(f"{word}\t{value}\n")
    return path


def read_golden_file(path: str) -> Dict[str, str]:
    golden = {}
    with open(path, 'r', encoding='utf-8') as f:
        for line in f:
            line = line.rstrip('\n')
            if not line:
                continue
            word, value = line.split('\t')
            golden[word] = value
    return golden
