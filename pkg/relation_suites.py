"""
命名关系清单：定义关系、A 型引理、B 型引理、闭包元恒等式，以及张量表示上的检查
"""

from __future__ import annotations

import random
from typing import Callable, List, Tuple

from algebra import Element, spanning_set, verify_relation
from coeffs import TensorGround, derived_constants, symbolic_ground
from config import Config
from markov_trace import chain_e, chain_x, closure_element, closure_identity_check
from tensor_rep import (cubic_residual, images_agree, is_zero_matrix, matrix_identities,
                        random_tensor_ground, reflection_residual, represent,
                        trace_matches_psi, ybe_residual)
from words import (E, Word, X, Xinv, Y, YINV, bar_word, inverse_word, render_word,
                   yprime, ysub)

Case = Tuple[str, Element, Element]

ALGEBRA_SUITES = ('def', 'lemma-A', 'lemma-B', 'closure')
TENSOR_SUITES = ('ybe', 'reflection', 'trace-psi', 'cubic', 'matrix')

# 带谱参数的检查在数值模式下取的随机点个数
SPECTRAL_POINTS = 5


def _el(n: int, *pairs) -> Element:
    """pairs 为 (系数, 单词) 序列"""
    return Element.from_terms(pairs, n, symbolic_ground())


def _w(n: int, word: Word) -> Element:
    return _el(n, (1, word))


def _zero(n: int) -> Element:
    return Element({}, n, symbolic_ground())


def _pm(sign: int, i: int):
    return X(i) if sign > 0 else Xinv(i)


def _neighbors(n: int):
    """|i-j| = 1 的有序下标对"""
    return [(i, j) for i in range(1, n) for j in (i - 1, i + 1) if 1 <= j <= n - 1]


def def_cases(n: int) -> List[Case]:
    c = derived_constants()
    lam, lam_inv = c.lam, 1 / c.lam
    cases: List[Case] = []
    for i in range(1, n):
        for j in range(i + 2, n):
            cases.append((f"def2 X{i}X{j}", _w(n, (X(i), X(j))), _w(n, (X(j), X(i)))))
    for i in range(1, n - 1):
        cases.append((f"def3 i={i}", _w(n, (X(i), X(i + 1), X(i))),
                      _w(n, (X(i + 1), X(i), X(i + 1)))))
    for i in range(1, n):
        cases.append((f"def4 X{i}e{i}", _w(n, (X(i), E(i))), _el(n, (lam, (E(i),)))))
        cases.append((f"def4 e{i}X{i}", _w(n, (E(i), X(i))), _el(n, (lam, (E(i),)))))
    for i in range(2, n):
        cases.append((f"def5+ i={i}", _w(n, (E(i), X(i - 1), E(i))), _el(n, (lam_inv, (E(i),)))))
        cases.append((f"def5- i={i}", _w(n, (E(i), Xinv(i - 1), E(i))), _el(n, (lam, (E(i),)))))
    if n >= 2:
        cases.append(("def6", _w(n, (X(1), Y, X(1), Y)), _w(n, (Y, X(1), Y, X(1)))))
    if n >= 1:
        cases.append(("def7", _w(n, (Y, Y)), _el(n, (c.q1, (Y,)), (c.q0, ()))))
    if n >= 2:
        cases.append(("def8", _w(n, (Y, X(1), Y, E(1))), _w(n, (E(1),))))
    for i in range(2, n):
        cases.append((f"def9 i={i}", _w(n, (Y, X(i))), _w(n, (X(i), Y))))
    if n >= 2:
        cases.append(("def10", _w(n, (E(1), Y, E(1))), _el(n, (c.A, (E(1),)))))
    return cases


def lemma_a_cases(n: int) -> List[Case]:
    c = derived_constants()
    lam, delta, x = c.lam, c.delta, c.x
    lam_inv = 1 / lam
    cases: List[Case] = []
    for i in range(1, n):
        xi, xi_inv, ei = X(i), Xinv(i), E(i)
        cases.append((f"lem1a i={i}", _w(n, (ei, ei)), _el(n, (x, (ei,)))))
        cases.append((f"lem1d i={i}", _w(n, (xi_inv,)),
                      _el(n, (1, (xi,)), (-delta, ()), (delta, (ei,)))))
        cases.append((f"lem1e i={i}", _w(n, (xi, xi)),
                      _el(n, (1, ()), (delta, (xi,)), (-delta * lam, (ei,)))))
        cases.append((f"lem1b i={i}", _w(n, (xi, xi, xi)),
                      _el(n, (lam + delta, (xi, xi)), (1 - lam * delta, (xi,)), (-lam, ()))))
        cases.append((f"lem1q i={i}", _w(n, (xi_inv, xi_inv)),
                      _el(n, (1 + delta**2, ()), (-delta, (xi,)), (delta * (lam_inv - delta), (ei,)))))
        cases.append((f"lem1q' i={i}", _w(n, (xi_inv, xi_inv)),
                      _el(n, (1, ()), (-delta, (xi_inv,)), (delta * lam_inv, (ei,)))))
        cubic = _w(n, ())
        for root in (lam, -1 / c.q, c.q):
            cubic = cubic * _el(n, (1, (xi,)), (-root, ()))
        cases.append((f"lem1c i={i}", cubic, _zero(n)))
        for j in range(i + 2, n):
            cases.append((f"lem1f e{i}e{j}", _w(n, (ei, E(j))), _w(n, (E(j), ei))))
    for i, j in _neighbors(n):
        ei, ej = E(i), E(j)
        tag = f"i={i},j={j}"
        for sign in (1, -1):
            s = '+' if sign > 0 else '-'
            xj, xi = _pm(sign, j), _pm(sign, i)
            cases.append((f"lem1g{s} {tag}", _w(n, (Xinv(i), xj, X(i))),
                          _w(n, (X(j), xi, Xinv(j)))))
            cases.append((f"lem1h{s} {tag}", _w(n, (ei, xj, xi)), _w(n, (xj, xi, ej))))
            cases.append((f"lem1j{s} {tag}", _w(n, (ei, xj, ei)),
                          _el(n, (lam_inv if sign > 0 else lam, (ei,)))))
            cases.append((f"lem1k{s} {tag}", _w(n, (xi, ej, ei)), _w(n, (_pm(-sign, j), ei))))
            cases.append((f"lem1kk{s} {tag}", _w(n, (ei, ej, xi)), _w(n, (ei, _pm(-sign, j)))))
            cases.append((f"lem1m{s} {tag}", _w(n, (ei, xj, xi)), _w(n, (ei, ej))))
            cases.append((f"lem1mm{s} {tag}", _w(n, (xi, xj, ei)), _w(n, (ej, ei))))
        cases.append((f"lem1l {tag}", _w(n, (ei, ej, ei)), _w(n, (ei,))))
        cases.append((f"lem1i {tag}", _w(n, (X(i), ej, Xinv(i))), _w(n, (Xinv(j), ei, X(j)))))
        cases.append((f"lem1p {tag}", _w(n, (X(i), ej, X(i))), _w(n, (Xinv(j), ei, Xinv(j)))))
    return cases


def lemma_b_cases(n: int) -> List[Case]:
    c = derived_constants()
    lam, delta, A, q0, q1 = c.lam, c.delta, c.A, c.q0, c.q1
    lam_inv, q0_inv = 1 / lam, 1 / q0
    cases: List[Case] = []
    if n >= 1:
        cases.append(("lem2a", _w(n, (YINV,)), _el(n, (q0_inv, (Y,)), (-q1 * q0_inv, ()))))
    for i in range(1, n + 1):
        yi = ysub(i)
        cases.append((f"lem2aa i={i}", _w(n, yi + yi), _el(n, (q1, yi), (q0, ()))))
        cases.append((f"lem2aaa i={i}", _w(n, inverse_word(yi)),
                      _el(n, (q0_inv, yi), (-q1 * q0_inv, ()))))
    if n >= 2:
        z = (X(1), Y, X(1), Y)
        for name, g in (("Y", (Y,)), ("e1", (E(1),)), ("X1", (X(1),))):
            cases.append((f"lem2b [Z,{name}]", _w(n, z + g), _w(n, g + z)))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            cases.append((f"lem2f i={i},j={j}", _w(n, yprime(i) + yprime(j)),
                          _w(n, yprime(j) + yprime(i))))
    for i in range(1, n):
        cases.append((f"lem2g' i={i}", _w(n, yprime(i + 1) + (Xinv(i),)),
                      _w(n, (X(i),) + yprime(i))))
        cases.append((f"lem2g i={i}", _w(n, ysub(i + 1) + (X(i),)), _w(n, (X(i),) + ysub(i))))
    for i in range(1, n + 1):
        for j in range(1, n):
            if j in (i, i - 1):
                continue
            for g in ((X(j),), (E(j),)):
                label = render_word(g)
                cases.append((f"lem2h i={i},{label}", _w(n, ysub(i) + g), _w(n, g + ysub(i))))
                cases.append((f"lem2hh i={i},{label}", _w(n, yprime(i) + g), _w(n, g + yprime(i))))
    for i in range(1, n):
        ei, xi = (E(i),), (X(i),)
        yi, ypi = ysub(i), yprime(i)
        cases.append((f"lem2c left i={i}", _w(n, ei + yi + xi + yi), _w(n, ei)))
        cases.append((f"lem2c right i={i}", _w(n, yi + xi + yi + ei), _w(n, ei)))
        cases.append((f"lem2cs left i={i}", _w(n, ei + ypi + xi + ypi), _w(n, ei)))
        cases.append((f"lem2cs right i={i}", _w(n, ypi + xi + ypi + ei), _w(n, ei)))
        cases.append((f"lem2ds i={i}", _w(n, ei + yi + ei), _el(n, (A, ei))))
        cases.append((f"lem2zopf i={i}", _w(n, xi + yi + xi + yi), _w(n, yi + xi + yi + xi)))
        cases.append((f"lem2e i={i}",
                      _el(n, (1 - q0 * delta, xi + yi + ei)),
                      _el(n, (q1 * lam - q0 * delta * lam * A, ei), (q0, yi + ei))))
    for i in range(2, n):
        ef = (E(i - 1),)
        yi, yl = ysub(i), ysub(i - 1)
        cases.append((f"lem2q1 i={i}", _w(n, yi + ef),
                      _el(n, (lam_inv * q0_inv, yl + ef), (-q1 * q0_inv * lam_inv, ef))))
        cases.append((f"lem2q2 i={i}", _w(n, ef + yi),
                      _el(n, (lam * (q0_inv - delta), ef + yl), (lam * (delta * A - q1 * q0_inv), ef))))
        ypl_inv = inverse_word(yprime(i - 1))
        cases.append((f"lem2m i={i}", _w(n, ef + yprime(i)), _el(n, (lam, ef + ypl_inv))))
        cases.append((f"lem2mm i={i}", _w(n, yprime(i) + ef), _el(n, (lam, ypl_inv + ef))))
    for i in range(1, n - 1):
        ei, xi = (E(i),), (X(i),)
        yi, yn = ysub(i), ysub(i + 1)
        cases.append((f"lem2q3 i={i}", _w(n, xi + yn),
                      _el(n, (1, yi + xi), (-delta, yi), (delta, yi + ei), (delta, yn),
                          (delta**2 * lam - delta * lam * q0_inv, ei + yi),
                          (delta * lam * q1 * q0_inv - delta**2 * lam * A, ei))))
    for i in range(1, n):
        ei, xi = (E(i),), (X(i),)
        yi, yn = ysub(i), ysub(i + 1)
        cases.append((f"lem2z i={i}", _w(n, yn + yi),
                      _el(n, (1, xi + yi + xi + yi), (-delta * q1, xi + yi), (-delta * q0, xi),
                          (delta * q0_inv, yi + ei + yi), (-delta * q1 * q0_inv, ei + yi))))
    if n >= 3:
        e1 = (E(1),)
        cases.append(("lem2p", _w(n, e1 + (Y, X(2)) + e1),
                      _el(n, (q0, e1 + (Y, E(2)) + e1), (q1 * lam_inv, e1))))
    return cases


def closure_cases(n: int) -> List[Case]:
    """H_n 的恒等式，位于 BB_{2n}"""
    if not 1 <= n <= 2:
        raise ValueError(f"闭包恒等式只支持 n = 1, 2: {n}")
    c = derived_constants()
    m = 2 * n
    h = closure_element(n)
    hb = bar_word(h)
    cases: List[Case] = []
    chain = ()
    for k in range(n, 0, -1):
        chain += chain_e(k, 2 * n - k)
    cases.append(("H_n = E(n,n)···E(1,2n-1)", _w(m, h), _w(m, chain)))
    if n >= 2:
        negative = (E(n),) + chain_x(n + 1, 2 * n - 1, inverse=True) \
            + chain_x(n, 2 * n - 2, inverse=True) + closure_element(n - 1)
        cases.append(("H_n 的 X^{-1} 递推", _w(m, h), _w(m, negative)))
    for i in range(1, m):
        if i == n:
            continue
        for letter in (X(i), Xinv(i)):
            mirror = (letter[0], 2 * n - i)
            cases.append((f"{render_word((letter,))}·H_n", _w(m, (letter,) + h), _w(m, (mirror,) + h)))
        cases.append((f"e{i}·H_n", _w(m, (E(i),) + h), _w(m, (E(2 * n - i),) + h)))
    top = yprime(m)
    for letter, power, mirror in ((Y, c.lam, inverse_word(top)), (YINV, 1 / c.lam, top)):
        label = render_word((letter,))
        cases.append((f"{label}·H_n", _w(m, (letter,) + h), _el(m, (power, mirror + h))))
        cases.append((f"H̄_n·{label}", _w(m, hb + (letter,)), _el(m, (power, hb + bar_word(mirror)))))
    return cases


def closure_words(n: int) -> Tuple[Word, ...]:
    """闭包迹恒等式所检查的元素"""
    if n == 1:
        return spanning_set(1)
    return ((), (Y,), (X(1),), (E(1),), (Y, X(1)))


def suite_cases(name: str, n: int) -> List[Case]:
    if name == 'def':
        return def_cases(n)
    if name == 'lemma-A':
        return lemma_a_cases(n)
    if name == 'lemma-B':
        return lemma_b_cases(n)
    if name == 'closure':
        return closure_cases(n)
    raise ValueError(f"未知关系组: {name}")


Check = Tuple[str, Callable[[], bool]]


def algebra_checks(name: str, n: int, mode: str = 'symbolic', N: int = Config.TENSOR_N,
                   seed: int = Config.SEED) -> List[Check]:
    """把关系组包装成可调用检查；closure 另外附带迹恒等式"""
    checks: List[Check] = [
        (label, lambda lhs=lhs, rhs=rhs: verify_relation(lhs, rhs, mode=mode, N=N, seed=seed))
        for label, lhs, rhs in suite_cases(name, n)]
    if name == 'closure':
        for word in closure_words(n):
            element = _w(n, word)
            checks.append((f"x^n·tr({render_word(word)})·E(1,2n-1) = H̄aH",
                           lambda element=element: closure_identity_check(n, element)))
    return checks


def _tensor_grounds(N: int, mode: str, seed: int, points: int) -> List[TensorGround]:
    if mode == 'symbolic':
        return [TensorGround(N)]
    rng = random.Random(seed)
    return [random_tensor_ground(N, rng) for _ in range(points)]


def tensor_checks(name: str, n: int, N: int = Config.TENSOR_N, mode: str = 'symbolic',
                  seed: int = Config.SEED) -> List[Check]:
    """张量表示上的检查；def / lemma-A / lemma-B 比较两侧的矩阵像"""
    if name in ('def', 'lemma-A', 'lemma-B'):
        checks = []
        for label, lhs, rhs in suite_cases(name, n):
            if mode == 'symbolic':
                ground = TensorGround(N)
                checks.append((label, lambda lhs=lhs, rhs=rhs, g=ground: is_zero_matrix(
                    represent(lhs - rhs, n, g))))
            else:
                checks.append((label, lambda lhs=lhs, rhs=rhs: images_agree(lhs, rhs, N=N, seed=seed)))
        return checks
    if name == 'ybe':
        return [(f"YBE N={N} @{k}", lambda g=g: is_zero_matrix(ybe_residual(g, max(n, 3))))
                for k, g in enumerate(_tensor_grounds(N, mode, seed, SPECTRAL_POINTS))]
    if name == 'reflection':
        return [(f"反射方程 N={N} @{k}", lambda g=g: is_zero_matrix(reflection_residual(g, max(n, 2))))
                for k, g in enumerate(_tensor_grounds(N, mode, seed, SPECTRAL_POINTS))]
    if name == 'cubic':
        return [(f"(B-λ)(B+q^-1)(B-q) = 0 N={N} @{k}", lambda g=g: is_zero_matrix(cubic_residual(g)))
                for k, g in enumerate(_tensor_grounds(N, mode, seed, Config.NUMERIC_TRIALS))]
    if name == 'matrix':
        ground = _tensor_grounds(N, mode, seed, 1)[0]
        return [(f"B, E, F 矩阵恒等式 N={N}",
                 lambda: all(ok for _, ok in matrix_identities(ground)))]
    if name == 'trace-psi':
        ground = _tensor_grounds(N, mode, seed, 1)[0]
        return [(f"tr = Ψ∘φ: {render_word(word)}",
                 lambda word=word: trace_matches_psi(word, n, ground)[0])
                for word in spanning_set(n)]
    raise ValueError(f"未知张量检查: {name}")
