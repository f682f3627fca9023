#!/usr/bin/env python3
"""
张量表示、矩阵迹 Ψ 与 YBE / 反射方程测试
"""

import random
import sys

import pytest

from algebra import Element, spanning_set
from coeffs import PoleError, TensorGround, derived_constants, ts
from markov_trace import markov_trace
from tensor_rep import (RepConfig, RepresentationError, build_B, build_F, cubic_residual,
                        dump_matrix, images_agree, is_zero_matrix, matrix_identities, psi,
                        random_tensor_ground, reflection_K, reflection_residual, represent,
                        trace_matches_psi, ybe_residual)
from words import E, X, Xinv, Y

GROUND = TensorGround(3)
C = derived_constants()


def test_index_set():
    assert RepConfig.from_N(3).I == (-1, 0, 1)
    assert RepConfig.from_N(5).I == (-3, -1, 0, 1, 3)
    with pytest.raises(RepresentationError):
        RepConfig.from_N(4)
    cfg = RepConfig.from_N(3)
    assert build_B(cfg).shape == (9, 9)
    assert build_F(cfg).shape == (3, 3)


def test_matrix_identities():
    print("🔧 测试 B, E, F 矩阵恒等式...")
    for N in (3, 5):
        for label, ok in matrix_identities(TensorGround(N)):
            assert ok, label


def test_cubic_relation():
    assert is_zero_matrix(cubic_residual(GROUND))


def test_trace_of_y_matches_psi():
    print("🔧 测试 tr(Y) = Ψ(Y)...")
    q = ts**2
    expected = (1 / q - 1) / (1 - 1 / q**3)
    y = Element.from_word((Y,), 1, GROUND)
    assert markov_trace(y) == expected
    assert psi(represent(y, 1, GROUND), 1, GROUND) == -(q - 1) / (q - 1 / q**2)


def test_trace_equals_psi_on_spanning_words():
    print("🔧 测试 tr = Ψ∘φ (n ≤ 3, 全部生成单词)...")
    for n in (1, 2, 3):
        for word in spanning_set(n):
            ok, abstract, matrix = trace_matches_psi(word, n, GROUND)
            assert ok, f"{word}: {abstract} != {matrix}"


def test_relations_hold_on_matrices():
    lam = C.lam
    lhs = Element.from_word((X(1), E(1)), 2)
    rhs = Element.from_terms([(lam, (E(1),))], 2)
    assert is_zero_matrix(represent(lhs - rhs, 2, GROUND))
    braid = Element.from_word((Y, X(1), Y, X(1)), 2) - Element.from_word((X(1), Y, X(1), Y), 2)
    assert is_zero_matrix(represent(braid, 2, GROUND))
    inverse = Element.from_word((X(1), Xinv(1)), 2) - Element.scalar(1, 2)
    assert is_zero_matrix(represent(inverse, 2, GROUND))


def test_numeric_images():
    a = Element.from_word((X(1), X(2), X(1)), 3)
    b = Element.from_word((X(2), X(1), X(2)), 3)
    assert images_agree(a, b, N=3, seed=1)
    assert not images_agree(Element.from_word((X(1), X(2)), 3),
                            Element.from_word((X(2), X(1)), 3), N=3, seed=1)


def test_yang_baxter():
    print("🔧 测试 Yang-Baxter 方程...")
    assert is_zero_matrix(ybe_residual(GROUND, 3))
    rng = random.Random(7)
    for _ in range(2):
        assert is_zero_matrix(ybe_residual(random_tensor_ground(5, rng), 3))


def test_reflection_equation():
    print("🔧 测试反射方程...")
    assert is_zero_matrix(reflection_residual(GROUND, 2))
    rng = random.Random(8)
    for _ in range(3):
        assert is_zero_matrix(reflection_residual(random_tensor_ground(5, rng), 2))
    with pytest.raises(PoleError):
        reflection_K(1, 2, GROUND)


def test_dump_matrix():
    entries = dump_matrix(build_F(RepConfig.from_N(3), GROUND), GROUND)
    assert len(entries) == 9
    assert entries[4] == '-1'
    assert entries[1] == '0'


def main():
    print("🚀 开始张量表示测试...\n")

    tests = [
        ("指标集", test_index_set),
        ("矩阵恒等式", test_matrix_identities),
        ("三次关系", test_cubic_relation),
        ("tr(Y) = Ψ(Y)", test_trace_of_y_matches_psi),
        ("tr = Ψ∘φ", test_trace_equals_psi_on_spanning_words),
        ("矩阵上的关系", test_relations_hold_on_matrices),
        ("数值矩阵像", test_numeric_images),
        ("Yang-Baxter 方程", test_yang_baxter),
        ("反射方程", test_reflection_equation),
        ("矩阵输出", test_dump_matrix),
    ]

    passed = 0
    total = len(tests)

    for test_name, test_func in tests:
        try:
            test_func()
            passed += 1
        except Exception as e:
            print(f"❌ {test_name} 测试失败: {e!r}")

    print(f"\n📊 测试结果: {passed}/{total} 通过")
    if passed == total:
        print("🎉 所有测试通过！")
    return passed == total


if __name__ == "__main__":
    success = main()
    sys.exit(0 if success else 1)
