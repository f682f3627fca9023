#!/usr/bin/env python3
"""
B 型辫子与 Kauffman 多项式测试
"""

import random
import sys

import pytest

from coeffs import EvalPoint, PointGround, derived_constants, star_scalar
from invariant import (BraidParseError, BraidWord, exponent_sum, inverse_braid, kauffman_b,
                       markov_conjugate, markov_stabilize, parse_braid, random_braid, render_braid)
from words import X, Xinv, Y, YINV

C = derived_constants()


def test_parse_braid():
    print("🔧 测试辫子解析...")
    braid = parse_braid("y x1 X1", 2)
    assert braid.letters == (Y, X(1), Xinv(1))
    assert render_braid(braid) == "y x1 X1"
    assert parse_braid("", 1).letters == ()
    assert parse_braid("Y", 1).letters == (YINV,)
    for text, strands, position in (("x3", 2, 1), ("y x0", 2, 2), ("x1 e1", 3, 2)):
        with pytest.raises(BraidParseError) as info:
            parse_braid(text, strands)
        assert info.value.position == position
    with pytest.raises(ValueError):
        BraidWord(2, (X(2),))


def test_exponent_sum():
    assert exponent_sum(parse_braid("x1 x1", 2)) == 2
    assert exponent_sum(parse_braid("y X1", 2)) == -1
    assert exponent_sum(parse_braid("Y y Y", 1)) == 0
    rng = random.Random(1)
    for _ in range(10):
        b, a = random_braid(3, 5, rng), random_braid(3, 4, rng)
        assert exponent_sum(markov_conjugate(b, a)) == exponent_sum(b)


def test_basic_invariants():
    print("🔧 测试基本不变量...")
    assert kauffman_b(BraidWord(1)).value == 1
    assert kauffman_b(parse_braid("y", 1)).value == C.A / C.x
    assert kauffman_b(parse_braid("y", 1), PointGround(EvalPoint(2, 3, 1))).value == 4
    assert kauffman_b(parse_braid("x1", 2)).value == 1
    assert kauffman_b(parse_braid("X1", 2)).value == 1
    assert kauffman_b(parse_braid("y x1 y x1", 2)).value == kauffman_b(parse_braid("x1 y x1 y", 2)).value


def test_result_dict():
    result = kauffman_b(parse_braid("y", 1))
    data = result.to_dict()
    assert set(data) == {'strands', 'braid', 'exponent_sum', 'invariant'}
    assert data['braid'] == 'y'
    assert data['invariant'] == result.render()


def test_conjugation_invariance():
    print("🔧 测试共轭不变性 (100 次)...")
    rng = random.Random(42)
    for _ in range(100):
        strands = rng.randint(1, 3)
        b = random_braid(strands, rng.randint(0, 6), rng)
        a = random_braid(strands, rng.randint(1, 2), rng)
        assert kauffman_b(markov_conjugate(b, a)).value == kauffman_b(b).value, render_braid(b)


def test_stabilization_invariance():
    print("🔧 测试稳定化不变性 (50 次)...")
    stabilized = markov_stabilize(BraidWord(1))
    assert stabilized.letters == (X(1),)
    assert kauffman_b(stabilized).value == 1
    rng = random.Random(9)
    for _ in range(50):
        b = random_braid(rng.randint(1, 2), rng.randint(0, 6), rng)
        assert kauffman_b(markov_stabilize(b)).value == kauffman_b(b).value, render_braid(b)


def test_negative_stabilization():
    rng = random.Random(10)
    for _ in range(6):
        b = random_braid(rng.randint(1, 2), rng.randint(0, 5), rng)
        assert kauffman_b(markov_stabilize(b, -1)).value == kauffman_b(b).value
    with pytest.raises(ValueError):
        markov_stabilize(BraidWord(1), 2)


def test_inverse_braid_relates_by_star():
    rng = random.Random(5)
    for _ in range(6):
        b = random_braid(2, rng.randint(1, 5), rng)
        assert kauffman_b(inverse_braid(b)).value == star_scalar(kauffman_b(b).value)


def main():
    print("🚀 开始不变量测试...\n")

    tests = [
        ("辫子解析", test_parse_braid),
        ("指数和", test_exponent_sum),
        ("基本不变量", test_basic_invariants),
        ("结果字典", test_result_dict),
        ("共轭不变性", test_conjugation_invariance),
        ("稳定化不变性", test_stabilization_invariance),
        ("负稳定化", test_negative_stabilization),
        ("逆辫子与对合", test_inverse_braid_relates_by_star),
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
