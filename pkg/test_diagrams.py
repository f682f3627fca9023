#!/usr/bin/env python3
"""
点状 Brauer 图（经典极限）测试
"""

import random
import sys

import pytest

from diagrams import (DiagramElement, DottedDiagram, all_diagrams, compose, dA,
                      diagram_gram_nondegenerate, diagram_trace, dx, identity, involution,
                      letter_diagram, parse_diagram, render_diagram, word_diagram, word_shadow)
from words import E, X, Y


def test_traces_of_generators():
    print("🔧 测试经典迹值...")
    assert diagram_trace(identity(3)) == 1
    assert diagram_trace(letter_diagram(E(1), 2)) == 1 / dx
    assert diagram_trace(letter_diagram(Y, 1)) == dA / dx
    assert diagram_trace(letter_diagram(X(1), 2)) == 1 / dx


def test_compose_counts_loops():
    e = letter_diagram(E(1), 2)
    d, n0, n1 = compose(e, e)
    assert (d, n0, n1) == (e, 1, 0)
    dotted = letter_diagram(Y, 2)
    d, n0, n1 = compose(compose(e, dotted)[0], e)
    assert (d, n0, n1) == (e, 0, 1)
    d, _, _ = compose(dotted, dotted)
    assert d == identity(2)


def test_word_shadow():
    assert word_shadow((E(1), E(1)), 2) == DiagramElement({letter_diagram(E(1), 2): dx})
    d, n0, n1 = word_diagram((X(1), X(1)), 2)
    assert (d, n0, n1) == (identity(2), 0, 0)


def test_render_and_parse():
    for d in all_diagrams(2):
        assert parse_diagram(render_diagram(d), 2) == d
    assert render_diagram(letter_diagram(E(1), 2)) == '[(t1,t2,0), (b1,b2,0)]'
    with pytest.raises(ValueError):
        parse_diagram('[(t1,t2,0)]', 2)
    with pytest.raises(ValueError):
        DottedDiagram.from_arcs(1, [(0, 0, 0)])


def test_counts():
    assert len(all_diagrams(1)) == 2
    assert len(all_diagrams(2)) == 12
    assert len(all_diagrams(3)) == 120


def test_involution():
    x = letter_diagram(X(1), 2)
    assert involution(x) == x
    assert involution(involution(letter_diagram(Y, 2))) == letter_diagram(Y, 2)


def test_compose_is_associative():
    print("🔧 测试拼接结合律 (含圈因子)...")
    elements = [DiagramElement.from_diagram(d) for d in all_diagrams(2)]
    for a in elements:
        for b in elements:
            ab = a * b
            for c in elements:
                assert (ab * c) == (a * (b * c))
    rng = random.Random(7)
    diagrams = all_diagrams(3)
    for _ in range(200):
        a, b, c = (DiagramElement.from_diagram(rng.choice(diagrams)) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert (a + b) * c == a * c + b * c


def test_involution_reverses_products():
    print("🔧 测试 (ab)* = b*a* 与 tr(a*) = tr(a)...")
    for n in (2, 3):
        elements = [DiagramElement.from_diagram(d) for d in all_diagrams(n)]
        for a in elements:
            assert a.involution().trace() == a.trace()
            for b in elements:
                assert (a * b).involution() == b.involution() * a.involution()
        pair = elements[1] + elements[-1]
        assert pair.involution().trace() == pair.trace()


def test_trace_of_a_times_star():
    print("🔧 测试 tr(a·a*) = 1...")
    for n in (1, 2, 3):
        for d in all_diagrams(n):
            a = DiagramElement.from_diagram(d)
            assert (a * a.involution()).trace() == 1


def test_gram_nondegenerate():
    print("🔧 测试 A = x^-1 时 Gram 非退化...")
    for n in (1, 2, 3):
        assert diagram_gram_nondegenerate(n)


def main():
    print("🚀 开始点状 Brauer 图测试...\n")

    tests = [
        ("经典迹值", test_traces_of_generators),
        ("拼接计圈", test_compose_counts_loops),
        ("单词影子", test_word_shadow),
        ("渲染与解析", test_render_and_parse),
        ("图的个数", test_counts),
        ("上下镜像", test_involution),
        ("拼接结合律", test_compose_is_associative),
        ("镜像反同态", test_involution_reverses_products),
        ("tr(a·a*)", test_trace_of_a_times_star),
        ("Gram 非退化", test_gram_nondegenerate),
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
