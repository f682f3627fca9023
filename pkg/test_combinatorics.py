#!/usr/bin/env python3
"""
Young 图对、Bratteli 图与维数公式测试
"""

import sys

from combinatorics import (EMPTY, DiagramPair, bratteli_adjacent, bratteli_table, dimension_check,
                           expected_dimension, export_bratteli, gamma_hat, neighbors,
                           partition_count, partitions, path_count, render_pair)


def test_partitions():
    assert partitions(0) == ((),)
    assert partitions(3) == ((1, 1, 1), (2, 1), (3,))
    for k in range(11):
        assert len(partitions(k)) == partition_count(k)


def test_level_two_nodes_and_paths():
    print("🔧 测试第2层结点与路径数...")
    nodes = gamma_hat(2)
    assert len(nodes) == 6
    counts = sorted((path_count(2, pair) for pair in nodes), reverse=True)
    assert counts == [2, 2, 1, 1, 1, 1]
    assert path_count(2, EMPTY) == 2
    assert path_count(2, DiagramPair((1,), (1,))) == 2
    assert path_count(2, DiagramPair((2,), ())) == 1


def test_neighbors():
    pair = DiagramPair((1,), ())
    assert set(neighbors(pair)) == {EMPTY, DiagramPair((2,), ()), DiagramPair((1, 1), ()),
                                    DiagramPair((1,), (1,))}
    assert bratteli_adjacent(EMPTY, DiagramPair((), (1,)))
    assert not bratteli_adjacent(EMPTY, DiagramPair((2,), ()))


def test_dimension_formula():
    print("🔧 测试 Σ路径数² = 2^n(2n-1)!!...")
    assert [expected_dimension(n) for n in range(5)] == [1, 2, 12, 120, 1680]
    for n in range(9):
        assert dimension_check(n)


def test_render_and_export():
    assert render_pair(DiagramPair((2, 1), (1,))) == '([2,1],[1])'
    assert render_pair(EMPTY) == '([],[])'
    assert export_bratteli(1) == ['0 ([],[]): ([],[1]) ([1],[])', '1 ([1],[]):', '1 ([],[1]):']
    table = bratteli_table(2)
    assert list(table.columns) == ['level', 'node', 'size', 'paths']
    assert len(table) == 9
    assert (table['paths'] ** 2)[table['level'] == 2].sum() == 12


def main():
    print("🚀 开始 Bratteli 图测试...\n")

    tests = [
        ("分拆", test_partitions),
        ("第2层", test_level_two_nodes_and_paths),
        ("邻接", test_neighbors),
        ("维数公式", test_dimension_formula),
        ("渲染与导出", test_render_and_export),
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
