#!/usr/bin/env python3
"""
生成元字母与单词测试
"""

import sys

import pytest

from words import (E, WordParseError, X, Xinv, Y, YINV, bar_word, expand_macro, has_e,
                   inverse_word, parse_word, render_word, word_level, yprime, ysub)


def test_parse_and_render():
    print("🔧 测试单词解析...")
    word = parse_word("y x1 X1 e2", 3)
    assert word == (Y, X(1), Xinv(1), E(2))
    assert render_word(word) == "y x1 X1 e2"
    assert parse_word("1") == ()
    assert parse_word("") == ()
    assert render_word(()) == '1'
    assert parse_word("Y x2", 3) == (YINV, X(2))


def test_parse_errors_carry_position():
    with pytest.raises(WordParseError) as info:
        parse_word("y x3", 3)
    assert info.value.position == 2
    with pytest.raises(WordParseError) as info:
        parse_word("q1", 3)
    assert info.value.position == 1
    with pytest.raises(WordParseError):
        parse_word("x0", 3)


def test_involutions():
    word = (Y, X(1), E(2), Xinv(2))
    assert inverse_word(word) == (X(2), E(2), Xinv(1), YINV)
    assert inverse_word(inverse_word(word)) == word
    assert bar_word(word) == (Xinv(2), E(2), X(1), Y)


def test_levels():
    assert word_level(()) == 0
    assert word_level((Y,)) == 1
    assert word_level((E(2), X(1))) == 3
    assert has_e((Y, E(1)))
    assert not has_e((Y, X(1)))


def test_macros():
    print("🔧 测试 Y'_i 与 Y_i...")
    assert yprime(1) == (Y,)
    assert yprime(2) == (X(1), Y, X(1))
    assert yprime(3) == (X(2), X(1), Y, X(1), X(2))
    assert ysub(2) == (X(1), Y, Xinv(1))
    assert expand_macro('YprimeInv', 2) == (Xinv(1), YINV, Xinv(1))
    assert expand_macro('YsubInv', 2) == (X(1), YINV, Xinv(1))
    with pytest.raises(ValueError):
        expand_macro('Yprime', 4, 3)


def main():
    print("🚀 开始单词测试...\n")

    tests = [
        ("解析与渲染", test_parse_and_render),
        ("解析错误位置", test_parse_errors_carry_position),
        ("单词对合", test_involutions),
        ("层数", test_levels),
        ("宏展开", test_macros),
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
