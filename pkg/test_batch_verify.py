#!/usr/bin/env python3
"""
批量验证、总结报告与结果导出测试
"""

import json
import os
import sys
import tempfile

import pandas as pd
import pytest

from batch_verify import (all_passed, collect_checks, export_records, generate_verify_summary,
                          run_case, run_suite, write_json_log)


def boom():
    raise ZeroDivisionError("极点")


def test_run_case_records():
    ok = run_case('demo', '恒真', lambda: True)
    assert ok['status'] == 'pass' and ok['error'] is None
    bad = run_case('demo', '恒假', lambda: False)
    assert bad['status'] == 'fail'
    err = run_case('demo', '异常', boom)
    assert err['status'] == 'error'
    assert err['detail'] == 'ZeroDivisionError'
    assert err['error'] == '极点'


def test_run_suite_serial_and_parallel():
    print("🔧 测试串行与并行验证...")
    serial = run_suite('def', 2, mode='symbolic', quiet=True)
    assert serial and all_passed(serial)
    parallel = run_suite('def', 2, mode='symbolic', parallel=3, quiet=True)
    assert sorted(r['case'] for r in parallel) == sorted(r['case'] for r in serial)
    assert all_passed(parallel)


def test_collect_checks_routing():
    assert collect_checks('closure', 1, mode='symbolic')
    assert collect_checks('def', 2, mode='symbolic', tensor=True)
    with pytest.raises(ValueError):
        collect_checks('nope', 2)


def test_summary_report():
    results = [run_case('demo', '恒真', lambda: True), run_case('demo', '异常', boom)]
    with tempfile.TemporaryDirectory() as tmp:
        path = generate_verify_summary(results, os.path.join(tmp, 'out'))
        assert os.path.basename(path).startswith('verify_summary_')
        with open(path, 'r', encoding='utf-8') as f:
            text = f.read()
    assert "=" * 70 in text
    assert "总检查数: 2" in text
    assert "通过率: 50.0%" in text
    assert "✅ 通过的关系" in text and "❌ 未通过的关系" in text
    assert "错误: 极点" in text


def test_export_and_log():
    results = [run_case('demo', '恒真', lambda: True), run_case('demo', '恒假', lambda: False)]
    with tempfile.TemporaryDirectory() as tmp:
        csv_path = export_records(results, os.path.join(tmp, 'r.csv'), 'csv')
        frame = pd.read_csv(csv_path)
        assert list(frame['status']) == ['pass', 'fail']
        xlsx_path = export_records(results, os.path.join(tmp, 'r.xlsx'), 'xlsx')
        assert len(pd.read_excel(xlsx_path, engine='openpyxl')) == 2
        with pytest.raises(ValueError):
            export_records(results, os.path.join(tmp, 'r.txt'), 'txt')
        log_path = write_json_log(results, os.path.join(tmp, 'logs'))
        with open(log_path, 'r', encoding='utf-8') as f:
            assert json.load(f)[1]['case'] == '恒假'


def main():
    print("🚀 开始批量验证测试...\n")

    tests = [
        ("单条记录", test_run_case_records),
        ("串行与并行", test_run_suite_serial_and_parallel),
        ("检查路由", test_collect_checks_routing),
        ("总结报告", test_summary_report),
        ("导出与日志", test_export_and_log),
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
