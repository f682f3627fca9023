#!/usr/bin/env python3
"""
BB_n 计算工具系统测试
通过命令行入口验证各个子命令、输出格式与退出码
"""

import io
import json
import os
import sys
import tempfile
from contextlib import redirect_stdout

from config import Config
import main as cli


def run_cli(*argv):
    """运行命令行入口，返回 (退出码, 标准输出)"""
    buffer = io.StringIO()
    saved = sys.argv
    sys.argv = ['main.py', *argv]
    try:
        with redirect_stdout(buffer):
            cli.main()
        code = 0
    except SystemExit as e:
        code = e.code if isinstance(e.code, int) else 1
    finally:
        sys.argv = saved
    return code, buffer.getvalue()


def with_output_dir(func):
    """把输出与日志目录指向临时目录"""
    def wrapper():
        saved = Config.OUTPUT_DIR, Config.LOG_DIR
        with tempfile.TemporaryDirectory() as tmp:
            Config.OUTPUT_DIR = os.path.join(tmp, 'output')
            Config.LOG_DIR = os.path.join(tmp, 'logs')
            try:
                func()
            finally:
                Config.OUTPUT_DIR, Config.LOG_DIR = saved
    wrapper.__name__ = func.__name__
    wrapper.__doc__ = func.__doc__
    return wrapper


def test_config():
    """测试配置加载"""
    print("🔧 测试配置加载...")
    assert Config.MODE in ('symbolic', 'numeric')
    assert Config.TENSOR_N % 2 == 1 and Config.TENSOR_N >= 3
    assert Config.STEP_CAP > 0
    assert Config.EVAL_BOUND >= 2


def test_invariant_command():
    print("🔧 测试 invariant 子命令...")
    code, out = run_cli('invariant', '--strands', '2', '--braid', 'x1')
    assert code == 0
    assert 'L = 1' in out
    code, out = run_cli('invariant', '--strands', '1', '--braid', 'y', '--format', 'json')
    assert code == 0
    data = json.loads(out)
    assert data['strands'] == 1 and data['exponent_sum'] == 0
    assert data['braid'] == 'y'


def test_parse_errors_exit_2():
    print("🔧 测试解析错误退出码...")
    code, out = run_cli('invariant', '--strands', '2', '--braid', 'x3')
    assert code == 2
    assert '解析错误' in out
    code, _ = run_cli('trace', '--n', '2', '--element', 'x5')
    assert code == 2
    code, _ = run_cli('trace', '--n', '2', '--element', 'foo( * x1')
    assert code == 2


def test_usage_errors_exit_2():
    print("🔧 测试参数错误退出码...")
    assert run_cli('invariant', '--strands', '0', '--braid', '')[0] == 2
    assert run_cli('verify', '--suite', 'matrix', '--N', '4')[0] == 2
    assert run_cli('verify', '--suite', 'matrix', '--N', '1')[0] == 2
    assert run_cli('trace', '--n', '0', '--element', '1')[0] == 2
    assert run_cli('dimension', '--n', '2', '--points', '-1')[0] == 2
    assert run_cli('bratteli', '--n', 'two')[0] == 2


def test_trace_command():
    code, out = run_cli('trace', '--n', '2', '--element', 'e1', '--format', 'json')
    assert code == 0
    data = json.loads(out)
    assert data['n'] == 2
    assert data['trace'] == cli_render_inverse_x()


def cli_render_inverse_x():
    from coeffs import derived_constants, render_scalar
    return render_scalar(1 / derived_constants().x)


@with_output_dir
def test_verify_command():
    print("🔧 测试 verify 子命令...")
    code, out = run_cli('verify', '--suite', 'def', '--n', '2', '--export', 'csv')
    assert code == 0
    assert '🎉 验证完成!' in out
    files = os.listdir(Config.OUTPUT_DIR)
    assert any(name.startswith('verify_summary_') for name in files)
    assert 'verify_results.csv' in files
    assert os.listdir(Config.LOG_DIR)


@with_output_dir
def test_verify_json_and_dump():
    code, out = run_cli('verify', '--suite', 'trace-psi', '--n', '1', '--N', '3', '--dump',
                        '--format', 'json')
    assert code == 0
    data = json.loads(out)
    assert data['passed'] == data['total'] == 2
    assert 'matrices_n1_N3.txt' in os.listdir(Config.OUTPUT_DIR)


def test_dimension_command():
    code, out = run_cli('dimension', '--n', '2', '--points', '2', '--format', 'json')
    assert code == 0
    data = json.loads(out)
    assert [row['spanning'] for row in data['rows']] == [2, 12]
    assert data['rows'][1]['gram_ranks'] == [12, 12]


@with_output_dir
def test_bratteli_command():
    code, out = run_cli('bratteli', '--n', '3', '--export', 'xlsx')
    assert code == 0
    assert '0 ([],[]): ([],[1]) ([1],[])' in out
    assert 'bratteli_n3.xlsx' in os.listdir(Config.OUTPUT_DIR)


def test_diagram_command():
    code, out = run_cli('diagram', '--n', '2', '--word', 'e1 e1', '--gram', '--format', 'json')
    assert code == 0
    data = json.loads(out)
    assert data['count'] == 12
    assert data['shadow'] == '[(t1,t2,0), (b1,b2,0)]'
    assert data['loops'] == [1, 0]
    assert data['trace'] == '1'
    assert data['gram_nondegenerate'] is True


def main():
    """主测试函数"""
    print("🚀 开始系统测试...\n")

    tests = [
        ("配置加载", test_config),
        ("invariant 子命令", test_invariant_command),
        ("解析错误", test_parse_errors_exit_2),
        ("参数错误", test_usage_errors_exit_2),
        ("trace 子命令", test_trace_command),
        ("verify 子命令", test_verify_command),
        ("verify JSON 与矩阵输出", test_verify_json_and_dump),
        ("dimension 子命令", test_dimension_command),
        ("bratteli 子命令", test_bratteli_command),
        ("diagram 子命令", test_diagram_command),
    ]

    passed = 0
    total = len(tests)

    for test_name, test_func in tests:
        try:
            test_func()
            passed += 1
        except Exception as e:
            print(f"❌ {test_name} 测试异常: {e!r}")

    print(f"\n📊 测试结果: {passed}/{total} 通过")

    if passed == total:
        print("🎉 所有测试通过！系统正常工作。")
        return True
    else:
        print("⚠️  部分测试失败，请检查依赖与配置。")
        return False

if __name__ == "__main__":
    success = main()
    sys.exit(0 if success else 1)
