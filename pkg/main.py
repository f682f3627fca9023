import argparse
import json
import os
import random
import sys
import time

from config import Config
from words import WordParseError
from coeffs import ScalarParseError
from invariant import BraidParseError


def emit(payload: dict, fmt: str, lines: list):
    """text 模式打印 lines，json 模式打印 payload"""
    if fmt == 'json':
        print(json.dumps(payload, ensure_ascii=False, indent=2))
    else:
        for line in lines:
            print(line)


def cmd_invariant(args) -> int:
    from invariant import kauffman_b, parse_braid

    braid = parse_braid(args.braid, args.strands)
    start_time = time.time()
    result = kauffman_b(braid)
    elapsed = time.time() - start_time
    emit(result.to_dict(), args.format, [
        f"🔍 辫子: {result.braid or '(空)'}  (ZB_{result.strands})",
        f"   指数和 e = {result.exponent_sum}",
        f"✅ L = {result.render()}",
        f"   耗时: {elapsed:.2f}秒",
    ])
    return 0


def cmd_trace(args) -> int:
    from algebra import parse_element
    from markov_trace import markov_trace, write_golden_file
    from coeffs import render_scalar

    if args.golden:
        path = os.path.join(Config.OUTPUT_DIR, f"golden_trace_n{args.n}.tsv")
        write_golden_file(args.n, path)
        print(f"📁 迹的金标准文件已保存: {path}")
        if not args.element:
            return 0
    if not args.element:
        print("❌ 参数错误: 需要 --element 或 --golden")
        return 2
    element = parse_element(args.element, args.n)
    value = render_scalar(markov_trace(element))
    emit({'n': args.n, 'element': element.render(), 'trace': value}, args.format, [
        f"🔍 元素: {element.render()}  (BB_{args.n})",
        f"✅ tr = {value}",
    ])
    return 0


def cmd_verify(args) -> int:
    from batch_verify import (all_passed, export_records, generate_verify_summary,
                              run_suite, write_json_log)
    from relation_suites import ALGEBRA_SUITES, TENSOR_SUITES

    suites = list(ALGEBRA_SUITES + TENSOR_SUITES) if args.suite == 'all' else [args.suite]
    quiet = args.format == 'json'
    results = []
    for name in suites:
        results.extend(run_suite(name, args.n, mode=args.mode, N=args.N, parallel=args.parallel,
                                 fail_fast=args.fail_fast, seed=args.seed, tensor=args.tensor,
                                 quiet=quiet))
        if args.fail_fast and not all_passed(results):
            break

    if args.dump:
        dump_trace_psi(args.n, args.N, quiet)

    summary_path = generate_verify_summary(results, Config.OUTPUT_DIR)
    log_path = write_json_log(results)
    if args.export:
        export_path = os.path.join(Config.OUTPUT_DIR, f"verify_results.{args.export}")
        export_records(results, export_path, args.export)
        if not quiet:
            print(f"📁 结果表已导出: {export_path}")

    passed = len([r for r in results if r['status'] == 'pass'])
    if quiet:
        emit({'suites': suites, 'n': args.n, 'passed': passed, 'total': len(results),
              'results': results}, 'json', [])
    else:
        total_time = sum(r['processing_time'] for r in results)
        print("\n" + "=" * 60)
        print("🎉 验证完成!" if all_passed(results) else "⚠️ 验证完成，存在未通过的关系")
        print("=" * 60)
        print(f"📊 验证统计:")
        print(f"   总检查数: {len(results)}")
        print(f"   通过: {passed}")
        print(f"   未通过: {len(results) - passed}")
        if results:
            print(f"   通过率: {passed/len(results)*100:.1f}%")
        print(f"   总耗时: {total_time:.1f}秒")
        print(f"\n📈 验证总结: {summary_path}")
        print(f"📁 日志保存在: {log_path}")
    return 0 if all_passed(results) else 1


def dump_trace_psi(n: int, N: int, quiet: bool):
    from algebra import Element, spanning_set
    from coeffs import TensorGround
    from tensor_rep import dump_matrix, represent
    from words import render_word

    ground = TensorGround(N)
    path = os.path.join(Config.OUTPUT_DIR, f"matrices_n{n}_N{N}.txt")
    os.makedirs(Config.OUTPUT_DIR, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        for word in spanning_set(n):
            matrix = represent(Element.from_word(word, n), n, ground)
            f.write(f"# {render_word(word)}\n")
            for entry in dump_matrix(matrix, ground):
                f.write(entry + "\n")
    if not quiet:
        print(f"📁 矩阵像已保存: {path}")


def cmd_dimension(args) -> int:
    from algebra import hecke_dimension, spanning_set
    from coeffs import EvalPoint
    from combinatorics import expected_dimension
    from markov_trace import gram_rank
    from math import factorial

    rng = random.Random(args.seed)
    rows = []
    ok = True
    for k in range(1, args.n + 1):
        size = len(spanning_set(k))
        expected = expected_dimension(k)
        hecke = hecke_dimension(k)
        ranks = [gram_rank(k, EvalPoint.random(rng)) for _ in range(args.points)] if k <= args.gram_max else []
        row_ok = size == expected and hecke == 2**k * factorial(k) and all(r == size for r in ranks)
        ok = ok and row_ok
        rows.append({'n': k, 'spanning': size, 'expected': expected, 'hecke': hecke,
                     'gram_ranks': ranks, 'ok': row_ok})

    lines = []
    for row in rows:
        mark = '✅' if row['ok'] else '❌'
        ranks = ', '.join(str(r) for r in row['gram_ranks']) or '跳过'
        lines.append(f"{mark} BB_{row['n']}: 生成集 {row['spanning']} / 期望 {row['expected']}, "
                     f"HB_{row['n']} {row['hecke']}, Gram 秩 [{ranks}]")
    emit({'rows': rows, 'ok': ok}, args.format, lines)
    return 0 if ok else 1


def cmd_bratteli(args) -> int:
    from batch_verify import export_records
    from combinatorics import bratteli_table, dimension_check, export_bratteli

    checks = {k: dimension_check(k) for k in range(args.n + 1)}
    if args.export:
        path = os.path.join(Config.OUTPUT_DIR, f"bratteli_n{args.n}.{args.export}")
        export_records(bratteli_table(args.n).to_dict('records'), path, args.export)
        if args.format != 'json':
            print(f"📁 Bratteli 表已导出: {path}")

    lines = export_bratteli(args.n) + [
        f"{'✅' if ok else '❌'} Σ路径数² = 2^{k}·(2·{k}-1)!! (n={k})" for k, ok in checks.items()]
    emit({'levels': export_bratteli(args.n), 'dimension_check': checks}, args.format, lines)
    return 0 if all(checks.values()) else 1


def cmd_diagram(args) -> int:
    from diagrams import (all_diagrams, diagram_gram_nondegenerate, render_diagram,
                          word_diagram, word_shadow)
    from coeffs import render_scalar
    from words import parse_word

    payload = {'n': args.n, 'count': len(all_diagrams(args.n))}
    lines = [f"🔍 点状 Brauer 图个数 (n={args.n}): {payload['count']}"]
    ok = True
    if args.word is not None:
        word = parse_word(args.word, args.n)
        d, n0, n1 = word_diagram(word, args.n)
        payload.update({'shadow': render_diagram(d), 'loops': [n0, n1],
                        'trace': render_scalar(word_shadow(word, args.n).trace())})
        lines += [f"   影子: {payload['shadow']}",
                  f"   闭合圈 (无点, 有点): ({n0}, {n1})",
                  f"   tr = {payload['trace']}"]
    if args.gram:
        ok = diagram_gram_nondegenerate(args.n)
        payload['gram_nondegenerate'] = ok
        lines.append(f"{'✅' if ok else '❌'} A = x^-1 时 Gram 矩阵非退化")
    emit(payload, args.format, lines)
    return 0 if ok else 1


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"必须是正整数: {text}")
    return value


def tensor_dim(text: str) -> int:
    """张量表示的 N = 2m+1"""
    value = int(text)
    if value < 3 or value % 2 == 0:
        raise argparse.ArgumentTypeError(f"N 必须是不小于3的奇数: {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=['text', 'json'], default=Config.DEFAULT_FORMAT,
                        help='输出格式 (默认: text)')
    common.add_argument('--seed', type=int, default=Config.SEED, help='随机求值点的种子')

    parser = argparse.ArgumentParser(description='B 型约化 BMW 代数 BB_n 精确计算工具')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('invariant', help='计算辫子闭包的 B 型 Kauffman 多项式', parents=[common])
    p.add_argument('--strands', type=positive_int, required=True, help='股数 n')
    p.add_argument('--braid', default='', help='辫子单词，如 "y x1 X1"')

    p = sub.add_parser('trace', help='计算代数元素的 Markov 迹', parents=[common])
    p.add_argument('--n', type=positive_int, required=True, help='代数 BB_n 的 n')
    p.add_argument('--element', help='元素，如 "q * y x1 + e1"')
    p.add_argument('--golden', action='store_true', help='写出所有生成单词的迹')

    p = sub.add_parser('verify', help='验证关系组', parents=[common])
    p.add_argument('--suite', default='all',
                   choices=['all', 'def', 'lemma-A', 'lemma-B', 'closure',
                            'ybe', 'reflection', 'trace-psi', 'cubic', 'matrix'],
                   help='关系组 (默认: all)')
    p.add_argument('--n', type=positive_int, default=3, help='股数 (默认: 3)')
    p.add_argument('--N', type=tensor_dim, default=Config.TENSOR_N, help='张量表示的 N (默认: 3)')
    p.add_argument('--mode', choices=['symbolic', 'numeric'], default=Config.MODE,
                   help='验证模式 (默认: symbolic)')
    p.add_argument('--tensor', action='store_true', help='代数关系组改为比较张量表示的矩阵像')
    p.add_argument('--parallel', type=positive_int, nargs='?', const=Config.MAX_WORKERS, metavar='N',
                   help=f'并行验证的线程数 (不带数值时为 {Config.MAX_WORKERS}, 默认串行)')
    p.add_argument('--fail-fast', action='store_true', help='遇到第一个未通过的关系即停止')
    p.add_argument('--export', choices=['csv', 'xlsx'], help='导出结果表')
    p.add_argument('--dump', action='store_true', help='写出生成单词的矩阵像')

    p = sub.add_parser('dimension', help='生成集计数与 Gram 秩', parents=[common])
    p.add_argument('--n', type=positive_int, default=3, help='最大股数 (默认: 3)')
    p.add_argument('--points', type=positive_int, default=3, help='每层的随机求值点个数')
    p.add_argument('--gram-max', type=positive_int, default=3, help='计算 Gram 秩的最大股数')

    p = sub.add_parser('bratteli', help='Bratteli 图与维数公式', parents=[common])
    p.add_argument('--n', type=positive_int, default=4, help='层数 (默认: 4)')
    p.add_argument('--export', choices=['csv', 'xlsx'], help='导出路径计数表')

    p = sub.add_parser('diagram', help='经典极限：点状 Brauer 图', parents=[common])
    p.add_argument('--n', type=positive_int, default=2, help='股数 (默认: 2)')
    p.add_argument('--word', help='显示该单词的影子与迹')
    p.add_argument('--gram', action='store_true', help='检查 A = x^-1 时 Gram 矩阵非退化')
    return parser


COMMANDS = {
    'invariant': cmd_invariant,
    'trace': cmd_trace,
    'verify': cmd_verify,
    'dimension': cmd_dimension,
    'bratteli': cmd_bratteli,
    'diagram': cmd_diagram,
}


def main():
    parser = build_parser()
    args = parser.parse_args()

    try:
        code = COMMANDS[args.command](args)
        sys.exit(code)

    except (WordParseError, BraidParseError, ScalarParseError) as e:
        print(f"❌ 解析错误: {str(e)}")
        sys.exit(2)
    except ValueError as e:
        print(f"❌ 配置错误: {str(e)}")
        sys.exit(1)
    except KeyboardInterrupt:
        print("\n⚠️ 用户中断操作")
        sys.exit(1)
    except Exception as e:
        print(f"❌ 处理过程中发生错误: {str(e)}")
        import traceback
        traceback.print_exc()
        sys.exit(1)

if __name__ == "__main__":
    main()
