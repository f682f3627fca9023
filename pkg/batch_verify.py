"""
关系组批量验证：逐条运行检查，可选线程池并行，生成总结报告并导出结果表
"""

import json
import os
import time
from typing import Callable, Dict, List, Optional

import pandas as pd

from config import Config
from relation_suites import ALGEBRA_SUITES, TENSOR_SUITES, Check, algebra_checks, tensor_checks


def collect_checks(name: str, n: int, mode: str = Config.MODE, N: int = Config.TENSOR_N,
                   seed: int = Config.SEED, tensor: bool = False) -> List[Check]:
    """tensor 为真时代数关系组改在张量表示上比较矩阵像"""
    if name in TENSOR_SUITES:
        return tensor_checks(name, n, N=N, mode=mode, seed=seed)
    if name in ALGEBRA_SUITES:
        if tensor and name != 'closure':
            return tensor_checks(name, n, N=N, mode=mode, seed=seed)
        return algebra_checks(name, n, mode=mode, N=N, seed=seed)
    raise ValueError(f"未知关系组: {name}")


def run_case(suite: str, label: str, check: Callable[[], bool]) -> Dict:
    """
    运行单条检查，异常转成 status='error' 的记录
    """
    try:
        start_time = time.time()
        ok = bool(check())
        processing_time = time.time() - start_time
        return {
            'case': label,
            'suite': suite,
            'status': 'pass' if ok else 'fail',
            'detail': '两侧相等' if ok else '两侧不相等',
            'processing_time': processing_time,
            'error': None
        }
    except Exception as e:
        return {
            'case': label,
            'suite': suite,
            'status': 'error',
            'detail': type(e).__name__,
            'processing_time': 0,
            'error': str(e)
        }


def _report(result: Dict):
    if result['status'] == 'pass':
        print(f"✅ {result['case']} ({result['processing_time']:.2f}秒)")
    elif result['status'] == 'fail':
        print(f"❌ {result['case']} - {result['detail']}")
    else:
        print(f"❌ {result['case']} - 检查异常: {result['error']}")


def run_suite(name: str, n: int, mode: str = Config.MODE, N: int = Config.TENSOR_N,
              parallel: Optional[int] = None, fail_fast: bool = False,
              seed: int = Config.SEED, tensor: bool = False, quiet: bool = False) -> List[Dict]:
    checks = collect_checks(name, n, mode=mode, N=N, seed=seed, tensor=tensor)
    results = []
    if not quiet:
        print(f"\n🚀 验证关系组 {name} (n={n}, 模式={mode}, 共 {len(checks)} 条)")

    if parallel and parallel > 1:
        if not quiet:
            print(f"🔄 使用 {parallel} 个线程并行验证...")
        from concurrent.futures import ThreadPoolExecutor, as_completed

        with ThreadPoolExecutor(max_workers=parallel) as executor:
            future_to_label = {
                executor.submit(run_case, name, label, check): label
                for label, check in checks
            }
            for i, future in enumerate(as_completed(future_to_label), 1):
                result = future.result()
                results.append(result)
                if not quiet:
                    print(f"📊 总进度: {i}/{len(checks)} 完成")
                    _report(result)
                if result['status'] != 'pass' and fail_fast:
                    if not quiet:
                        print("⚠️ 中止验证 (去掉 --fail-fast 继续验证其余关系)")
                    for pending in future_to_label:
                        pending.cancel()
                    break
    else:
        for label, check in checks:
            result = run_case(name, label, check)
            results.append(result)
            if not quiet:
                _report(result)
            if result['status'] != 'pass' and fail_fast:
                if not quiet:
                    print("⚠️ 中止验证 (去掉 --fail-fast 继续验证其余关系)")
                break
    return results


def all_passed(results: List[Dict]) -> bool:
    return all(r['status'] == 'pass' for r in results)


def generate_verify_summary(results: List[Dict], output_dir: str) -> str:
    """
    生成批量验证总结报告
    """
    from datetime import datetime

    os.makedirs(output_dir, exist_ok=True)
    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    summary_path = os.path.join(output_dir, f"verify_summary_{timestamp}.txt")

    total = len(results)
    passed = len([r for r in results if r['status'] == 'pass'])
    failed = len([r for r in results if r['status'] == 'fail'])
    errored = total - passed - failed
    total_time = sum(r['processing_time'] for r in results)
    suites = sorted({r['suite'] for r in results})

    with open(summary_path, 'w', encoding='utf-8') as f:
        f.write("=" * 70 + "\n")
        f.write("关系验证总结报告\n")
        f.write("=" * 70 + "\n")
        f.write(f"验证时间: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}\n")
        f.write(f"关系组: {', '.join(suites)}\n")
        f.write(f"总检查数: {total}\n")
        f.write(f"通过: {passed}\n")
        f.write(f"不成立: {failed}\n")
        f.write(f"异常: {errored}\n")
        if total:
            f.write(f"通过率: {passed/total*100:.1f}%\n")
            f.write(f"总耗时: {total_time:.1f}秒\n")
            f.write(f"平均耗时: {total_time/total:.2f}秒/条\n")
        f.write("\n")

        f.write("=" * 70 + "\n")
        f.write("详细验证结果\n")
        f.write("=" * 70 + "\n\n")

        if passed > 0:
            f.write("✅ 通过的关系:\n")
            f.write("-" * 50 + "\n")
            for result in results:
                if result['status'] == 'pass':
                    f.write(f"[{result['suite']}] {result['case']} ({result['processing_time']:.2f}秒)\n")

        if passed < total:
            f.write("\n❌ 未通过的关系:\n")
            f.write("-" * 50 + "\n")
            for result in results:
                if result['status'] != 'pass':
                    f.write(f"[{result['suite']}] {result['case']}\n")
                    f.write(f"状态: {result['status']} ({result['detail']})\n")
                    if result['error']:
                        f.write(f"错误: {result['error']}\n")
                    f.write("\n")

    return summary_path


def export_records(records: List[Dict], path: str, fmt: str = 'csv') -> str:
    """把结果记录导出为 csv 或 xlsx"""
    frame = pd.DataFrame(records)
    os.makedirs(os.path.dirname(path) or '.', exist_ok=True)
    if fmt == 'csv':
        frame.to_csv(path, index=False, encoding='utf-8')
    elif fmt == 'xlsx':
        frame.to_excel(path, index=False, engine='openpyxl')
    else:
        raise ValueError(f"不支持的导出格式: {fmt}")
    return path


def write_json_log(records: List[Dict], log_dir: Optional[str] = None) -> str:
    from datetime import datetime

    log_dir = log_dir or Config.LOG_DIR
    os.makedirs(log_dir, exist_ok=True)
    path = os.path.join(log_dir, f"verify_{datetime.now().strftime('%Y%m%d_%H%M%S')}.json")
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(records, f, ensure_ascii=False, indent=2)
    return path
