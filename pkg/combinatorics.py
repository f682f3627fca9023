"""
单纯分量的 Young 图对标号、Bratteli 图与维数公式的路径计数验证
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

import pandas as pd
from sympy import factorial2
from sympy.utilities.iterables import partitions as sympy_partitions

Partition = Tuple[int, ...]


@lru_cache(maxsize=None)
def partitions(k: int) -> Tuple[Partition, ...]:
    """k 的全部分拆，部分非增，按字典序排列"""
    if k < 0:
        return ()
    if k == 0:
        return ((),)

    def build(rest: int, cap: int) -> List[Partition]:
        if rest == 0:
            return [()]
        out = []
        for first in range(min(rest, cap), 0, -1):
            out.extend((first,) + tail for tail in build(rest - first, first))
        return out

    return tuple(sorted(build(k, k)))


def partition_count(k: int) -> int:
    """独立的分拆计数（sympy 生成器），用于交叉验证"""
    if k == 0:
        return 1
    return sum(1 for _ in sympy_partitions(k))


def _render_partition(part: Partition) -> str:
    return '[' + ','.join(str(p) for p in part) + ']'


@dataclass(frozen=True, order=True)
class DiagramPair:
    mu: Partition
    lam: Partition

    @property
    def size(self) -> int:
        return sum(self.mu) + sum(self.lam)

    def render(self) -> str:
        return render_pair(self)


def render_pair(pair: DiagramPair) -> str:
    """例如 ([2,1],[1])；空图写作 []"""
    return f"({_render_partition(pair.mu)},{_render_partition(pair.lam)})"


EMPTY = DiagramPair((), ())


@lru_cache(maxsize=None)
def gamma_hat(n: int) -> Tuple[DiagramPair, ...]:
    """大小为 n, n-2, …, 1 或 0 的全部有序 Young 图对"""
    out = []
    for size in range(n, -1, -2):
        for left in range(size, -1, -1):
            for mu in partitions(left):
                for lam in partitions(size - left):
                    out.append(DiagramPair(mu, lam))
    return tuple(out)


def _add_box(part: Partition) -> List[Partition]:
    out = []
    for i in range(len(part)):
        if i == 0 or part[i - 1] > part[i]:
            out.append(part[:i] + (part[i] + 1,) + part[i + 1:])
    out.append(part + (1,))
    return out


def _remove_box(part: Partition) -> List[Partition]:
    out = []
    for i in range(len(part)):
        if i == len(part) - 1 or part[i] > part[i + 1]:
            shrunk = part[:i] + (part[i] - 1,) + part[i + 1:]
            out.append(tuple(p for p in shrunk if p))
    return out


@lru_cache(maxsize=None)
def neighbors(pair: DiagramPair) -> Tuple[DiagramPair, ...]:
    """在任一分量中增加或删除一个方格得到的全部图对"""
    out = set()
    for mu in _add_box(pair.mu) + _remove_box(pair.mu):
        out.add(DiagramPair(mu, pair.lam))
    for lam in _add_box(pair.lam) + _remove_box(pair.lam):
        out.add(DiagramPair(pair.mu, lam))
    return tuple(sorted(out))


def bratteli_adjacent(p: DiagramPair, q: DiagramPair) -> bool:
    return q in neighbors(p)


@lru_cache(maxsize=None)
def _level_counts(n: int) -> Dict[DiagramPair, int]:
    """从 (·,·) 出发长度为 n 的路径数，按层动态规划"""
    if n == 0:
        return {EMPTY: 1}
    counts: Dict[DiagramPair, int] = {}
    for pair, paths in _level_counts(n - 1).items():
        for nxt in neighbors(pair):
            counts[nxt] = counts.get(nxt, 0) + paths
    return counts


def path_count(n: int, pair: DiagramPair) -> int:
    return _level_counts(n).get(pair, 0)


def expected_dimension(n: int) -> int:
    """2^n·(2n-1)!!"""
    return 2**n * int(factorial2(2 * n - 1))


def dimension_check(n: int) -> bool:
    total = sum(path_count(n, pair)**2 for pair in gamma_hat(n))
    return total == expected_dimension(n)


def export_bratteli(n: int) -> List[str]:
    """每个结点一行 '<层> <结点>: <下一层的邻居>'，最后一层邻居为空"""
    lines = []
    for level in range(n + 1):
        upper = set(gamma_hat(level + 1)) if level < n else set()
        for pair in gamma_hat(level):
            nxt = [render_pair(q) for q in neighbors(pair) if q in upper]
            lines.append(f"{level} {render_pair(pair)}: {' '.join(nxt)}".rstrip())
    return lines


def bratteli_table(n: int) -> pd.DataFrame:
    rows = [{'level': level, 'node': render_pair(pair), 'size': pair.size,
             'paths': path_count(level, pair)}
            for level in range(n + 1) for pair in gamma_hat(level)]
    return pd.DataFrame(rows, columns=['level', 'node', 'size', 'paths'])
