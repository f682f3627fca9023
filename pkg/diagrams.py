"""
点状 Brauer 图代数：BB_n 的经典极限

顶端点 t1..tn 记为 0..n-1，底端点 b1..bn 记为 n..2n-1。每条弧带一个点的奇偶位。
闭合的无点圈贡献因子 x，有点圈贡献因子 A；x 与 A 是域 Q(x, A) 中的形式参数。
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

from sympy import QQ
from sympy.polys.fields import field

from words import Letter, Word

KD, dx, dA = field("x,A", QQ)

Arc = Tuple[int, int, int]

_ARC = re.compile(r'\(\s*([tb])(\d+)\s*,\s*([tb])(\d+)\s*,\s*([01])\s*\)')


@dataclass(frozen=True)
class DottedDiagram:
    n: int
    arcs: Tuple[Arc, ...]

    @classmethod
    def from_arcs(cls, n: int, arcs) -> 'DottedDiagram':
        normal = tuple(sorted((min(a, b), max(a, b), dot % 2) for a, b, dot in arcs))
        points = sorted(p for a, b, _ in normal for p in (a, b))
        if len(normal) != n or points != list(range(2 * n)):
            raise ValueError(f"不是 {n} 股上的完美匹配: {arcs}")
        return cls(n, normal)

    def render(self) -> str:
        return render_diagram(self)


def _point_name(n: int, point: int) -> str:
    return f"t{point + 1}" if point < n else f"b{point - n + 1}"


def render_diagram(d: DottedDiagram) -> str:
    return '[' + ', '.join(f"({_point_name(d.n, a)},{_point_name(d.n, b)},{dot})"
                           for a, b, dot in d.arcs) + ']'


def parse_diagram(text: str, n: int) -> DottedDiagram:
    arcs = []
    for side_a, idx_a, side_b, idx_b, dot in _ARC.findall(text):
        a = int(idx_a) - 1 + (n if side_a == 'b' else 0)
        b = int(idx_b) - 1 + (n if side_b == 'b' else 0)
        arcs.append((a, b, int(dot)))
    return DottedDiagram.from_arcs(n, arcs)


def identity(n: int) -> DottedDiagram:
    return DottedDiagram(n, tuple((i, n + i, 0) for i in range(n)))


def letter_diagram(letter: Letter, n: int) -> DottedDiagram:
    """X_i^± 为交换第 i, i+1 股，e_i 为杯帽，Y^± 为第一股上的点"""
    kind, index = letter
    arcs = {i: (i, n + i, 0) for i in range(n)}
    if kind in ('y', 'Y'):
        arcs[0] = (0, n, 1)
    elif kind in ('x', 'X'):
        i = index - 1
        arcs[i] = (i, n + i + 1, 0)
        arcs[i + 1] = (i + 1, n + i, 0)
    else:
        i = index - 1
        arcs[i] = (i, i + 1, 0)
        arcs[i + 1] = (n + i, n + i + 1, 0)
    return DottedDiagram.from_arcs(n, arcs.values())


def _walk(adj, used, start) -> Tuple[tuple, int]:
    node, parity = start, 0
    while True:
        step = next(((v, dot, e) for v, dot, e in adj[node] if e not in used), None)
        if step is None:
            return node, parity
        v, dot, e = step
        used.add(e)
        parity ^= dot
        node = v
        if node == start or node[0] != 'm':
            return node, parity


def compose(d1: DottedDiagram, d2: DottedDiagram) -> Tuple[DottedDiagram, int, int]:
    """d1 在上、d2 在下拼接；返回 (结果图, 无点圈数 n0, 有点圈数 n1)"""
    if d1.n != d2.n:
        raise ValueError(f"股数不一致: {d1.n} 与 {d2.n}")
    n = d1.n
    adj = defaultdict(list)

    def label(layer: int, point: int) -> tuple:
        if layer == 0:
            return ('t', point) if point < n else ('m', point - n)
        return ('m', point) if point < n else ('b', point - n)

    edge = 0
    for layer, d in enumerate((d1, d2)):
        for a, b, dot in d.arcs:
            u, v = label(layer, a), label(layer, b)
            adj[u].append((v, dot, edge))
            adj[v].append((u, dot, edge))
            edge += 1

    used = set()
    arcs = []
    outer = [('t', k) for k in range(n)] + [('b', k) for k in range(n)]
    done = set()
    for start in outer:
        if start in done:
            continue
        end, parity = _walk(adj, used, start)
        done.update((start, end))
        to_point = lambda node: node[1] if node[0] == 't' else n + node[1]
        arcs.append((to_point(start), to_point(end), parity))

    n0 = n1 = 0
    for k in range(n):
        node = ('m', k)
        if any(e not in used for _, _, e in adj[node]):
            _, parity = _walk(adj, used, node)
            if parity:
                n1 += 1
            else:
                n0 += 1
    return DottedDiagram.from_arcs(n, arcs), n0, n1


def closed_loops(d: DottedDiagram) -> Tuple[int, int]:
    """在右侧用弧 t_i–b_i 闭合后的 (无点圈数, 有点圈数)"""
    n = d.n
    adj = defaultdict(list)
    edge = 0
    for a, b, dot in d.arcs:
        adj[('m', a)].append((('m', b), dot, edge))
        adj[('m', b)].append((('m', a), dot, edge))
        edge += 1
    for k in range(n):
        adj[('m', k)].append((('m', n + k), 0, edge))
        adj[('m', n + k)].append((('m', k), 0, edge))
        edge += 1
    used = set()
    n0 = n1 = 0
    for point in range(2 * n):
        node = ('m', point)
        if any(e not in used for _, _, e in adj[node]):
            _, parity = _walk(adj, used, node)
            if parity:
                n1 += 1
            else:
                n0 += 1
    return n0, n1


def diagram_trace(d: DottedDiagram):
    """tr(d) = x^{n0-n}·A^{n1}"""
    n0, n1 = closed_loops(d)
    return dA**n1 / dx**(d.n - n0)


def involution(d: DottedDiagram) -> DottedDiagram:
    """上下镜像，点保持不变"""
    n = d.n
    flip = lambda point: point + n if point < n else point - n
    return DottedDiagram.from_arcs(n, [(flip(a), flip(b), dot) for a, b, dot in d.arcs])


def word_diagram(word: Word, n: int) -> Tuple[DottedDiagram, int, int]:
    """忘记上下交叉后的影子，同时累计闭合圈"""
    current = identity(n)
    n0 = n1 = 0
    for letter in word:
        current, a, b = compose(current, letter_diagram(letter, n))
        n0 += a
        n1 += b
    return current, n0, n1


class DiagramElement:
    """点状 Brauer 图在 Q(x, A) 上的有限线性组合"""

    def __init__(self, terms: Dict[DottedDiagram, object]):
        self.terms = {d: c for d, c in terms.items() if c}

    @classmethod
    def from_diagram(cls, d: DottedDiagram) -> 'DiagramElement':
        return cls({d: KD.one})

    def __add__(self, other: 'DiagramElement') -> 'DiagramElement':
        terms = dict(self.terms)
        for d, c in other.terms.items():
            terms[d] = terms.get(d, KD.zero) + c
        return DiagramElement(terms)

    def __mul__(self, other: 'DiagramElement') -> 'DiagramElement':
        terms: Dict[DottedDiagram, object] = {}
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                d, n0, n1 = compose(d1, d2)
                terms[d] = terms.get(d, KD.zero) + c1 * c2 * dx**n0 * dA**n1
        return DiagramElement(terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, DiagramElement) and self.terms == other.terms

    __hash__ = None

    def trace(self):
        value = KD.zero
        for d, c in self.terms.items():
            value += c * diagram_trace(d)
        return value

    def involution(self) -> 'DiagramElement':
        return DiagramElement({involution(d): c for d, c in self.terms.items()})


def word_shadow(word: Word, n: int) -> DiagramElement:
    d, n0, n1 = word_diagram(word, n)
    return DiagramElement({d: dx**n0 * dA**n1})


def _matchings(points: List[int]) -> Iterator[List[Tuple[int, int]]]:
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for i, other in enumerate(rest):
        for tail in _matchings(rest[:i] + rest[i + 1:]):
            yield [(first, other)] + tail


@lru_cache(maxsize=None)
def all_diagrams(n: int) -> Tuple[DottedDiagram, ...]:
    """全部 2^n·(2n-1)!! 个点状 Brauer 图"""
    out = []
    for matching in _matchings(list(range(2 * n))):
        for mask in range(2**n):
            arcs = [(a, b, (mask >> k) & 1) for k, (a, b) in enumerate(matching)]
            out.append(DottedDiagram.from_arcs(n, arcs))
    return tuple(out)


def gram_degree(a: DottedDiagram, b: DottedDiagram) -> int:
    """A = x^{-1} 时 tr(a·b*) 是 x 的单项式，返回其次数"""
    d, n0, n1 = compose(a, involution(b))
    c0, c1 = closed_loops(d)
    return n0 - n1 + c0 - c1 - a.n


def diagram_gram_nondegenerate(n: int) -> bool:
    """对角元恒为 1 且每行非对角元次数严格更低，因此行列式非零"""
    diagrams = all_diagrams(n)
    for a in diagrams:
        for b in diagrams:
            degree = gram_degree(a, b)
            if a == b and degree != 0:
                return False
            if a != b and degree >= 0:
                return False
    return True
