"""
广义 Weyl 代数 [V,U] = aV + b 的正规序

正规序把 U 的幂放在 V 的幂左边。唯一的改写规则 VU → UV + aV + b 严格减少 (V,U) 逆序对数，因此必然终止。
"""
from __future__ import annotations

import random
import threading
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from core.combinat import GaussRational, gr, stirling2
from core.errors import DomainError
from core.weylalg.parser import Generator, OperatorExpr, Power, Product, Scalar, Sum

Word = Tuple[str, ...]
Key = Tuple[int, int]


class NormalForm:
    """
    Σ c_{jk} U^j V^k 的稀疏表示

    不存零系数；相等性按项比较。
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Dict[Key, GaussRational]] = None):
        clean: Dict[Key, GaussRational] = {}
        for (j, k), c in (terms or {}).items():
            if j < 0 or k < 0:
                raise DomainError(f"幂次必须非负: U^{j}V^{k}")
            c = gr(c)
            if c:
                clean[(j, k)] = c
        self._terms = clean

    @classmethod
    def identity(cls) -> NormalForm:
        return cls({(0, 0): GaussRational.one()})

    @classmethod
    def scalar(cls, c) -> NormalForm:
        return cls({(0, 0): gr(c)})

    @classmethod
    def monomial(cls, j: int, k: int, c=1) -> NormalForm:
        return cls({(j, k): gr(c)})

    @property
    def terms(self) -> Dict[Key, GaussRational]:
        return dict(self._terms)

    def items(self) -> List[Tuple[Key, GaussRational]]:
        """按 (j,k) 降序"""
        return sorted(self._terms.items(), key=lambda kv: kv[0], reverse=True)

    def coefficient(self, j: int, k: int) -> GaussRational:
        return self._terms.get((j, k), GaussRational.zero())

    def __add__(self, other: NormalForm) -> NormalForm:
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, GaussRational.zero()) + c
        return NormalForm(out)

    def __sub__(self, other: NormalForm) -> NormalForm:
        return self + other.scale(-1)

    def scale(self, c) -> NormalForm:
        c = gr(c)
        return NormalForm({key: c * v for key, v in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, NormalForm):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __len__(self):
        return len(self._terms)

    def to_lines(self) -> List[str]:
        """每项一行 "U^jV^k:c"，常数项写作 "1:c" """
        lines = []
        for (j, k), c in self.items():
            label = (f"U^{j}" if j else "") + (f"V^{k}" if k else "")
            lines.append(f"{label or '1'}:{c}")
        return lines

    def to_dict(self) -> dict:
        return {'terms': [{'j': j, 'k': k, 'coefficient': str(c)} for (j, k), c in self.items()]}

    def __repr__(self):
        return "NormalForm{" + ", ".join(self.to_lines()) + "}"


# ==================== 改写引擎 ====================

def _inversions(word: Word) -> List[int]:
    return [i for i in range(len(word) - 1) if word[i] == 'V' and word[i + 1] == 'U']


def _word_key(word: Word) -> Key:
    """已无逆序的单词必形如 U^jV^k"""
    j = word.count('U')
    return j, len(word) - j


def reduce_words(terms: Dict[Word, GaussRational], a, b,
                 choose: Optional[Callable[[Sequence[int]], int]] = None) -> NormalForm:
    """
    反复应用 VU → UV + aV + b 直到所有单词正规

    Args:
        terms: 单词 → 系数
        a, b: 交换关系参数
        choose: 从逆序位置列表中挑一个改写；缺省取最左
    """
    a, b = gr(a), gr(b)
    pending: Dict[Word, GaussRational] = {}
    for w, c in terms.items():
        c = gr(c)
        if c:
            pending[tuple(w)] = pending.get(tuple(w), GaussRational.zero()) + c
    result: Dict[Key, GaussRational] = {}

    def push(word: Word, c: GaussRational):
        if not c:
            return
        total = pending.get(word, GaussRational.zero()) + c
        if total:
            pending[word] = total
        else:
            pending.pop(word, None)

    while pending:
        # 取最长的单词先处理，保证相同单词在改写前已合并
        word = max(pending, key=lambda w: (len(w), w))
        coef = pending.pop(word)
        positions = _inversions(word)
        if not positions:
            key = _word_key(word)
            result[key] = result.get(key, GaussRational.zero()) + coef
            continue
        i = positions[0] if choose is None else choose(positions)
        left, right = word[:i], word[i + 2:]
        push(left + ('U', 'V') + right, coef)
        push(left + ('V',) + right, coef * a)
        push(left + right, coef * b)
    return NormalForm(result)


def random_strategy(rng: random.Random) -> Callable[[Sequence[int]], int]:
    """随机挑选改写位置"""
    return lambda positions: rng.choice(list(positions))


class WeylAlgebra:
    """
    交换关系 [V,U] = aV + b 下的正规序乘法

    V^k U^m 的正规形由改写引擎求出并缓存。
    """

    def __init__(self, a, b):
        self.a = gr(a)
        self.b = gr(b)
        self._swap_cache: Dict[Key, NormalForm] = {}
        self._lock = threading.Lock()

    def _swap(self, k: int, m: int) -> NormalForm:
        """V^k U^m 的正规形"""
        key = (k, m)
        hit = self._swap_cache.get(key)
        if hit is None:
            hit = reduce_words({('V',) * k + ('U',) * m: GaussRational.one()}, self.a, self.b)
            with self._lock:
                self._swap_cache[key] = hit
        return hit

    def multiply(self, left: NormalForm, right: NormalForm) -> NormalForm:
        out: Dict[Key, GaussRational] = {}
        for (j, k), c1 in left.items():
            for (m, n), c2 in right.items():
                c = c1 * c2
                if k == 0 or m == 0:
                    out[(j + m, k + n)] = out.get((j + m, k + n), GaussRational.zero()) + c
                    continue
                for (p, q), c3 in self._swap(k, m).items():
                    key = (j + p, q + n)
                    out[key] = out.get(key, GaussRational.zero()) + c * c3
        return NormalForm(out)

    def power(self, base: NormalForm, n: int) -> NormalForm:
        result = NormalForm.identity()
        for _ in range(n):
            result = self.multiply(result, base)
        return result

    def evaluate(self, expr: OperatorExpr) -> NormalForm:
        if isinstance(expr, Generator):
            return NormalForm.monomial(1, 0) if expr.name == 'U' else NormalForm.monomial(0, 1)
        if isinstance(expr, Scalar):
            return NormalForm.scalar(expr.value)
        if isinstance(expr, Sum):
            return self.evaluate(expr.left) + self.evaluate(expr.right)
        if isinstance(expr, Product):
            return self.multiply(self.evaluate(expr.left), self.evaluate(expr.right))
        if isinstance(expr, Power):
            return self.power(self.evaluate(expr.base), expr.exponent)
        raise TypeError(f"未知的表达式节点: {expr!r}")


def normal_order(expr: OperatorExpr, a, b) -> NormalForm:
    """表达式的正规形"""
    return WeylAlgebra(a, b).evaluate(expr)


def expand_words(expr: OperatorExpr) -> Dict[Word, GaussRational]:
    """把表达式展开成未化简的单词线性组合（直接展开，不做改写）"""
    if isinstance(expr, Generator):
        return {(expr.name,): GaussRational.one()}
    if isinstance(expr, Scalar):
        return {(): expr.value} if expr.value else {}
    if isinstance(expr, Sum):
        out = dict(expand_words(expr.left))
        for w, c in expand_words(expr.right).items():
            out[w] = out.get(w, GaussRational.zero()) + c
        return out
    if isinstance(expr, Product):
        out: Dict[Word, GaussRational] = {}
        right = expand_words(expr.right)
        for w1, c1 in expand_words(expr.left).items():
            for w2, c2 in right.items():
                out[w1 + w2] = out.get(w1 + w2, GaussRational.zero()) + c1 * c2
        return out
    if isinstance(expr, Power):
        out = {(): GaussRational.one()}
        base = expand_words(expr.base)
        for _ in range(expr.exponent):
            nxt: Dict[Word, GaussRational] = {}
            for w1, c1 in out.items():
                for w2, c2 in base.items():
                    nxt[w1 + w2] = nxt.get(w1 + w2, GaussRational.zero()) + c1 * c2
            out = nxt
        return out
    raise TypeError(f"未知的表达式节点: {expr!r}")


def normal_order_by_words(expr: OperatorExpr, a, b,
                          choose: Optional[Callable[[Sequence[int]], int]] = None) -> NormalForm:
    """先展开成单词再逐词改写；choose 决定改写顺序"""
    return reduce_words(expand_words(expr), a, b, choose)


# ==================== 闭式 ====================

def _u_rising(k: int, a: GaussRational) -> Dict[int, GaussRational]:
    """(U|−a)_k = U(U+a)…(U+(k−1)a) 按 U 的幂展开"""
    coeffs = {0: GaussRational.one()}
    for j in range(k):
        shift = a * j
        nxt: Dict[int, GaussRational] = {}
        for p, c in coeffs.items():
            nxt[p + 1] = nxt.get(p + 1, GaussRational.zero()) + c
            if shift:
                nxt[p] = nxt.get(p, GaussRational.zero()) + c * shift
        coeffs = nxt
    return coeffs


def uv_power_closed_form(n: int, a, b) -> NormalForm:
    """
    (UV)^n = Σ_{k=1}^{n} b^{n−k} S(n,k) (U|−a)_k V^k

    n=0 返回恒等元。
    """
    if n < 0:
        raise DomainError(f"uv_power_closed_form: n={n} 必须非负")
    if n == 0:
        return NormalForm.identity()
    a, b = gr(a), gr(b)
    out: Dict[Key, GaussRational] = {}
    for k in range(1, n + 1):
        weight = b ** (n - k) * stirling2(n, k)
        if not weight:
            continue
        for p, c in _u_rising(k, a).items():
            out[(p, k)] = out.get((p, k), GaussRational.zero()) + weight * c
    return NormalForm(out)


def vn_u_expected(n: int, a, b) -> NormalForm:
    """VⁿU = (U + na)Vⁿ + nbV^{n−1}"""
    a, b = gr(a), gr(b)
    return NormalForm({(1, n): GaussRational.one(), (0, n): a * n, (0, n - 1): b * n})


def vn_u_relation_check(n: int, a, b) -> bool:
    """normal_order(VⁿU) 是否等于 (U+na)Vⁿ + nbV^{n−1}"""
    if n < 1:
        raise DomainError(f"vn_u_relation_check: n={n} 必须 ≥ 1")
    expr = Product(Power(Generator('V'), n), Generator('U'))
    return normal_order(expr, a, b) == vn_u_expected(n, a, b)


def random_word(rng: random.Random, max_len: int = 10) -> Word:
    length = rng.randint(0, max_len)
    return tuple(rng.choice('UV') for _ in range(length))


def word_to_expr(word: Iterable[str]) -> OperatorExpr:
    node: OperatorExpr = Scalar(GaussRational.one())
    for letter in word:
        node = Product(node, Generator(letter))
    return node
