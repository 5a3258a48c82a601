"""Named finite groups: families, products and presented groups."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from functools import reduce
from math import gcd

import numpy as np

from .const import (
    COSET_CAP,
    ELEMENT_CAP,
    GF8_GENERATOR,
    GF8_MODULUS,
    PSL2_FIELDS,
)
from .group_core import (
    CentraError,
    Group,
    OrderCapExceeded,
    from_cayley_table,
    from_permutation_generators,
)

_LOGGER = logging.getLogger(__name__)

Word = tuple[int, ...]


class BadParameter(CentraError):
    """A family parameter is outside its allowed range."""


class BadAction(CentraError):
    """x -> x^k is not an automorphism of order dividing p."""


class CosetCapExceeded(CentraError):
    """Coset enumeration defined more cosets than allowed."""


class OrderMismatch(CentraError):
    """A construction produced a group of unexpected order."""

    def __init__(self, expected: int, got: int) -> None:
        super().__init__(f"expected order {expected}, got {got}")
        self.expected = expected
        self.got = got


def is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise BadParameter(message)


def _require_within_cap(order: int) -> None:
    if order > ELEMENT_CAP:
        raise OrderCapExceeded(f"order {order} exceeds cap {ELEMENT_CAP}")


def power(generator: int, exponent: int) -> Word:
    """The word g^k for a 1-based generator g; negative k inverts."""
    letter = generator if exponent >= 0 else -generator
    return (letter,) * abs(exponent)


def inverse_word(word: Word) -> Word:
    return tuple(-letter for letter in reversed(word))


def commutator_word(u: Word, v: Word) -> Word:
    """[u, v] = u^-1 v^-1 u v."""
    return inverse_word(u) + inverse_word(v) + u + v


@dataclass(frozen=True)
class Presentation:
    """Finite presentation <g1..gk | relators>.

    Words are tuples of signed 1-based generator indices: 2 is the
    second generator, -2 its inverse.
    """

    generator_count: int
    relators: tuple[Word, ...]
    expected_order: int | None = None

    def __post_init__(self) -> None:
        _require(self.generator_count >= 1, "a presentation needs generators")
        _require(bool(self.relators), "a presentation needs relators")
        for position, word in enumerate(self.relators):
            _require(bool(word), f"relator {position} is empty")
            for letter in word:
                _require(
                    letter != 0 and abs(letter) <= self.generator_count,
                    f"relator {position} uses unknown generator {letter}",
                )


class CosetTable:
    """Coset table for HLT enumeration over the trivial subgroup.

    Column 2i holds the action of generator i+1, column 2i+1 the
    action of its inverse. Dead cosets are tracked with a union-find
    forest in p; live cosets satisfy p[c] == c.
    """

    def __init__(self, generator_count: int, max_cosets: int) -> None:
        self.columns = 2 * generator_count
        self.max_cosets = max_cosets
        self.table: list[list[int | None]] = [[None] * self.columns]
        self.p = [0]

    @staticmethod
    def column(letter: int) -> int:
        return 2 * (abs(letter) - 1) + (letter < 0)

    def define(self, alpha: int, col: int) -> None:
        new = len(self.table)
        if new >= self.max_cosets:
            raise CosetCapExceeded(
                f"coset enumeration exceeded {self.max_cosets} cosets"
            )
        self.table.append([None] * self.columns)
        self.p.append(new)
        self.table[alpha][col] = new
        self.table[new][col ^ 1] = alpha

    def rep(self, k: int) -> int:
        p = self.p
        root = k
        while p[root] != root:
            root = p[root]
        while p[k] != root:
            p[k], k = root, p[k]
        return root

    def merge(self, k: int, lam: int, queue: list[int]) -> None:
        phi, psi = self.rep(k), self.rep(lam)
        if phi != psi:
            low, high = min(phi, psi), max(phi, psi)
            self.p[high] = low
            queue.append(high)

    def coincidence(self, alpha: int, beta: int) -> None:
        table = self.table
        queue: list[int] = []
        self.merge(alpha, beta, queue)
        head = 0
        while head < len(queue):
            gamma = queue[head]
            head += 1
            for col in range(self.columns):
                delta = table[gamma][col]
                if delta is None:
                    continue
                table[delta][col ^ 1] = None
                mu, nu = self.rep(gamma), self.rep(delta)
                if table[mu][col] is not None:
                    self.merge(nu, table[mu][col], queue)
                elif table[nu][col ^ 1] is not None:
                    self.merge(mu, table[nu][col ^ 1], queue)
                else:
                    table[mu][col] = nu
                    table[nu][col ^ 1] = mu

    def scan_and_fill(self, alpha: int, word: Sequence[int]) -> None:
        table = self.table
        f = b = alpha
        i, j = 0, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] is not None:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][word[j] ^ 1] is not None:
                b = table[b][word[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if j == i:
                table[f][word[i]] = b
                table[b][word[i] ^ 1] = f
                return
            self.define(f, word[i])

    def enumerate(self, relators: Sequence[Sequence[int]]) -> None:
        alpha = 0
        while alpha < len(self.table):
            if self.p[alpha] == alpha:
                for word in relators:
                    self.scan_and_fill(alpha, word)
                    if self.p[alpha] != alpha:
                        break
            if self.p[alpha] == alpha:
                for col in range(self.columns):
                    if self.table[alpha][col] is None:
                        self.define(alpha, col)
            alpha += 1

    def generator_permutations(self) -> tuple[int, list[list[int]]]:
        """Standardised action of each generator on the live cosets."""
        live = [c for c in range(len(self.table)) if self.p[c] == c]
        number = {c: i for i, c in enumerate(live)}
        perms = []
        for col in range(0, self.columns, 2):
            perms.append(
                [number[self.rep(self.table[c][col])] for c in live]
            )
        return len(live), perms


def presented_group(
    presentation: Presentation, max_cosets: int = COSET_CAP
) -> Group:
    """Realise a presented group through its regular representation."""
    relators = [
        [CosetTable.column(letter) for letter in word]
        for word in presentation.relators
    ]
    cosets = CosetTable(presentation.generator_count, max_cosets)
    cosets.enumerate(relators)
    index, perms = cosets.generator_permutations()
    _LOGGER.debug(
        "Coset enumeration defined %d cosets, %d live",
        len(cosets.table),
        index,
    )
    expected = presentation.expected_order
    if expected is not None and index != expected:
        raise OrderMismatch(expected, index)
    group = from_permutation_generators(index, perms)
    if group.order != index:
        raise OrderMismatch(index, group.order)
    return group


def _twisted_product(
    n: int, p: int, k: int, labels: Sequence[str] | None = None
) -> Group:
    """Z_n x| Z_p on pairs: (i1, j1)(i2, j2) = (i1 + k^j1 i2, j1 + j2)."""
    order = n * p
    _require_within_cap(order)
    everything = np.arange(order)
    i, j = everything // p, everything % p
    twist = np.array([pow(k, e, n) for e in range(p)], dtype=np.int64)
    first = (i[:, None] + twist[j][:, None] * i[None, :]) % n
    second = (j[:, None] + j[None, :]) % p
    return from_cayley_table(first * p + second, labels, _trusted=True)


def _pair_labels(n: int, p: int, x: str, y: str) -> list[str]:
    return [f"{x}^{a}{y}^{b}" for a in range(n) for b in range(p)]


def cyclic(n: int) -> Group:
    _require(n >= 1, f"C(n) needs n >= 1, got {n}")
    _require_within_cap(n)
    table = np.add.outer(np.arange(n), np.arange(n)) % n
    return from_cayley_table(
        table, [f"a^{i}" for i in range(n)], _trusted=True
    )


def dihedral(m: int) -> Group:
    """D_m of order m: rotations r^i and reflections r^i s of an m/2-gon."""
    _require(m >= 4 and m % 2 == 0, f"D(m) needs even m >= 4, got {m}")
    k = m // 2
    return _twisted_product(k, 2, k - 1, _pair_labels(k, 2, "r", "s"))


def sdp_cyclic(n: int, p: int, k: int) -> Group:
    """Z_n x| Z_p where the generator of Z_p acts as x -> x^k."""
    _require(n >= 1 and p >= 1, f"sdp needs n, p >= 1, got {n}, {p}")
    if gcd(k, n) != 1 or pow(k, p, n) != 1 % n:
        raise BadAction(
            f"x -> x^{k} is not an automorphism of Z_{n} of order dividing {p}"
        )
    return _twisted_product(n, p, k, _pair_labels(n, p, "x", "y"))


def semidihedral(n: int) -> Group:
    """SD_8n = <a, b | a^4n = b^2 = e, bab = a^(2n-1)>."""
    _require(n >= 2, f"SD(n) needs n >= 2, got {n}")
    a, b = 1, 2
    return presented_group(
        Presentation(
            2,
            (
                power(a, 4 * n),
                power(b, 2),
                (b, a, b) + power(a, -(2 * n - 1)),
            ),
            expected_order=8 * n,
        )
    )


def dicyclic(n: int) -> Group:
    """T_4n = <a, b | a^2n = e, a^n = b^2, b^-1 a b = a^-1>."""
    _require(n >= 2, f"T(n) needs n >= 2, got {n}")
    a, b = 1, 2
    return presented_group(
        Presentation(
            2,
            (
                power(a, 2 * n),
                power(a, n) + power(b, -2),
                (-b, a, b, a),
            ),
            expected_order=4 * n,
        )
    )


def v_group(n: int) -> Group:
    """V_8n = <a, b | a^2n = b^4 = e, aba = b^-1, ab^-1a = b>."""
    _require(n >= 1, f"V(n) needs n >= 1, got {n}")
    a, b = 1, 2
    return presented_group(
        Presentation(
            2,
            (
                power(a, 2 * n),
                power(b, 4),
                (a, b, a, b),
                (a, -b, a, -b),
            ),
            expected_order=8 * n,
        )
    )


def u_group(n: int, m: int) -> Group:
    """U_2(n,m) = <a, b | a^2n = b^m = e, aba^-1 = b^-1>."""
    _require(n >= 1 and m >= 1, f"U(n,m) needs n, m >= 1, got {n}, {m}")
    a, b = 1, 2
    return presented_group(
        Presentation(
            2,
            (power(a, 2 * n), power(b, m), (a, b, -a, b)),
            expected_order=2 * n * m,
        )
    )


def heisenberg(p: int) -> Group:
    """Upper unitriangular 3x3 matrices over GF(p), order p^3."""
    _require(is_prime(p), f"Heis(p) needs a prime, got {p}")
    a, b = (1,), (2,)
    c = commutator_word(a, b)
    return presented_group(
        Presentation(
            2,
            (
                a * p,
                b * p,
                c * p,
                commutator_word(a, c),
                commutator_word(b, c),
            ),
            expected_order=p**3,
        )
    )


def modular_group(k: int) -> Group:
    """M_2^k = <a, b | a^(2^(k-1)) = b^2 = e, bab = a^(2^(k-2)+1)>."""
    _require(k >= 4, f"M(k) needs k >= 4, got {k}")
    a, b = 1, 2
    return presented_group(
        Presentation(
            2,
            (
                power(a, 2 ** (k - 1)),
                power(b, 2),
                (b, a, b) + power(a, -(2 ** (k - 2) + 1)),
            ),
            expected_order=2**k,
        )
    )


def _cycle(points: Sequence[int], degree: int) -> list[int]:
    perm = list(range(degree))
    for position, point in enumerate(points):
        perm[point] = points[(position + 1) % len(points)]
    return perm


def symmetric(n: int) -> Group:
    _require(n >= 1, f"S(n) needs n >= 1, got {n}")
    if n == 1:
        return from_permutation_generators(1, [])
    return from_permutation_generators(
        n, [_cycle([0, 1], n), _cycle(list(range(n)), n)]
    )


def alternating(n: int) -> Group:
    _require(n >= 1, f"A(n) needs n >= 1, got {n}")
    if n < 3:
        return from_permutation_generators(n, [])
    gens = [_cycle([0, 1, 2], n)]
    if n > 3:
        # an odd-length long cycle is even
        start = 0 if n % 2 else 1
        gens.append(_cycle(list(range(start, n)), n))
    return from_permutation_generators(n, gens)


def holomorph_cyclic(n: int) -> Group:
    """Affine maps x -> ax + b of Z_n, order n * phi(n)."""
    _require(n >= 2, f"Hol(n) needs n >= 2, got {n}")
    translation = [(x + 1) % n for x in range(n)]
    scalings = [
        [(a * x) % n for x in range(n)]
        for a in range(2, n)
        if gcd(a, n) == 1
    ]
    return from_permutation_generators(n, [translation] + scalings)


def direct_product(H: Group, K: Group) -> Group:
    """H x K on pairs (h, k), indexed h * |K| + k."""
    n_h, n_k = H.order, K.order
    if n_h * n_k > ELEMENT_CAP:
        raise OrderCapExceeded(
            f"product of orders {n_h} and {n_k} exceeds cap {ELEMENT_CAP}"
        )
    table = (
        H.table[:, None, :, None] * n_k + K.table[None, :, None, :]
    ).reshape(n_h * n_k, n_h * n_k)
    labels = [
        f"({H.label(h)},{K.label(k)})" for h in range(n_h) for k in range(n_k)
    ]
    return from_cayley_table(table, labels, _trusted=True)


def elementary_abelian(p: int, k: int) -> Group:
    _require(is_prime(p), f"EA(p,k) needs a prime p, got {p}")
    _require(k >= 1, f"EA(p,k) needs k >= 1, got {k}")
    return reduce(direct_product, [cyclic(p)] * k)


def _gf8_mul(x: int, y: int) -> int:
    product = 0
    while y:
        if y & 1:
            product ^= x
        y >>= 1
        x <<= 1
        if x & 0b1000:
            x ^= GF8_MODULUS
    return product


def _psl2_generators(q: int) -> list[list[int]]:
    """Two fractional-linear maps on the projective line 0..q-1, inf = q."""
    inf = q
    if q == 8:
        inverse = {
            x: next(y for y in range(1, 8) if _gf8_mul(x, y) == 1)
            for x in range(1, 8)
        }
        # x -> wx has order 7, x -> 1/(x+1) has order 3
        scale = [_gf8_mul(GF8_GENERATOR, x) for x in range(8)] + [inf]
        shifted = []
        for x in range(8):
            s = x ^ 1
            shifted.append(inf if s == 0 else inverse[s])
        shifted.append(0)
        return [scale, shifted]
    translate = [(x + 1) % q for x in range(q)] + [inf]
    invert = [inf] + [(-pow(x, -1, q)) % q for x in range(1, q)] + [0]
    return [translate, invert]


def psl2(q: int) -> Group:
    """PSL(2, q) acting on the q + 1 points of the projective line."""
    _require(q in PSL2_FIELDS, f"PSL2(q) supports q in {PSL2_FIELDS}, got {q}")
    group = from_permutation_generators(q + 1, _psl2_generators(q))
    expected = q * (q * q - 1) // gcd(2, q - 1)
    if group.order != expected:
        raise OrderMismatch(expected, group.order)
    return group


def sl2(q: int) -> Group:
    """SL(2, q) for prime q acting on the non-zero vectors of GF(q)^2."""
    _require(is_prime(q), f"SL2(q) needs a prime q, got {q}")
    vectors = [(x, y) for x in range(q) for y in range(q) if (x, y) != (0, 0)]
    position = {v: i for i, v in enumerate(vectors)}

    def act(matrix: tuple[int, int, int, int]) -> list[int]:
        a, b, c, d = matrix
        return [
            position[((a * x + b * y) % q, (c * x + d * y) % q)]
            for x, y in vectors
        ]

    group = from_permutation_generators(
        len(vectors), [act((1, 1, 0, 1)), act((0, q - 1, 1, 0))]
    )
    expected = q * (q * q - 1)
    if group.order != expected:
        raise OrderMismatch(expected, group.order)
    return group
