"""Caporaso-Harris style recursion for quadratic-form counts of plane curves.

Counts are indexed by degree d, genus g and two finitely supported
sequences: alpha (left ends of prescribed position, by weight) and beta
(free left ends, by weight), subject to I(alpha) + I(beta) = d.  The
recursion either fixes one free end of weight k, at the cost

    k odd:  (k-1)/2 * H + <k>          k even:  k/2 * H

or splits off a floor, passing to degree d - 1 with alpha' <= alpha,
beta' >= beta.  The degree-(d-1) term is weighted by the floor's own
multiplicity, binom(alpha, alpha') * binom(beta', beta) times

    I^(beta'-beta) odd:   (I^(beta'-beta)-1)/2 * H + <I^(beta'-beta)>
    I^(beta'-beta) even:  I^(beta'-beta)/2 * H

Genus bookkeeping allows negative g (counts of disconnected curves), so
the base case is the single line: degree 1 counts <1> at genus 0 and
nothing otherwise.

The memo table is an associative cache: every insertion for a key writes
the same value, so concurrent evaluation and cache merging are safe.
"""

from __future__ import annotations

from math import comb, prod

from .gw import GWElement, ONE, ZERO, diag, hyperbolic

Sequence = tuple[int, ...]


def trim(seq) -> Sequence:
    """Canonical form: drop trailing zeros."""
    seq = tuple(int(n) for n in seq)
    if any(n < 0 for n in seq):
        raise ValueError("sequence entries must be nonnegative")
    while seq and seq[-1] == 0:
        seq = seq[:-1]
    return seq


def seq_stats(a) -> tuple[int, int, int]:
    """(|a|, I a, I^a) = (sum, weighted sum, weighted product)."""
    a = trim(a)
    size = sum(a)
    weighted = sum((i + 1) * n for i, n in enumerate(a))
    product = prod((i + 1) ** n for i, n in enumerate(a))
    return size, weighted, product


def seq_binom(a, b) -> int:
    """Entrywise product of binomial coefficients; 0 when b exceeds a."""
    a, b = trim(a), trim(b)
    if len(b) > len(a):
        return 0
    return prod(comb(x, y) for x, y in zip(a, b + (0,) * (len(a) - len(b))))


def _seq_add(a: Sequence, k: int, delta: int) -> Sequence:
    lst = list(a) + [0] * max(0, k - len(a))
    lst[k - 1] += delta
    return trim(lst)


def weighted_partitions(total: int):
    """All trimmed sequences gamma with sum_i i*gamma_i = total."""
    def rec(remaining: int, max_part: int):
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, max_part), 0, -1):
            for count in range(remaining // part, 0, -1):
                for rest in rec(remaining - part * count, part - 1):
                    seq = [0] * part
                    seq[part - 1] = count
                    for i, n in enumerate(rest):
                        seq[i] += n
                    yield tuple(seq)

    yield from rec(total, total)


def _iter_sub_sequences(a: Sequence):
    """All sequences a' <= a, entrywise."""
    if not a:
        yield ()
        return
    ranges = [range(n + 1) for n in a]

    def rec(i):
        if i == len(ranges):
            yield []
            return
        for v in ranges[i]:
            for rest in rec(i + 1):
                yield [v] + rest

    for choice in rec(0):
        yield trim(choice)


def _gw_fix_factor(k: int) -> GWElement:
    if k % 2:
        return hyperbolic((k - 1) // 2) + diag(k)
    return hyperbolic(k // 2)


_FACTORS = {
    # (fix-end factor, floor factor) per value system
    "gw": (_gw_fix_factor, _gw_fix_factor),
    "rank": (lambda k: k, lambda m: m),
    "real": (lambda k: 1 if k % 2 else 0, lambda m: 1 if m % 2 else 0),
}

_UNITS = {"gw": (ONE, ZERO), "rank": (1, 0), "real": (1, 0)}

_memo: dict = {}


def max_genus(d: int) -> int:
    return (d - 1) * (d - 2) // 2


def ch_count(d: int, g: int, alpha=(), beta=None, system: str = "gw"):
    """Count of degree-d genus-g curves with end data (alpha, beta).

    ``alpha`` lists prescribed-position left ends by weight, ``beta`` free
    left ends by weight; ``beta`` defaults to d ends of weight one.
    """
    if d < 1:
        raise ValueError("degree must be at least 1")
    alpha = trim(alpha)
    beta = trim(beta) if beta is not None else (d,)
    _, ia, _ = seq_stats(alpha)
    _, ib, _ = seq_stats(beta)
    if ia + ib != d:
        raise ValueError(f"I(alpha) + I(beta) = {ia + ib} != d = {d}")
    return _ch(d, g, alpha, beta, system)


def _ch(d: int, g: int, alpha: Sequence, beta: Sequence, system: str):
    one, zero = _UNITS[system]
    if d == 1:
        return one if g == 0 else zero
    if g > max_genus(d):
        return zero
    if 2 * d + g + sum(beta) - 1 < 0:
        return zero
    key = (d, g, alpha, beta, system)
    cached = _memo.get(key)
    if cached is not None:
        return cached
    fix_factor, floor_factor = _FACTORS[system]
    total = zero
    for k, bk in enumerate(beta, start=1):
        if bk > 0:
            factor = fix_factor(k)
            if factor:
                total = total + factor * _ch(
                    d, g, _seq_add(alpha, k, 1), _seq_add(beta, k, -1), system
                )
    for alpha_p in _iter_sub_sequences(alpha):
        _, ia_p, _ = seq_stats(alpha_p)
        target = d - 1 - ia_p - seq_stats(beta)[1]
        if target < 0:
            continue
        for gamma in weighted_partitions(target):
            beta_p = trim(
                tuple(
                    (beta[i] if i < len(beta) else 0)
                    + (gamma[i] if i < len(gamma) else 0)
                    for i in range(max(len(beta), len(gamma)))
                )
            )
            size_gamma, _, prod_gamma = seq_stats(gamma)
            g_p = g - size_gamma + 1
            if size_gamma - 1 > d - 2:
                continue
            factor = floor_factor(prod_gamma)
            if not factor:
                continue
            coeff = seq_binom(alpha, alpha_p) * seq_binom(beta_p, beta)
            if coeff == 0:
                continue
            total = total + (coeff * factor) * _ch(d - 1, g_p, alpha_p, beta_p, system)
    _memo[key] = total
    return total


def memo_snapshot() -> dict:
    """Read-only view of the memo table (used by the cache plumbing)."""
    return dict(_memo)


def memo_load(entries: dict) -> None:
    _memo.update(entries)
