"""Multivariate moment-cumulant conversion and cumulant-neglect closure.

A multi-index (k1, ..., kd) labels the moment E[x1^k1 ... xd^kd] or the
cumulant of the same word; its order is k1 + ... + kd.  Both directions of
the moment/cumulant conversion follow from one recurrence, obtained by
differentiating the identity M = exp(K) between the generating functions
and comparing series coefficients: with i the first active variable of
alpha and alpha' = alpha - e_i,

    m[alpha] = sum over beta <= alpha' of  C(alpha', beta) *
               kappa[beta + e_i] * m[alpha' - beta].

Closure at order p keeps cumulants up to order p and zeroes the rest, so
higher moments become integer-coefficient polynomials in the moments of
order <= p; p = 2 reproduces the Gaussian (Isserlis-with-means) moments.
Polynomials are built in exact integer arithmetic and only evaluated in
floating point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb

#: Largest target order served by `closure_polynomial`; chosen to cover a
#: second-moment row driven by the degree-12 stiffness-variation polynomial.
MAX_TARGET_ORDER = 14


def multi_indices(nvars: int, max_order: int, min_order: int = 0) -> list[tuple[int, ...]]:
    """All exponent tuples with min_order <= order <= max_order, sorted by
    (order, lexicographic) for reproducible layouts."""
    out = []
    for total in range(min_order, max_order + 1):
        combos = itertools.combinations_with_replacement(range(nvars), total)
        batch = set()
        for c in combos:
            e = [0] * nvars
            for i in c:
                e[i] += 1
            batch.add(tuple(e))
        out.extend(sorted(batch))
    return out


def _order(idx) -> int:
    return int(sum(idx))


@dataclass
class MomentSet:
    """Complete collection of moments up to `max_order` for `nvars` variables."""

    values: dict
    max_order: int
    nvars: int

    def __post_init__(self):
        self.values = {tuple(k): float(v) for k, v in self.values.items()}
        zero = (0,) * self.nvars
        self.values.setdefault(zero, 1.0)
        if abs(self.values[zero] - 1.0) > 1e-12:
            raise ValueError("the zeroth moment must be 1")
        missing = [idx for idx in multi_indices(self.nvars, self.max_order)
                   if idx not in self.values]
        if missing:
            raise ValueError(f"incomplete moment set, missing indices: {missing[:8]}")

    def __getitem__(self, idx) -> float:
        return self.values[tuple(idx)]


@dataclass
class CumulantSet:
    """Complete collection of cumulants of order 1..max_order."""

    values: dict
    max_order: int
    nvars: int

    def __post_init__(self):
        self.values = {tuple(k): float(v) for k, v in self.values.items()}
        missing = [idx for idx in multi_indices(self.nvars, self.max_order, min_order=1)
                   if idx not in self.values]
        if missing:
            raise ValueError(f"incomplete cumulant set, missing indices: {missing[:8]}")

    def __getitem__(self, idx) -> float:
        return self.values[tuple(idx)]


def _sub_indices(alpha):
    """All beta with 0 <= beta <= alpha componentwise."""
    return itertools.product(*(range(a + 1) for a in alpha))


def _multi_comb(alpha, beta) -> int:
    out = 1
    for a, b in zip(alpha, beta):
        out *= comb(a, b)
    return out


def moments_to_cumulants(m: MomentSet) -> CumulantSet:
    """Exact conversion, valid for any distribution with these moments."""
    kappa = {}
    for alpha in multi_indices(m.nvars, m.max_order, min_order=1):
        i = next(j for j, a in enumerate(alpha) if a)
        ap = list(alpha)
        ap[i] -= 1
        ap = tuple(ap)
        acc = m[alpha]
        for beta in _sub_indices(ap):
            if beta == ap:
                continue  # that term is kappa[alpha] itself
            be = list(beta)
            be[i] += 1
            rem = tuple(a - b for a, b in zip(ap, beta))
            acc -= _multi_comb(ap, beta) * kappa[tuple(be)] * m[rem]
        kappa[alpha] = acc
    return CumulantSet(values=kappa, max_order=m.max_order, nvars=m.nvars)


def cumulants_to_moments(kappa: CumulantSet) -> MomentSet:
    """Exact inverse of `moments_to_cumulants` up to the same order."""
    m = {(0,) * kappa.nvars: 1.0}
    for alpha in multi_indices(kappa.nvars, kappa.max_order, min_order=1):
        i = next(j for j, a in enumerate(alpha) if a)
        ap = list(alpha)
        ap[i] -= 1
        ap = tuple(ap)
        acc = 0.0
        for beta in _sub_indices(ap):
            be = list(beta)
            be[i] += 1
            rem = tuple(a - b for a, b in zip(ap, beta))
            acc += _multi_comb(ap, beta) * kappa[tuple(be)] * m[rem]
        m[alpha] = acc
    return MomentSet(values=m, max_order=kappa.max_order, nvars=kappa.nvars)


# --------------------------------------------------------------------------
# symbolic closure polynomials
# --------------------------------------------------------------------------
# A polynomial is a dict mapping a monomial to an integer coefficient; a
# monomial is a sorted tuple of (base-moment multi-index, power) pairs.

_P_ONE = {(): 1}


def _p_add(a, b):
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, 0) + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _p_mul(a, b):
    out = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            mono = dict(ka)
            for name, power in kb:
                mono[name] = mono.get(name, 0) + power
            key = tuple(sorted(mono.items()))
            s = out.get(key, 0) + va * vb
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


def _p_scale(a, c):
    return {k: v * c for k, v in a.items()} if c else {}


def _p_moment(idx):
    if _order(idx) == 0:
        return dict(_P_ONE)
    return {((tuple(idx), 1),): 1}


class _ClosureEngine:
    """Builds closure polynomials for one (nvars, closure order) pair."""

    def __init__(self, nvars: int, p: int):
        self.nvars = nvars
        self.p = p
        self._kappa = lru_cache(maxsize=None)(self._kappa_impl)
        self._close = lru_cache(maxsize=None)(self._close_impl)

    def _kappa_impl(self, gamma):
        # cumulant of order <= p as an exact polynomial in base moments
        i = next(j for j, a in enumerate(gamma) if a)
        gp = list(gamma)
        gp[i] -= 1
        gp = tuple(gp)
        out = _p_moment(gamma)
        for beta in _sub_indices(gp):
            if beta == gp:
                continue
            be = list(beta)
            be[i] += 1
            rem = tuple(a - b for a, b in zip(gp, beta))
            term = _p_mul(self._kappa(tuple(be)), _p_moment(rem))
            out = _p_add(out, _p_scale(term, -_multi_comb(gp, beta)))
        return out

    def _close_impl(self, alpha):
        if _order(alpha) <= self.p:
            return _p_moment(alpha)
        i = next(j for j, a in enumerate(alpha) if a)
        ap = list(alpha)
        ap[i] -= 1
        ap = tuple(ap)
        out = {}
        for beta in _sub_indices(ap):
            if _order(beta) + 1 > self.p:
                continue  # the neglected cumulants
            be = list(beta)
            be[i] += 1
            rem = tuple(a - b for a, b in zip(ap, beta))
            term = _p_mul(self._kappa(tuple(be)), self._close(rem))
            out = _p_add(out, _p_scale(term, _multi_comb(ap, beta)))
        return out

    def polynomial(self, target):
        return self._close(tuple(target))


@lru_cache(maxsize=None)
def _engine(nvars: int, p: int) -> _ClosureEngine:
    return _ClosureEngine(nvars, p)


@dataclass(frozen=True)
class ClosurePolynomial:
    """A closed moment as an integer-coefficient polynomial in base moments."""

    target: tuple
    closure_order: int
    terms: tuple  # ((coeff, ((index, power), ...)), ...)

    def evaluate(self, base: MomentSet) -> float:
        acc = 0.0
        for coeff, mono in self.terms:
            v = float(coeff)
            for idx, power in mono:
                v *= base[idx] ** power
            acc += v
        return acc

    def as_dict(self) -> dict:
        return {mono: coeff for coeff, mono in self.terms}

    def __str__(self) -> str:
        def fmt_mono(mono):
            parts = []
            for idx, power in mono:
                name = "m_" + "".join(str(c) for c in idx)
                parts.append(name if power == 1 else f"{name}^{power}")
            return " ".join(parts) if parts else "1"

        bits = []
        for coeff, mono in self.terms:
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            body = fmt_mono(mono)
            bits.append(f"{sign} {mag} {body}" if mag != 1 or body == "1" else f"{sign} {body}")
        s = " ".join(bits) if bits else "0"
        return s[2:] if s.startswith("+ ") else s


def closure_polynomial(target, closure_order: int) -> ClosurePolynomial:
    """Express the moment at `target` through moments of order <= closure_order.

    Cumulants above the closure order are set to zero; the result is exact
    for any distribution whose higher cumulants vanish.  Supports targets up
    to order 14; the moment-equation builder uses the same engine internally
    without that cap.
    """
    target = tuple(int(c) for c in target)
    if any(c < 0 for c in target):
        raise ValueError("multi-index entries must be nonnegative")
    if closure_order not in (1, 2, 3):
        raise ValueError("closure order must be 1, 2, or 3")
    if _order(target) > MAX_TARGET_ORDER:
        raise ValueError(f"target order {_order(target)} exceeds the supported cap "
                         f"{MAX_TARGET_ORDER}")
    return _closure_polynomial_uncapped(target, closure_order)


def _closure_polynomial_uncapped(target, closure_order: int) -> ClosurePolynomial:
    poly = _engine(len(target), closure_order).polynomial(target)
    terms = tuple(sorted((coeff, mono) for mono, coeff in poly.items()))
    return ClosurePolynomial(target=tuple(target), closure_order=closure_order, terms=terms)


def close_moment(target, base: MomentSet, closure_order: int) -> float:
    """Numeric closure of one moment of order above `closure_order`."""
    target = tuple(int(c) for c in target)
    if len(target) != base.nvars:
        raise ValueError("target width does not match the moment set")
    if _order(target) <= closure_order:
        raise ValueError("target order must exceed the closure order; "
                         "lower-order moments are already in the base set")
    if base.max_order < closure_order:
        raise ValueError("base moment set does not reach the closure order")
    return _closure_polynomial_uncapped(target, closure_order).evaluate(base)
