"""Sparse polynomials in q and t with Python-int coefficients."""

from __future__ import annotations

import json
from collections import defaultdict
from typing import Iterable, Mapping


class QTPolynomial:
    """Immutable map ``(q_exp, t_exp) -> nonzero int``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] = ()):
        acc: dict[tuple[int, int], int] = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (a, b), c in items:
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent in term q^{a} t^{b}")
            acc[(int(a), int(b))] += int(c)
        self._terms = {k: v for k, v in sorted(acc.items()) if v}
        self._hash = None

    @classmethod
    def monomial(cls, q: int = 0, t: int = 0, c: int = 1) -> QTPolynomial:
        return cls({(q, t): c})

    @classmethod
    def from_exponents(cls, pairs: Iterable[tuple[int, int]]) -> QTPolynomial:
        """Sum of ``q^a t^b`` over the given exponent pairs."""
        acc: dict[tuple[int, int], int] = defaultdict(int)
        for pair in pairs:
            acc[pair] += 1
        return cls(acc)

    @classmethod
    def from_q_exponents(cls, exps: Iterable[int]) -> QTPolynomial:
        return cls.from_exponents((a, 0) for a in exps)

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def coefficient(self, q: int, t: int = 0) -> int:
        return self._terms.get((q, t), 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QTPolynomial.monomial(c=other)
        return isinstance(other, QTPolynomial) and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def _coerce(self, other) -> QTPolynomial:
        if isinstance(other, int):
            return QTPolynomial.monomial(c=other)
        if isinstance(other, QTPolynomial):
            return other
        return NotImplemented

    def __add__(self, other) -> QTPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QTPolynomial(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self) -> QTPolynomial:
        return QTPolynomial({k: -v for k, v in self._terms.items()})

    def __sub__(self, other) -> QTPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> QTPolynomial:
        return (-self) + other

    def __mul__(self, other) -> QTPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[tuple[int, int], int] = defaultdict(int)
        for (a, b), c in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                acc[(a + a2, b + b2)] += c * c2
        return QTPolynomial(acc)

    __rmul__ = __mul__

    def eval_t1(self) -> QTPolynomial:
        """Substitute ``t = 1``; the result only has ``t^0`` terms."""
        return QTPolynomial(((a, 0), c) for (a, _), c in self._terms.items())

    def evaluate(self, q: int, t: int) -> int:
        return sum(c * q**a * t**b for (a, b), c in self._terms.items())

    def swap_qt(self) -> QTPolynomial:
        return QTPolynomial(((b, a), c) for (a, b), c in self._terms.items())

    def shift_q(self, k: int) -> QTPolynomial:
        """Multiply by ``q^k``; raises if an exponent would turn negative."""
        return QTPolynomial(((a + k, b), c) for (a, b), c in self._terms.items())

    def min_q_exponent(self) -> int | None:
        return min((a for a, _ in self._terms), default=None)

    def __repr__(self) -> str:
        return f"QTPolynomial({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        # highest total degree first reads like the printed polynomials
        for (a, b), c in sorted(self._terms.items(), key=lambda kv: (-kv[0][0], -kv[0][1])):
            mono = "".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in (("q", a), ("t", b))
                if e
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        text = " ".join(f"{s} {b}" for s, b in parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def to_json(self) -> dict:
        return {"terms": [{"q": a, "t": b, "c": str(c)} for (a, b), c in self._terms.items()]}

    @classmethod
    def from_json(cls, data: dict | str) -> QTPolynomial:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(((int(x["q"]), int(x["t"])), int(x["c"])) for x in data["terms"])


ZERO = QTPolynomial()
ONE = QTPolynomial.monomial()
