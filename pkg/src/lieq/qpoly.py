"""Polynomials in q with integer coefficients."""

from __future__ import annotations


class QPolynomial:
    """Immutable integer polynomial in q, stored as {degree: coefficient}
    with no explicit zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for deg, c in coeffs.items():
                if c:
                    if deg < 0:
                        raise ValueError("negative degree")
                    clean[int(deg)] = int(c)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, *_):
        raise AttributeError("QPolynomial is immutable")

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls({0: 1})

    @classmethod
    def q_power(cls, n: int, coeff: int = 1) -> "QPolynomial":
        return cls({n: coeff})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.coeffs == ({0: other} if other else {})
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        out = dict(self.coeffs)
        for deg, c in other.coeffs.items():
            out[deg] = out.get(deg, 0) + c
        return QPolynomial(out)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for deg, c in other.coeffs.items():
            out[deg] = out.get(deg, 0) - c
        return QPolynomial(out)

    def __neg__(self):
        return QPolynomial({d: -c for d, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return QPolynomial({d: c * other for d, c in self.coeffs.items()})
        out = {}
        for d1, c1 in self.coeffs.items():
            for d2, c2 in other.coeffs.items():
                out[d1 + d2] = out.get(d1 + d2, 0) + c1 * c2
        return QPolynomial(out)

    __rmul__ = __mul__

    def shift(self, n: int) -> "QPolynomial":
        """Multiply by q^n."""
        return QPolynomial({d + n: c for d, c in self.coeffs.items()})

    def evaluate(self, value: int = 1) -> int:
        return sum(c * value**d for d, c in self.coeffs.items())

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return max(self.coeffs) if self.coeffs else -1

    def coefficient(self, deg: int) -> int:
        return self.coeffs.get(deg, 0)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs.values())

    def to_json(self) -> dict:
        return {str(d): c for d, c in sorted(self.coeffs.items())}

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for deg in sorted(self.coeffs):
            c = self.coeffs[deg]
            if deg == 0:
                terms.append(str(c))
            else:
                q = "q" if deg == 1 else f"q^{deg}"
                if c == 1:
                    terms.append(q)
                elif c == -1:
                    terms.append(f"-{q}")
                else:
                    terms.append(f"{c}*{q}")
        out = " + ".join(terms)
        return out.replace("+ -", "- ")

    def __repr__(self):
        return f"QPolynomial({self})"
