"""Truncated power series in a formal parameter, with exact rational coefficients.

Used for the exponential-substitution limits: evaluating a short GF at the
all-ones point and specializing variables whose denominator exponents collapse
to zero both reduce to extracting one coefficient of a series in a parameter
eps after substituting t_j <- exp(eps * lam_j).
"""

from fractions import Fraction


class EpsSeries:
    """Polynomial truncation of a power series: coefficients for eps^0..eps^order."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order):
        c = list(coeffs[: order + 1])
        c += [Fraction(0)] * (order + 1 - len(c))
        self.coeffs = c
        self.order = order

    @classmethod
    def constant(cls, value, order):
        return cls([Fraction(value)], order)

    @classmethod
    def exp_linear(cls, rate, order):
        """Series of exp(rate * eps)."""
        rate = Fraction(rate)
        coeffs = [Fraction(1)]
        fact = 1
        power = Fraction(1)
        for i in range(1, order + 1):
            power *= rate
            fact *= i
            coeffs.append(power / fact)
        return cls(coeffs, order)

    @classmethod
    def expm1_over_x(cls, rate, order):
        """Series of E(rate*eps) where E(x) = (e^x - 1)/x = sum x^i/(i+1)!."""
        rate = Fraction(rate)
        coeffs = []
        fact = 1
        power = Fraction(1)
        for i in range(order + 1):
            fact *= i + 1
            coeffs.append(power / fact)
            power *= rate
        return cls(coeffs, order)

    def __mul__(self, other):
        if isinstance(other, EpsSeries):
            order = min(self.order, other.order)
            out = [Fraction(0)] * (order + 1)
            for i, a in enumerate(self.coeffs[: order + 1]):
                if a == 0:
                    continue
                for j in range(order + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
            return EpsSeries(out, order)
        return EpsSeries([c * other for c in self.coeffs], self.order)

    __rmul__ = __mul__

    def __add__(self, other):
        order = min(self.order, other.order)
        return EpsSeries(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], order
        )

    def inverse(self):
        """Multiplicative inverse; requires a nonzero constant term."""
        if self.coeffs[0] == 0:
            raise ZeroDivisionError("series has zero constant term")
        inv0 = 1 / self.coeffs[0]
        out = [inv0]
        for i in range(1, self.order + 1):
            acc = Fraction(0)
            for j in range(1, i + 1):
                acc += self.coeffs[j] * out[i - j]
            out.append(-inv0 * acc)
        return EpsSeries(out, self.order)

    def __getitem__(self, i):
        return self.coeffs[i]


def eulerian_polynomials(max_order):
    """Coefficient lists of the polynomials A_i with sum_{m>=0} m^i w^m = A_i(w)/(1-w)^(i+1).

    A_0 = 1, A_1 = w, A_2 = w + w^2, ...; entry [i][k] is the coefficient of w^k.
    Recurrence: A_i = w (1-w) A_{i-1}' + i w A_{i-1}.
    """
    polys = [[1]]
    for i in range(1, max_order + 1):
        prev = polys[-1]
        deriv = [k * prev[k] for k in range(1, len(prev))]  # A'_{i-1}
        # w * A'_{i-1}
        t1 = [0] + deriv
        # -w^2 * A'_{i-1}
        t2 = [0, 0] + [-c for c in deriv]
        # i * w * A_{i-1}
        t3 = [0] + [i * c for c in prev]
        size = max(len(t1), len(t2), len(t3))
        cur = [0] * size
        for t in (t1, t2, t3):
            for k, c in enumerate(t):
                cur[k] += c
        while cur and cur[-1] == 0:
            cur.pop()
        polys.append(cur)
    return polys
