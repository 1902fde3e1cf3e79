"""
Sparse Laurent polynomials with integer coefficients.

A term is keyed by its monomial, a tuple of ``(variable, exponent)`` pairs
sorted by variable name with no zero exponents. Coefficients are Python ints,
so arithmetic is exact at any size.
"""
import logging
from collections import defaultdict

import sympy

from snakegraphs.exceptions import InexactDivision

logger = logging.getLogger(__name__)


def _monomial(exponents):
    return tuple(sorted((var, exp) for var, exp in dict(exponents).items() if exp))


def _mul_monomials(a, b):
    merged = dict(a)
    for var, exp in b:
        merged[var] = merged.get(var, 0) + exp
    return _monomial(merged)


def _invert_monomial(m):
    return tuple((var, -exp) for var, exp in m)


class LaurentPoly:
    __slots__ = ('terms', '_hash')

    def __init__(self, terms=None):
        clean = {}
        for monomial, coefficient in (terms or {}).items():
            if coefficient:
                clean[_monomial(monomial)] = clean.get(_monomial(monomial), 0) + int(coefficient)
        self.terms = {m: c for m, c in clean.items() if c}
        self._hash = None

    @classmethod
    def constant(cls, value):
        return cls({(): value})

    @classmethod
    def variable(cls, name, exponent=1):
        return cls({((name, exponent),): 1})

    @classmethod
    def monomial(cls, exponents, coefficient=1):
        return cls({_monomial(exponents): coefficient})

    @classmethod
    def product_of(cls, names):
        """The monomial that multiplies one variable per name, repeats included."""
        exponents = defaultdict(int)
        for name in names:
            exponents[name] += 1
        return cls.monomial(exponents)

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return LaurentPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = defaultdict(int)
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                terms[_mul_monomials(m1, m2)] += c1 * c2
        return LaurentPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            if not self.is_monomial():
                raise InexactDivision(f"Cannot invert the non-monomial {self}")
            return self.inverse() ** -exponent
        result = LaurentPoly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"LaurentPoly({self})"

    @property
    def variables(self):
        return tuple(sorted({var for m in self.terms for var, _ in m}))

    def is_monomial(self):
        return len(self.terms) == 1

    def is_constant(self):
        return not self.terms or set(self.terms) == {()}

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms.get((), 0)

    def has_positive_coefficients(self):
        return all(c > 0 for c in self.terms.values())

    def inverse(self):
        if not self.is_monomial():
            raise InexactDivision(f"Cannot invert the non-monomial {self}")
        (m, c), = self.terms.items()
        if c not in (1, -1):
            raise InexactDivision(f"Coefficient {c} has no integer inverse")
        return LaurentPoly({_invert_monomial(m): c})

    def div_exact(self, other):
        """self / other, which must be a Laurent polynomial with integer coefficients."""
        other = self._coerce(other)
        if not other:
            raise InexactDivision("Division by zero")
        if not self:
            return LaurentPoly()
        if other.is_monomial():
            (m, c), = other.terms.items()
            if any(coefficient % c for coefficient in self.terms.values()):
                raise InexactDivision(f"{self} is not divisible by {other}")
            inverse = _invert_monomial(m)
            return LaurentPoly({_mul_monomials(mono, inverse): coefficient // c
                                for mono, coefficient in self.terms.items()})
        return self._div_with_sympy(other)

    def _shifted(self, gens):
        """self * x^shift with the smallest exponent of every variable moved to zero."""
        shift = {var: -min(dict(m).get(var, 0) for m in self.terms) for var in gens}
        shifted = self * LaurentPoly.monomial(shift)
        return shifted, LaurentPoly.monomial(shift)

    def _div_with_sympy(self, other):
        names = sorted(set(self.variables) | set(other.variables))
        gens = sympy.symbols(names) if names else ()
        numerator, shift_n = self._shifted(names)
        denominator, shift_d = other._shifted(names)
        quotient, remainder = sympy.div(numerator.to_sympy(), denominator.to_sympy(), *gens, domain='QQ')
        if remainder != 0:
            raise InexactDivision(f"{self} is not divisible by {other}")
        result = LaurentPoly.from_sympy(sympy.expand(quotient))
        logger.debug(f"Exact division via sympy over {len(names)} variables")
        # (N / sn) / (D / sd) = (N / D) * sd / sn
        return (result * shift_d).div_exact(shift_n)

    def specialize(self, values):
        """
        Substitute variables: ``values`` is a mapping name -> int, or an
        iterable of names that are all set to 1.
        """
        if not isinstance(values, dict):
            values = {name: 1 for name in values}
        terms = defaultdict(int)
        for m, c in self.terms.items():
            kept = []
            for var, exp in m:
                if var not in values:
                    kept.append((var, exp))
                    continue
                value = values[var]
                if exp < 0 and value not in (1, -1):
                    raise InexactDivision(f"Substituting {value} for {var} leaves a fraction")
                c *= value ** abs(exp)
            terms[tuple(kept)] += c
        return LaurentPoly(terms)

    def to_sympy(self):
        expr = sympy.Integer(0)
        for m, c in self.terms.items():
            term = sympy.Integer(c)
            for var, exp in m:
                term *= sympy.Symbol(var) ** exp
            expr += term
        return expr

    @classmethod
    def from_sympy(cls, expr):
        terms = defaultdict(int)
        for monomial, coefficient in sympy.expand(expr).as_coefficients_dict().items():
            if not coefficient.is_integer:
                raise InexactDivision(f"Non-integer coefficient {coefficient}")
            powers = {str(base): int(exp) for base, exp in monomial.as_powers_dict().items()
                      if base != 1}
            terms[_monomial(powers)] += int(coefficient)
        return cls(terms)

    def sorted_terms(self):
        """Terms by exponent vector over the sorted variables, largest first."""
        names = self.variables

        def key(item):
            exponents = dict(item[0])
            return tuple(exponents.get(var, 0) for var in names)

        return sorted(self.terms.items(), key=key, reverse=True)

    def __str__(self):
        if not self.terms:
            return '0'
        pieces = []
        for m, c in self.sorted_terms():
            factors = '*'.join(var if exp == 1 else f"{var}^{exp}" for var, exp in m)
            if not factors:
                text = str(c)
            elif c == 1:
                text = factors
            elif c == -1:
                text = f"-{factors}"
            else:
                text = f"{c}*{factors}"
            if pieces:
                pieces.append(f"- {text[1:]}" if text.startswith('-') else f"+ {text}")
            else:
                pieces.append(text)
        return ' '.join(pieces)


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
