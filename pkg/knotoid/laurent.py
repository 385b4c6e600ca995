# encoding=utf-8
"""
Exact integer Laurent polynomials in one variable (t or A) and in the pair (A, u).

Values are sympy expressions kept expanded; arithmetic goes through sympy and
the exponent view `terms` ({exponent: coefficient}, no zero coefficients) is read
off the expansion. Rendering is canonical: ascending exponents, `*` between
coefficient and power.

>>> p = Laurent1.parse("-A^2 - A^-2")
>>> str(p ** 2)
'A^-4 + 2 + A^4'
>>> str(Laurent1.parse("t^-1 - 2 + t").substitute_inverse())
't^-1 - 2 + t'
"""
from __future__ import print_function, division
import logging
import re

import sympy as sp

from .errors import KnotoidArityError, KnotoidParseError


# Logger
log = logging.getLogger(__file__)

PLUS = 1
MINUS = -1

A = sp.Symbol("A")
U = sp.Symbol("u")
T = sp.Symbol("t")
_SYMBOLS = {"A": A, "u": U, "t": T}

_TERM_SEPARATOR = re.compile(r"\s*([+-])\s*")
_FACTOR = re.compile(r"([A-Za-z])(?:\^(-?\d+))?$")


def symbol(name):
    """ sympy symbol for a variable name """
    return _SYMBOLS.get(name) or sp.Symbol(name)


def exponent_terms(expr, gens):
    """
    {exponent tuple: coefficient} of a Laurent polynomial in the symbols `gens`.
    Anything else (rational coefficients, other symbols, fractional powers) is a
    TypeError.
    """
    terms = {}
    for monomial, coeff in sp.expand(expr).as_coefficients_dict().items():
        if not coeff.is_Integer:
            raise TypeError("coefficients must be integers, got {}".format(coeff))
        if monomial == 1:
            key = (0,) * len(gens)
        else:
            powers = monomial.as_powers_dict()
            if set(powers) - set(gens):
                raise TypeError("{} is not a monomial in {}".format(monomial, gens))
            if not all(sp.sympify(exp).is_Integer for exp in powers.values()):
                raise TypeError("{} has a non-integer exponent".format(monomial))
            key = tuple(int(powers.get(g, 0)) for g in gens)
        terms[key] = terms.get(key, 0) + int(coeff)
    return dict((k, v) for k, v in terms.items() if v != 0)


def _monomial(gens, key, coeff):
    out = sp.Integer(coeff)
    for gen, exp in zip(gens, key):
        out *= gen ** exp
    return out


class _LaurentBase(object):
    """ Shared arithmetic for Laurent1 and Laurent2 """
    ARITY = 0

    def _gens(self):
        raise NotImplementedError

    def _keyed(self, terms):
        """ Exponent-tuple view of a terms dict in this class's layout """
        raise NotImplementedError

    def _unkeyed(self, terms):
        raise NotImplementedError

    def _set_terms(self, terms):
        for coeff in terms.values():
            if not isinstance(coeff, int) or isinstance(coeff, bool):
                raise TypeError("coefficients must be integers, got {!r}".format(coeff))
        gens = self._gens()
        self.terms = dict((k, v) for k, v in terms.items() if v != 0)
        self.expr = sp.Add(*[_monomial(gens, key, v) for key, v in self._keyed(self.terms).items()])

    def _set_expr(self, expr):
        expr = sp.expand(expr)
        self.terms = self._unkeyed(exponent_terms(expr, self._gens()))
        self.expr = expr

    def _from_expr(self, expr):
        raise NotImplementedError

    def _check(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self._from_expr(sp.Integer(other))
        if not isinstance(other, _LaurentBase):
            raise TypeError("cannot combine {} with {!r}".format(type(self).__name__, other))
        if other.ARITY != self.ARITY:
            raise KnotoidArityError("cannot combine {} with {}".format(
                type(self).__name__, type(other).__name__))
        return other

    def _operand(self, other):
        return self._check(other).expr

    # ----------------------
    # Arithmetic
    # ----------------------
    def __add__(self, other):
        return self._from_expr(self.expr + self._operand(other))

    __radd__ = __add__

    def __neg__(self):
        return self._from_expr(-self.expr)

    def __sub__(self, other):
        return self._from_expr(self.expr - self._operand(other))

    def __rsub__(self, other):
        return self._from_expr(self._operand(other) - self.expr)

    def __mul__(self, other):
        return self._from_expr(self.expr * self._operand(other))

    __rmul__ = __mul__

    def scale(self, factor):
        """ Multiply every coefficient by the integer `factor` """
        return self._from_expr(sp.Integer(factor) * self.expr)

    def __pow__(self, exponent):
        if exponent < 0 and (len(self.terms) != 1 or abs(list(self.terms.values())[0]) != 1):
            raise ValueError("only monomial units have negative powers")
        return self._from_expr(self.expr ** exponent)

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = self._from_expr(sp.Integer(other))
        if not isinstance(other, _LaurentBase) or other.ARITY != self.ARITY:
            return NotImplemented
        return self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.ARITY, tuple(sorted(self.terms.items()))))

    def __bool__(self):
        return bool(self.terms)

    __nonzero__ = __bool__

    def is_zero(self):
        return not self.terms

    def __repr__(self):
        return "{}('{}')".format(type(self).__name__, self)


class Laurent1(_LaurentBase):
    """
    Laurent polynomial in one variable. Operands in another variable are read as
    polynomials in this one.
    """
    ARITY = 1

    def __init__(self, terms=None, variable="t"):
        self.variable = variable
        self.symbol = symbol(variable)
        self._set_terms(terms or {})

    def _gens(self):
        return (self.symbol,)

    def _keyed(self, terms):
        return dict(((k,), v) for k, v in terms.items())

    def _unkeyed(self, terms):
        return dict((k[0], v) for k, v in terms.items())

    def _from_expr(self, expr):
        return Laurent1.from_expr(expr, self.variable)

    def _operand(self, other):
        other = self._check(other)
        if other.symbol != self.symbol:
            return other.expr.subs(other.symbol, self.symbol)
        return other.expr

    @classmethod
    def from_expr(cls, expr, variable="t"):
        """ Wrap a sympy Laurent polynomial in `variable` """
        out = cls.__new__(cls)
        out.variable = variable
        out.symbol = symbol(variable)
        out._set_expr(expr)
        return out

    @classmethod
    def monomial(cls, exponent, coeff=1, variable="t"):
        return cls({exponent: coeff}, variable)

    @classmethod
    def constant(cls, value, variable="t"):
        return cls({0: value}, variable)

    def maxdeg(self):
        """ Largest exponent, None for the zero polynomial """
        return max(self.terms) if self.terms else None

    def mindeg(self):
        """ Smallest exponent, None for the zero polynomial """
        return min(self.terms) if self.terms else None

    def substitute_inverse(self):
        """ Replace the variable by its inverse """
        return self._from_expr(self.expr.subs(self.symbol, 1 / self.symbol))

    def coefficient(self, exponent):
        return self.terms.get(exponent, 0)

    def with_variable(self, variable):
        return Laurent1.from_expr(self.expr.subs(self.symbol, symbol(variable)), variable)

    def __str__(self):
        items = sorted(self.terms.items())
        return _render([(_power(self.variable, k), v) for k, v in items])

    @classmethod
    def parse(cls, text, variable=None):
        """ Parse the canonical rendering (any term order is accepted) """
        terms, names = _parse_terms(text, 1)
        if len(names) > 1:
            raise KnotoidParseError("more than one variable in {!r}".format(text))
        if variable is None:
            variable = names.pop() if names else "t"
        elif names and names != set([variable]):
            raise KnotoidParseError("expected variable {} in {!r}".format(variable, text))
        return cls(dict((k[0], v) for k, v in terms.items()), variable)


class Laurent2(_LaurentBase):
    """
    Laurent polynomial in A and u. Exponents are (A-exponent, u-exponent) pairs.
    """
    ARITY = 2
    VARIABLES = ("A", "u")

    def __init__(self, terms=None):
        self._set_terms(terms or {})

    def _gens(self):
        return (A, U)

    def _keyed(self, terms):
        return terms

    def _unkeyed(self, terms):
        return terms

    def _from_expr(self, expr):
        return Laurent2.from_expr(expr)

    @classmethod
    def from_expr(cls, expr):
        """ Wrap a sympy Laurent polynomial in A and u """
        out = cls.__new__(cls)
        out._set_expr(expr)
        return out

    @classmethod
    def monomial(cls, a_exp, u_exp, coeff=1):
        return cls({(a_exp, u_exp): coeff})

    @classmethod
    def from_laurent1(cls, p, u_exp=0):
        """ Embed a polynomial in A as the u^u_exp coefficient """
        return cls.from_expr(p.expr.subs(p.symbol, A) * U ** u_exp)

    def substitute_inverse(self):
        """ u -> u^-1 """
        return Laurent2.from_expr(self.expr.subs(U, 1 / U))

    def u_coefficient(self, u_exp):
        """ Coefficient of u^u_exp as a polynomial in A """
        return Laurent1(dict((a, v) for (a, u), v in self.terms.items() if u == u_exp), "A")

    def u_exponents(self):
        return sorted(set(u for (_, u) in self.terms))

    def specialize_u(self):
        """ Set u = 1 """
        return Laurent1.from_expr(self.expr.subs(U, 1), "A")

    def has_even_exponents(self):
        return all(a % 2 == 0 and u % 2 == 0 for (a, u) in self.terms)

    def __str__(self):
        items = sorted(self.terms.items())
        rendered = []
        for (a, u), v in items:
            factors = [f for f in (_power("A", a), _power("u", u)) if f]
            rendered.append(("*".join(factors), v))
        return _render(rendered)

    @classmethod
    def parse(cls, text):
        terms, _ = _parse_terms(text, 2)
        return cls(terms)


def _power(name, exponent):
    if exponent == 0:
        return ""
    if exponent == 1:
        return name
    return "{}^{}".format(name, exponent)


def _render(items):
    """ Join (monomial, coefficient) pairs; the zero polynomial renders as 0 """
    if not items:
        return "0"
    out = []
    for i, (mono, coeff) in enumerate(items):
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = "{}*{}".format(mag, mono)
        if i == 0:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(" {} {}".format(sign, body))
    return "".join(out)


def _parse_terms(text, arity):
    """
    Split a sum of monomials, keeping the column of each term for error reports
    (sympy's parser gives no positions). Returns ({exponent tuple: coeff}, names).
    """
    if text is None or not text.strip():
        raise KnotoidParseError("empty polynomial", 1, 1)
    stripped = text.strip()
    offset = text.index(stripped[0])
    pieces = []
    pos = 0
    sign = 1
    if stripped[0] in "+-":
        sign = -1 if stripped[0] == "-" else 1
        pos = 1
    for match in _TERM_SEPARATOR.finditer(stripped, pos):
        # A '-' directly after '^' belongs to an exponent
        if match.start() > 0 and stripped[match.start() - 1] == "^":
            continue
        pieces.append((sign, stripped[pos:match.start()].strip(), pos))
        sign = -1 if match.group(1) == "-" else 1
        pos = match.end()
    pieces.append((sign, stripped[pos:].strip(), pos))

    terms = {}
    names = set()
    allowed = ("A", "u") if arity == 2 else None
    for sign, body, start in pieces:
        column = offset + start + 1
        if not body:
            raise KnotoidParseError("missing term", 1, column)
        coeff = 1
        exps = {}
        for factor in body.split("*"):
            factor = factor.strip()
            if not factor:
                raise KnotoidParseError("empty factor in {!r}".format(body), 1, column)
            if factor.isdigit():
                coeff *= int(factor)
                continue
            match = _FACTOR.match(factor)
            if match is None:
                raise KnotoidParseError("bad factor {!r}".format(factor), 1, column)
            name = match.group(1)
            if allowed is not None and name not in allowed:
                raise KnotoidParseError("unknown variable {!r}".format(name), 1, column)
            names.add(name)
            exps[name] = exps.get(name, 0) + int(match.group(2) or 1)
        if arity == 2:
            key = (exps.get("A", 0), exps.get("u", 0))
        else:
            if len(exps) > 1:
                raise KnotoidParseError("two variables in {!r}".format(body), 1, column)
            key = (sum(exps.values()),)
        terms[key] = terms.get(key, 0) + sign * coeff
    return terms, names


# --------------------
# Public API functions
# --------------------

def arith(p, q, op):
    """
    Combine two polynomials; `op` is one of add, mul, scale, power. For scale and
    power `q` is an integer.
    """
    if op == "add":
        return p + q
    if op == "mul":
        return p * q
    if op == "scale":
        return p.scale(q)
    if op == "power":
        return p ** q
    raise ValueError("unknown operation {!r}".format(op))


def substitute_inverse(p):
    """ t -> t^-1 (u -> u^-1 for two variables) """
    return p.substitute_inverse()


def signed_degree(p, sign, variable=None):
    """
    deg+ = max(maxdeg, 0) and deg- = max(-mindeg, 0), both 0 for the zero polynomial.
    For two-variable polynomials `variable` selects "A" or "u" (default "u").

    >>> signed_degree(Laurent1.parse("1 - t"), MINUS)
    0
    """
    if isinstance(p, Laurent2):
        index = 0 if variable == "A" else 1
        exps = [k[index] for k in p.terms]
    else:
        exps = list(p.terms)
    if not exps:
        return 0
    if sign == PLUS:
        return max(max(exps), 0)
    return max(-min(exps), 0)


def parse(text):
    """ Parse either arity: polynomials mentioning u are two-variable """
    if re.search(r"\bu\b|\bu\^|\*u", text):
        return Laurent2.parse(text)
    return Laurent1.parse(text)


LOOP = -A ** 2 - A ** -2


def delta():
    """ The loop value -A^2 - A^-2 """
    return Laurent1.from_expr(LOOP, "A")


def minus_a_power(k):
    """ (-A)^k """
    return Laurent1.from_expr((-A) ** k, "A")
