"""Inline expression syntax for small Hopf and tensor elements.

Grammar (precedence from loose to tight):

    expr    :=  ['-'] term (('+' | '-') term)*
    term    :=  product (TENSOR product)*
    product :=  factor (['*'] factor)*
    factor  :=  atom ['^' natural]
    atom    :=  rational | generator | '(' expr ')'

TENSOR is written `(x)` or the character `⊗`; it binds tighter than `+`
so `2 t (x) t + t^2 (x) t^2` reads as a sum of two tensors. Products may
be juxtaposed (`3t^2`), rationals are `p` or `p/q`. Examples:

    t^2 + 3t
    2 t (x) t
    1/2 t (x) t^2 - t^2 (x) t
    (t + t^2) (x) (t - t^2)

Tensor factors of a term must agree in arity; `parse_element` insists on
arity one and returns a HopfElement, `parse_tensor` returns a
TensorElement of the inferred arity.
"""

import re

from .errors import ArityMismatch, ParseError
from .hopf import HopfElement, TensorElement
from .scalars import rational

__all__ = ["parse_element", "parse_tensor"]

_TOKEN_RE = re.compile(r"""
    (?P<tensor>\(\s*x\s*\)|⊗)
  | (?P<number>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*/^()])
  | (?P<ws>\s+)
  | (?P<bad>.)
""", re.VERBOSE)


def _tokenize(text):
    out = []
    for m in _TOKEN_RE.finditer(text):
        kind = m.lastgroup
        if kind == "ws":
            continue
        if kind == "bad":
            raise ParseError(
                f"unexpected character {m.group()!r} at position {m.start()}")
        out.append((kind if kind != "op" else m.group(), m.group(),
                    m.start()))
    return out


class _Parser:
    def __init__(self, text, algebra):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.algebra = algebra

    def peek(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return (None, "", -1)

    def next(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise ParseError(
                f"expected {kind!r} but found {tok[1]!r} "
                f"at position {tok[2]}")
        return tok

    def at_atom(self):
        kind = self.peek()[0]
        return kind in ("number", "name", "(")

    # -- grammar ----------------------------------------------------------

    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok[0] is not None:
            raise ParseError(
                f"trailing input {tok[1]!r} at position {tok[2]}")
        return value

    def expr(self):
        if self.peek()[0] == "-":
            self.next()
            acc = -self.term()
        else:
            acc = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.next()[0]
            acc = self._combine(acc, self.term(), op)
        return acc

    def _combine(self, lhs, rhs, op):
        lhs, rhs = self._promote(lhs, rhs), self._promote(rhs, lhs)
        try:
            return lhs + rhs if op == "+" else lhs - rhs
        except (ArityMismatch, TypeError) as exc:
            raise ParseError(
                f"cannot combine incompatible terms: {exc}") from exc

    def _promote(self, value, like):
        """Lift a bare rational to match the shape of the other operand."""
        if isinstance(value, (HopfElement, TensorElement)):
            return value
        if isinstance(like, HopfElement):
            return HopfElement.one(self.algebra) * value
        if isinstance(like, TensorElement):
            return TensorElement.unit(self.algebra, like.arity) * value
        return value

    def term(self):
        slots = [self.product()]
        while self.peek()[0] == "tensor":
            self.next()
            slots.append(self.product())
        if len(slots) == 1:
            return slots[0]
        return TensorElement.from_slots(
            *[self._slot_element(s) for s in slots])

    def _slot_element(self, value):
        if isinstance(value, HopfElement):
            return value
        if isinstance(value, TensorElement):
            if value.arity == 1:
                return value.as_element()
            raise ParseError(
                "tensor slots cannot themselves be tensors; write "
                "a (x) b (x) c without nesting")
        return HopfElement.one(self.algebra) * value

    def product(self):
        acc = self.factor()
        while True:
            if self.peek()[0] == "*":
                self.next()
            elif not self.at_atom():
                return acc
            rhs = self.factor()
            try:
                acc = acc * rhs
            except (ArityMismatch, TypeError) as exc:
                raise ParseError(
                    f"cannot multiply incompatible factors: {exc}") from exc

    def factor(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.next()
            tok = self.expect("number")
            base = base ** int(tok[1])
        return base

    def atom(self):
        kind, text, pos = self.peek()
        if kind == "number":
            self.next()
            if self.peek()[0] == "/":
                self.next()
                den = self.expect("number")[1]
                return rational(f"{text}/{den}")
            return rational(text)
        if kind == "name":
            self.next()
            if text not in self.algebra.names:
                known = ", ".join(self.algebra.names) or "(none)"
                raise ParseError(
                    f"unknown generator {text!r} at position {pos}; "
                    f"algebra generators: {known}")
            return HopfElement.generator(self.algebra, text)
        if kind == "(":
            self.next()
            value = self.expr()
            self.expect(")")
            return value
        raise ParseError(
            f"expected a value but found {text!r} at position {pos}"
            if kind is not None else "unexpected end of expression")


def _as_tensor(value, algebra, arity=None):
    if isinstance(value, TensorElement):
        return value
    if isinstance(value, HopfElement):
        return value.as_tensor()
    # bare rational: multiple of the unit, at whatever arity was asked for
    return TensorElement.unit(algebra, 1 if arity is None else arity) * value


def parse_tensor(text, algebra, arity=None):
    """Parse an inline expression to a TensorElement; with `arity` given,
    a mismatching expression is a ParseError.  A pure scalar (no tensor
    sign, no generators) is read as that multiple of the arity-wide unit,
    so "0" denotes the zero tensor at any requested arity."""
    value = _Parser(text, algebra).parse()
    tensor = _as_tensor(value, algebra, arity)
    if arity is not None and tensor.arity != arity:
        raise ParseError(
            f"expected a tensor of arity {arity} but parsed arity "
            f"{tensor.arity}: {text!r}")
    return tensor


def parse_element(text, algebra):
    """Parse an inline expression to a HopfElement (arity one only)."""
    value = _Parser(text, algebra).parse()
    if isinstance(value, TensorElement):
        if value.arity != 1:
            raise ParseError(
                f"expected a plain algebra element but parsed a tensor "
                f"of arity {value.arity}: {text!r}")
        return value.as_element()
    if isinstance(value, HopfElement):
        return value
    return HopfElement.one(algebra) * value
