"""Truncated multivariate power series with tensor coefficients.

A Series holds finitely many terms exps -> TensorElement over a fixed
algebra, arity and variable tuple, together with its certified order: every
coefficient of total variable degree <= order equals that of the true
mathematical object, and nothing above the order is stored. order == math.inf
marks a complete polynomial, exact at every order (constant terms, Lemma-form
group laws, coboundary data). The bookkeeping rules:

  add/sub            min of the orders
  mul                min(r_f + val(g), r_g + val(f))
  derivative         r - 1
  integrate          r + 1
  mul_inverse        r (coefficient k of 1/f depends only on f_0..f_k)
  comp_inverse       r (same triangularity)
  substitute         min(min_v r_v, r_f - sum_v slack_v)

where slack_v is the nilpotency index of the constant term of the series
assigned to variable v (largest m with kappa^m != 0). The slack term is not
pessimism: substituting a series with nilpotent constant term kappa lets the
unknown tail of the outer series reach down by up to slack orders, so only
r_f - sum slack_v is honestly certified. Composite pipelines that need full
certification at order N therefore compute at an elevated internal order
first (see the group-law reconstruction).

Hopf-degree truncation (coefficients above the algebra's degree bound) is an
exact quotient and never reduces the order; it only sets the `truncated`
flag.
"""

import math

from .errors import (
    AlgebraMismatch,
    ArityMismatch,
    NonInvertibleConstantTerm,
    NonNilpotentConstantTerm,
    NonZeroConstantTerm,
    ShapeMismatch,
    TruncationInsufficient,
)
from .hopf import TensorElement, _is_rational
from .scalars import ONE, ZERO, Q, format_rational, rational

INF = math.inf

DEFAULT_NAMES = {
    0: (),
    1: ("x",),
    2: ("X", "Y"),
    3: ("X", "Y", "Z"),
}


def default_names(nvars):
    return DEFAULT_NAMES[nvars]


class Series:
    """Truncated power series in 0..3 variables with TensorElement
    coefficients; immutable after construction."""

    __slots__ = ("algebra", "arity", "nvars", "names", "order", "terms",
                 "truncated")

    def __init__(self, algebra, arity, nvars, terms, order=INF, names=None,
                 truncated=False, _normalize=True):
        if nvars not in (0, 1, 2, 3):
            raise ShapeMismatch(f"variable count {nvars} outside 0..3")
        names = tuple(names) if names is not None else DEFAULT_NAMES[nvars]
        if len(names) != nvars:
            raise ShapeMismatch("variable name count != variable count")
        self.algebra = algebra
        self.arity = arity
        self.nvars = nvars
        self.names = names
        self.order = order
        self.truncated = truncated
        if _normalize:
            clean = {}
            for exps, coeff in terms.items():
                exps = tuple(exps)
                if len(exps) != nvars:
                    raise ShapeMismatch(
                        f"exponent vector {exps} has wrong length")
                if sum(exps) > order:
                    continue
                if coeff.is_zero():
                    continue
                if coeff.arity != arity:
                    raise ArityMismatch(
                        "coefficient arity differs from series arity")
                if coeff.algebra != algebra:
                    raise AlgebraMismatch(
                        "coefficient over a different algebra")
                clean[exps] = coeff
                if coeff.truncated:
                    self.truncated = True
            self.terms = clean
        else:
            self.terms = terms

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, algebra, arity, nvars, order=INF, names=None):
        return cls(algebra, arity, nvars, {}, order, names, _normalize=False)

    @classmethod
    def variable(cls, algebra, arity, nvars, index, order=INF, names=None):
        if not 0 <= index < nvars:
            raise ShapeMismatch(f"variable index {index} outside 0..{nvars-1}")
        exps = tuple(1 if i == index else 0 for i in range(nvars))
        if order < 1:
            return cls.zero(algebra, arity, nvars, order, names)
        return cls(algebra, arity, nvars,
                   {exps: TensorElement.unit(algebra, arity)},
                   order, names, _normalize=False)

    @classmethod
    def constant(cls, coeff, nvars, order=INF, names=None):
        """Constant series with the given TensorElement as its value."""
        zero_exps = (0,) * nvars
        terms = {} if coeff.is_zero() else {zero_exps: coeff}
        return cls(coeff.algebra, coeff.arity, nvars, terms, order, names,
                   coeff.truncated, _normalize=False)

    # -- bookkeeping helpers ---------------------------------------------------

    def _check_shape(self, other):
        if self.algebra != other.algebra:
            raise AlgebraMismatch("series over different Hopf algebras")
        if (self.arity != other.arity or self.nvars != other.nvars
                or self.names != other.names):
            raise ShapeMismatch(
                f"series shapes differ: arity {self.arity} vs {other.arity},"
                f" variables {self.names} vs {other.names}")

    def is_zero(self):
        return not self.terms

    def valuation(self):
        """Minimal total degree of a stored term; inf for the zero series."""
        if not self.terms:
            return INF
        return min(sum(e) for e in self.terms)

    def max_degree(self):
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def coeff(self, exps):
        exps = tuple(exps)
        return self.terms.get(exps,
                              TensorElement.zero(self.algebra, self.arity))

    def constant_term(self):
        return self.coeff((0,) * self.nvars)

    def truncate(self, order):
        """Drop terms above the order; certification shrinks accordingly."""
        new_order = min(self.order, order)
        terms = {e: c for e, c in self.terms.items() if sum(e) <= new_order}
        return Series(self.algebra, self.arity, self.nvars, terms, new_order,
                      self.names, self.truncated, _normalize=False)

    def with_order(self, order):
        """Re-stamp the certified order. Raising it asserts, on the caller's
        authority, that the stored terms are exact through the new order
        (used after an independent verification at elevated working order);
        lowering it behaves like truncate."""
        if order <= self.order:
            return self.truncate(order)
        return Series(self.algebra, self.arity, self.nvars, dict(self.terms),
                      order, self.names, self.truncated, _normalize=False)

    def with_names(self, names):
        """Same series under different display names for the variables."""
        names = tuple(names)
        if len(names) != self.nvars:
            raise ShapeMismatch(
                f"{len(names)} names for {self.nvars} variables")
        return Series(self.algebra, self.arity, self.nvars, self.terms,
                      self.order, names, self.truncated, _normalize=False)

    # -- linear structure -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Series):
            return other
        if _is_rational(other) or isinstance(other, int):
            return Series.constant(
                TensorElement.unit(self.algebra, self.arity)
                * rational(other), self.nvars, INF, self.names)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        self._check_shape(other)
        order = min(self.order, other.order)
        acc = dict(self.terms)
        for e, c in other.terms.items():
            cur = acc.get(e)
            acc[e] = c if cur is None else cur + c
        terms = {e: c for e, c in acc.items()
                 if sum(e) <= order and not c.is_zero()}
        return Series(self.algebra, self.arity, self.nvars, terms, order,
                      self.names, self.truncated or other.truncated,
                      _normalize=False)

    def __neg__(self):
        return Series(self.algebra, self.arity, self.nvars,
                      {e: -c for e, c in self.terms.items()}, self.order,
                      self.names, self.truncated, _normalize=False)

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, q):
        q = rational(q)
        if q == 0:
            return Series.zero(self.algebra, self.arity, self.nvars,
                               self.order, self.names)
        return Series(self.algebra, self.arity, self.nvars,
                      {e: c * q for e, c in self.terms.items()}, self.order,
                      self.names, self.truncated, _normalize=False)

    def scale_tensor(self, tensor):
        """Multiply every coefficient by a fixed TensorElement."""
        acc = {}
        truncated = self.truncated or tensor.truncated
        for e, c in self.terms.items():
            prod = c * tensor
            truncated = truncated or prod.truncated
            if not prod.is_zero():
                acc[e] = prod
        return Series(self.algebra, self.arity, self.nvars, acc, self.order,
                      self.names, truncated, _normalize=False)

    # -- multiplication ----------------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, Series):
            self._check_shape(other)
            return _series_mul(self, other)
        if _is_rational(other) or isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if _is_rational(other) or isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative series powers are not defined")
        result = Series.constant(TensorElement.unit(self.algebra, self.arity),
                                 self.nvars, INF, self.names)
        base = self
        for _ in range(n):
            result = result * base
        return result

    # -- calculus ------------------------------------------------------------------

    def derivative(self, var=0):
        """Formal partial derivative; certified order drops by one."""
        if not 0 <= var < self.nvars:
            raise ShapeMismatch(f"variable index {var} outside series")
        acc = {}
        for e, c in self.terms.items():
            k = e[var]
            if k == 0:
                continue
            exps = e[:var] + (k - 1,) + e[var + 1:]
            scaled = c * Q(k)
            prev = acc.get(exps)
            acc[exps] = scaled if prev is None else prev + scaled
        order = self.order - 1 if self.order != INF else INF
        terms = {e: c for e, c in acc.items()
                 if sum(e) <= order and not c.is_zero()}
        return Series(self.algebra, self.arity, self.nvars, terms, order,
                      self.names, self.truncated, _normalize=False)

    def integrate(self, var=0):
        """Term-wise antiderivative with integration constant 0; certified
        order rises by one."""
        if not 0 <= var < self.nvars:
            raise ShapeMismatch(f"variable index {var} outside series")
        acc = {}
        for e, c in self.terms.items():
            exps = e[:var] + (e[var] + 1,) + e[var + 1:]
            acc[exps] = c * (ONE / Q(e[var] + 1))
        order = self.order + 1 if self.order != INF else INF
        return Series(self.algebra, self.arity, self.nvars, acc, order,
                      self.names, self.truncated, _normalize=False)

    # -- composition ------------------------------------------------------------------

    def substitute(self, assignments):
        """Simultaneous substitution of a series for every variable.

        assignments: sequence or dict index -> Series, one per variable, all
        sharing one target shape and this series' coefficient arity. Each
        assigned constant term must have full counit 0 (NonNilpotentConstantTerm
        otherwise); the certified order of the result is
        min(min_v order_v, order_f - sum_v slack_v) as described in the
        module docstring.
        """
        if isinstance(assignments, dict):
            assigns = [assignments.get(i) for i in range(self.nvars)]
        else:
            assigns = list(assignments)
        if len(assigns) != self.nvars or any(a is None for a in assigns):
            raise ShapeMismatch(
                "substitution needs an assignment for every variable")
        if self.nvars == 0:
            return Series(self.algebra, self.arity, 0, dict(self.terms),
                          self.order, self.names, self.truncated,
                          _normalize=False)
        target = assigns[0]
        for a in assigns[1:]:
            target._check_shape(a)
        if target.algebra != self.algebra:
            raise AlgebraMismatch("assignment over a different algebra")
        if target.arity != self.arity:
            raise ArityMismatch(
                "assigned series arity differs from the substituted series")

        occurring = [False] * self.nvars
        for e in self.terms:
            for v, k in enumerate(e):
                if k:
                    occurring[v] = True

        cap = self.order
        slack_total = 0
        for v, a in enumerate(assigns):
            if not occurring[v]:
                continue
            kappa = a.constant_term()
            if not kappa.is_zero():
                if kappa.full_counit() != 0:
                    raise NonNilpotentConstantTerm(
                        f"assignment for variable {self.names[v]} has "
                        "constant term with nonzero full counit")
                slack_total += kappa.nilpotency_slack()
            cap = min(cap, a.order)
        if self.order != INF:
            cap = min(cap, self.order - slack_total)

        result = _substitute_rec(self, assigns, cap)
        truncated = self.truncated or result.truncated or any(
            a.truncated for v, a in enumerate(assigns) if occurring[v])
        return Series(target.algebra, self.arity, target.nvars, result.terms,
                      cap, target.names, truncated, _normalize=False)

    def comp_inverse(self, order=None):
        """Compositional inverse of a one-variable series with f(0) = 0 and
        linear coefficient of full counit 1. The inverse of a complete
        polynomial is an infinite series, so an explicit target order is
        required when this series has order inf."""
        if self.nvars != 1:
            raise ShapeMismatch("compositional inverse needs one variable")
        if not self.constant_term().is_zero():
            raise NonZeroConstantTerm(
                "compositional inverse needs zero constant term")
        b0 = self.coeff((1,))
        if b0.full_counit() != 1:
            raise NonInvertibleConstantTerm(
                "linear coefficient must have full counit 1")
        if order is None:
            if self.order == INF:
                raise ValueError(
                    "series is a complete polynomial; its compositional "
                    "inverse is infinite, pass an explicit order")
            order = self.order
        if order > self.order:
            raise TruncationInsufficient(
                f"compositional inverse through order {order} needs the "
                f"input through that order (certified {self.order})",
                certified=self.order, requested=order)
        b0_inv = b0.mul_inverse()
        f = self.truncate(order)
        h = Series(self.algebra, self.arity, 1, {(1,): b0_inv}, order,
                   self.names, self.truncated, _normalize=False)
        for k in range(2, order + 1):
            comp = f.substitute([h])
            residue = comp.coeff((k,))
            if residue.is_zero():
                continue
            correction = -(b0_inv * residue)
            h = h + Series(self.algebra, self.arity, 1, {(k,): correction},
                           order, self.names, _normalize=False)
        return h

    # -- multiplicative inverse -------------------------------------------------------

    def mul_inverse(self, order=None):
        """Series g with f*g = 1. Needs a constant term of full counit 1;
        the finite geometric expansion in its nilpotent part starts the
        order-by-order recursion for the rest.

        For a complete polynomial whose positive-degree coefficients are all
        counit-zero the inverse is again a complete polynomial (degree
        exhaustion) and is computed exactly; otherwise the inverse is an
        infinite series and an explicit target order is required when this
        series has order inf."""
        f0 = self.constant_term()
        if f0.full_counit() != 1:
            raise NonInvertibleConstantTerm(
                "constant term must have full counit 1 "
                "(rational rescaling is the caller's job)")
        f0_inv = f0.mul_inverse()

        parts = {}
        for e, c in self.terms.items():
            d = sum(e)
            if d:
                parts.setdefault(d, []).append((e, c))
        if not parts:
            return Series.constant(f0_inv, self.nvars, self.order,
                                   self.names)
        maxdeg = max(parts)

        exhaustive = False
        if order is None:
            if self.order != INF:
                order = self.order
            else:
                if any(c.full_counit() != 0
                       for entries in parts.values() for _, c in entries):
                    raise ValueError(
                        "series is a complete polynomial with a "
                        "non-nilpotent positive part; its inverse is "
                        "infinite, pass an explicit order")
                exhaustive = True
                # every use of a positive-degree part adds Hopf degree, so
                # the recursion dies after boundedly many orders
                order = (self.arity * self.algebra.degree_bound * maxdeg
                         + maxdeg)
        elif order > self.order:
            raise TruncationInsufficient(
                f"inverse through order {order} needs the input through "
                f"that order (certified {self.order})",
                certified=self.order, requested=order)

        levels = {0: {(0,) * self.nvars: f0_inv}}
        acc_terms = {(0,) * self.nvars: f0_inv}
        truncated = self.truncated
        for m in range(1, order + 1):
            raw = {}
            for j in range(1, min(m, maxdeg) + 1):
                prev = levels.get(m - j)
                if not prev:
                    continue
                for e_f, c_f in parts.get(j, ()):
                    for e_b, c_b in prev.items():
                        e = tuple(a + b for a, b in zip(e_f, e_b))
                        prod = c_f * c_b
                        truncated = truncated or prod.truncated
                        if prod.is_zero():
                            continue
                        cur = raw.get(e)
                        raw[e] = prod if cur is None else cur + prod
            level = {}
            for e, c in raw.items():
                val = -(f0_inv * c)
                if not val.is_zero():
                    level[e] = val
                    acc_terms[e] = val
            levels[m] = level
            if exhaustive and all(
                    not levels.get(m - i) for i in range(min(m, maxdeg))):
                break
        result_order = INF if exhaustive else min(order, self.order)
        return Series(self.algebra, self.arity, self.nvars, acc_terms,
                      result_order, self.names, truncated)

    # -- coefficient-wise structure maps -------------------------------------------

    def map_coefficients(self, fn, arity=None):
        """Apply a TensorElement -> TensorElement map to every coefficient
        (slot lifts like Delta x id, id x eps, slot embeddings). All outputs
        must share one arity; pass arity when the result can be empty."""
        acc = {}
        out_arity = arity
        truncated = self.truncated
        for e, c in self.terms.items():
            out = fn(c)
            if out.algebra != self.algebra:
                raise AlgebraMismatch(
                    "coefficient map changed the algebra")
            if out_arity is None:
                out_arity = out.arity
            elif out.arity != out_arity:
                raise ArityMismatch(
                    "coefficient map produced mixed arities")
            truncated = truncated or out.truncated
            if not out.is_zero():
                acc[e] = out
        if out_arity is None:
            out_arity = self.arity
        return Series(self.algebra, out_arity, self.nvars, acc, self.order,
                      self.names, truncated, _normalize=False)

    # -- variable plumbing -----------------------------------------------------------

    def embed_vars(self, nvars, positions, names=None):
        """Place this series' variables at the given positions of a larger
        variable tuple (exponents elsewhere zero)."""
        positions = tuple(positions)
        if len(positions) != self.nvars:
            raise ShapeMismatch("one position per variable required")
        if list(positions) != sorted(set(positions)) or (
                positions and positions[-1] >= nvars):
            raise ShapeMismatch(f"bad variable positions {positions}")
        acc = {}
        for e, c in self.terms.items():
            exps = [0] * nvars
            for pos, k in zip(positions, e):
                exps[pos] = k
            acc[tuple(exps)] = c
        return Series(self.algebra, self.arity, nvars, acc, self.order,
                      names if names is not None else DEFAULT_NAMES[nvars],
                      self.truncated, _normalize=False)

    def set_variable_zero(self, var):
        """Substitute 0 for one variable, keeping the variable tuple."""
        if not 0 <= var < self.nvars:
            raise ShapeMismatch(f"variable index {var} outside series")
        terms = {e: c for e, c in self.terms.items() if e[var] == 0}
        return Series(self.algebra, self.arity, self.nvars, terms,
                      self.order, self.names, self.truncated,
                      _normalize=False)

    def drop_variable(self, var):
        """Remove a variable that occurs in no stored term."""
        if any(e[var] for e in self.terms):
            raise ShapeMismatch(
                f"variable {self.names[var]} still occurs; cannot drop")
        acc = {e[:var] + e[var + 1:]: c for e, c in self.terms.items()}
        names = self.names[:var] + self.names[var + 1:]
        return Series(self.algebra, self.arity, self.nvars - 1, acc,
                      self.order, names, self.truncated, _normalize=False)

    def permute_vars(self, perm):
        """Reorder variables: new variable i is old variable perm[i]."""
        perm = tuple(perm)
        if sorted(perm) != list(range(self.nvars)):
            raise ShapeMismatch(f"{perm} is not a permutation")
        acc = {}
        for e, c in self.terms.items():
            acc[tuple(e[p] for p in perm)] = c
        return Series(self.algebra, self.arity, self.nvars, acc, self.order,
                      self.names, self.truncated, _normalize=False)

    def rename(self, names):
        return Series(self.algebra, self.arity, self.nvars, dict(self.terms),
                      self.order, tuple(names), self.truncated,
                      _normalize=False)

    # -- comparison --------------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return (self.algebra == other.algebra and self.arity == other.arity
                and self.nvars == other.nvars and self.names == other.names
                and self.order == other.order and self.terms == other.terms)

    def __hash__(self):
        return hash((self.algebra, self.arity, self.nvars, self.names,
                     self.order, tuple(sorted(self.terms))))

    def same_through(self, other, order=None):
        """Term-wise equality through the common certified order (or the
        given order, when lower)."""
        self._check_shape(other)
        cap = min(self.order, other.order)
        if order is not None:
            cap = min(cap, order)
        for e in set(self.terms) | set(other.terms):
            if sum(e) > cap:
                continue
            if self.coeff(e) != other.coeff(e):
                return False
        return True

    # -- presentation --------------------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda kv: (sum(kv[0]),
                                      tuple(-e for e in kv[0])))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = [_term_str(self, e, c) for e, c in self.sorted_terms()]
        out = parts[0]
        for p in parts[1:]:
            if p.startswith("-"):
                out += f" - {p[1:]}"
            else:
                out += f" + {p}"
        return out

    def __repr__(self):
        order = "inf" if self.order == INF else self.order
        return (f"<Series[{self.nvars}v/{self.arity}t] order={order} "
                f"{self}>")


def _series_mul(f, g):
    if f.order == INF and g.order == INF:
        cap = INF
    else:
        cap = min(f.order + g.valuation(), g.order + f.valuation())
    algebra = f.algebra
    bound = algebra.degree_bound
    kdeg = algebra.key_degree
    mul_key = algebra.mul_key

    def graded_items(coeff):
        return sorted(((kdeg(k), k, q) for k, q in coeff.terms.items()))

    la = sorted(((sum(e), e, graded_items(c)) for e, c in f.terms.items()))
    lb = sorted(((sum(e), e, graded_items(c)) for e, c in g.terms.items()))
    acc = {}
    truncated = f.truncated or g.truncated
    vb = lb[0][0] if lb else 0
    for da, ea, ia in la:
        if da + vb > cap:
            break
        for db, eb, ib in lb:
            if da + db > cap:
                break
            e = tuple(x + y for x, y in zip(ea, eb))
            tgt = acc.get(e)
            if tgt is None:
                tgt = acc[e] = {}
            db_min = ib[0][0] if ib else 0
            for dka, ka, qa in ia:
                if dka + db_min > bound:
                    # items are degree sorted, so every later pair
                    # overflows as well
                    truncated = True
                    break
                for dkb, kb, qb in ib:
                    if dka + dkb > bound:
                        truncated = True
                        break
                    k = mul_key(ka, kb)
                    tgt[k] = tgt.get(k, ZERO) + qa * qb
    terms = {}
    for e, raw in acc.items():
        clean = {k: q for k, q in raw.items() if q != 0}
        if clean:
            terms[e] = TensorElement(algebra, f.arity, clean,
                                     _normalize=False)
    return Series(algebra, f.arity, f.nvars, terms, cap, f.names, truncated,
                  _normalize=False)


def _substitute_rec(f, assigns, cap):
    """Horner evaluation over the first variable, recursing on the rest.
    Intermediates are truncated at cap; certification is stamped by the
    caller."""
    target = assigns[0]
    shape = (target.algebra, f.arity, target.nvars, target.names)
    if f.nvars == 0 or not f.terms:
        coeff = f.terms.get((0,) * f.nvars)
        if coeff is None:
            return Series.zero(shape[0], shape[1], shape[2], INF, shape[3])
        return Series.constant(coeff, shape[2], INF, shape[3])
    if f.nvars == 1:
        groups = {e[0]: Series.constant(c, shape[2], INF, shape[3])
                  for e, c in f.terms.items()}
    else:
        buckets = {}
        for e, c in f.terms.items():
            buckets.setdefault(e[0], {})[e[1:]] = c
        groups = {}
        for k, sub in buckets.items():
            sub_series = Series(f.algebra, f.arity, f.nvars - 1, sub, INF,
                                f.names[1:], f.truncated, _normalize=False)
            groups[k] = _substitute_rec(sub_series, assigns[1:], cap)
    a0 = assigns[0]
    kmax = max(groups)
    result = groups[kmax]
    for k in range(kmax - 1, -1, -1):
        result = result * a0
        if cap != INF:
            result = result.truncate(cap)
        if k in groups:
            result = result + groups[k]
    if cap != INF:
        result = result.truncate(cap)
    return result


# -- functional aliases --------------------------------------------------------

def series_add(f, g):
    return f + g


def series_mul(f, g):
    return f * g


def substitute(f, assignments):
    return f.substitute(assignments)


def derivative(f, var=0):
    return f.derivative(var)


def integrate(f, var=0):
    return f.integrate(var)


def mul_inverse(f, order=None):
    return f.mul_inverse(order)


def comp_inverse(f, order=None):
    return f.comp_inverse(order)


def map_coefficients(f, fn, arity=None):
    return f.map_coefficients(fn, arity)


# -- pretty printing -------------------------------------------------------------

def _mono_part(names, exps):
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "·".join(parts)


def _term_str(series, exps, coeff):
    algebra = series.algebra
    mono = _mono_part(series.names, exps)
    unit_key = (algebra.unit_mono,) * series.arity
    items = coeff.terms
    if len(items) == 1:
        ((key, q),) = items.items()
        if key == unit_key:
            if not mono:
                return format_rational(q)
            if q == 1:
                return mono
            if q == -1:
                return f"-{mono}"
            return f"{format_rational(q)}·{mono}"
        if series.arity == 1:
            body = algebra.mono_str(key[0])
        else:
            body = "(" + "⊗".join(algebra.mono_str(m) for m in key) + ")"
        sign = ""
        if q == -1:
            sign, q = "-", ONE
        prefix = "" if q == 1 else format_rational(q)
        if series.arity == 1 and prefix and prefix.startswith("-"):
            sign, prefix = "-", prefix[1:]
        head = f"{sign}{prefix}{body}"
        return head if not mono else f"{head}·{mono}"
    body = str(coeff)
    head = f"({body})"
    return head if not mono else f"{head}·{mono}"
