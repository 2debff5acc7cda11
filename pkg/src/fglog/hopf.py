"""Graded connected commutative Hopf algebras over exact rationals.

An algebra is presented by finitely many generators with positive degrees, a
degree bound D, and a coproduct table per generator. The basis is the set of
monomials of degree <= D; multiplication is polynomial multiplication with
everything above D truncated away (an exact quotient of the free object).
Connectedness (1 is the only degree-0 basis element) makes every
positive-degree element nilpotent in the quotient, which is what the series
engine's inversions rely on.

The counit is the augmentation extended multiplicatively, the coproduct is
extended multiplicatively from the generator table, and the antipode is
derived by induction on generator degree from mu(S x id)Delta = eta eps
rather than taken as input. Mutation hooks (`HopfAlgebra.mutated`) produce
deliberately broken structure tables for testing the axiom checker, so every
derived map is defensive about tables that fail the usual axioms.
"""

from .errors import (
    AlgebraMismatch,
    ArityMismatch,
    DegreeOverflow,
    NonInvertibleConstantTerm,
    NonNilpotentConstantTerm,
    SpecError,
)
from .report import Report, Violation
from .scalars import ONE, ZERO, Q, format_rational, rational

_STRUCTURE_MAPS = ("comul", "counit", "antipode", "id")


def _normalize_terms(terms):
    """Drop zero coefficients; return a plain dict."""
    return {k: q for k, q in terms.items() if q != 0}


class HopfAlgebra:
    """A graded connected commutative Hopf algebra, truncated at degree D.

    Instances are immutable after construction and hashable on their
    signature (generator names, degrees, degree bound); structural equality
    also compares the structure tables so algebras decoded from files
    interoperate with programmatically built ones.
    """

    __slots__ = (
        "names",
        "degrees",
        "degree_bound",
        "_gen_comul",
        "_gen_counit",
        "_gen_antipode",
        "_index",
        "_mul_cache",
        "_comul_cache",
        "_antipode_cache",
        "_deg_cache",
        "_kdeg_cache",
        "_kmul_cache",
        "_monomials",
        "_hash",
    )

    def __init__(self, names, degrees, degree_bound, gen_comul,
                 gen_counit=None, gen_antipode=None, validate=True):
        names = tuple(names)
        degrees = tuple(int(d) for d in degrees)
        if len(names) != len(set(names)):
            raise SpecError("duplicate generator names")
        if any(d < 1 for d in degrees):
            raise SpecError("generator degrees must be >= 1")
        if any(d > degree_bound for d in degrees):
            raise DegreeOverflow(
                "generator degree exceeds the degree bound")
        self.names = names
        self.degrees = degrees
        self.degree_bound = int(degree_bound)
        self._index = {n: i for i, n in enumerate(names)}
        self._gen_comul = tuple(
            _normalize_terms(dict(t)) for t in gen_comul)
        self._gen_counit = tuple(
            gen_counit if gen_counit is not None else (ZERO,) * len(names))
        self._gen_antipode = tuple(
            gen_antipode if gen_antipode is not None else (None,) * len(names))
        self._mul_cache = {}
        self._comul_cache = {}
        self._antipode_cache = {}
        self._deg_cache = {}
        self._kdeg_cache = {}
        self._kmul_cache = {}
        self._monomials = None
        self._hash = hash((names, degrees, self.degree_bound))
        if validate:
            self._validate_tables()

    # -- construction helpers -------------------------------------------

    def _validate_tables(self):
        unit = self.unit_mono
        for i, name in enumerate(self.names):
            table = self._gen_comul[i]
            gen_mono = self.generator_mono(name)
            gdeg = self.degrees[i]
            left_unit = {}
            right_unit = {}
            for (a, b), q in table.items():
                if self.degree(a) + self.degree(b) != gdeg:
                    raise SpecError(
                        f"coproduct of {name} is not degree-homogeneous")
                if a == unit:
                    left_unit[b] = left_unit.get(b, ZERO) + q
                if b == unit:
                    right_unit[a] = right_unit.get(a, ZERO) + q
            for side, acc in (("left", left_unit), ("right", right_unit)):
                acc = _normalize_terms(acc)
                if acc != {gen_mono: ONE}:
                    raise SpecError(
                        f"coproduct of {name} is not counital on the "
                        f"{side} side")

    def mutated(self, comul=None, counit=None, antipode=None):
        """Copy of this algebra with selected generator tables replaced and
        validation off. Intended for negative tests of the axiom checker."""
        gen_comul = list(self._gen_comul)
        gen_counit = list(self._gen_counit)
        gen_antipode = list(self._gen_antipode)
        for name, value in (comul or {}).items():
            gen_comul[self._index[name]] = _coerce_tensor_terms(self, value)
        for name, value in (counit or {}).items():
            gen_counit[self._index[name]] = rational(value)
        for name, value in (antipode or {}).items():
            gen_antipode[self._index[name]] = _coerce_element_terms(
                self, value)
        return HopfAlgebra(self.names, self.degrees, self.degree_bound,
                           gen_comul, tuple(gen_counit), tuple(gen_antipode),
                           validate=False)

    # -- identity --------------------------------------------------------

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, HopfAlgebra):
            return NotImplemented
        return (self.names == other.names
                and self.degrees == other.degrees
                and self.degree_bound == other.degree_bound
                and self._gen_comul == other._gen_comul
                and self._gen_counit == other._gen_counit
                and self._gen_antipode == other._gen_antipode)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        gens = ", ".join(f"{n}:{d}" for n, d in zip(self.names, self.degrees))
        return f"HopfAlgebra([{gens}], D={self.degree_bound})"

    # -- monomial arithmetic ---------------------------------------------

    @property
    def unit_mono(self):
        return (0,) * len(self.names)

    def generator_mono(self, name):
        exps = [0] * len(self.names)
        exps[self._index[name]] = 1
        return tuple(exps)

    def degree(self, mono):
        d = self._deg_cache.get(mono)
        if d is None:
            d = sum(e * g for e, g in zip(mono, self.degrees))
            self._deg_cache[mono] = d
        return d

    def mul_mono(self, a, b):
        """Product monomial, or None when the degree bound truncates it."""
        key = (a, b)
        cached = self._mul_cache.get(key, 0)
        if cached != 0:
            return cached
        prod = tuple(x + y for x, y in zip(a, b))
        result = prod if self.degree(prod) <= self.degree_bound else None
        self._mul_cache[key] = result
        return result

    def key_degree(self, key):
        """Total degree of a tensor basis key, summed across slots."""
        d = self._kdeg_cache.get(key)
        if d is None:
            d = sum(self.degree(m) for m in key)
            self._kdeg_cache[key] = d
        return d

    def mul_key(self, ka, kb):
        """Slotwise product of tensor keys, or None when the total degree
        leaves the truncated ring.

        Tensor powers of H are truncated by total degree across the slots:
        that span is an ideal and, because every structure map is degree
        preserving, also a coideal, so multiplication, coproduct, counit
        and antipode all descend exactly to the quotient and the Hopf and
        group-law identities hold there on the nose. Truncating each slot
        separately would break this: the coproduct of a discarded
        high-degree element has components with every leg inside the
        bound.

        Degrees add slotwise, so the product overflows exactly when
        key_degree(ka) + key_degree(kb) > degree_bound; results are
        memoized per key pair."""
        pair = (ka, kb)
        cached = self._kmul_cache.get(pair, 0)
        if cached != 0:
            return cached
        if self.key_degree(ka) + self.key_degree(kb) > self.degree_bound:
            self._kmul_cache[pair] = None
            return None
        out = tuple(tuple(x + y for x, y in zip(ma, mb))
                    for ma, mb in zip(ka, kb))
        self._kmul_cache[pair] = out
        return out

    def monomials(self):
        """All basis monomials of degree <= D in graded-lex order."""
        if self._monomials is None:
            out = [self.unit_mono]
            for i in range(len(self.names)):
                extended = []
                for m in out:
                    e = 1
                    while True:
                        cand = m[:i] + (m[i] + e,) + m[i + 1:]
                        if self.degree(cand) > self.degree_bound:
                            break
                        extended.append(cand)
                        e += 1
                out.extend(extended)
            out.sort(key=lambda m: (self.degree(m), m))
            self._monomials = tuple(out)
        return self._monomials

    def mono_str(self, mono):
        if all(e == 0 for e in mono):
            return "1"
        parts = []
        for name, e in zip(self.names, mono):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "".join(parts)

    # -- structure maps on monomials --------------------------------------

    def counit_mono(self, mono):
        """Multiplicative extension of the generator counits (normally the
        augmentation: 1 on the unit, 0 on positive degree)."""
        q = ONE
        for i, e in enumerate(mono):
            if e:
                ci = self._gen_counit[i]
                if ci == 0:
                    return ZERO
                q = q * ci ** e
        return q

    def comul_mono(self, mono):
        """Coproduct of a basis monomial as a dict (left, right) -> Q."""
        cached = self._comul_cache.get(mono)
        if cached is not None:
            return cached
        unit = self.unit_mono
        if mono == unit:
            result = {(unit, unit): ONE}
        else:
            # split off one generator: Delta is extended multiplicatively
            i = next(j for j, e in enumerate(mono) if e)
            rest = mono[:i] + (mono[i] - 1,) + mono[i + 1:]
            gen_table = self._gen_comul[i]
            rest_table = self.comul_mono(rest)
            acc = {}
            for (a1, b1), q1 in gen_table.items():
                for (a2, b2), q2 in rest_table.items():
                    a = self.mul_mono(a1, a2)
                    if a is None:
                        continue
                    b = self.mul_mono(b1, b2)
                    if b is None:
                        continue
                    key = (a, b)
                    acc[key] = acc.get(key, ZERO) + q1 * q2
            result = _normalize_terms(acc)
        self._comul_cache[mono] = result
        return result

    def antipode_mono(self, mono):
        """Antipode of a basis monomial as a dict mono -> Q, derived from
        mu(S x id)Delta = eta eps by induction on generator degree and
        extended multiplicatively."""
        cached = self._antipode_cache.get(mono)
        if cached is not None:
            return cached
        unit = self.unit_mono
        if mono == unit:
            result = {unit: ONE}
        else:
            result = {unit: ONE}
            for i, e in enumerate(mono):
                gen_s = self._antipode_gen(i)
                for _ in range(e):
                    result = self._mul_terms(result, gen_s)
        self._antipode_cache[mono] = result
        return result

    def _antipode_gen(self, i, _stack=None):
        gen_mono = tuple(
            1 if j == i else 0 for j in range(len(self.names)))
        cached = self._antipode_cache.get(gen_mono)
        if cached is not None:
            return cached
        override = self._gen_antipode[i]
        if override is not None:
            result = dict(override)
            self._antipode_cache[gen_mono] = result
            return result
        stack = _stack if _stack is not None else set()
        if i in stack:
            # circular table (only possible for mutated input): fall back
            result = {gen_mono: -ONE}
            self._antipode_cache[gen_mono] = result
            return result
        stack.add(i)
        try:
            result = self._derive_antipode(i, gen_mono, stack)
        finally:
            stack.discard(i)
        self._antipode_cache[gen_mono] = result
        return result

    def _derive_antipode(self, i, gen_mono, stack):
        # mu(S x id)Delta g = eps(g) 1 splits into S(g)*beta + rest, where
        # beta collects the right legs paired with g itself and rest needs
        # only antipodes of monomials not containing g (strictly smaller
        # degree, so the induction is well-founded on honest tables).
        unit = self.unit_mono
        beta = {}
        rest = {}
        for (a, b), q in self._gen_comul[i].items():
            if a == gen_mono:
                beta[b] = beta.get(b, ZERO) + q
            else:
                s_a = self._antipode_terms(a, stack)
                for m, qs in self._mul_terms(s_a, {b: q}).items():
                    rest[m] = rest.get(m, ZERO) + qs
        target = {unit: self._gen_counit[i]}
        for m, q in rest.items():
            target[m] = target.get(m, ZERO) - q
        target = _normalize_terms(target)
        beta_inv = self._invert_terms(_normalize_terms(beta))
        if beta_inv is None:
            # non-counital mutation: leave a defined value for the checker
            return {gen_mono: -ONE}
        return _normalize_terms(self._mul_terms(beta_inv, target))

    def _antipode_terms(self, mono, stack):
        unit = self.unit_mono
        result = {unit: ONE}
        for j, e in enumerate(mono):
            if e:
                gen_s = self._antipode_gen(j, stack)
                for _ in range(e):
                    result = self._mul_terms(result, gen_s)
        return result

    # -- term-dict arithmetic (shared by the element classes) -------------

    def _mul_terms(self, ta, tb):
        acc = {}
        for ma, qa in ta.items():
            for mb, qb in tb.items():
                m = self.mul_mono(ma, mb)
                if m is None:
                    continue
                acc[m] = acc.get(m, ZERO) + qa * qb
        return _normalize_terms(acc)

    def _invert_terms(self, terms):
        """Inverse of an element whose unit coefficient is nonzero, via the
        finite geometric series in its nilpotent part; None if the unit
        coefficient vanishes."""
        unit = self.unit_mono
        q0 = terms.get(unit, ZERO)
        if q0 == 0:
            return None
        scale = ONE / q0
        nil = {m: -q * scale for m, q in terms.items() if m != unit}
        result = {unit: ONE}
        power = dict(nil)
        while power:
            for m, q in power.items():
                result[m] = result.get(m, ZERO) + q
            power = self._mul_terms(power, nil)
        return {m: q * scale for m, q in _normalize_terms(result).items()}


def _coerce_element_terms(algebra, value):
    if isinstance(value, HopfElement):
        return dict(value.terms)
    return _normalize_terms({k: rational(q) for k, q in dict(value).items()})


def _coerce_tensor_terms(algebra, value):
    if isinstance(value, TensorElement):
        if value.arity != 2:
            raise ArityMismatch("coproduct table must have arity 2")
        return dict(value.terms)
    return _normalize_terms({k: rational(q) for k, q in dict(value).items()})


class HopfElement:
    """Element of H: a finite rational combination of basis monomials."""

    __slots__ = ("algebra", "terms", "truncated")

    def __init__(self, algebra, terms, truncated=False, _normalize=True):
        self.algebra = algebra
        self.terms = _normalize_terms(terms) if _normalize else terms
        self.truncated = truncated

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, algebra):
        return cls(algebra, {}, _normalize=False)

    @classmethod
    def one(cls, algebra):
        return cls(algebra, {algebra.unit_mono: ONE}, _normalize=False)

    @classmethod
    def from_scalar(cls, algebra, q):
        q = rational(q)
        return cls(algebra, {algebra.unit_mono: q} if q != 0 else {},
                   _normalize=False)

    @classmethod
    def generator(cls, algebra, name):
        return cls(algebra, {algebra.generator_mono(name): ONE},
                   _normalize=False)

    # -- ring structure ----------------------------------------------------

    def _check(self, other):
        if self.algebra != other.algebra:
            raise AlgebraMismatch("elements of different Hopf algebras")

    def __add__(self, other):
        if isinstance(other, (int, type(ONE))) or _is_rational(other):
            other = HopfElement.from_scalar(self.algebra, other)
        if not isinstance(other, HopfElement):
            return NotImplemented
        self._check(other)
        acc = dict(self.terms)
        for m, q in other.terms.items():
            acc[m] = acc.get(m, ZERO) + q
        return HopfElement(self.algebra, acc,
                           self.truncated or other.truncated)

    __radd__ = __add__

    def __neg__(self):
        return HopfElement(self.algebra, {m: -q for m, q in self.terms.items()},
                           self.truncated, _normalize=False)

    def __sub__(self, other):
        if isinstance(other, (int, type(ONE))) or _is_rational(other):
            other = HopfElement.from_scalar(self.algebra, other)
        if not isinstance(other, HopfElement):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, HopfElement):
            self._check(other)
            prod = self.algebra._mul_terms(self.terms, other.terms)
            dropped = _product_truncates(self.algebra, self.terms,
                                         other.terms)
            return HopfElement(self.algebra, prod,
                               self.truncated or other.truncated or dropped,
                               _normalize=False)
        if _is_rational(other) or isinstance(other, int):
            q = rational(other)
            if q == 0:
                return HopfElement.zero(self.algebra)
            return HopfElement(self.algebra,
                               {m: c * q for m, c in self.terms.items()},
                               self.truncated, _normalize=False)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not defined in H")
        result = HopfElement.one(self.algebra)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, int) or _is_rational(other):
            other = HopfElement.from_scalar(self.algebra, other)
        if not isinstance(other, HopfElement):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash((self.algebra, tuple(sorted(self.terms.items()))))

    def is_zero(self):
        return not self.terms

    # -- Hopf structure ----------------------------------------------------

    def counit(self):
        return sum((q * self.algebra.counit_mono(m)
                    for m, q in self.terms.items()), ZERO)

    def comul(self):
        acc = {}
        for m, q in self.terms.items():
            for key, qq in self.algebra.comul_mono(m).items():
                acc[key] = acc.get(key, ZERO) + q * qq
        return TensorElement(self.algebra, 2, acc, self.truncated)

    def antipode(self):
        acc = {}
        for m, q in self.terms.items():
            for mm, qq in self.algebra.antipode_mono(m).items():
                acc[mm] = acc.get(mm, ZERO) + q * qq
        return HopfElement(self.algebra, acc, self.truncated)

    def as_tensor(self):
        return TensorElement(self.algebra, 1,
                             {(m,): q for m, q in self.terms.items()},
                             self.truncated, _normalize=False)

    # -- presentation ------------------------------------------------------

    def sorted_terms(self):
        alg = self.algebra
        return sorted(self.terms.items(),
                      key=lambda kv: (alg.degree(kv[0]), kv[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, q in self.sorted_terms():
            body = _scalar_mono_str(self.algebra, m, q)
            parts.append(body)
        return _join_signed(parts)

    def __repr__(self):
        return f"<HopfElement {self}>"


class TensorElement:
    """Element of the k-fold tensor power of H, k in {1,2,3}: a finite
    rational combination of k-tuples of basis monomials."""

    __slots__ = ("algebra", "arity", "terms", "truncated")

    def __init__(self, algebra, arity, terms, truncated=False,
                 _normalize=True):
        if arity not in (1, 2, 3):
            raise ArityMismatch(f"tensor arity {arity} outside 1..3")
        self.algebra = algebra
        self.arity = arity
        if _normalize:
            clean = _normalize_terms(terms)
            bound = algebra.degree_bound
            kept = {}
            for key, q in clean.items():
                if algebra.key_degree(key) > bound:
                    truncated = True
                    continue
                kept[key] = q
            self.terms = kept
        else:
            self.terms = terms
        self.truncated = truncated

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, algebra, arity):
        return cls(algebra, arity, {}, _normalize=False)

    @classmethod
    def unit(cls, algebra, arity):
        key = (algebra.unit_mono,) * arity
        return cls(algebra, arity, {key: ONE}, _normalize=False)

    @classmethod
    def from_scalar(cls, algebra, arity, q):
        q = rational(q)
        key = (algebra.unit_mono,) * arity
        return cls(algebra, arity, {key: q} if q != 0 else {},
                   _normalize=False)

    @classmethod
    def from_slots(cls, *elements):
        """Tensor product of 1..3 HopfElements, slot per argument."""
        first = elements[0]
        algebra = first.algebra
        arity = len(elements)
        acc = {(): ONE}
        truncated = False
        for el in elements:
            if el.algebra != algebra:
                raise AlgebraMismatch("tensor slots over different algebras")
            truncated = truncated or el.truncated
            nxt = {}
            for key, q in acc.items():
                for m, qq in el.terms.items():
                    nxt[key + (m,)] = q * qq
            acc = nxt
        return cls(algebra, arity, acc, truncated)

    # -- linear structure ---------------------------------------------------

    def _check(self, other):
        if self.algebra != other.algebra:
            raise AlgebraMismatch("tensors over different Hopf algebras")
        if self.arity != other.arity:
            raise ArityMismatch(
                f"tensor arity {self.arity} vs {other.arity}")

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._check(other)
        acc = dict(self.terms)
        for k, q in other.terms.items():
            acc[k] = acc.get(k, ZERO) + q
        return TensorElement(self.algebra, self.arity, acc,
                             self.truncated or other.truncated)

    def __neg__(self):
        return TensorElement(self.algebra, self.arity,
                             {k: -q for k, q in self.terms.items()},
                             self.truncated, _normalize=False)

    def __sub__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            self._check(other)
            alg = self.algebra
            bound = alg.degree_bound
            kdeg = alg.key_degree
            acc = {}
            truncated = self.truncated or other.truncated
            ib = sorted(((kdeg(k), k, q) for k, q in other.terms.items()))
            db_min = ib[0][0] if ib else 0
            for dka, ka, qa in sorted(
                    ((kdeg(k), k, q) for k, q in self.terms.items())):
                if dka + db_min > bound:
                    truncated = True
                    break
                for dkb, kb, qb in ib:
                    if dka + dkb > bound:
                        truncated = True
                        break
                    k = alg.mul_key(ka, kb)
                    acc[k] = acc.get(k, ZERO) + qa * qb
            return TensorElement(alg, self.arity, acc, truncated)
        if _is_rational(other) or isinstance(other, int):
            q = rational(other)
            if q == 0:
                return TensorElement.zero(self.algebra, self.arity)
            return TensorElement(self.algebra, self.arity,
                                 {k: c * q for k, c in self.terms.items()},
                                 self.truncated, _normalize=False)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative tensor powers are not defined")
        result = TensorElement.unit(self.algebra, self.arity)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (self.algebra == other.algebra and self.arity == other.arity
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.algebra, self.arity,
                     tuple(sorted(self.terms.items()))))

    def is_zero(self):
        return not self.terms

    # -- slot operations -----------------------------------------------------

    def apply_slot(self, slot, op):
        """Apply a structure map in one slot, identity elsewhere.

        op is one of 'comul' (arity +1), 'counit' (arity -1), 'antipode',
        'id'. Slots are 0-based.
        """
        if op not in _STRUCTURE_MAPS:
            raise ValueError(f"unknown structure map {op!r}")
        if not 0 <= slot < self.arity:
            raise ArityMismatch(
                f"slot {slot} outside arity {self.arity}")
        alg = self.algebra
        if op == "id":
            return self
        if op == "comul":
            if self.arity + 1 > 3:
                raise ArityMismatch("comul would exceed arity 3")
            acc = {}
            for key, q in self.terms.items():
                for (a, b), qq in alg.comul_mono(key[slot]).items():
                    k = key[:slot] + (a, b) + key[slot + 1:]
                    acc[k] = acc.get(k, ZERO) + q * qq
            return TensorElement(alg, self.arity + 1, acc, self.truncated)
        if op == "counit":
            if self.arity - 1 < 1:
                raise ArityMismatch(
                    "counit on arity 1 yields a scalar; use full_counit")
            acc = {}
            for key, q in self.terms.items():
                c = alg.counit_mono(key[slot])
                if c == 0:
                    continue
                k = key[:slot] + key[slot + 1:]
                acc[k] = acc.get(k, ZERO) + q * c
            return TensorElement(alg, self.arity - 1, acc, self.truncated)
        # antipode
        acc = {}
        for key, q in self.terms.items():
            for m, qq in alg.antipode_mono(key[slot]).items():
                k = key[:slot] + (m,) + key[slot + 1:]
                acc[k] = acc.get(k, ZERO) + q * qq
        return TensorElement(alg, self.arity, acc, self.truncated)

    def contract_mul(self, slots=(0, 1)):
        """Multiply two adjacent slots via mu, reducing arity by one."""
        i, j = slots
        if j != i + 1 or not 0 <= i < j < self.arity:
            raise ArityMismatch(
                f"slots {slots} are not an adjacent pair in arity "
                f"{self.arity}")
        if self.arity - 1 < 1:
            raise ArityMismatch("contraction below arity 1")
        alg = self.algebra
        acc = {}
        truncated = self.truncated
        for key, q in self.terms.items():
            m = alg.mul_mono(key[i], key[j])
            if m is None:
                truncated = True
                continue
            k = key[:i] + (m,) + key[j + 1:]
            acc[k] = acc.get(k, ZERO) + q
        return TensorElement(alg, self.arity - 1, acc, truncated)

    def embed(self, arity, slots):
        """Place the slots of this tensor at the given strictly increasing
        positions of a larger arity, filling the rest with 1."""
        slots = tuple(slots)
        if len(slots) != self.arity:
            raise ArityMismatch("slot assignment length != arity")
        if list(slots) != sorted(set(slots)):
            raise ArityMismatch("slot assignment must be strictly increasing")
        if arity not in (1, 2, 3) or (slots and slots[-1] >= arity):
            raise ArityMismatch("slot assignment outside target arity")
        unit = self.algebra.unit_mono
        acc = {}
        for key, q in self.terms.items():
            new = [unit] * arity
            for pos, m in zip(slots, key):
                new[pos] = m
            acc[tuple(new)] = q
        return TensorElement(self.algebra, arity, acc, self.truncated,
                             _normalize=False)

    def permute(self, perm):
        """Reorder slots: new slot i holds old slot perm[i]."""
        perm = tuple(perm)
        if sorted(perm) != list(range(self.arity)):
            raise ArityMismatch(f"{perm} is not a permutation of the slots")
        acc = {}
        for key, q in self.terms.items():
            k = tuple(key[p] for p in perm)
            acc[k] = acc.get(k, ZERO) + q
        return TensorElement(self.algebra, self.arity, acc, self.truncated)

    def full_counit(self):
        """Counit applied in every slot: the scalar part of the tensor."""
        alg = self.algebra
        total = ZERO
        for key, q in self.terms.items():
            c = q
            for m in key:
                cm = alg.counit_mono(m)
                if cm == 0:
                    c = ZERO
                    break
                c = c * cm
            total += c
        return total

    def as_element(self):
        if self.arity != 1:
            raise ArityMismatch("only arity-1 tensors convert to elements")
        return HopfElement(self.algebra, {k[0]: q for k, q in
                                          self.terms.items()},
                           self.truncated, _normalize=False)

    def mul_inverse(self):
        """Inverse with respect to slot-wise multiplication; requires the
        unit-tuple coefficient to be nonzero (it is 1 in every kernel use)."""
        unit_key = (self.algebra.unit_mono,) * self.arity
        q0 = self.terms.get(unit_key, ZERO)
        if q0 == 0:
            raise NonInvertibleConstantTerm(
                "tensor has no unit component; not invertible")
        scale = ONE / q0
        nil = TensorElement(
            self.algebra, self.arity,
            {k: -q * scale for k, q in self.terms.items() if k != unit_key})
        result = TensorElement.unit(self.algebra, self.arity)
        power = nil
        while not power.is_zero():
            result = result + power
            power = power * nil
        return result * scale

    def nilpotency_slack(self, cap=None):
        """Largest m with self**m nonzero; raises when the element is not
        nilpotent under the degree bound (possible only when the constant
        term has nonzero full counit)."""
        if self.is_zero():
            return 0
        limit = cap if cap is not None else (
            self.algebra.degree_bound + 1)
        power = self
        m = 1
        while True:
            power = power * self
            if power.is_zero():
                return m
            m += 1
            if m > limit:
                raise NonNilpotentConstantTerm(
                    "constant term is not nilpotent under the degree bound")

    # -- presentation --------------------------------------------------------

    def sorted_terms(self):
        alg = self.algebra
        return sorted(
            self.terms.items(),
            key=lambda kv: (sum(alg.degree(m) for m in kv[0]),
                            tuple((alg.degree(m), m) for m in kv[0])))

    def __str__(self):
        if not self.terms:
            return "0"
        alg = self.algebra
        parts = []
        for key, q in self.sorted_terms():
            if self.arity == 1:
                parts.append(_scalar_mono_str(alg, key[0], q))
                continue
            body = "⊗".join(alg.mono_str(m) for m in key)
            if all(all(e == 0 for e in m) for m in key):
                parts.append(format_rational(q))
            elif q == 1:
                parts.append(f"({body})")
            elif q == -1:
                parts.append(f"-({body})")
            else:
                parts.append(f"{format_rational(q)}({body})")
        return _join_signed(parts)

    def __repr__(self):
        return f"<TensorElement[{self.arity}] {self}>"


def _is_rational(value):
    return isinstance(value, type(ONE)) or (
        hasattr(value, "numerator") and hasattr(value, "denominator")
        and not isinstance(value, bool))


def _product_truncates(algebra, ta, tb):
    for ma in ta:
        for mb in tb:
            if algebra.mul_mono(ma, mb) is None:
                return True
    return False


def _scalar_mono_str(algebra, mono, q):
    mono_s = algebra.mono_str(mono)
    if mono_s == "1":
        return format_rational(q)
    if q == 1:
        return mono_s
    if q == -1:
        return f"-{mono_s}"
    return f"{format_rational(q)}{mono_s}"


def _join_signed(parts):
    out = parts[0]
    for p in parts[1:]:
        if p.startswith("-"):
            out += f" - {p[1:]}"
        else:
            out += f" + {p}"
    return out


# -- functional aliases matching the operation vocabulary -------------------

def mul(a, b):
    return a * b


def comul(a):
    return a.comul()


def counit(a):
    return a.counit()


def antipode(a):
    return a.antipode()


def tensor_mul(a, b):
    return a * b


def apply_slot(a, slot, op):
    return a.apply_slot(slot, op)


def contract_mul(a, slots=(0, 1)):
    return a.contract_mul(slots)


def embed(a, arity, slots):
    return a.embed(arity, slots)


# -- algebra construction ----------------------------------------------------

def _decode_monomial(algebra, obj):
    """Monomial from a generator-name list (['t','t'] = t^2, ['1'] = unit),
    an exponent vector, or a bare name string."""
    if isinstance(obj, str):
        if obj == "1":
            return algebra.unit_mono
        if obj in algebra._index:
            return algebra.generator_mono(obj)
        raise SpecError(f"unknown generator {obj!r}")
    seq = list(obj)
    if all(isinstance(x, int) for x in seq):
        if len(seq) != len(algebra.names):
            raise SpecError(
                f"exponent vector length {len(seq)} != "
                f"{len(algebra.names)} generators")
        return tuple(seq)
    exps = [0] * len(algebra.names)
    for name in seq:
        if name == "1":
            continue
        idx = algebra._index.get(name)
        if idx is None:
            raise SpecError(f"unknown generator {name!r}")
        exps[idx] += 1
    return tuple(exps)


def build_hopf_algebra(description, validate=True):
    """Construct a HopfAlgebra from a description dict.

    Format: {"generators": [{"name": "t", "degree": 2}, ...],
             "degree_bound": 6,
             "coproduct": {"t": "primitive" | [[left, right, "q"], ...]}}
    where left/right are monomials as generator-name lists or exponent
    vectors. A missing coproduct entry defaults to primitive. The coproduct
    of each generator must be counital and degree-homogeneous (SpecError
    otherwise); antipode and counit are derived, never supplied.
    """
    if not isinstance(description, dict):
        raise SpecError("algebra description must be an object")
    gens = description.get("generators", [])
    names = []
    degrees = []
    for g in gens:
        try:
            names.append(g["name"])
            degrees.append(int(g["degree"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise SpecError(f"bad generator entry {g!r}") from exc
    if "degree_bound" not in description:
        raise SpecError("algebra description lacks degree_bound")
    bound = int(description["degree_bound"])
    if bound < 1:
        raise SpecError("degree_bound must be >= 1")

    # a shell with primitive coproducts gives us monomial decoding
    shell = HopfAlgebra(
        names, degrees, bound,
        [_primitive_table_raw(len(names), i) for i in range(len(names))],
        validate=False)

    coproduct = description.get("coproduct", {})
    unknown = set(coproduct) - set(names)
    if unknown:
        raise SpecError(f"coproduct given for unknown generators {unknown}")
    tables = []
    for i, name in enumerate(names):
        entry = coproduct.get(name, "primitive")
        if entry == "primitive":
            tables.append(_primitive_table_raw(len(names), i))
            continue
        table = {}
        for item in entry:
            try:
                left, right, coeff = item
            except (TypeError, ValueError) as exc:
                raise SpecError(
                    f"coproduct term {item!r} is not "
                    "[left, right, coefficient]") from exc
            key = (_decode_monomial(shell, left),
                   _decode_monomial(shell, right))
            table[key] = table.get(key, ZERO) + rational(coeff)
        tables.append(_normalize_terms(table))
    return HopfAlgebra(names, degrees, bound, tables, validate=validate)


def _primitive_table_raw(n, i):
    unit = (0,) * n
    gen = tuple(1 if j == i else 0 for j in range(n))
    return {(gen, unit): ONE, (unit, gen): ONE}


def algebra_description(algebra):
    """Description dict for an algebra (inverse of build_hopf_algebra for
    algebras without mutations)."""
    gens = [{"name": n, "degree": d}
            for n, d in zip(algebra.names, algebra.degrees)]
    coproduct = {}
    for i, name in enumerate(algebra.names):
        table = algebra._gen_comul[i]
        if table == _primitive_table_raw(len(algebra.names), i):
            coproduct[name] = "primitive"
        else:
            entries = []
            for (a, b) in sorted(table):
                entries.append([_mono_name_list(algebra, a),
                                _mono_name_list(algebra, b),
                                format_rational(table[(a, b)])])
            coproduct[name] = entries
    return {"generators": gens, "degree_bound": algebra.degree_bound,
            "coproduct": coproduct}


def _mono_name_list(algebra, mono):
    if all(e == 0 for e in mono):
        return ["1"]
    out = []
    for name, e in zip(algebra.names, mono):
        out.extend([name] * e)
    return out


BUILTIN_ALGEBRAS = {
    "trivial": {"generators": [], "degree_bound": 1, "coproduct": {}},
    "qt1": {"generators": [{"name": "t", "degree": 1}],
            "degree_bound": 8, "coproduct": {"t": "primitive"}},
    "qt2": {"generators": [{"name": "t", "degree": 2}],
            "degree_bound": 8, "coproduct": {"t": "primitive"}},
    "qtu": {"generators": [{"name": "t", "degree": 1},
                            {"name": "u", "degree": 3}],
            "degree_bound": 8,
            "coproduct": {"t": "primitive", "u": "primitive"}},
}


def builtin_algebra(name, degree_bound=None):
    """One of the built-in algebras: 'trivial', 'qt1' (primitive t, degree
    1), 'qt2' (primitive t, degree 2), 'qtu' (primitive t degree 1 and u
    degree 3); degree_bound overrides the default of 8."""
    try:
        desc = dict(BUILTIN_ALGEBRAS[name])
    except KeyError:
        raise SpecError(f"unknown builtin algebra {name!r}") from None
    if degree_bound is not None:
        desc = {**desc, "degree_bound": degree_bound}
    return build_hopf_algebra(desc)


# -- axiom verification -------------------------------------------------------

def verify_hopf_axioms(algebra, max_degree=None):
    """Check the Hopf axioms on every basis monomial up to the degree bound:
    coassociativity, both counit identities, Delta and eps multiplicative,
    and the antipode identity mu(S x id)Delta = eta eps. Returns a Report
    carrying the first violation found (axiom name, monomial, defect)."""
    bound = algebra.degree_bound if max_degree is None else max_degree
    checks = ("coassociativity", "counit", "comul-multiplicative",
              "counit-multiplicative", "antipode")
    monos = [m for m in algebra.monomials() if algebra.degree(m) <= bound]

    for m in monos:
        el = HopfElement(algebra, {m: ONE}, _normalize=False)
        dm = el.comul()
        left = dm.apply_slot(0, "comul")
        right = dm.apply_slot(1, "comul")
        if left != right:
            return Report.fail([Violation(
                "coassociativity", right - left,
                f"at monomial {algebra.mono_str(m)}")], checks=checks)
        for slot, side in ((0, "left"), (1, "right")):
            reduced = _counit_collapse(dm, slot)
            if reduced != el:
                return Report.fail([Violation(
                    "counit", (reduced - el).as_tensor(),
                    f"{side} counit fails at monomial "
                    f"{algebra.mono_str(m)}")], checks=checks)
        s_applied = dm.apply_slot(0, "antipode").contract_mul((0, 1))
        target = HopfElement.from_scalar(
            algebra, el.counit()).as_tensor()
        if s_applied != target:
            return Report.fail([Violation(
                "antipode", s_applied - target,
                f"mu(S x id)Delta != eta eps at monomial "
                f"{algebra.mono_str(m)}")], checks=checks)

    for i, m1 in enumerate(monos):
        d1 = algebra.degree(m1)
        for m2 in monos[i:]:
            if d1 + algebra.degree(m2) > bound:
                continue
            e1 = HopfElement(algebra, {m1: ONE}, _normalize=False)
            e2 = HopfElement(algebra, {m2: ONE}, _normalize=False)
            prod = e1 * e2
            if prod.comul() != e1.comul() * e2.comul():
                return Report.fail([Violation(
                    "comul-multiplicative",
                    e1.comul() * e2.comul() - prod.comul(),
                    f"at {algebra.mono_str(m1)} * {algebra.mono_str(m2)}")],
                    checks=checks)
            if prod.counit() != e1.counit() * e2.counit():
                return Report.fail([Violation(
                    "counit-multiplicative", None,
                    f"at {algebra.mono_str(m1)} * {algebra.mono_str(m2)}")],
                    checks=checks)
    return Report.ok(checks=checks)


def _counit_collapse(tensor2, slot):
    """(eps x id) or (id x eps) of an arity-2 tensor, as a HopfElement."""
    alg = tensor2.algebra
    acc = {}
    for (a, b), q in tensor2.terms.items():
        m_eps, m_keep = (a, b) if slot == 0 else (b, a)
        c = alg.counit_mono(m_eps)
        if c == 0:
            continue
        acc[m_keep] = acc.get(m_keep, ZERO) + q * c
    return HopfElement(alg, acc, tensor2.truncated)
