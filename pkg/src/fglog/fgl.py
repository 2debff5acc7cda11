"""Formal group laws over graded connected Hopf algebras.

A group law is a Series F in two variables (X, Y) whose coefficients live
in H (x) H. The operations here verify the group axioms, compute the
invariant differential and logarithm, extract the constant 2-cocycle from
the twisted logarithm equation

    (Delta g)(F(X, Y)) = c + (g (x) 1)(X) + (1 (x) g)(Y),

check the cobar cocycle conditions, and reconstruct F from (c, g) by
inverting that equation. Sign conventions: the associativity defect is the
right-associated composite minus the left-associated one, so for a
Lemma-form law c + X + Y it coincides term by term with the cobar defect

    (id (x) Delta)c + 1 (x) c - (Delta (x) id)c - c (x) 1.

Truncation bookkeeping: substituting a series whose constant term is a
nonzero nilpotent (the Lemma-form constant c, or the inverse series'
constant theta_0) costs its nilpotency slack in certified order, so the
verification and reconstruction routines work at an elevated internal order
and certify the caller's order honestly, raising TruncationInsufficient
when the stored data cannot support the request.
"""

import math

from .errors import (
    AxiomViolation,
    CocycleViolation,
    NoInverse,
    NonInvertibleConstantTerm,
    NotAugmented,
    ResidualNonConstant,
    TruncationInsufficient,
)
from .hopf import HopfElement, TensorElement
from .report import Report, Violation
from .series import Series

INF = math.inf

XY = ("X", "Y")
XYZ = ("X", "Y", "Z")


# -- constructors ------------------------------------------------------------

def additive_law(algebra, order=INF):
    """F(X, Y) = X + Y."""
    return (Series.variable(algebra, 2, 2, 0, order, XY)
            + Series.variable(algebra, 2, 2, 1, order, XY))


def lemma_law(algebra, cocycle, order=INF):
    """Lemma-form law F(X, Y) = c + X + Y for a constant c in H (x) H."""
    return Series.constant(cocycle, 2, order, XY) + additive_law(
        algebra, order)


# -- axiom verification ------------------------------------------------------

def _lift_inner(F, slots):
    """F with coefficients embedded into three tensor slots and variables
    placed at the matching positions of (X, Y, Z)."""
    return F.map_coefficients(
        lambda A: A.embed(3, slots)).embed_vars(3, slots, XYZ)


def associativity_defect(F):
    """F(X, F(Y, Z)) - F(F(X, Y), Z) as a three-variable series over
    H (x) H (x) H."""
    algebra = F.algebra
    inner_xy = _lift_inner(F, (0, 1))
    inner_yz = _lift_inner(F, (1, 2))
    z_var = Series.variable(algebra, 3, 3, 2, INF, XYZ)
    x_var = Series.variable(algebra, 3, 3, 0, INF, XYZ)
    left = F.map_coefficients(
        lambda A: A.apply_slot(0, "comul")).substitute([inner_xy, z_var])
    right = F.map_coefficients(
        lambda A: A.apply_slot(1, "comul")).substitute([x_var, inner_yz])
    return right - left


def symmetry_defect(F):
    """F(X, Y) - tau F(Y, X), swapping variables and tensor slots."""
    flipped = F.permute_vars((1, 0)).map_coefficients(
        lambda A: A.permute((1, 0)))
    return F - flipped


def unit_defects(F):
    """(id (x) eps)F(X, 0) - X and (eps (x) id)F(0, Y) - Y."""
    algebra = F.algebra
    left = (F.set_variable_zero(1)
            .map_coefficients(lambda A: A.apply_slot(1, "counit"), arity=1)
            - Series.variable(algebra, 1, 2, 0, F.order, F.names))
    right = (F.set_variable_zero(0)
             .map_coefficients(lambda A: A.apply_slot(0, "counit"), arity=1)
             - Series.variable(algebra, 1, 2, 1, F.order, F.names))
    return left, right


def strict_grading_defect(series, weight):
    """Terms violating constancy of Hopf-degree + weight * variable-degree.

    The reference value is taken from the earliest term (lowest variable
    degree, then exponent order, then monomial order); returns (value,
    offending sub-series).
    """
    algebra = series.algebra
    entries = []
    for e, coeff in series.sorted_terms():
        for key in coeff.sorted_terms():
            mono_key = key[0]
            deg = sum(algebra.degree(m) for m in mono_key)
            entries.append((e, mono_key, deg + weight * sum(e)))
    if not entries:
        return None, Series.zero(series.algebra, series.arity, series.nvars,
                                 series.order, series.names)
    base = entries[0][2]
    bad = {}
    for e, mono_key, value in entries:
        if value != base:
            coeff = series.terms[e]
            q = coeff.terms[mono_key]
            part = bad.setdefault(e, {})
            part[mono_key] = q
    terms = {e: TensorElement(series.algebra, series.arity, part)
             for e, part in bad.items()}
    offending = Series(series.algebra, series.arity, series.nvars, terms,
                       series.order, series.names, _normalize=False)
    return base, offending


def check_axioms(F, order=None, strict_grading_weight=None):
    """Verify twisted symmetry, both unit laws and associativity of F
    through the requested order (default: as far as the stored data
    certifies). Raises TruncationInsufficient when the request exceeds
    what is certifiable. Returns a Report whose violations carry the
    defect series."""
    sym = symmetry_defect(F)
    unit_left, unit_right = unit_defects(F)
    assoc = associativity_defect(F)
    achievable = min(sym.order, unit_left.order, unit_right.order,
                     assoc.order)
    if order is not None and order > achievable:
        raise TruncationInsufficient(
            f"axioms requested through order {order} but the data "
            f"certifies only order {achievable}",
            certified=achievable, requested=order)
    cert = achievable if order is None else min(order, achievable)
    if cert < 0:
        raise TruncationInsufficient(
            "stored data certifies no order at all", certified=cert,
            requested=order)

    violations = []
    named = [("symmetry", sym), ("unit", unit_left), ("unit", unit_right),
             ("associativity", assoc)]
    for axiom, defect in named:
        cut = defect.truncate(cert)
        if not cut.is_zero():
            violations.append(Violation(axiom, defect=cut))
    if strict_grading_weight is not None:
        _, offending = strict_grading_defect(F, strict_grading_weight)
        if not offending.is_zero():
            violations.append(Violation(
                "strict-grading", defect=offending,
                detail=f"weight {strict_grading_weight}"))
    cert_val = None if cert == INF else cert
    if violations:
        return Report(False, tuple(violations), certified_order=cert_val)
    return Report(True, (), certified_order=cert_val)


# -- invariant differential and logarithm -------------------------------------

def invariant_differential(F):
    """omega(x) = (id (x) eps) dF/dY (x, 0), a one-variable series over H
    with constant term 1 for any group law."""
    partial = F.derivative(1).set_variable_zero(1)
    collapsed = partial.map_coefficients(
        lambda A: A.apply_slot(1, "counit"), arity=1)
    return collapsed.drop_variable(1).rename(("x",))


def logarithm(F, order=None):
    """g(x) = integral of dx / omega(x), normalized to x + O(x^2).

    When F is a complete polynomial whose differential has nilpotent
    positive part the logarithm is computed exactly; otherwise pass the
    target order."""
    omega = invariant_differential(F)
    if omega.constant_term().full_counit() != 1:
        raise NonInvertibleConstantTerm(
            "invariant differential does not start at 1; "
            "is F a group law in standard form?")
    inv_order = None if order is None else order - 1
    inverse = omega.mul_inverse(inv_order)
    return inverse.integrate()


def check_log(F, g, order=None):
    """Verify that g plays the logarithm role for F through the given
    order, by two independent routes: the twisted functional equation
    (Delta g)(F) - (g (x) 1)(X) - (1 (x) g)(Y) must be constant, and the
    differential invariance (Delta g')(F) * dF/dX = (g' (x) 1)(X) must
    hold on the nose."""
    residual = _log_residual(F, g)
    nonconstant = residual - Series.constant(
        residual.constant_term(), 2, residual.order, residual.names)

    g_prime = g.derivative()
    lifted = g_prime.map_coefficients(lambda A: A.apply_slot(0, "comul"))
    invariance = (lifted.substitute([F]) * F.derivative(0)
                  - _slot_series(g_prime, 0).embed_vars(2, (0,), F.names))

    achievable = min(nonconstant.order, invariance.order)
    if order is not None and order > achievable:
        raise TruncationInsufficient(
            f"logarithm checks requested through order {order} but only "
            f"order {achievable} is certified",
            certified=achievable, requested=order)
    cert = achievable if order is None else min(order, achievable)
    violations = []
    for axiom, defect in (("log-functional", nonconstant),
                          ("log-invariance", invariance)):
        cut = defect.truncate(cert)
        if not cut.is_zero():
            violations.append(Violation(axiom, defect=cut))
    cert_val = None if cert == INF else cert
    return Report(not violations, tuple(violations),
                  certified_order=cert_val)


def _slot_series(g, slot):
    """One-variable series with coefficients pushed into the given slot of
    H (x) H."""
    return g.map_coefficients(lambda A: A.embed(2, (slot,)))


def _log_residual(F, g):
    """(Delta g)(F(X, Y)) - (g (x) 1)(X) - (1 (x) g)(Y)."""
    lifted = g.map_coefficients(lambda A: A.apply_slot(0, "comul"))
    composed = lifted.substitute([F])
    g_x = _slot_series(g, 0).embed_vars(2, (0,), F.names)
    g_y = _slot_series(g, 1).embed_vars(2, (1,), F.names)
    return composed - g_x - g_y


# -- cocycles -----------------------------------------------------------------

def cocycle_defect(c):
    """(id (x) Delta)c + 1 (x) c - (Delta (x) id)c - c (x) 1."""
    return (c.apply_slot(1, "comul") + c.embed(3, (1, 2))
            - c.apply_slot(0, "comul") - c.embed(3, (0, 1)))


def check_cocycle(c):
    """Cobar 2-cocycle conditions: vanishing defect and both counit
    projections zero."""
    violations = []
    defect = cocycle_defect(c)
    if not defect.is_zero():
        violations.append(Violation("cocycle", defect=defect))
    left = c.apply_slot(0, "counit")
    right = c.apply_slot(1, "counit")
    if not (left.is_zero() and right.is_zero()):
        bad = left if not left.is_zero() else right
        violations.append(Violation("counit", defect=bad,
                                    detail="a counit projection is nonzero"))
    return Report(not violations, tuple(violations))


def coboundary(h):
    """Cobar differential d h = Delta h - h (x) 1 - 1 (x) h for h in the
    augmentation ideal."""
    if h.counit() != 0:
        raise NotAugmented(
            "coboundary input must have counit zero")
    tensor = h.as_tensor()
    return (h.comul() - tensor.embed(2, (0,)) - tensor.embed(2, (1,)))


def extract_cocycle(F, g=None, order=None):
    """Constant 2-cocycle of F: evaluate the twisted logarithm equation and
    take its constant term after asserting that every nonconstant
    coefficient vanishes (ResidualNonConstant otherwise). The extracted
    constant must pass the cocycle conditions (CocycleViolation otherwise).
    Returns the TensorElement c."""
    if g is None:
        if order is not None:
            # Substituting F into Delta g spends the nilpotency slack of
            # F(0, 0), so the logarithm must run that much further ahead.
            slack = F.constant_term().nilpotency_slack()
            g_order = order + slack
            if F.order != INF:
                g_order = min(g_order, F.order)
            g = logarithm(F, g_order)
        else:
            g = logarithm(F, order=None if F.order == INF else F.order)
    residual = _log_residual(F, g)
    if order is not None and order > residual.order:
        raise TruncationInsufficient(
            f"cocycle extraction requested through order {order} but only "
            f"order {residual.order} is certified",
            certified=residual.order, requested=order)
    if residual.order < 0:
        raise TruncationInsufficient(
            "not enough certified order to determine the constant term",
            certified=residual.order, requested=order)
    c = residual.constant_term()
    for e, coeff in residual.sorted_terms():
        if sum(e) == 0:
            continue
        raise ResidualNonConstant(
            f"logarithm residual has a nonconstant term at {e}: {coeff}")
    report = check_cocycle(c)
    if not report.passed:
        raise CocycleViolation(
            "extracted constant fails the cocycle conditions: "
            + "; ".join(str(v) for v in report.violations))
    return c


# -- reconstruction -----------------------------------------------------------

def reconstruct(algebra, c, g, order):
    """Group law F with logarithm g and cocycle c, through the given order:

        F(X, Y) = (Delta g)^{-1}( c + (g (x) 1)(X) + (1 (x) g)(Y) ).

    Substituting the constant c costs its nilpotency slack twice over the
    pipeline (once composing, once verifying), so the computation runs at
    order + 2*slack internally, the axioms are verified at the caller's
    order before returning (AxiomViolation otherwise), and the result is
    certified exactly through `order`."""
    slack = 0 if c.is_zero() else c.nilpotency_slack()
    work = order + 2 * slack
    if g.order != INF and g.order < work:
        raise TruncationInsufficient(
            f"reconstruction at order {order} needs the logarithm through "
            f"order {work} (certified {g.order})",
            certified=g.order, requested=work)
    if not g.constant_term().is_zero() or g.coeff((1,)).full_counit() != 1:
        raise NoInverse("logarithm must be of the form x + O(x^2)")

    lifted = g.map_coefficients(lambda A: A.apply_slot(0, "comul"))
    inverse = lifted.comp_inverse(order=work)
    rhs = (Series.constant(c, 2, INF, XY)
           + _slot_series(g, 0).embed_vars(2, (0,), XY)
           + _slot_series(g, 1).embed_vars(2, (1,), XY)).truncate(work)
    F_elevated = inverse.substitute([rhs])

    report = check_axioms(F_elevated, order=order)
    if not report.passed:
        worst = report.violations[0]
        raise AxiomViolation(
            f"reconstructed series fails the {worst.axiom} axiom; the "
            "cocycle or logarithm is inconsistent")
    return F_elevated.truncate(order)


# -- group inverse ------------------------------------------------------------

def inverse_series(F, order=None):
    """Series iota with (mu . (id (x) S))F (x, iota(x)) = 0, the inverse of
    the group law. The constant part is solved by Newton iteration in the
    nilpotent ideal, the rest order by order; NoInverse when the data is
    inconsistent or the linearization is not invertible."""
    algebra = F.algebra
    folded = F.map_coefficients(
        lambda A: A.apply_slot(1, "antipode").contract_mul((0, 1)), arity=1)
    target = order
    if target is None:
        if F.order == INF:
            raise ValueError(
                "group law is a complete polynomial; its inverse series "
                "is generally infinite, pass an explicit order")
        target = F.order
    elif target > F.order:
        raise TruncationInsufficient(
            f"inverse series requested through order {target} but the "
            f"group law is certified only through {F.order}",
            certified=F.order, requested=target)

    # constant part: solve folded(0, theta) = 0 by Newton iteration
    at_zero = folded.set_variable_zero(0).drop_variable(0)
    d_at_zero = at_zero.derivative()
    theta = TensorElement.zero(algebra, 1)
    residue = _eval_univariate(at_zero, theta)
    guard = 2 * algebra.degree_bound + 4
    for _ in range(guard):
        if residue.is_zero():
            break
        slope = _eval_univariate(d_at_zero, theta)
        try:
            slope_inv = slope.mul_inverse()
        except NonInvertibleConstantTerm as exc:
            raise NoInverse(
                "linearized inverse equation is not invertible") from exc
        theta = theta - slope_inv * residue
        residue = _eval_univariate(at_zero, theta)
    if not residue.is_zero():
        raise NoInverse("no nilpotent constant term solves the "
                        "inverse equation")
    if not theta.is_zero() and theta.full_counit() != 0:
        raise NoInverse("inverse constant term escapes the "
                        "augmentation ideal")

    slope = _eval_univariate(d_at_zero, theta)
    try:
        slope_inv = slope.mul_inverse()
    except NonInvertibleConstantTerm as exc:
        raise NoInverse(
            "linearized inverse equation is not invertible") from exc

    # substituting iota costs the nilpotency slack of its constant term
    slack = 0 if theta.is_zero() else theta.nilpotency_slack()
    cert = target if F.order == INF else min(target, F.order - slack)
    if order is not None and order > cert:
        raise TruncationInsufficient(
            f"inverse series requested through order {order}; the constant "
            f"term's nilpotency slack {slack} leaves only order {cert} "
            "certified", certified=cert, requested=order)
    if cert < 0:
        raise TruncationInsufficient(
            "stored data certifies no order of the inverse at all",
            certified=cert, requested=order)

    x_var = Series.variable(algebra, 1, 1, 0, cert, ("x",))
    iota = Series.constant(theta, 1, cert, ("x",))
    for k in range(1, cert + 1):
        residual = folded.substitute([x_var, iota])
        r_k = residual.coeff((k,))
        if r_k.is_zero():
            continue
        step = -(slope_inv * r_k)
        iota = iota + Series(algebra, 1, 1, {(k,): step}, cert, ("x",),
                             _normalize=False)

    residual = folded.substitute([x_var, iota])
    if not residual.truncate(cert).is_zero():
        raise NoInverse("inverse equation has no series solution; "
                        "is F a group law?")
    if F.order == INF:
        exact = iota.with_order(INF)
        if folded.substitute(
                [Series.variable(algebra, 1, 1, 0, INF, ("x",)),
                 exact]).is_zero():
            return exact
    return iota


def _eval_univariate(series, point):
    """Evaluate a one-variable series at a nilpotent TensorElement by
    Horner's rule."""
    if not series.terms:
        return TensorElement.zero(series.algebra, series.arity)
    kmax = max(e[0] for e in series.terms)
    acc = TensorElement.zero(series.algebra, series.arity)
    for k in range(kmax, -1, -1):
        acc = acc * point
        coeff = series.terms.get((k,))
        if coeff is not None:
            acc = acc + coeff
    return acc


# -- classical specialization ---------------------------------------------------

def specialize(series):
    """Apply the counit to every Hopf slot of every coefficient, giving
    the classical rational object (coefficients become multiples of the
    unit tensor)."""
    algebra = series.algebra
    arity = series.arity

    def collapse(coeff):
        return TensorElement.unit(algebra, arity) * coeff.full_counit()

    return series.map_coefficients(collapse, arity=arity)
