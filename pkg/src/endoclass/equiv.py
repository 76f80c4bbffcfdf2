"""Equivalence relations on the nonzero elements of a field.

Five relations drive the classification of type-II1 algebras:

  sim1  (any field)      t ~ t'  iff  t/t' is a nonzero square
  sim2  (char 2)         t ~ t'  iff  t + t' = x^2 + x for some x
  sim3  (char 2)         t ~ t'  iff  t'x^2 + y^2 + t = 0, x != 0
  sim4  (char 2)         t ~ t'  iff  1/t + 1/t' = x^2 + x for some x
  sim5  (char != 2)      t ~ t'  iff  t'(4+t) / (t(4+t')) is a nonzero
                         square; carrier is K* minus {-4}

Decisions come with witnesses: a square root for sim1/sim5, a solution
of x^2 + x = target for sim2/sim4, and a pair (x, y) with
t'x^2 + y^2 + t = 0 for sim3.  Over F2(X), sim3 is decided by the
two-class rule (a reduced fraction is equivalent to X when the product
numerator*denominator has a term of odd degree, to 1 otherwise) with a
witness assembled from the constructive steps; sim2/sim4 over F2(X)
are exposed only as a bounded refutation search.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from enum import Enum
from typing import Callable, Optional

from . import gf2x
from .fields import (Field, FieldElement, InfiniteFieldError,
                     RationalFunctionField2, is_square)


class RelationId(Enum):
    SIM1 = "sim1"
    SIM2 = "sim2"
    SIM3 = "sim3"
    SIM4 = "sim4"
    SIM5 = "sim5"


class CarrierError(ValueError):
    """An argument lies outside the relation's carrier."""


class UnsupportedRelation(ValueError):
    """The (relation, field) combination has no decision procedure here."""


def _check_supported(rel: RelationId, field: Field) -> None:
    char = field.characteristic()
    if rel is RelationId.SIM1:
        return
    if rel is RelationId.SIM5:
        if char == 2:
            raise UnsupportedRelation("sim5 needs characteristic != 2")
        return
    # sim2 / sim3 / sim4
    if char != 2:
        raise UnsupportedRelation(f"{rel.value} needs characteristic 2")
    if isinstance(field, RationalFunctionField2):
        if rel is RelationId.SIM3:
            return
        raise UnsupportedRelation(
            f"{rel.value} over F2(X) is undecidable here; use bounded_refutation_search")


def _check_carrier(rel: RelationId, field: Field, t: FieldElement) -> None:
    if t.field != field:
        raise CarrierError("element does not belong to the given field")
    if not t:
        raise CarrierError(f"{rel.value} is a relation on nonzero elements")
    if rel is RelationId.SIM5 and t == field.from_int(-4):
        raise CarrierError("sim5 excludes -4 from its carrier")


def carrier_elements(rel: RelationId, field: Field) -> list[FieldElement]:
    """The relation's carrier in enumeration order (finite fields)."""
    if not field.is_finite:
        raise InfiniteFieldError(f"cannot enumerate the carrier of {field.spec_string()}")
    out = [el for el in field.elements() if el]
    if rel is RelationId.SIM5:
        minus4 = field.from_int(-4)
        out = [el for el in out if el != minus4]
    return out


# ---------------------------------------------------------------------------
# sim3 over F2(X): two classes with constructive witnesses
# ---------------------------------------------------------------------------

def _f2x_sim3_is_x_class(t: FieldElement) -> bool:
    num, den = t.payload
    return gf2x.has_odd_term(gf2x.mul(num, den))


def _sim3_compose(x1, y1, x2, y2):
    # chain t ~ u (via x1,y1) and u ~ v (via x2,y2) into t ~ v
    return x2 * x1, y2 * x1 + y1


def _f2x_sim3_witness_to_rep(field: RationalFunctionField2, t: FieldElement):
    """(x, y) with rep * x^2 + y^2 + t = 0, rep being t's class (1 or X)."""
    num, den = t.payload
    u = gf2x.mul(num, den)
    # t ~ u via x = 1/den, y = 0:  u/den^2 + t = 0
    x1 = field.element((1, den))
    y1 = field.zero()
    odd, even = gf2x.odd_even_split(u)
    if odd:
        # u ~ X via X*s^2 + r^2 + u = 0 where odd = X*s^2 and even = r^2
        x2 = field.element((gf2x.sqrt(odd >> 1), 1))
        y2 = field.element((gf2x.sqrt(even), 1))
    else:
        # u ~ 1 via 1*r^2 + 0 + u = 0
        x2 = field.element((gf2x.sqrt(even), 1))
        y2 = field.zero()
    return _sim3_compose(x1, y1, x2, y2)


def _f2x_sim3_related(field, t, t2):
    in_x = _f2x_sim3_is_x_class(t)
    if in_x != _f2x_sim3_is_x_class(t2):
        return False, None
    xa, ya = _f2x_sim3_witness_to_rep(field, t)
    xb, yb = _f2x_sim3_witness_to_rep(field, t2)
    # invert t2 ~ rep into rep ~ t2, then chain through the representative
    xs, ys = xb.inverse(), yb / xb
    x, y = _sim3_compose(xa, ya, xs, ys)
    return True, (x, y)


# ---------------------------------------------------------------------------
# decisions
# ---------------------------------------------------------------------------

def related(rel: RelationId, field: Field, t: FieldElement, t2: FieldElement):
    """Decide t ~ t', returning (bool, witness or None)."""
    _check_supported(rel, field)
    _check_carrier(rel, field, t)
    _check_carrier(rel, field, t2)

    if rel is RelationId.SIM1:
        return is_square(field, t / t2)

    if rel is RelationId.SIM5:
        four = field.from_int(4)
        return is_square(field, (t2 * (four + t)) / (t * (four + t2)))

    if rel is RelationId.SIM3:
        if isinstance(field, RationalFunctionField2):
            return _f2x_sim3_related(field, t, t2)
        # finite characteristic 2: squaring is bijective, always related
        ok, root = is_square(field, t / t2)
        assert ok
        return True, (root, field.zero())

    # sim2 / sim4 over a finite field of characteristic 2
    if rel is RelationId.SIM2:
        target = t + t2
    else:
        target = t.inverse() + t2.inverse()
    for x in field.elements():
        if x * x + x == target:
            return True, x
    return False, None


# ---------------------------------------------------------------------------
# complete representative systems
# ---------------------------------------------------------------------------

@dataclass
class RepSystem:
    """A complete representative system for one relation over one field.

    `representatives` holds exactly one element per equivalence class,
    chosen greedily in enumeration order.  For finite fields the full
    class map is materialized; for F2(X)/sim3 it is rule-backed.
    """

    relation: RelationId
    field: Field
    representatives: tuple[FieldElement, ...]
    _assign: Optional[dict] = dc_field(default=None, repr=False)
    _rule: Optional[Callable] = dc_field(default=None, repr=False)

    def representative_of(self, t: FieldElement) -> FieldElement:
        if self._assign is not None:
            try:
                return self._assign[t]
            except KeyError:
                raise CarrierError(f"{t} is not in the carrier") from None
        if not t:
            raise CarrierError("0 is not in the carrier")
        return self._rule(t)

    def classes(self) -> dict[FieldElement, list[FieldElement]]:
        if self._assign is None:
            raise InfiniteFieldError("class lists exist only over finite fields")
        out = {rep: [] for rep in self.representatives}
        for el, rep in self._assign.items():
            out[rep].append(el)
        return out

    def to_json(self) -> dict:
        fmt = self.field.format
        obj = {"relation": self.relation.value,
               "field": self.field.spec_string(),
               "representatives": [fmt(r) for r in self.representatives]}
        if self._assign is not None:
            obj["classes"] = {fmt(rep): [fmt(el) for el in members]
                              for rep, members in self.classes().items()}
        return obj


def rep_system(rel: RelationId, field: Field) -> RepSystem:
    """Greedy partition of the carrier in enumeration order."""
    _check_supported(rel, field)
    if isinstance(field, RationalFunctionField2):
        if rel is not RelationId.SIM3:
            raise InfiniteFieldError(
                f"no representative system for {rel.value} over {field.spec_string()}")
        one = field.one()
        gen_x = field.element((2, 1))
        return RepSystem(rel, field, (one, gen_x),
                         _rule=lambda t: gen_x if _f2x_sim3_is_x_class(t) else one)
    if not field.is_finite:
        raise InfiniteFieldError(
            f"no representative system for {rel.value} over {field.spec_string()}")
    todo = carrier_elements(rel, field)
    reps: list[FieldElement] = []
    assign: dict = {}
    for el in todo:
        if el in assign:
            continue
        reps.append(el)
        assign[el] = el
        for other in todo:
            if other not in assign and related(rel, field, el, other)[0]:
                assign[other] = el
    return RepSystem(rel, field, tuple(reps), _assign=assign)


# ---------------------------------------------------------------------------
# bounded refutation search over F2(X)
# ---------------------------------------------------------------------------

def bounded_refutation_search(field: Field, rel: RelationId,
                              t: FieldElement, t2: FieldElement,
                              degree_bound: int):
    """Search x = p/q with deg p, deg q <= degree_bound solving
    x^2 + x = t + t' (sim2) or = 1/t + 1/t' (sim4) over F2(X).

    Returns the witness element or None; a None answer is sound only up
    to the bound (the relation may still hold with larger witnesses).
    """
    if not isinstance(field, RationalFunctionField2):
        raise UnsupportedRelation("bounded refutation search is specific to F2(X)")
    if rel not in (RelationId.SIM2, RelationId.SIM4):
        raise UnsupportedRelation("bounded refutation search covers sim2 and sim4 only")
    if not t or not t2:
        raise CarrierError(f"{rel.value} is a relation on nonzero elements")
    if degree_bound < 0:
        raise ValueError("degree bound must be nonnegative")

    if rel is RelationId.SIM2:
        target = t + t2
    else:
        target = t.inverse() + t2.inverse()
    tn, td = target.payload
    limit = 1 << (degree_bound + 1)
    mul = gf2x.mul
    for den in range(1, limit):
        den2 = mul(den, den)
        rhs = mul(tn, den2)
        for num in range(limit):
            # (num^2 + num*den) / den^2 == tn / td, cross-multiplied
            if mul(mul(num, num) ^ mul(num, den), td) == rhs:
                return field.element(field._reduce(num, den))
    return None
