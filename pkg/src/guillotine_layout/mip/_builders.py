"""Builders for the maximum-perimeter and the two aspect-ratio models."""

from __future__ import annotations

import math
from fractions import Fraction

from guillotine_layout.core import Instance
from guillotine_layout.mip._model import Coefficient, LinearModel, Term
from guillotine_layout.mip._model import VariableNaming as N

__all__ = [
    "build_aspect_decision_model",
    "build_aspect_reform_model",
    "build_peri_max_model",
]

H_LOWER_BOUND_NOTE = (
    "h_k is declared with lower bound 0 instead of free; "
    "L1 * h_k = sum(a_i * x_i_k) implies it."
)
DECISION_BIG_M_NOTE = (
    "h_k <= phi * w_i_k is relaxed to h_k <= phi * w_i_k + L2 * (1 - x_i_k) "
    "so rectangles outside layer k do not force h_k = 0."
)


def _declare_assignment(model: LinearModel, n: int) -> None:
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            model.add_variable(N.x(i, k), upper=Fraction(1), binary=True)
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            model.add_variable(N.w(i, k))
    for k in range(1, n + 1):
        model.add_variable(N.y(k), upper=Fraction(1), binary=True)


def _layer_area_terms(instance: Instance, k: int, scale: Fraction) -> list[Term]:
    # scale * sum_j a_j * x_j_k / L1, i.e. scale times the height of layer k
    L1 = instance.L1
    return [(scale * a / L1, N.x(j, k)) for j, a in enumerate(instance.areas, start=1)]


def _add_assignment_rows(model: LinearModel, instance: Instance) -> None:
    n = instance.n
    L1, L2 = instance.L1, instance.L2
    areas = instance.areas
    for i in range(1, n + 1):
        model.add_constraint(
            f"assign_{i}", [(1, N.x(i, k)) for k in range(1, n + 1)], "=", 1, family="assign"
        )
    for k in range(1, n + 1):
        terms: list[tuple[Coefficient | int, str]] = [(1, N.x(i, k)) for i in range(1, n + 1)]
        model.add_constraint(f"used_{k}", [*terms, (-1, N.y(k))], ">=", 0, family="used")
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            model.add_constraint(
                f"open_{i}_{k}", [(1, N.x(i, k)), (-1, N.y(k))], "<=", 0, family="open"
            )
    for k in range(1, n + 1):
        terms = [(1, N.w(i, k)) for i in range(1, n + 1)]
        model.add_constraint(f"fill_{k}", [*terms, (-L1, N.y(k))], "=", 0, family="fill")
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            model.add_constraint(
                f"width_cap_{i}_{k}",
                [(1, N.w(i, k)), (-L1, N.x(i, k))],
                "<=",
                0,
                family="width_cap",
            )
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            model.add_constraint(
                f"height_cap_{i}_{k}",
                [(areas[i - 1], N.x(i, k)), (-L2, N.w(i, k))],
                "<=",
                0,
                family="height_cap",
            )
    # same-layer rectangles share one height: a_i / w_i_k = a_j / w_j_k
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            a_i, a_j = areas[i - 1], areas[j - 1]
            for k in range(1, n + 1):
                model.add_constraint(
                    f"height_le_{i}_{j}_{k}",
                    [
                        (a_j, N.w(i, k)),
                        (-a_i, N.w(j, k)),
                        (a_j * L1, N.x(i, k)),
                        (a_j * L1, N.x(j, k)),
                    ],
                    "<=",
                    2 * a_j * L1,
                    family="height_le",
                )
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            a_i, a_j = areas[i - 1], areas[j - 1]
            for k in range(1, n + 1):
                model.add_constraint(
                    f"height_ge_{i}_{j}_{k}",
                    [
                        (a_i, N.w(j, k)),
                        (-a_j, N.w(i, k)),
                        (a_i * L1, N.x(i, k)),
                        (a_i * L1, N.x(j, k)),
                    ],
                    "<=",
                    2 * a_i * L1,
                    family="height_ge",
                )


def _add_cuts(model: LinearModel, n: int) -> None:
    for k in range(1, n):
        model.add_constraint(
            f"layer_order_{k}", [(1, N.y(k)), (-1, N.y(k + 1))], ">=", 0, family="layer_order"
        )
    for i in range(1, n + 1):
        for k in range(i + 1, n + 1):
            model.add_constraint(
                f"triangular_{i}_{k}", [(1, N.x(i, k))], "=", 0, family="triangular"
            )


def build_peri_max_model(instance: Instance, with_cuts: bool = False) -> LinearModel:
    """Minimize the largest perimeter over ``x``, ``w``, ``y`` and ``phi``.

    Row ``perimeter_i_k`` bounds the perimeter of rectangle ``i`` if it sits in
    layer ``k`` and is relaxed by ``2 * (L1 + L2)`` otherwise:

        ``2(L1+L2)(x_ik - 1) + 2(w_ik + sum_j a_j x_jk / L1) <= phi``

    With *with_cuts*, non-empty layers come first (``layer_order``) and rectangle
    ``i`` only uses layers ``1..i`` (``triangular``).

    Example::

        model = build_peri_max_model(inst, with_cuts=True)
        assert (len(model.variables), len(model.constraints)) == (22, 86)  # n = 3
    """
    n = instance.n
    model = LinearModel(
        name=instance.name or "instance", kind="peri-max", with_cuts=with_cuts
    )
    _declare_assignment(model, n)
    model.add_variable(N.PHI)
    big_m = 2 * (instance.L1 + instance.L2)
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            terms: list[tuple[Coefficient | int, str]] = [
                (big_m, N.x(i, k)),
                (2, N.w(i, k)),
                *_layer_area_terms(instance, k, Fraction(2)),
                (-1, N.PHI),
            ]
            model.add_constraint(f"perimeter_{i}_{k}", terms, "<=", big_m, family="perimeter")
    _add_assignment_rows(model, instance)
    if with_cuts:
        _add_cuts(model, n)
    model.set_objective([(1, N.PHI)])
    return model


def build_aspect_reform_model(instance: Instance, with_cuts: bool = False) -> LinearModel:
    """Minimize ``max |w - h| / sqrt(a)``, which orders layouts like the aspect ratio.

    ``d_i_k`` equals ``|w_i_k - h_k|`` when rectangle ``i`` is in layer ``k``
    (rows ``dev_width`` / ``dev_height``, relaxed by ``L1`` / ``L2`` otherwise) and
    ``phi >= d_i_k / sqrt(a_i)`` (``ratio``). The coefficient ``1 / sqrt(a_i)``
    is rounded to 17 significant digits; recompute the true aspect ratio of
    the decoded partition afterwards.
    """
    n = instance.n
    L1, L2 = instance.L1, instance.L2
    model = LinearModel(
        name=instance.name or "instance", kind="aspect-reform", with_cuts=with_cuts
    )
    _declare_assignment(model, n)
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            model.add_variable(N.d(i, k))
    model.add_variable(N.PHI)
    _add_assignment_rows(model, instance)
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            model.add_constraint(
                f"dev_width_{i}_{k}",
                [
                    (1, N.d(i, k)),
                    (-L1, N.x(i, k)),
                    (-1, N.w(i, k)),
                    *_layer_area_terms(instance, k, Fraction(1)),
                ],
                ">=",
                -L1,
                family="dev_width",
            )
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            model.add_constraint(
                f"dev_height_{i}_{k}",
                [
                    (1, N.d(i, k)),
                    (-L2, N.x(i, k)),
                    (1, N.w(i, k)),
                    *_layer_area_terms(instance, k, Fraction(-1)),
                ],
                ">=",
                -L2,
                family="dev_height",
            )
    for i, area in enumerate(instance.areas, start=1):
        inverse_root = 1 / math.sqrt(area)
        for k in range(1, n + 1):
            model.add_constraint(
                f"ratio_{i}_{k}",
                [(1, N.PHI), (-inverse_root, N.d(i, k))],
                ">=",
                0,
                family="ratio",
            )
    if with_cuts:
        _add_cuts(model, n)
    model.set_objective([(1, N.PHI)])
    return model


def build_aspect_decision_model(
    instance: Instance, phi: float | Fraction, with_cuts: bool = False
) -> LinearModel:
    """Feasibility model: is there a layout with aspect ratio at most *phi*?

    Adds layer heights ``h_k`` with ``L1 * h_k = sum_i a_i x_i_k`` and rows
    ``w_i_k <= phi * h_k`` and ``h_k <= phi * w_i_k + L2 * (1 - x_i_k)``.
    There is no objective.

    Raises:
        ValueError: If ``phi < 1``.
    """
    if phi < 1:
        raise ValueError(f"aspect ratio threshold must be >= 1, got {phi}")
    n = instance.n
    L1, L2 = instance.L1, instance.L2
    model = LinearModel(
        name=instance.name or "instance", kind="aspect-decision", with_cuts=with_cuts
    )
    model.notes.extend([H_LOWER_BOUND_NOTE, DECISION_BIG_M_NOTE])
    _declare_assignment(model, n)
    for k in range(1, n + 1):
        model.add_variable(N.h(k))
    _add_assignment_rows(model, instance)
    for k in range(1, n + 1):
        terms: list[tuple[Coefficient | int, str]] = [(L1, N.h(k))]
        terms += [(-a, N.x(i, k)) for i, a in enumerate(instance.areas, start=1)]
        model.add_constraint(f"height_def_{k}", terms, "=", 0, family="height_def")
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            model.add_constraint(
                f"width_ratio_{i}_{k}",
                [(1, N.w(i, k)), (-phi, N.h(k))],
                "<=",
                0,
                family="width_ratio",
            )
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            model.add_constraint(
                f"height_ratio_{i}_{k}",
                [(1, N.h(k)), (-phi, N.w(i, k)), (L2, N.x(i, k))],
                "<=",
                L2,
                family="height_ratio",
            )
    if with_cuts:
        _add_cuts(model, n)
    return model
