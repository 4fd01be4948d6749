"""LP-format text emission."""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from guillotine_layout._version import __version__
from guillotine_layout.mip._model import Coefficient, LinearModel, Term

__all__ = ["emit_lp", "format_number"]

# Terms per output line; LP readers cap line length.
_TERMS_PER_LINE = 8


def format_number(value: Coefficient) -> str:
    """Decimal with 17 significant digits (``"2"``, ``"0.70710678118654757"``)."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return str(value.numerator)
    return format(float(value), ".17g")


def _expression(terms: Sequence[Term]) -> list[str]:
    pieces: list[str] = []
    for position, (coefficient, name) in enumerate(terms):
        negative = coefficient < 0
        magnitude = format_number(-coefficient if negative else coefficient)
        if position == 0:
            pieces.append(f"{'-' if negative else ''}{magnitude} {name}")
        else:
            pieces.append(f"{'-' if negative else '+'} {magnitude} {name}")
    lines: list[str] = []
    for start in range(0, len(pieces), _TERMS_PER_LINE):
        lines.append(" ".join(pieces[start : start + _TERMS_PER_LINE]))
    return lines or ["0"]


def _row(label: str, terms: Sequence[Term], tail: str = "") -> list[str]:
    lines = _expression(terms)
    out = [f" {label}: {lines[0]}"]
    out.extend(f"   {line}" for line in lines[1:])
    if tail:
        out[-1] = f"{out[-1]} {tail}"
    return out


def emit_lp(model: LinearModel, *, header: Sequence[str] = ()) -> str:
    """Render *model* as LP-format text.

    Sections come in the order ``Minimize``, ``Subject To``, ``Bounds``,
    ``Binaries``, ``End``; variables and rows keep declaration order, so the
    same model always renders to the same text. A feasibility model gets
    the objective ``0 <first variable>``. *header* lines, the package
    version and the model's notes are written as ``\\`` comments.

    Example::

        text = emit_lp(build_peri_max_model(inst, with_cuts=True))
        assert text.splitlines()[-1] == "End"
    """
    out: list[str] = [f"\\ {line}" for line in header]
    out.append(f"\\ generator: guillotine-layout {__version__}")
    out.append(f"\\ instance: {model.name}")
    out.append(f"\\ model: {model.kind}")
    out.append(f"\\ cuts: {'yes' if model.with_cuts else 'no'}")
    out.extend(f"\\ note: {note}" for note in model.notes)

    out.append("Minimize")
    objective: Sequence[Term] = model.objective
    if not objective and model.variables:
        objective = ((Fraction(0), model.variables[0].name),)
    out.extend(_row("obj", objective))

    out.append("Subject To")
    for row in model.constraints:
        out.extend(_row(row.name, row.terms, f"{row.sense} {format_number(row.rhs)}"))

    out.append("Bounds")
    for variable in model.variables:
        if variable.binary:
            continue
        lower = format_number(variable.lower)
        if variable.upper is None:
            out.append(f" {variable.name} >= {lower}")
        else:
            out.append(f" {lower} <= {variable.name} <= {format_number(variable.upper)}")

    binaries = [v.name for v in model.variables if v.binary]
    if binaries:
        out.append("Binaries")
        out.extend(f" {name}" for name in binaries)
    out.append("End")
    return "\n".join(out) + "\n"
