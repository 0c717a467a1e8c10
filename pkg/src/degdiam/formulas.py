"""Closed-form orders of the families and the surface bounds they are compared with.

Integer formulas use exact arithmetic (every division by ``delta - 2`` is
checked to be exact). Real-valued bounds are plain floats and are only for
display; record comparisons elsewhere use the integer formulas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .embedding import TORUS, SurfaceSpec
from .errors import InputError
from .expansion import internal_count, pending_count
from .families import FamilySpec


def moore(delta: int, k: int) -> int:
    """``1 + delta + delta(delta-1) + ... + delta(delta-1)^(k-1)``."""
    if delta < 1 or k < 0:
        raise InputError("moore needs delta >= 1 and k >= 0")
    return 1 + sum(delta * (delta - 1) ** i for i in range(k))


def _ceil_half(n: int) -> int:
    return (n + 1) // 2


def splitting_order(chi: int, delta: int, k: int, even_variant: bool = False) -> int:
    """Order of the vertex-splitting construction on a surface with chromatic number ``chi``."""
    alpha = delta - 1 - _ceil_half(chi - 1)
    n = chi * alpha * internal_count(delta, k - 1) + 2 * chi
    if even_variant:
        n += chi * pending_count(delta, (k - 3) // 2)
    return n


def c_order(delta: int, k: int) -> int:
    return (9 * delta // 2 - 12) * internal_count(delta, k - 1) + 9


def y_order(delta: int, k: int) -> int:
    n = c_order(delta, k) + 3
    if delta % 2:
        n += pending_count(delta, (k - 3) // 2)
    return n


def z_order(delta: int, k: int) -> int:
    return y_order(delta, k) + 3 * (delta - 2) * pending_count(delta, (k - 5) // 2)


def p_order(delta: int, k: int) -> int:
    return 5 * (delta - 2) * internal_count(delta, k - 1) + 10


def family_order(family: str | FamilySpec, delta: int | None = None, k: int | None = None,
                 surface: SurfaceSpec | None = None, allow_unsupported: bool = False) -> int:
    """Closed-form order of the expanded graph of a family member.

    ``family`` is a :class:`FamilySpec` or a family name with ``delta`` and
    ``k`` (plus ``surface`` for QGEN variants). Q with even ``k`` has an
    order expression but no diameter guarantee; it is evaluated only when
    ``allow_unsupported`` is set.

    Examples
    --------
    >>> family_order("C", 6, 5), family_order("Y", 7, 5), family_order("P", 4, 6)
    (114, 165, 90)
    """
    spec = family if isinstance(family, FamilySpec) else FamilySpec(family, delta, k, surface)
    n, d, k = spec.name, spec.delta, spec.k
    if n == "Q" and k % 2 == 0 and allow_unsupported and k >= 4 and d >= 5:
        return splitting_order(7, d, k)
    spec.require_admissible()
    if n == "C":
        return c_order(d, k)
    if n == "Y":
        return y_order(d, k)
    if n == "Z":
        return z_order(d, k)
    if n == "P":
        return p_order(d, k)
    if n == "Q":
        return splitting_order(7, d, k)
    return splitting_order(spec.chi, d, k, even_variant=(n == "QGEN_EVEN"))


def improvement_ratio(g: int) -> float:
    """Ratio of the splitting-construction bound to the earlier ``sqrt(3g/8)`` bound."""
    if g < 1:
        raise InputError("improvement_ratio needs Euler genus g >= 1")
    return (3.5 + math.sqrt(6 * g + 0.25)) / math.sqrt(3 * g / 8)


@dataclass(frozen=True)
class BoundReport:
    surface: SurfaceSpec
    delta: int
    k: int
    c: Fraction
    moore: int
    upper_sr: Fraction
    lower_pvw: float
    lower_new: float
    lower_thm7: int | None
    lower_cor8: int | None
    notes: tuple[str, ...] = field(default=())

    def rows(self) -> list[tuple[str, object]]:
        na = "inapplicable"
        return [
            ("moore", self.moore),
            (f"upper c*g*k*delta^floor(k/2) (c={self.c})", self.upper_sr),
            ("lower sqrt(3g/8)*delta^floor(k/2)", self.lower_pvw),
            ("lower new asymptotic", self.lower_new),
            ("lower vertex-splitting (exact)", na if self.lower_thm7 is None else self.lower_thm7),
            ("lower vertex-splitting, even chi (exact)", na if self.lower_cor8 is None else self.lower_cor8),
        ]

    def render(self) -> str:
        rows = [(name, _format_value(v)) for name, v in self.rows()]
        width = max(len(n) for n, _ in rows)
        vwidth = max(len(v) for _, v in rows)
        head = f"{self.surface.name()} (Euler genus {self.surface.euler_genus}), delta={self.delta}, k={self.k}"
        lines = [head] + [f"{n.ljust(width)}  {v.rjust(vwidth)}" for n, v in rows]
        lines += [f"note: {t}" for t in self.notes]
        return "\n".join(lines) + "\n"


def _format_value(v) -> str:
    if isinstance(v, str):
        return v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Fraction) and v.denominator == 1:
        return str(v.numerator)
    x = float(v)
    if x == 0:
        return "0"
    digits = 3 - math.floor(math.log10(abs(x)))
    if digits <= 0:
        return str(int(round(x, digits)))
    return f"{round(x, digits):.{digits}f}"


def bounds(surface: SurfaceSpec, delta: int, k: int, c: Fraction | int | str = 1) -> BoundReport:
    """Every bound on the largest order for ``(delta, k)`` on ``surface``.

    ``c`` is the constant of the general upper bound, which its source
    leaves unspecified; the default 1 is a placeholder, not a claim.
    """
    if delta < 3 or k < 2:
        raise InputError("bounds need delta >= 3 and k >= 2")
    c = Fraction(c)
    g = surface.euler_genus
    power = delta ** (k // 2)
    notes = []
    if c == 1:
        notes.append("c is unspecified at its source; c=1 is a placeholder")
    new = 6 * power if surface.is_klein_bottle else (3.5 + math.sqrt(6 * g + 0.25)) * power
    chi = surface.chi
    thm7 = cor8 = None
    if k % 2 == 1 and k >= 3 and delta > _ceil_half(chi - 1) + 1:
        thm7 = splitting_order(chi, delta, k)
        if chi % 2 == 0:
            cor8 = splitting_order(chi, delta, k, even_variant=True)
    else:
        notes.append("vertex-splitting bound needs odd k >= 3 and delta > ceil((chi-1)/2)+1")
    return BoundReport(surface, delta, k, c, moore(delta, k), c * g * k * power,
                       math.sqrt(3 * g / 8) * power, new, thm7, cor8, tuple(notes))


def torus_bounds(delta: int, k: int) -> BoundReport:
    return bounds(TORUS, delta, k)
