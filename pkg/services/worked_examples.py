"""
Worked examples of the multiple-angle and power-reduction formulas, used as
exact fixtures and rendered into the golden text files.
"""

from fractions import Fraction
from typing import Dict, List, NamedTuple

from services.expansions import multiple_angle, power_fourier
from services.formatters import OutputFormat, render_multiple_angle, render_power_fourier
from services.trigpoly import Base, PowerExpansion, TrigPolynomial


class ExpansionExample(NamedTuple):
    name: str
    base: Base
    n: int
    expected: PowerExpansion


class PowerExample(NamedTuple):
    name: str
    base: Base
    n: int
    expected: TrigPolynomial


MULTIPLE_ANGLE_EXAMPLES: List[ExpansionExample] = [
    ExpansionExample("cos(2t) = 2cos^2 t - 1", Base.COS, 2, PowerExpansion(Base.COS, {0: -1, 2: 2})),
    ExpansionExample("cos(4t) = 8cos^4 t - 8cos^2 t + 1", Base.COS, 4, PowerExpansion(Base.COS, {0: 1, 2: -8, 4: 8})),
    ExpansionExample("sin(3t) = 3sin t - 4sin^3 t", Base.SIN, 3, PowerExpansion(Base.SIN, {1: 3, 3: -4})),
    ExpansionExample(
        "sin(4t) = cos t (4sin t - 8sin^3 t)", Base.SIN, 4,
        PowerExpansion(Base.SIN, {1: 4, 3: -8}, cos_cofactor=True),
    ),
]

POWER_EXAMPLES: List[PowerExample] = [
    PowerExample(
        "cos^4 t = (cos 4t + 4cos 2t + 3)/8", Base.COS, 4,
        TrigPolynomial(Fraction(3, 8), {2: Fraction(1, 2), 4: Fraction(1, 8)}),
    ),
    PowerExample(
        "cos^3 t = (cos 3t + 3cos t)/4", Base.COS, 3,
        TrigPolynomial(Fraction(0), {1: Fraction(3, 4), 3: Fraction(1, 4)}),
    ),
]

# The worked sin(4t) example prints -4cos t sin t + 8cos t sin^3 t, which is -sin(4t)
PRINTED_SIN4 = PowerExpansion(Base.SIN, {1: -4, 3: 8}, cos_cofactor=True)


def golden_texts() -> Dict[str, str]:
    """File name -> text rendering of every worked example"""
    texts: Dict[str, str] = {}
    for example in MULTIPLE_ANGLE_EXAMPLES:
        rendered = render_multiple_angle(multiple_angle(example.base, example.n), example.n, OutputFormat.TEXT)
        texts[f"multiple_angle_{example.base.value}_{example.n}.txt"] = rendered + "\n"
    for example in POWER_EXAMPLES:
        rendered = render_power_fourier(power_fourier(example.base, example.n), example.base, example.n,
                                        OutputFormat.TEXT)
        texts[f"power_fourier_{example.base.value}_{example.n}.txt"] = rendered + "\n"
    return texts
