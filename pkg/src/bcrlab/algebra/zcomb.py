"""The degree-k linear combination pairing integral values with weights."""

from __future__ import annotations

from fractions import Fraction

from ..diagrams.canonical import automorphism_count, canonical_form
from ..diagrams.enumerate import enumerate_connected
from ..diagrams.generators import degree2_table
from .weights import weight_w


def z_combination(k: int, integral_values: dict, bound: int | None = None) -> Fraction:
    """(1/2) sum over degree-k classes of I(diagram) * w(diagram) / |Aut|.

    `integral_values` is keyed by canonical class key (or, for degree 2, the
    names gamma1..gamma5 are also accepted); missing classes count as zero.
    Values may be exact rationals or floats; the result follows the inputs.
    """
    named = {name: d for name, d in degree2_table().items()} if k == 2 else {}
    classes = enumerate_connected(k, bound)
    by_key = {canonical_form(d).key: d for d in classes}
    # values keyed by name use the named generator itself for the weight, so
    # that the I-value refers to that diagram's orientation
    resolved: dict[str, tuple] = {}
    for key_or_name, value in integral_values.items():
        if key_or_name in named:
            d = named[key_or_name]
            key = canonical_form(d).key
        elif key_or_name in by_key:
            d = by_key[key_or_name]
            key = key_or_name
        else:
            raise ValueError(f"unknown degree-{k} class: {key_or_name!r}")
        if key in resolved:
            raise ValueError(f"duplicate value for class {key_or_name!r}")
        resolved[key] = (d, value)

    total = Fraction(0)
    for key, (d, value) in resolved.items():
        if value == 0:
            continue
        coeff = Fraction(1, 2) * weight_w(d) / automorphism_count(d)
        total = total + coeff * value
    return total
