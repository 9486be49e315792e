"""JSON wire formats.

Function DSL::

    {"kind": "expsum",
     "terms": [{"coeff": {"re": "4/27", "im": "0"},
                "freq":  {"re": "2/3",  "im": "0"}}, ...]}

"re"/"im" are strings: exact rationals "p/q" (exact mode) or decimal
literals (float mode).  Exact values round-trip bit-exactly.

Regions serialize as {"re_min": .., "re_max": .., "im_min": .., "im_max": ..}
or the compact array form [re_min, re_max, im_min, im_max].
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .expsum import ExpSum, es_normalize
from .scalar import Scalar


def scalar_to_pair(s: Scalar) -> dict:
    return {"re": s.part_str("re"), "im": s.part_str("im")}


def scalar_from_pair(obj) -> Scalar:
    if isinstance(obj, dict):
        return Scalar.parse_pair(str(obj.get("re", "0")), str(obj.get("im", "0")))
    if isinstance(obj, (int, Fraction)):
        return Scalar.exact_value(obj)
    if isinstance(obj, float):
        return Scalar.float_value(obj)
    if isinstance(obj, str):
        return Scalar.parse(obj)
    raise ValueError(f"cannot read a scalar from {obj!r}")


def scalar_to_compact(s: Scalar) -> str:
    """Single-string form used in flat reports: '4/27' or '1/2+3/4i'."""
    if s.im == 0:
        return s.part_str("re")
    sign = "+" if float(s.im) >= 0 else ""
    return f"{s.part_str('re')}{sign}{s.part_str('im')}i"


def expsum_to_obj(f: ExpSum) -> dict:
    return {
        "kind": "expsum",
        "terms": [
            {"coeff": scalar_to_pair(c), "freq": scalar_to_pair(fr)}
            for c, fr in f.terms
        ],
    }


def expsum_from_obj(obj: dict) -> ExpSum:
    if obj.get("kind") != "expsum":
        raise ValueError("expected an object with kind == 'expsum'")
    return es_normalize(
        (scalar_from_pair(t["coeff"]), scalar_from_pair(t["freq"]))
        for t in obj["terms"]
    )


def expsum_to_json(f: ExpSum) -> str:
    return json.dumps(expsum_to_obj(f), indent=2, sort_keys=True)


def expsum_from_json(text: str) -> ExpSum:
    return expsum_from_obj(json.loads(text))


def load_expsum(path) -> ExpSum:
    return expsum_from_json(Path(path).read_text())


def save_expsum(f: ExpSum, path) -> None:
    Path(path).write_text(expsum_to_json(f) + "\n")


def region_from_obj(obj):
    """Accept the object form or the [re_min, re_max, im_min, im_max] array."""
    from .roots import Region

    if isinstance(obj, (list, tuple)):
        if len(obj) != 4:
            raise ValueError("region array must have 4 entries")
        return Region(*map(float, obj))
    return Region(
        float(obj["re_min"]), float(obj["re_max"]),
        float(obj["im_min"]), float(obj["im_max"]),
    )


def region_to_obj(region) -> dict:
    return {
        "re_min": region.re_min, "re_max": region.re_max,
        "im_min": region.im_min, "im_max": region.im_max,
    }


def complex_to_obj(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def value_from_obj(obj) -> complex:
    """Read a target value: number, rational string, or {re, im} pair."""
    if isinstance(obj, (int, float)):
        return complex(obj)
    if isinstance(obj, str):
        return complex(float(Fraction(obj)) if "/" in obj else float(obj))
    if isinstance(obj, dict):
        return scalar_from_pair(obj).as_complex
    raise ValueError(f"cannot read a value from {obj!r}")
