"""Value-level generic programming over five universes of codes.

All universes interpret their codes into one shared tree of generic values,
so conformance is a judgment, generic operations are tree transformations,
and the embeddings between universes are checkable functions rather than
type-level claims.
"""

from .gvalue import (
    EmptySlot,
    FuelExhausted,
    GenericValue,
    In1,
    In2,
    IndexLabel,
    IndexNotInSet,
    IndexSet,
    Konst,
    MalformedValue,
    Pair,
    Payload,
    PayloadSlot,
    PayloadToken,
    RecV,
    Refl,
    Roll,
    TT,
    disjoint_union,
    index_set,
    label,
    left,
    payload,
    print_label,
    print_value,
    right,
    value_size,
)
from . import corpus, dsl, embed, indexed, instant, multirec, oracle, polyp, regular
from .cli import main, run_cli
from .dsl import ParseError, parse_code, parse_env, parse_label, parse_value
from .embed import ConversionReport, compose_path
from .oracle import EnumBudget, UnknownProperty, enumerate_values, run_property

__all__ = [
    "EmptySlot",
    "FuelExhausted",
    "GenericValue",
    "In1",
    "In2",
    "IndexLabel",
    "IndexNotInSet",
    "IndexSet",
    "Konst",
    "MalformedValue",
    "Pair",
    "Payload",
    "PayloadSlot",
    "PayloadToken",
    "RecV",
    "Refl",
    "Roll",
    "TT",
    "disjoint_union",
    "index_set",
    "label",
    "left",
    "payload",
    "print_label",
    "print_value",
    "right",
    "value_size",
    "corpus",
    "dsl",
    "embed",
    "indexed",
    "instant",
    "multirec",
    "oracle",
    "polyp",
    "regular",
    "main",
    "run_cli",
    "ParseError",
    "parse_code",
    "parse_env",
    "parse_label",
    "parse_value",
    "ConversionReport",
    "compose_path",
    "EnumBudget",
    "UnknownProperty",
    "enumerate_values",
    "run_property",
]
