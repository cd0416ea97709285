"""Representation Weights Module.

Builds weight systems for representations of products of GL(n).

Key components:
- Blocks: GL blocks, extra torus coordinates, Weyl-chamber canonicalization
- Expressions: parser for std/dual/sym/tensor/direct-sum expressions
- Weights: weight systems from expressions or explicit documents
- Examples: built-in weight systems
"""

from src.rep.blocks import BlockStructure, GLBlock, TorusBlock, dominant_representative
from src.rep.examples import ExampleInfo, list_examples, load_example
from src.rep.expr import DirectSum, Dual, RepExpr, Std, Sym, Tensor, parse_rep
from src.rep.weights import (
    WeightEntry,
    WeightSystem,
    load_weight_system,
    weight_document,
    weights_of,
)

__all__ = [
    "BlockStructure",
    "GLBlock",
    "TorusBlock",
    "dominant_representative",
    "RepExpr",
    "Std",
    "Dual",
    "Sym",
    "Tensor",
    "DirectSum",
    "parse_rep",
    "WeightEntry",
    "WeightSystem",
    "weights_of",
    "load_weight_system",
    "weight_document",
    "ExampleInfo",
    "list_examples",
    "load_example",
]
