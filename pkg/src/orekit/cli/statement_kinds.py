from typing import Literal, Union

DefinitionKinds = Literal[
    'field',
    'derivation',
    'automorphism',
    'ring',
    'element',
    'hom',
    'jet',
]

StatementKinds = Union[DefinitionKinds, Literal['assert']]

PredicateKinds = Literal[
    'central',
    'equal',
    'unequal',
    'hom',
    'maps',
    'periodic',
    'obstruction',
    'hs_axioms',
    'iterative',
    'kernel',
    'slice',
    'filtration',
]
