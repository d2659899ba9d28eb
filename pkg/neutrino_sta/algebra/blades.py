"""Basis blades of Cl(1,3) and their product tables.

Blades are encoded as 4-bit masks, bit mu standing for the generator gamma^mu.
Coefficients are stored in the canonical grade-ordered sequence given by
``BLADES``:

    1, g0, g1, g2, g3, g0g1, g0g2, g0g3, g1g2, g1g3, g2g3,
    g0g1g2, g0g1g3, g0g2g3, g1g2g3, g0g1g2g3

The stored generators are the upper-index gamma^mu. Lower-index vectors are
gamma_0 = gamma^0 and gamma_i = -gamma^i.
"""

from typing import List, Tuple

import numpy as np

SIGNATURE = (1, -1, -1, -1)
DIMENSION = 16

BLADES: List[int] = [
    0b0000,
    0b0001, 0b0010, 0b0100, 0b1000,
    0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100,
    0b0111, 0b1011, 0b1101, 0b1110,
    0b1111,
]
POSITION = {mask: index for index, mask in enumerate(BLADES)}


def blade_name(mask: int) -> str:
    """Human readable name of a blade, e.g. 'g0g2'"""
    if mask == 0:
        return '1'
    return ''.join(f'g{mu}' for mu in range(4) if mask >> mu & 1)


BLADE_NAMES: List[str] = [blade_name(mask) for mask in BLADES]
GRADES = np.array([bin(mask).count('1') for mask in BLADES])


def reorder_sign(a: int, b: int) -> int:
    """Sign picked up when the generators of a*b are sorted into canonical order"""
    a >>= 1
    swaps = 0
    while a:
        swaps += bin(a & b).count('1')
        a >>= 1
    return -1 if swaps & 1 else 1


def blade_product(a: int, b: int) -> Tuple[int, int]:
    """Geometric product of two basis blades as (sign, mask)"""
    sign = reorder_sign(a, b)
    common = a & b
    for mu, metric in enumerate(SIGNATURE):
        if common >> mu & 1:
            sign *= metric
    return sign, a ^ b


def _product_tables() -> Tuple[np.ndarray, np.ndarray]:
    index = np.zeros((DIMENSION, DIMENSION), dtype=int)
    sign = np.zeros((DIMENSION, DIMENSION))
    for i, a in enumerate(BLADES):
        for j, b in enumerate(BLADES):
            s, mask = blade_product(a, b)
            index[i, j] = POSITION[mask]
            sign[i, j] = s
    return index, sign


PRODUCT_INDEX, PRODUCT_SIGN = _product_tables()


def _gather_table(keep) -> Tuple[np.ndarray, np.ndarray]:
    """Tables (J, S) with out[k] = sum_i S[k, i] * a[i] * b[J[k, i]].

    ``keep(a, b)`` selects which blade pairs contribute, which turns the
    geometric product into the wedge, left contraction or inner product.
    """
    gather = np.zeros((DIMENSION, DIMENSION), dtype=int)
    weight = np.zeros((DIMENSION, DIMENSION))
    for k, c in enumerate(BLADES):
        for i, a in enumerate(BLADES):
            j = POSITION[a ^ c]
            gather[k, i] = j
            if keep(a, BLADES[j]):
                weight[k, i] = PRODUCT_SIGN[i, j]
    gather.setflags(write=False)
    weight.setflags(write=False)
    return gather, weight


GEOMETRIC = _gather_table(lambda a, b: True)
WEDGE = _gather_table(lambda a, b: a & b == 0)
LEFT_CONTRACTION = _gather_table(lambda a, b: a & ~b == 0)
INNER = _gather_table(lambda a, b: a & ~b == 0 or b & ~a == 0)

REVERSE_SIGNS = np.array([(-1.0) ** (k * (k - 1) // 2) for k in GRADES])
EVEN_INDICES = np.flatnonzero(GRADES % 2 == 0)
ODD_INDICES = np.flatnonzero(GRADES % 2 == 1)
