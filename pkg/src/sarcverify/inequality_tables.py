"""
Constant rows fed to the two r-part inequalities. Each row gives, for a simple group T
and a prime r, the exponent of |T|_r, the order of Out(T) and the exponent of the
bound on |phi_1(G_uv ∩ M)|_r. These are data, not computed from T.
"""

from dataclasses import dataclass
from typing import Iterable, List, Sequence

import pandas as pd

from .number_theory import (InequalityInstance, PPart, lemma44_exponents, lemma45_exponents, p_part)


@dataclass(frozen=True)
class TableRow:
    label: str
    r: int
    T_exponent: int
    out_order: int
    phi_exponent: int
    phi_is_bound: bool = False

    def instance(self, k: int = 1) -> InequalityInstance:
        return InequalityInstance(T_r=PPart(self.r, self.T_exponent),
                                  r=self.r,
                                  phi_r=PPart(self.r, self.phi_exponent),
                                  out_r=p_part(self.out_order, self.r),
                                  k=k)


# |T|_r < r |phi_r|^2 fails on each of these
SQUARE_BOUND_ROWS = [
    TableRow('PSL3(3)', 3, 3, 2, 1),
    TableRow('PSU3(3)', 3, 3, 2, 1),
    TableRow('PSU3(5)', 5, 3, 6, 1),
    TableRow('PSU4(3)', 3, 6, 8, 2),
    TableRow('PSU5(2)', 3, 5, 2, 1),
    TableRow('PSU6(2)', 3, 6, 6, 2),
    TableRow('PSp4(7)', 7, 4, 2, 1),
    TableRow('Sp4(8)', 3, 4, 6, 1),
    TableRow('G2(3)', 3, 6, 3, 2, phi_is_bound=True),
    TableRow("2F4(2)'", 3, 3, 2, 1),
    TableRow('HS', 5, 3, 2, 1),
    TableRow('McL', 3, 6, 2, 2),
    TableRow('Co2', 3, 6, 1, 2),
    TableRow('Co3', 3, 7, 1, 2),
]

# rows checked against |T|_r^{2k} < r^{k/(r-1)} |phi_r|^{3k} |Out(T)|_r
CUBE_BOUND_ROWS = [
    TableRow('PSL2(8)', 3, 2, 3, 1),
    TableRow('PSL6(2)', 3, 4, 2, 2),
    TableRow('PSU4(2)', 3, 4, 2, 2),
    TableRow('Sp6(2)', 3, 4, 1, 2),
    TableRow('POmega8+(2)', 2, 12, 6, 7, phi_is_bound=True),
    TableRow('M11', 3, 2, 1, 1),
    TableRow('M12', 3, 3, 2, 2, phi_is_bound=True),
    TableRow('M24', 3, 3, 1, 2),
]

# M12 and M24 with |phi_3| = 3^2 satisfy the displayed inequality for every k
CUBE_BOUND_SATISFIED = ('M12', 'M24')

# cases settled inline by the same inequality: a cross-characteristic r-part 3^2
# with phi_3 = 3, and |T|_7 = 7^2 with phi_7 = 7 when r = 7 divides q^6 - 1
INLINE_CUBE_BOUND_ROWS = [
    TableRow('r=3, |T|_3=3^2, phi_3=3', 3, 2, 1, 1),
    TableRow('r=7, |T|_7=7^2, phi_7=7, |Out| 1', 7, 2, 1, 1),
    TableRow('r=7, |T|_7=7^2, phi_7=7, |Out| 6', 7, 2, 6, 1),
]


def table_contradictions(rows: Sequence[TableRow], k_values: Iterable[int] = (None,),
                         inequality: str = 'square') -> pd.DataFrame:
    """
    Evaluates one inequality on a list of rows.

    Parameters
    ----------
        rows : list of TableRow
        k_values : values of k (ignored by the square bound)
        inequality : 'square' for |T|_r < r |phi_r|^2, 'cube' for the k-th power form

    Returns
    -------
        pandas.DataFrame with one line per (row, k): label, r, k, left and right
        exponents, holds, contradiction.
    """
    records = []
    for row in rows:
        for k in k_values:
            if inequality == 'square':
                left, right = lemma44_exponents(row.instance())
            else:
                left, right = lemma45_exponents(row.instance(k))
            records.append({'label': row.label, 'r': row.r, 'k': k,
                            'left': left, 'right': right,
                            'holds': left < right, 'contradiction': not left < right})
    return pd.DataFrame(records)
