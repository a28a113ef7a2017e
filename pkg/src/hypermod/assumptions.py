"""The three standing conventions every theorem in the harness relies on.

(a) singleton witnesses: ``x in g(I, 1, m)`` implies ``{x} = g(a, 1, m)`` for some a in I;
(b) ``h(r, -r, 0, ...) = {0}`` for every scalar r;
(c) the two P-torsion parts agree for every maximal hyperideal P.

Instances failing any of them are out of contract for the theorem harness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .bitset import members
from .core import Hypermodule
from .substructures import enumerate_hyperideals, maximal_hyperideals, torsion_part

FULL_POWERSET_LIMIT = 4


@dataclass
class AssumptionReport:
    items: dict[str, tuple[bool, Optional[str]]] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return all(ok for ok, _ in self.items.values())

    def to_dict(self) -> dict:
        return {"holds": self.holds,
                "items": {k: {"holds": ok, "witness": w} for k, (ok, w) in self.items.items()}}


def _singleton_witness(M: Hypermodule, ideals: Sequence[int]) -> tuple[bool, Optional[str]]:
    R = M.ring
    if R.size <= FULL_POWERSET_LIMIT:
        domain = range(1, 1 << R.size)
    else:
        domain = ideals
    for I in domain:
        for x in range(M.size):
            singles = 0
            for a in members(I):
                v = M.act1[a][x]
                if v & (v - 1) == 0:
                    singles |= v
            reach = M.action(I, 1 << x)
            missing = reach & ~singles
            if missing:
                y = next(members(missing))
                return False, (f"{M.carrier.labels[y]} in g({R.carrier.fmt(I)}, 1, {M.carrier.labels[x]})"
                               " has no singleton witness")
    return True, None


def _sharp_inverses(M: Hypermodule) -> tuple[bool, Optional[str]]:
    R = M.ring
    for r in range(R.size):
        v = R.add_pad(r, R.neg[r])
        if v != 1 << R.zero:
            lab = R.carrier.labels
            return False, f"h({lab[r]}, -{lab[r]}) = {R.carrier.fmt(v)}"
    return True, None


def _torsion_agree(M: Hypermodule, ideals: Sequence[int]) -> tuple[bool, Optional[str]]:
    for P in maximal_hyperideals(M.ring, ideals):
        tp = torsion_part(M, P)
        if tp.X_lower != tp.X_upper:
            return False, (f"P = {M.ring.carrier.fmt(P)}: lower {M.carrier.fmt(tp.X_lower)}"
                           f" vs upper {M.carrier.fmt(tp.X_upper)}")
    return True, None


def check_standing_assumptions(M: Hypermodule, ideals: Optional[Sequence[int]] = None) -> AssumptionReport:
    ideals = enumerate_hyperideals(M.ring) if ideals is None else ideals
    rep = AssumptionReport()
    rep.items["a_singleton_witness"] = _singleton_witness(M, ideals)
    rep.items["b_sharp_inverses"] = _sharp_inverses(M)
    rep.items["c_torsion_parts_agree"] = _torsion_agree(M, ideals)
    return rep
