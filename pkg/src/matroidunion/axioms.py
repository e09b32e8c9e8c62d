"""Brute-force verification of the independence axioms and circuit elimination.

Works on explicit set systems (a family of bitmasks over a ground set).
Matroid oracles are expanded to explicit families up to ``cap`` elements;
larger ones are probed with seeded random samples and reported as
``"sampled-pass"``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable

from .core import GroundSet, Matroid, combinations_of, iter_bits, masks_by_size, popcount, submasks

PASS, FAIL, SAMPLED, PRECONDITION = "pass", "fail", "sampled-pass", "precondition"
AXIOMS = ("I1", "I2", "I3", "I3'", "IM", "C")
DEFAULT_CAP = 12


@dataclass(frozen=True)
class SetSystem:
    ground: GroundSet
    members: frozenset

    @classmethod
    def of(cls, ground: GroundSet | Iterable[str], members: Iterable[Iterable[str] | int]) -> "SetSystem":
        g = ground if isinstance(ground, GroundSet) else GroundSet(ground)
        fam = set()
        for m in members:
            fam.add(m if isinstance(m, int) else g.mask(m))
        if any(m & ~g.full for m in fam):
            raise ValueError("member not within ground set")
        return cls(g, frozenset(fam))

    @classmethod
    def from_matroid(cls, M: Matroid) -> "SetSystem":
        return cls(M.ground, frozenset(M.independent_sets()))

    def __contains__(self, mask: int) -> bool:
        return mask in self.members

    def maximal(self) -> list[int]:
        full = self.ground.full
        return sorted(m for m in self.members
                      if not any((m | (1 << e)) in self.members for e in iter_bits(full & ~m))
                      and not self._has_bigger(m))

    def _has_bigger(self, m: int) -> bool:
        return any(o != m and o & m == m for o in self.members)

    def circuits(self) -> list[int]:
        out = []
        for m in masks_by_size(self.ground.full):
            if m not in self.members and all((m & ~(1 << e)) in self.members for e in iter_bits(m)):
                out.append(m)
        return out


@dataclass
class Verdict:
    status: str
    witness: dict | None = None

    @property
    def ok(self) -> bool:
        return self.status in (PASS, SAMPLED)


@dataclass
class AxiomReport:
    verdicts: dict[str, Verdict] = field(default_factory=dict)
    ground: GroundSet | None = None
    sampled: bool = False
    seed: int | None = None

    @property
    def ok(self) -> bool:
        return all(v.ok for v in self.verdicts.values())

    @property
    def first_failure(self) -> tuple[str, Verdict] | None:
        for name in AXIOMS:
            v = self.verdicts.get(name)
            if v is not None and not v.ok:
                return name, v
        return None

    def to_json(self) -> dict:
        out: dict = {name: self.verdicts[name].status for name in AXIOMS if name in self.verdicts}
        fail = self.first_failure
        out["witness"] = None if fail is None else {"axiom": fail[0], **_named(fail[1].witness, self.ground)}
        if self.sampled:
            out["seed"] = self.seed
        return out


def _named(witness: dict | None, ground: GroundSet | None) -> dict:
    if not witness or ground is None:
        return dict(witness or {})
    out = {}
    for k, v in witness.items():
        if isinstance(v, int) and k != "z":
            out[k] = sorted(ground.names(v))
        elif k == "z":
            out[k] = ground.elems[v]
        elif isinstance(v, list):
            out[k] = [sorted(ground.names(m)) for m in v]
        else:
            out[k] = v
    return out


# -- individual checks ------------------------------------------------------


def check_I1(S: SetSystem) -> Verdict:
    return Verdict(PASS) if 0 in S.members else Verdict(FAIL, {"missing": 0})


def check_I2(S: SetSystem) -> Verdict:
    for m in sorted(S.members, key=lambda m: (popcount(m), m)):
        for e in iter_bits(m):
            if (m & ~(1 << e)) not in S.members:
                return Verdict(FAIL, {"member": m, "missing": m & ~(1 << e)})
    return Verdict(PASS)


def _preconditions(S: SetSystem) -> Verdict | None:
    for check in (check_I1, check_I2):
        v = check(S)
        if not v.ok:
            return Verdict(PRECONDITION, v.witness)
    return None


def check_I3(S: SetSystem) -> Verdict:
    """Maximal ``I'`` and non-maximal ``I`` admit ``x`` in ``I' - I`` with ``I + x`` a member."""
    pre = _preconditions(S)
    if pre is not None:
        return pre
    maximal = S.maximal()
    maxset = set(maximal)
    for I in sorted(S.members, key=lambda m: (popcount(m), m)):
        if I in maxset:
            continue
        for Ip in maximal:
            if not any((I | (1 << x)) in S.members for x in iter_bits(Ip & ~I)):
                return Verdict(FAIL, {"I": I, "maximal": Ip})
    return Verdict(PASS)


def check_I3prime(S: SetSystem) -> Verdict:
    """For maximal ``B``, any member ``I`` and ``x`` in ``I - B``: some ``y`` in ``B - I`` with ``(I + y) - x``."""
    for B in S.maximal():
        for I in sorted(S.members, key=lambda m: (popcount(m), m)):
            for x in iter_bits(I & ~B):
                if not any(((I | (1 << y)) & ~(1 << x)) in S.members for y in iter_bits(B & ~I)):
                    return Verdict(FAIL, {"B": B, "I": I, "x": 1 << x})
    return Verdict(PASS)


def check_IM(S: SetSystem) -> Verdict:
    """Every interval ``{I' : I <= I' <= X}`` of members has a maximal element."""
    full = S.ground.full
    for I in S.members:
        for extra in submasks(full & ~I):
            X = I | extra
            J = I
            grew = True
            while grew:
                grew = False
                for e in iter_bits(X & ~J):
                    if (J | (1 << e)) in S.members:
                        J |= 1 << e
                        grew = True
            if any(o != J and o & J == J and o & ~X == 0 for o in S.members):
                return Verdict(FAIL, {"I": I, "X": X})
    return Verdict(PASS)


def check_circuit_elimination(circuits: list[int], max_x: int | None = 3) -> Verdict:
    """Finite instance of infinite circuit elimination, ``|X| <= max_x`` (``None``: all ``X``)."""
    circuit_set = circuits

    def has_circuit(z: int, T: int) -> bool:
        zb = 1 << z
        return any(C2 & zb and C2 & ~T == 0 for C2 in circuit_set)

    for C in circuits:
        top = popcount(C) if max_x is None else min(max_x, popcount(C))
        for size in range(1, top + 1):
            for X in combinations_of(C, size):
                unions = {0}
                for x in iter_bits(X):
                    legal = [Cx for Cx in circuits if Cx & X == 1 << x]
                    unions = {u | Cx for u in unions for Cx in legal}
                    if not unions:
                        break
                for U in sorted(unions):
                    T = (C | U) & ~X
                    for z in iter_bits(C & ~U):
                        if not has_circuit(z, T):
                            return Verdict(FAIL, {"C": C, "X": X, "union_Cx": U, "z": z})
    return Verdict(PASS)


def is_matroid(S: SetSystem, max_x: int | None = 3) -> AxiomReport:
    report = AxiomReport(ground=S.ground)
    report.verdicts["I1"] = check_I1(S)
    report.verdicts["I2"] = check_I2(S)
    report.verdicts["I3"] = check_I3(S)
    report.verdicts["I3'"] = check_I3prime(S)
    report.verdicts["IM"] = check_IM(S)
    report.verdicts["C"] = check_circuit_elimination(S.circuits(), max_x)
    return report


# -- matroid oracles ----------------------------------------------------------


def check_matroid(M: Matroid, cap: int = DEFAULT_CAP, seed: int = 0, samples: int = 200,
                  max_x: int | None = 3, include_IM: bool | None = None) -> AxiomReport:
    """Axiom report for an oracle matroid; exhaustive up to ``cap`` elements."""
    if M.n <= cap:
        S = SetSystem.from_matroid(M)
        report = AxiomReport(ground=S.ground)
        report.verdicts["I1"] = check_I1(S)
        report.verdicts["I2"] = check_I2(S)
        report.verdicts["I3"] = check_I3(S)
        report.verdicts["I3'"] = check_I3prime(S)
        if include_IM is None:
            include_IM = M.n <= 8
        report.verdicts["IM"] = check_IM(S) if include_IM else Verdict(PASS)
        report.verdicts["C"] = check_circuit_elimination(S.circuits(), max_x)
        return report
    return _sampled(M, seed, samples)


def _random_independent(M: Matroid, rng: random.Random, within: int | None = None, stop: float = 1.0) -> int:
    pool = list(iter_bits(M.full if within is None else within))
    rng.shuffle(pool)
    J = 0
    for e in pool:
        if rng.random() > stop:
            break
        if M.indep(J | (1 << e)):
            J |= 1 << e
    return J


def _sampled(M: Matroid, seed: int, samples: int) -> AxiomReport:
    rng = random.Random(seed)
    report = AxiomReport(ground=M.ground, sampled=True, seed=seed)
    report.verdicts["I1"] = Verdict(SAMPLED) if M.indep(0) else Verdict(FAIL, {"missing": 0})
    v2 = v3 = v3p = vc = Verdict(SAMPLED)
    for _ in range(samples):
        I = _random_independent(M, rng, stop=rng.random())
        sub = I & rng.getrandbits(M.n)
        if v2.ok and not M.indep(sub):
            v2 = Verdict(FAIL, {"member": I, "missing": sub})
        B = _random_independent(M, rng)
        maximal_I = not any(M.indep(I | (1 << e)) for e in iter_bits(M.full & ~I))
        if v3.ok and not maximal_I and not any(M.indep(I | (1 << x)) for x in iter_bits(B & ~I)):
            v3 = Verdict(FAIL, {"I": I, "maximal": B})
        for x in iter_bits(I & ~B):
            if v3p.ok and not any(M.indep((I | (1 << y)) & ~(1 << x)) for y in iter_bits(B & ~I)):
                v3p = Verdict(FAIL, {"B": B, "I": I, "x": 1 << x})
            break
        # elimination on two fundamental circuits sharing an element
        outside = list(iter_bits(M.full & ~B))
        if len(outside) >= 2 and vc.ok:
            a, b = rng.sample(outside, 2)
            Ca, Cb = M.fundamental_circuit(B, a), M.fundamental_circuit(B, b)
            if Ca is not None and Cb is not None:
                common = Ca & Cb
                for x in iter_bits(common):
                    T = (Ca | Cb) & ~(1 << x)
                    if M.indep(T):
                        vc = Verdict(FAIL, {"C": Ca, "X": 1 << x, "union_Cx": Cb, "z": a})
                    break
    report.verdicts["I2"] = v2
    report.verdicts["I3"] = v3
    report.verdicts["I3'"] = v3p
    report.verdicts["IM"] = Verdict(SAMPLED)
    report.verdicts["C"] = vc
    return report
