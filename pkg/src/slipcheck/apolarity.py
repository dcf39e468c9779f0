"""Apolarity: operators in ``S`` acting on the dual ring ``S*`` by differentiation.

Dual polynomials are ordinary ``Polynomial`` values over a ring named
``x0..xn``; operators live over ``a0..an``.  Only the variable count has to
match.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .algebra import PolyRing, Polynomial, RingMismatchError, apply_linear_substitution, monomials_of_degree, mono_mul
from .ideals import Ideal, NotZeroDimensionalError, constant_hilbert_value, saturate_irrelevant
from .linalg import SparseEchelon, nullspace, rank


def dual_ring(nvars: int) -> PolyRing:
    return PolyRing.standard(nvars, prefix="x")


def operator_ring(nvars: int) -> PolyRing:
    return PolyRing.standard(nvars, prefix="a")


def _falling(k: int, m: int) -> int:
    return factorial(k) // factorial(k - m)


def contract(theta: Polynomial, F: Polynomial) -> Polynomial:
    """``theta`` acting on ``F`` as a constant-coefficient differential operator."""
    if theta.ring.nvars != F.ring.nvars:
        raise RingMismatchError(f"operator ring {theta.ring} does not match dual ring {F.ring}")
    out: dict = {}
    for m, c in theta.terms.items():
        for k, v in F.terms.items():
            if all(a >= b for a, b in zip(k, m)):
                scale = 1
                for a, b in zip(k, m):
                    scale *= _falling(a, b)
                mono = tuple(a - b for a, b in zip(k, m))
                out[mono] = out.get(mono, 0) + c * v * scale
    return Polynomial(F.ring, out)


def _require_form(F: Polynomial) -> int:
    if not F or not F.is_homogeneous():
        raise ValueError("expected a nonzero homogeneous dual polynomial")
    return F.degree()


def catalecticant(F: Polynomial, e: int, operators: PolyRing | None = None) -> tuple[int, list[Polynomial]]:
    """Rank of ``S_e -> S*_{d-e}, theta -> theta . F`` and a basis of its kernel ``Ann(F)_e``."""
    d = _require_form(F)
    if not 0 <= e <= d + 1:
        raise ValueError(f"degree {e} outside 0..{d + 1}")
    S = operators or operator_ring(F.ring.nvars)
    n = F.ring.nvars
    cols = monomials_of_degree(n, e)
    rows = {m: k for k, m in enumerate(monomials_of_degree(n, max(d - e, 0)))}
    mat = [[Fraction(0)] * len(cols) for _ in rows]
    for c, m in enumerate(cols):
        for mono, v in contract(S.monomial(m), F).terms.items():
            mat[rows[mono]][c] = v
    kernel = nullspace(mat, len(cols))
    polys = [Polynomial(S, {cols[k]: v for k, v in enumerate(vec) if v}) for vec in kernel]
    return len(cols) - len(kernel), polys


def annihilator_generators(F: Polynomial, operators: PolyRing | None = None) -> Ideal:
    """Minimal generators of ``Ann(F)``, swept over degrees ``1..deg F + 1``."""
    d = _require_form(F)
    S = operators or operator_ring(F.ring.nvars)
    n = S.nvars
    kept: list[Polynomial] = []
    for e in range(1, d + 2):
        ech = SparseEchelon()
        index = {m: k for k, m in enumerate(monomials_of_degree(n, e))}
        for g in kept:
            for m in monomials_of_degree(n, e - g.degree()):
                ech.add({index[mono_mul(t, m)]: c for t, c in g.terms.items()})
        _, basis = catalecticant(F, e, S)
        for g in basis:
            if ech.add({index[t]: c for t, c in g.terms.items()}):
                kept.append(g)
    return Ideal(S, kept)


def is_apolar(I: Ideal, F: Polynomial) -> bool:
    """Whether every generator of ``I`` annihilates ``F``."""
    return all(not contract(g, F) for g in I.generators)


def is_concise(F: Polynomial) -> bool:
    return catalecticant(F, 1)[0] == F.ring.nvars


def _det(mat: list[list[Polynomial]], ring: PolyRing) -> Polynomial:
    n = len(mat)
    memo: dict = {}

    def minor(row: int, cols: tuple[int, ...]) -> Polynomial:
        if row == n:
            return ring.one()
        key = (row, cols)
        if key not in memo:
            acc = ring.zero()
            for pos, c in enumerate(cols):
                entry = mat[row][c]
                if entry:
                    sub = minor(row + 1, cols[:pos] + cols[pos + 1:])
                    term = entry * sub
                    acc = acc - term if pos % 2 else acc + term
            memo[key] = acc
        return memo[key]

    return minor(0, tuple(range(n)))


def hessian_det(F: Polynomial) -> Polynomial:
    """Determinant of the matrix of second partial derivatives."""
    _require_form(F)
    n = F.ring.nvars
    hess = [[F.diff(i).diff(j) for j in range(n)] for i in range(n)]
    return _det(hess, F.ring)


@dataclass(frozen=True)
class RankCertificate:
    """Evidence that ``F`` has cactus rank at most ``r`` via the ideal ``I``."""

    ideal: Ideal = field(repr=False)
    target: Polynomial
    r: int
    checks: dict = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return bool(self.checks) and all(self.checks.values())

    def to_json(self) -> dict:
        return {"r": self.r, "target": str(self.target), "checks": dict(self.checks), "valid": self.valid}


def cactus_bound_certificate(I: Ideal, F: Polynomial, r: int) -> RankCertificate:
    """Check ``I`` apolar to ``F``, Hilbert polynomial ``r`` and ``I_d`` saturated in degree ``deg F``."""
    d = _require_form(F)
    checks = {"apolar": is_apolar(I, F)}
    checks["hilbert_polynomial"] = constant_hilbert_value(I) == r
    sat = saturate_irrelevant(I)
    from .ideals import hilbert_function

    # I is contained in its saturation, so equal Hilbert values in degree d mean equal pieces
    checks["saturated_in_degree"] = hilbert_function(I, d) == hilbert_function(sat, d)
    return RankCertificate(I, F, r, checks)


QUARTIC_CASES = ("1A", "1B", "1C", "2A", "2A0", "2B", "3A", "3A0", "3B")

# lex with a2 > a3 > a1 > a0
QUARTIC_ORDER_PERMUTATION = (2, 3, 1, 0)


def _linear_coefficients(form: Polynomial) -> tuple[Fraction, Fraction]:
    return form.coefficient((0, 0, 1, 0)), form.coefficient((0, 0, 0, 1))


def quartic_case_family(case: str, a=0, b=0, Q: Polynomial | str | None = None) -> tuple[Polynomial, Ideal]:
    """Quartic ``F`` in ``x0..x3`` and an apolar ideal ``J`` of Hilbert polynomial 6.

    ``Q`` is a binary quartic in ``x2, x3``.  Cases ``2A`` and ``3A`` need
    ``a != 0`` (their ``a = 0`` variants are ``2A0`` and ``3A0``); ``3B``
    needs ``a != 0``.
    """
    if case not in QUARTIC_CASES:
        raise ValueError(f"unknown case {case!r}; expected one of {', '.join(QUARTIC_CASES)}")
    X = dual_ring(4)
    S = operator_ring(4)
    a, b = Fraction(a), Fraction(b)
    if Q is None:
        Q = X.zero()
    elif isinstance(Q, str):
        Q = X(Q)
    if Q.ring != X:
        raise RingMismatchError("Q must live in the dual ring x0..x3")
    if Q and (Q.degree() != 4 or not Q.is_homogeneous() or Q.variables_used() - {2, 3}):
        raise ValueError("Q must be a binary quartic in x2, x3")
    if case in ("2A", "3A", "3B") and a == 0:
        raise ValueError(f"case {case} requires a != 0")
    if case in ("2A0", "3A0") and a != 0:
        raise ValueError(f"case {case} is the a = 0 variant")
    x0, x1, x2, x3 = X.gens()
    a0, a1, a2, a3 = S.gens()
    F: Polynomial
    if case[0] == "1":
        A, B = _linear_coefficients(contract(a2**3, Q))
    elif case[0] == "2":
        A, B = _linear_coefficients(contract(a2**2 * a3, Q))
    else:
        A, B = _linear_coefficients(contract(a2**2 * a3 - a2 * a3**2, Q))
    h = Fraction(1, 2)
    third = Fraction(1, 3)
    sixth = Fraction(1, 6)
    common = [a0**2, a0 * a1, a1**2]
    if case == "1A":
        F = x0 * (x2**2 * x3 + a * x3**3) + x1 * x2 * x3**2 + Q
        rest = [a0 * a2 - a1 * a3, a1 * a2**2, a2**3 - A * h * a0 * a2 * a3 - B * h * a1 * a2 * a3]
    elif case == "1B":
        F = x0 * (x2**2 * x3 + a * x2 * x3**2) + x1 * x3**3 + Q
        rest = [a1 * a2, a0 * a2**2 - third * a1 * a3**2, a2**3 - A * h * a0 * a2 * a3 + (a * A - B) * sixth * a1 * a3**2]
    elif case == "1C":
        F = x0 * x2 * x3**2 + x1 * x3**3 + Q
        rest = [a1 * a2, a0 * a2**2, a2**3 - A * h * a0 * a3**2 - B * sixth * a1 * a3**2]
    elif case == "2A":
        F = x0 * (x2**3 + a * x3**3) + x1 * (x2 * x3**2 + b * x3**3) + Q
        rest = [a * a1 * a2 - third * a0 * a3, a0 * a2 * a3, a2**2 * a3 - A * sixth * a0 * a2**2 - B * h * a1 * a2 * a3]
    elif case == "2A0":
        F = x0 * x2**3 + x1 * (x2 * x3**2 + b * x3**3) + Q
        rest = [a0 * a3, a1 * a2**2, a2**2 * a3 - A * sixth * a0 * a2**2 - B * h * a1 * a2 * a3]
    elif case == "2B":
        F = x0 * (x2**3 + a * x2 * x3**2) + x1 * x3**3 + Q
        rest = [a1 * a2, a0 * a2 * a3 - a * third * a1 * a3**2, a2**2 * a3 - A * sixth * a0 * a2**2 - B * sixth * a1 * a3**2]
    elif case == "3A":
        F = x0 * (x2**3 + a * x3**3) + x1 * (x2**2 * x3 + x2 * x3**2 + b * x3**3) + Q
        rest = [
            a * a1 * a2 + a * third * a0 * a2 - a * a1 * a3 + (b - third) * a0 * a3,
            a0 * a2 * a3,
            a2**2 * a3 - a2 * a3**2 - A * sixth * a0 * a2**2 - B * h * a1 * a2**2,
        ]
    elif case == "3A0":
        F = x0 * x2**3 + x1 * (x2**2 * x3 + x2 * x3**2 + b * x3**3) + Q
        rest = [
            a0 * a3,
            a1 * a2**2 + third * a0 * a2**2 - a1 * a2 * a3,
            a2**2 * a3 - a2 * a3**2 - A * sixth * a0 * a2**2 - B * h * a1 * a2**2,
        ]
    else:  # 3B
        F = x0 * (x2**3 + a * x2**2 * x3 + a * x2 * x3**2) + x1 * x3**3 + Q
        rest = [
            a1 * a2,
            a0 * a2 * a3 - a0 * a3**2 - a * third * a1 * a3**2,
            a2**2 * a3 - a2 * a3**2 - A * sixth * a0 * a2**2 + (a * A - 3 * B) / 18 * a1 * a3**2,
        ]
    return F, Ideal(S, common + rest)


def concise_cubic() -> Polynomial:
    """``x0*x3^2 - x1*(x3 + x4)^2 + x2*x4^2`` built by substituting ``x3 -> x3 + x4``."""
    X = dual_ring(5)
    x0, x1, x2, x3, x4 = X.gens()
    shift = [[int(i == j) for j in range(5)] for i in range(5)]
    shift[3][4] = 1
    middle = apply_linear_substitution(x1 * x3**2, shift)
    return x0 * x3**2 - middle + x2 * x4**2
