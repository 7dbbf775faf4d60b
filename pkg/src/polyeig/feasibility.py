"""Decision procedures for prescribed eigenstructures of row completions.

Given the eigenstructure of an m x n polynomial matrix P of degree d and a
(partial) prescription for the (m+z) x n completion, each checker decides
feasibility and reports exactly which conditions fail.  All arithmetic is
exact; conditions are integer inequalities between degree sums of
homogeneous lcm chains plus (generalized) majorization tests on index
sequences.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .homog import HOMOG_ZERO, chain_at, homog_deg, homog_divides, homog_lcm, is_divisibility_chain
from .matrix import Eigenstructure
from .poly import Poly, poly_divides, poly_lcm, poly_one
from .sequences import (
    NEG_INF,
    POS_INF,
    ensure_nonincreasing,
    ensure_partition,
    gen_majorizes,
    majorizes,
    prefix_sum,
    seq_get,
)

log = logging.getLogger(__name__)


class InvalidTargetError(ValueError):
    """Target prescription is structurally inconsistent with P."""


class ConstantMatrixError(ValueError):
    """Completion checkers require a matrix of degree at least 1."""


@dataclass(frozen=True)
class CompletionTarget:
    """Prescription for the eigenstructure of the row-completed matrix.

    Only the prescribed parts are set; absent parts stay None.  The rank
    excess x is always derived as ``rank - pInv.rank`` by the checkers.
    """

    z: int
    rank: int
    hom_factors: tuple | None = None       # chain of HomogPoly, length rank
    finite_factors: tuple | None = None    # chain of monic Poly, length rank
    inf_mults: tuple | None = None         # nondecreasing ints, length rank
    col_indices: tuple | None = None       # partition, length n - rank
    row_indices: tuple | None = None       # partition, length m + z - rank

    def __post_init__(self):
        if self.z < 0:
            raise InvalidTargetError("number of added rows must be nonnegative")
        if self.rank < 1:
            raise InvalidTargetError("target rank must be positive")
        if self.hom_factors is not None:
            if len(self.hom_factors) != self.rank:
                raise InvalidTargetError("homogeneous chain length must equal the target rank")
            if not is_divisibility_chain(self.hom_factors):
                raise InvalidTargetError("homogeneous factors must form a divisibility chain")
        if self.finite_factors is not None:
            if len(self.finite_factors) != self.rank:
                raise InvalidTargetError("finite chain length must equal the target rank")
            for p in self.finite_factors:
                if not isinstance(p, Poly) or not p.is_monic:
                    raise InvalidTargetError("finite factors must be monic polynomials")
            if not all(
                poly_divides(p, q) for p, q in zip(self.finite_factors, self.finite_factors[1:])
            ):
                raise InvalidTargetError("finite factors must form a divisibility chain")
        if self.inf_mults is not None:
            f = tuple(int(v) for v in self.inf_mults)
            if len(f) != self.rank:
                raise InvalidTargetError("multiplicity list length must equal the target rank")
            if any(v < 0 for v in f) or any(a > b for a, b in zip(f, f[1:])):
                raise InvalidTargetError("multiplicities of infinity must be nondecreasing and nonnegative")
        if self.col_indices is not None:
            ensure_partition(self.col_indices, "target column indices")
        if self.row_indices is not None:
            ensure_partition(self.row_indices, "target row indices")


@dataclass(frozen=True)
class FeasibilityReport:
    """Outcome of a feasibility check: violated condition names plus the
    intermediate data (gap sequences, thresholds) used to evaluate them."""

    violations: tuple
    details: dict = field(default_factory=dict)

    @property
    def feasible(self) -> bool:
        return not self.violations


def _report(violations, details) -> FeasibilityReport:
    # preserve first-occurrence order, drop duplicates
    seen = []
    for v in violations:
        if v not in seen:
            seen.append(v)
    return FeasibilityReport(tuple(seen), details)


def _dls(phi, gamma, offset: int, upper: int) -> int:
    """Sum over i = 1..upper of the homogeneous degree of
    lcm(phi_{i+offset}, gamma_i), with the unit/zero index conventions."""
    total = 0
    for i in range(1, upper + 1):
        total += homog_deg(homog_lcm(chain_at(phi, i + offset), chain_at(gamma, i)))
    return total


def _interlaces(phi, gamma, z: int) -> bool:
    """Condition gamma_i | phi_i | gamma_{i+z} for 1 <= i <= len(phi)."""
    return all(
        homog_divides(chain_at(gamma, i), chain_at(phi, i))
        and homog_divides(chain_at(phi, i), chain_at(gamma, i + z))
        for i in range(1, len(phi) + 1)
    )


def _check_gap_shape(a, b, interlacing_ok: bool, label: str):
    # With the full hypotheses of the completion theorems the gap sequences
    # are nonincreasing with nonnegative b; interlacing alone does not
    # guarantee it (e.g. u=(1), v=(0,0) with unit chains gives b=(-1)), so
    # violations are logged, never fatal.  Feasible instances are checked
    # to satisfy these shape properties by the test suite.
    monotone = all(p >= q for p, q in zip(a, a[1:])) and all(p >= q for p, q in zip(b, b[1:]))
    tail_ok = not b or b[-1] >= 0
    if not (monotone and tail_ok):
        log.log(
            logging.INFO if interlacing_ok else logging.DEBUG,
            "%s gap sequences not monotone (interlacing=%s): a=%s b=%s",
            label,
            interlacing_ok,
            a,
            b,
        )


def build_gaps_row_form(phi, gamma, u, v, x: int, z: int, d: int):
    """Gap sequences a (length x) and b (length z-x) expressed through the
    row minimal indices u of P and v of the completion."""
    r = len(phi)
    su, sv = sum(u), sum(v)
    sg = sum(homog_deg(g) for g in gamma)
    a = []
    if x >= 1:
        a.append(sv - su + sg - _dls(phi, gamma, -x + 1, r + x - 1) - d)
        for j in range(2, x + 1):
            a.append(
                _dls(phi, gamma, -x + j - 1, r + x - j + 1)
                - _dls(phi, gamma, -x + j, r + x - j)
                - d
            )
    b = []
    if z - x >= 1:
        b.append(sv - su + sg - _dls(phi, gamma, -x - 1, r + x))
        for j in range(2, z - x + 1):
            b.append(
                _dls(phi, gamma, -x - j + 1, r + x) - _dls(phi, gamma, -x - j, r + x)
            )
    a, b = tuple(a), tuple(b)
    _check_gap_shape(a, b, _interlaces(phi, gamma, z), "row-form")
    return a, b


def build_gaps_col_form(phi, gamma, c, dd, x: int, z: int, d: int):
    """Gap sequences expressed through the column minimal indices c of P
    and dd of the completion; only the leading entries differ from the
    row form."""
    r = len(phi)
    sc, sd = sum(c), sum(dd)
    sp = sum(homog_deg(p) for p in phi)
    a = []
    if x >= 1:
        a.append(sc - sd + sp - _dls(phi, gamma, -x + 1, r + x - 1) + (x - 1) * d)
        for j in range(2, x + 1):
            a.append(
                _dls(phi, gamma, -x + j - 1, r + x - j + 1)
                - _dls(phi, gamma, -x + j, r + x - j)
                - d
            )
    b = []
    if z - x >= 1:
        b.append(sc - sd + sp - _dls(phi, gamma, -x - 1, r + x) + x * d)
        for j in range(2, z - x + 1):
            b.append(
                _dls(phi, gamma, -x - j + 1, r + x) - _dls(phi, gamma, -x - j, r + x)
            )
    a, b = tuple(a), tuple(b)
    _check_gap_shape(a, b, _interlaces(phi, gamma, z), "col-form")
    return a, b


def _safe_gen_majorizes(g, dseq, a) -> bool:
    """gen_majorizes, treating malformed inputs (possible only when another
    condition already failed) as a violation."""
    try:
        return gen_majorizes(g, dseq, a)
    except ValueError:
        return False


def _safe_majorizes(g, dseq) -> bool:
    try:
        return majorizes(g, dseq)
    except ValueError:
        return False


def check_existence(target: Eigenstructure) -> FeasibilityReport:
    """Whether any polynomial matrix has the given eigenstructure:
    the leading homogeneous factor must have no root at infinity, and the
    index sum identity must hold."""
    if target.rank < 1:
        raise InvalidTargetError("rank must be positive")
    violations = []
    if target.hom_factors[0].e != 0:
        violations.append("gamma1-at-infinity")
    if not target.index_sum_holds():
        violations.append("index-sum")
    return _report(violations, {})


def _validate(pinv: Eigenstructure, target: CompletionTarget):
    """Common validation; returns (r, x, d, n, m)."""
    if pinv.degree < 1:
        raise ConstantMatrixError("completion checkers require degree >= 1")
    r, n, m = pinv.rank, pinv.ncols, pinv.nrows
    x = target.rank - r
    if not 0 <= x <= min(target.z, n - r):
        raise InvalidTargetError(
            f"rank excess x={x} must satisfy 0 <= x <= min(z={target.z}, n-r={n - r})"
        )
    return r, x, pinv.degree, n, m


def check_full(pinv: Eigenstructure, target: CompletionTarget) -> FeasibilityReport:
    """Full prescription: homogeneous chain plus both minimal index lists."""
    r, x, d, n, m = _validate(pinv, target)
    z = target.z
    if target.hom_factors is None or target.col_indices is None or target.row_indices is None:
        raise InvalidTargetError("full check needs homogeneous factors and both index lists")
    gamma, dd, v = target.hom_factors, target.col_indices, target.row_indices
    if len(dd) != n - r - x:
        raise InvalidTargetError(f"expected {n - r - x} column indices, got {len(dd)}")
    if len(v) != m + z - r - x:
        raise InvalidTargetError(f"expected {m + z - r - x} row indices, got {len(v)}")
    phi, u, c = pinv.hom_factors, pinv.row_indices, pinv.col_indices

    violations = []
    if not _interlaces(phi, gamma, z):
        violations.append("interlacing")
    eta = sum(1 for t in u if t > 0)
    eta_bar = sum(1 for t in v if t > 0)
    if eta_bar < eta:
        violations.append("eta")
    a, b = build_gaps_row_form(phi, gamma, u, v, x, z, d)
    if not _safe_gen_majorizes(c, dd, a):
        violations.append("col-gen-majorization")
    if not _safe_gen_majorizes(v, u, b):
        violations.append("row-gen-majorization")
    lhs = _dls(phi, gamma, -x, r + x)
    rhs = sum(v) - sum(u) + sum(homog_deg(g) for g in gamma)
    if (lhs != rhs) if x == 0 else (lhs > rhs):
        violations.append("degree-sum")
    return _report(violations, {"x": x, "a": a, "b": b})


def check_full_colform(pinv: Eigenstructure, target: CompletionTarget) -> FeasibilityReport:
    """Equivalent evaluation of the full prescription through column
    minimal indices; exercised for the row/column-form agreement property."""
    r, x, d, n, m = _validate(pinv, target)
    z = target.z
    gamma, dd, v = target.hom_factors, target.col_indices, target.row_indices
    phi, u, c = pinv.hom_factors, pinv.row_indices, pinv.col_indices

    violations = []
    if not _interlaces(phi, gamma, z):
        violations.append("interlacing")
    eta = sum(1 for t in u if t > 0)
    eta_bar = sum(1 for t in v if t > 0)
    if eta_bar < eta:
        violations.append("eta")
    a, b = build_gaps_col_form(phi, gamma, c, dd, x, z, d)
    if not _safe_gen_majorizes(c, dd, a):
        violations.append("col-gen-majorization")
    if not _safe_gen_majorizes(v, u, b):
        violations.append("row-gen-majorization")
    lhs = _dls(phi, gamma, -x, r + x)
    rhs = sum(c) - sum(dd) + sum(homog_deg(p) for p in phi) + x * d
    if (lhs != rhs) if x == z else (lhs > rhs):
        violations.append("degree-sum")
    return _report(violations, {"x": x, "a": a, "b": b})


def check_hom_plus_cols(pinv: Eigenstructure, target: CompletionTarget) -> FeasibilityReport:
    """Homogeneous chain plus column minimal indices prescribed."""
    r, x, d, n, m = _validate(pinv, target)
    z = target.z
    if target.hom_factors is None or target.col_indices is None:
        raise InvalidTargetError("needs homogeneous factors and column indices")
    gamma, dd = target.hom_factors, target.col_indices
    if len(dd) != n - r - x:
        raise InvalidTargetError(f"expected {n - r - x} column indices, got {len(dd)}")
    phi, u, c = pinv.hom_factors, pinv.row_indices, pinv.col_indices

    violations = []
    if not _interlaces(phi, gamma, z):
        violations.append("interlacing")
    a, b = build_gaps_col_form(phi, gamma, c, dd, x, z, d)
    if not _safe_gen_majorizes(c, dd, a):
        violations.append("col-gen-majorization")
    lhs = _dls(phi, gamma, -x, r + x)
    rhs = sum(c) - sum(dd) + sum(homog_deg(p) for p in phi) + x * d
    if (lhs != rhs) if x == z else (lhs > rhs):
        violations.append("degree-sum")
    return _report(violations, {"x": x, "a": a, "b": b})


def _ell_threshold(c, a, x: int):
    """Least j >= 1 with prefix(c, j) > prefix(a, j), padding a with -inf
    past its length; always <= x+1 when len(c) > x."""
    for j in range(1, len(c) + 1):
        pa = prefix_sum(a, j) if j <= len(a) else NEG_INF
        if prefix_sum(c, j) > pa:
            return j
    return None


def construct_d(c, a):
    """Smallest completion d with c <' (d, a), when one exists.

    Returns the sequence d or None when the prefix-cut conditions fail.
    """
    c = ensure_nonincreasing(c, "c")
    a = ensure_nonincreasing(a, "a")
    x = len(a)
    if len(c) <= x:
        raise ValueError("need len(c) > len(a)")
    if x == 0:
        return c
    ell = _ell_threshold(c, a, x)
    c_ell = seq_get(c, ell) if ell is not None else NEG_INF
    if prefix_sum(c, x + 1) - c_ell < prefix_sum(a, x):
        return None
    if ell is not None:
        for j in range(ell, x):
            if sum(c[j + 1 : x + 1]) < sum(a[j:x]):
                return None
    d1 = prefix_sum(c, x + 1) - prefix_sum(a, x)
    dseq = (d1,) + tuple(c[x + 1 :])
    assert gen_majorizes(c, dseq, a), "constructed sequence must witness the majorization"
    return dseq


def check_hom_plus_rows(pinv: Eigenstructure, target: CompletionTarget) -> FeasibilityReport:
    """Homogeneous chain plus row minimal indices prescribed."""
    r, x, d, n, m = _validate(pinv, target)
    z = target.z
    if target.hom_factors is None or target.row_indices is None:
        raise InvalidTargetError("needs homogeneous factors and row indices")
    gamma, v = target.hom_factors, target.row_indices
    if len(v) != m + z - r - x:
        raise InvalidTargetError(f"expected {m + z - r - x} row indices, got {len(v)}")
    phi, u, c = pinv.hom_factors, pinv.row_indices, pinv.col_indices

    violations = []
    details = {"x": x}
    if not _interlaces(phi, gamma, z):
        violations.append("interlacing")
    eta = sum(1 for t in u if t > 0)
    eta_bar = sum(1 for t in v if t > 0)
    if eta_bar < eta:
        violations.append("eta")
    a, b = build_gaps_row_form(phi, gamma, u, v, x, z, d)
    details["a"], details["b"] = a, b
    if not _safe_gen_majorizes(v, u, b):
        violations.append("row-gen-majorization")
    lhs = _dls(phi, gamma, -x, r + x)
    rhs = sum(v) - sum(u) + sum(homog_deg(g) for g in gamma)
    if (lhs != rhs) if x == 0 else (lhs > rhs):
        violations.append("degree-sum")
    if x == n - r:
        if not _safe_majorizes(c, a):
            violations.append("c-majorization")
    else:
        ell = _ell_threshold(c, a, x)
        details["ell"] = ell
        c_ell = seq_get(c, ell) if ell is not None else NEG_INF
        if x >= 1 and prefix_sum(c, x + 1) - c_ell < prefix_sum(a, x):
            violations.append("c-sum-ell")
        if ell is not None:
            for j in range(ell, x):
                if sum(c[j + 1 : x + 1]) < sum(a[j:x]):
                    violations.append("c-sum-tail")
                    break
    return _report(violations, details)


def check_hom_only(pinv: Eigenstructure, target: CompletionTarget) -> FeasibilityReport:
    """Only the homogeneous invariant factor chain prescribed."""
    r, x, d, n, m = _validate(pinv, target)
    z = target.z
    if target.hom_factors is None:
        raise InvalidTargetError("needs homogeneous factors")
    gamma = target.hom_factors
    phi, u, c = pinv.hom_factors, pinv.row_indices, pinv.col_indices
    su = sum(u)
    tail_c = sum(c[x:])

    violations = []
    details = {"x": x}
    if not _interlaces(phi, gamma, z):
        violations.append("interlacing")
    if x < z or x == n - r:
        for j in range(x):
            lhs = _dls(phi, gamma, j - x, r + x - j) + su + prefix_sum(c, j) + tail_c
            rhs = (r + x - j) * d
            exact = j == 0 and x == z == n - r
            if (lhs != rhs) if exact else (lhs > rhs):
                violations.append("hom-only-j")
                details.setdefault("failed_j", []).append(j)
    else:  # x == z < n - r
        sp = sum(homog_deg(p) for p in phi)
        sg = sum(homog_deg(g) for g in gamma)
        # threshold index against the implicit gap sequence of length x;
        # past position x the gap is -infinity, so the scan caps at x+1
        ell = x + 1
        for j in range(1, x + 1):
            if prefix_sum(c, j) > sg - _dls(phi, gamma, j - x, r + x - j) - j * d:
                ell = j
                break
        details["ell"] = ell
        if prefix_sum(c, x + 1) - seq_get(c, ell) < sg - sp - x * d:
            violations.append("c-sum-ell")
        for j in range(ell, x):
            if sum(c[j + 1 : x + 1]) < _dls(phi, gamma, j - x, r + x - j) - sp - (x - j) * d:
                violations.append("c-sum-tail")
                break
    return _report(violations, details)


def check_finite_only(pinv: Eigenstructure, target: CompletionTarget) -> FeasibilityReport:
    """Only the finite invariant factor chain prescribed."""
    r, x, d, n, m = _validate(pinv, target)
    z = target.z
    if target.finite_factors is None:
        raise InvalidTargetError("needs finite factors")
    beta = target.finite_factors
    alpha = pinv.alphas
    u, c = pinv.row_indices, pinv.col_indices
    fld = pinv.hom_factors[0].field if pinv.hom_factors else beta[0].field
    se = sum(pinv.inf_mults)
    su = sum(u)
    tail_c = sum(c[x:])

    def beta_at(i):
        if i <= len(beta):
            return beta[i - 1]
        return Poly((), fld)  # past the chain: the zero polynomial

    def alpha_at(i):
        if i < 1:
            return poly_one(fld)
        return alpha[i - 1]

    violations = []
    details = {"x": x}
    ok = all(
        poly_divides(beta_at(i), alpha_at(i)) and poly_divides(alpha_at(i), beta_at(i + z))
        for i in range(1, r + 1)
    )
    if not ok:
        violations.append("interlacing")
    for j in range(x):
        lhs = se + su + prefix_sum(c, j) + tail_c
        for i in range(1, r + x - j + 1):
            lhs += poly_lcm(alpha_at(i - x + j), beta_at(i)).degree if i - x + j >= 1 else beta_at(i).degree
        if lhs > (r + x - j) * d:
            violations.append("finite-only-j")
            details.setdefault("failed_j", []).append(j)
    return _report(violations, details)


def check_infinite_only(pinv: Eigenstructure, target: CompletionTarget) -> FeasibilityReport:
    """Only the partial multiplicities of infinity prescribed."""
    r, x, d, n, m = _validate(pinv, target)
    z = target.z
    if target.inf_mults is None:
        raise InvalidTargetError("needs multiplicities of infinity")
    f = tuple(int(t) for t in target.inf_mults)
    e = pinv.inf_mults
    u, c = pinv.row_indices, pinv.col_indices
    sa = sum(a.degree for a in pinv.alphas)
    su = sum(u)
    tail_c = sum(c[x:])

    def f_at(i):
        return f[i - 1] if i <= len(f) else POS_INF

    def e_at(i):
        return 0 if i < 1 else e[i - 1]

    violations = []
    details = {"x": x}
    if not all(f_at(i) <= e[i - 1] <= f_at(i + z) for i in range(1, r + 1)):
        violations.append("interlacing")
    for j in range(x):
        lhs = sa + su + prefix_sum(c, j) + tail_c
        lhs += sum(max(e_at(i - x + j), f[i - 1]) for i in range(1, r + x - j + 1))
        if lhs > (r + x - j) * d:
            violations.append("infinite-only-j")
            details.setdefault("failed_j", []).append(j)
    return _report(violations, details)
