"""Production matrices and A/Z sequence extraction.

The two sequences are computed along two independent routes and
cross-checked: a series route (A(z) = z/fbar(z), and Z from g compose fbar)
and the production-matrix route (inverse times the row-shifted expansion,
whose column 0 is Z and column 1 is A).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arrays import RiordanPair
from .errors import DegenerateZError, OrderError, ProprietyError
from .series import TruncSeries

Matrix = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class SeqReport:
    """Extracted A and Z sequence prefixes, with the route that produced them."""

    a_seq: tuple[Fraction, ...]
    z_seq: tuple[Fraction, ...]
    terms: int
    method: str  # "series_formula" or "production_matrix"

    def __post_init__(self):
        if self.method not in ("series_formula", "production_matrix"):
            raise ValueError(f"unknown method {self.method!r}")
        if not self.a_seq or self.a_seq[0] == 0:
            raise DegenerateZError("a_seq must start with a nonzero term")
        if not self.z_seq or self.z_seq[0] == 0:
            raise DegenerateZError("z_seq must start with a nonzero term")


def production_matrix(pair: RiordanPair, rows: int) -> Matrix:
    """rows x rows block of L^-1 times (L with its first row removed).

    The result is rectangular, not triangular: nonzero entries reach one
    column past the diagonal.
    """
    if not pair.proper:
        raise ProprietyError("production matrix requires a proper pair")
    if rows + 1 > pair.available_order:
        raise OrderError(
            f"production matrix with {rows} rows needs order {rows + 1}, "
            f"have {pair.available_order}"
        )
    pair = pair.truncate(rows + 1)
    shifted = pair.expand(rows + 1).rows[1:]
    inv = pair.inverse().expand(rows).rows
    out = []
    for n in range(rows):
        row = []
        for k in range(rows):
            acc = Fraction(0)
            for j in range(max(k - 1, 0), n + 1):
                if k <= j + 1:
                    acc += inv[n][j] * shifted[j][k]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def az_from_production(pair: RiordanPair, terms: int) -> SeqReport:
    """Z as column 0 and A as column 1 of the production matrix."""
    P = production_matrix(pair, terms)
    z_seq = tuple(P[j][0] for j in range(terms))
    a_seq = tuple(P[j][1] for j in range(terms))
    return SeqReport(a_seq=a_seq, z_seq=z_seq, terms=terms, method="production_matrix")


def az_from_series(pair: RiordanPair, terms: int) -> SeqReport:
    """A(z) = z/fbar(z) and Z(z) = (1 - g(0)/g(fbar(z)))/fbar(z)."""
    if not pair.proper:
        raise ProprietyError("A/Z extraction requires a proper pair")
    if terms + 1 > pair.available_order:
        raise OrderError(
            f"{terms} sequence terms need order {terms + 1}, "
            f"have {pair.available_order}"
        )
    pair = pair.truncate(terms + 1)
    fbar = pair.f.reverse()
    a = TruncSeries.z(fbar.order) / fbar
    z = (1 - pair.g.coeffs[0] / pair.g.compose(fbar)) / fbar
    return SeqReport(
        a_seq=a.coeffs[:terms],
        z_seq=z.coeffs[:terms],
        terms=terms,
        method="series_formula",
    )


def a_sequence(pair: RiordanPair, terms: int = 8) -> tuple[Fraction, ...]:
    """The A sequence alone, usable when Z is degenerate (z_0 = 0).

    Still computed both ways (z/fbar and production column 1) and
    cross-checked.
    """
    if not pair.proper:
        raise ProprietyError("A extraction requires a proper pair")
    if terms + 1 > pair.available_order:
        raise OrderError(
            f"{terms} sequence terms need order {terms + 1}, "
            f"have {pair.available_order}"
        )
    fbar = pair.f.truncate(terms + 1).reverse()
    by_series = (TruncSeries.z(fbar.order) / fbar).coeffs[:terms]
    P = production_matrix(pair, terms)
    by_matrix = tuple(P[j][1] for j in range(terms))
    if by_series != by_matrix:
        raise ArithmeticError(
            f"A-sequence routes disagree: {by_series} vs {by_matrix}"
        )
    return by_series


def extract_az(pair: RiordanPair, terms: int = 8) -> SeqReport:
    """Both routes, cross-checked termwise; the series result is returned.

    Raises DegenerateZError when the Z sequence starts with zero (the
    identity pair, for instance), where the recurrences are not defined.
    """
    by_series = az_from_series(pair, terms)
    by_matrix = az_from_production(pair, terms)
    if by_series.a_seq != by_matrix.a_seq or by_series.z_seq != by_matrix.z_seq:
        raise ArithmeticError(
            "series and production-matrix extractions disagree: "
            f"{by_series} vs {by_matrix}"
        )
    return by_series


def recurrence_check(pair: RiordanPair, report: SeqReport, rows: int) -> bool:
    """Replay the row recurrences against the expansion, exactly.

    Interior entries must satisfy l[n+1][k+1] = sum_j a_j*l[n][k+j] and
    column 0 must satisfy l[n+1][0] = sum_j z_j*l[n][j].  Entries whose sum
    would need sequence terms beyond the report's truncation are skipped
    (the sequences are genuinely infinite for most pairs here).
    """
    L = pair.expand(rows).rows
    a_seq, z_seq = report.a_seq, report.z_seq
    for n in range(rows - 1):
        # column 0 needs z_0..z_n
        if n + 1 <= len(z_seq):
            total = sum((z_seq[j] * L[n][j] for j in range(n + 1)), Fraction(0))
            if total != L[n + 1][0]:
                return False
        for k in range(n + 1):
            # entry (n+1, k+1) needs a_0..a_{n-k}
            if n - k + 1 > len(a_seq):
                continue
            total = sum((a_seq[j] * L[n][k + j] for j in range(n - k + 1)), Fraction(0))
            if total != L[n + 1][k + 1]:
                return False
    return True
