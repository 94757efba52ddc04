"""Exact signed-matrix algebra for switching witnesses.

Everything here runs on doubled integer entries (value times two), so the
only values that ever appear are -2..2 and every identity is checked with
exact integer equality.  No floating point anywhere.

The pipeline: a permutation of a doubled graph folds to a *signed
half-permutation* (each row/column holds one +-1 or two +-1/2 entries);
*integration* rounds that to a signed permutation by doubling one half entry
and zeroing its partner around each alternating row/column cycle; and
``switching_witness`` drives the whole chain to produce, from an isomorphism
of two doubled edge-sign matrices, the signed permutation conjugating one
base matrix onto the other.
"""

from __future__ import annotations

import numpy as np

from .doubling import seidel_double
from .graphs import SeidelMatrix

__all__ = [
    "SignedMatrix",
    "permutation_blocks",
    "fold_permutation",
    "integrate",
    "is_integration",
    "switching_witness",
]


class SignedMatrix:
    """Square matrix with entries in {-1, -1/2, 0, 1/2, 1}, stored doubled.

    ``doubled`` holds the exact integer entries times two.  Equality and
    hashing are by value.
    """

    __slots__ = ("m", "_doubled")

    def __init__(self, doubled) -> None:
        a = np.array(doubled, dtype=np.int64)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("doubled entries must form a square matrix")
        if not np.isin(a, (-2, -1, 0, 1, 2)).all():
            raise ValueError("doubled entries must lie in -2..2")
        a.setflags(write=False)
        self.m = a.shape[0]
        self._doubled = a

    @property
    def doubled(self) -> np.ndarray:
        return self._doubled

    @classmethod
    def identity(cls, m: int) -> "SignedMatrix":
        return cls(2 * np.eye(m, dtype=np.int64))

    @classmethod
    def from_values(cls, values) -> "SignedMatrix":
        """Build from float-ish values; entries must be multiples of 1/2."""
        a = 2 * np.array(values, dtype=np.float64)
        r = np.rint(a)
        if not np.array_equal(a, r):
            raise ValueError("entries must be multiples of 1/2")
        return cls(r.astype(np.int64))

    def values(self) -> np.ndarray:
        """Entries as floats; for display only, never for arithmetic."""
        return self._doubled / 2.0

    def is_signed_permutation(self) -> bool:
        """One nonzero entry per row and column, each +-1."""
        a = self._doubled
        ok_entries = np.isin(a, (-2, 0, 2)).all()
        nonzero = a != 0
        return bool(
            ok_entries
            and (nonzero.sum(axis=0) == 1).all()
            and (nonzero.sum(axis=1) == 1).all()
        )

    def is_signed_half_permutation(self) -> bool:
        """Each row and column holds one +-1 entry or two +-1/2 entries."""
        a = self._doubled
        for axis in (0, 1):
            whole = (np.abs(a) == 2).sum(axis=axis)
            half = (np.abs(a) == 1).sum(axis=axis)
            if not np.all((whole == 1) & (half == 0) | (whole == 0) & (half == 2)):
                return False
        return True

    def __eq__(self, other) -> bool:
        return isinstance(other, SignedMatrix) and np.array_equal(
            self._doubled, other._doubled
        )

    def __hash__(self) -> int:
        return hash((self.m, self._doubled.tobytes()))

    def __repr__(self) -> str:
        rows = []
        for row in self._doubled:
            rows.append(
                "[" + ", ".join(f"{int(x) // 2}" if x % 2 == 0 else f"{int(x)}/2" for x in row) + "]"
            )
        return "SignedMatrix(" + "; ".join(rows) + ")"

    def to_json(self) -> dict:
        return {"m": self.m, "doubled_entries": self._doubled.tolist()}

    @classmethod
    def from_json(cls, obj: dict) -> "SignedMatrix":
        return cls(obj["doubled_entries"])


def _require_permutation_matrix(p) -> np.ndarray:
    a = np.asarray(p, dtype=np.int64)
    if (
        a.ndim != 2
        or a.shape[0] != a.shape[1]
        or not np.isin(a, (0, 1)).all()
        or (a.sum(axis=0) != 1).any()
        or (a.sum(axis=1) != 1).any()
    ):
        raise ValueError("expected a 0/1 permutation matrix")
    return a


def permutation_blocks(p) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Quarter a 2n x 2n permutation matrix into its four n x n blocks.

    The blocks satisfy P1 P3^T = P2 P4^T = P3 P1^T = P4 P2^T = 0 and
    P1 P1^T + P2 P2^T = P3 P3^T + P4 P4^T = I.
    """
    a = _require_permutation_matrix(p)
    if a.shape[0] % 2:
        raise ValueError("permutation matrix must have even dimension")
    n = a.shape[0] // 2
    return a[:n, :n], a[:n, n:], a[n:, :n], a[n:, n:]


def fold_permutation(p) -> SignedMatrix:
    """Fold a 2n x 2n permutation matrix to (P1 - P2 - P3 + P4) / 2.

    The result is always a signed half-permutation: row i combines the
    single 1-entries of rows i and n+i of P, which either land on distinct
    columns mod n (two +-1/2 entries) or coincide (one +-1 entry).
    """
    p1, p2, p3, p4 = permutation_blocks(p)
    z = SignedMatrix(p1 - p2 - p3 + p4)
    assert z.is_signed_half_permutation(), "folding broke the half-permutation shape"
    return z


def is_integration(s: SignedMatrix, t: SignedMatrix) -> bool:
    """Whether ``t`` integrates ``s``.

    Rows and columns of ``s`` holding a single +-1 must be copied verbatim;
    rows and columns holding two +-1/2 entries must have exactly one of them
    doubled and the other zeroed; and ``t`` must be a signed permutation.
    """
    if s.m != t.m:
        raise ValueError(f"dimension mismatch ({s.m} vs {t.m})")
    if not t.is_signed_permutation():
        return False
    sd, td = s.doubled, t.doubled
    lines = [(i, slice(None)) for i in range(s.m)]
    lines += [(slice(None), j) for j in range(s.m)]
    for idx in lines:
        srow, trow = sd[idx], td[idx]
        halves = np.flatnonzero(np.abs(srow) == 1)
        if len(halves) == 0:
            if not np.array_equal(srow, trow):
                return False
        else:
            a, b = halves
            keep_a = trow[a] == 2 * srow[a] and trow[b] == 0
            keep_b = trow[a] == 0 and trow[b] == 2 * srow[b]
            if not (keep_a or keep_b):
                return False
            others = np.ones(s.m, dtype=bool)
            others[[a, b]] = False
            if np.any(trow[others] != srow[others]):
                return False
    return True


def integrate(s: SignedMatrix) -> SignedMatrix:
    """A signed permutation integrating the signed half-permutation ``s``.

    The half entries of a signed half-permutation tile into alternating
    row/column cycles; walking each cycle from its first entry in reading
    order, doubling and zeroing alternately (the start is doubled), settles
    every row and column to a single +-1.  Deterministic; the output is
    checked against :func:`is_integration` before being returned.
    """
    if not s.is_signed_half_permutation():
        raise ValueError("input is not a signed half-permutation matrix")
    d = s.doubled.copy()
    m = s.m
    half_cols = {i: [j for j in range(m) if abs(d[i, j]) == 1] for i in range(m)}
    half_rows = {j: [i for i in range(m) if abs(d[i, j]) == 1] for j in range(m)}
    visited: set[tuple[int, int]] = set()
    out = d.copy()
    for i0 in range(m):
        for j0 in half_cols[i0]:
            if (i0, j0) in visited:
                continue
            i, j = i0, j0
            out[i, j] = 2 * d[i, j]
            visited.add((i, j))
            while True:
                (j2,) = (c for c in half_cols[i] if c != j)
                out[i, j2] = 0
                visited.add((i, j2))
                (i2,) = (r for r in half_rows[j2] if r != i)
                if (i2, j2) == (i0, j0):
                    break
                out[i2, j2] = 2 * d[i2, j2]
                visited.add((i2, j2))
                i, j = i2, j2
    t = SignedMatrix(out)
    assert is_integration(s, t), "cycle walk produced a non-integration"
    return t


def switching_witness(a: SeidelMatrix, b: SeidelMatrix, p) -> SignedMatrix:
    """The signed permutation Q with A = Q B Q^T, from an isomorphism of doubles.

    ``p`` must be a 2n x 2n permutation matrix carrying the double of ``b``
    onto the double of ``a`` (checked; a failure is a ValueError).  The
    computation folds ``p``, verifies the fold transports B - I onto A - I,
    integrates, and verifies each exact identity along the way; any internal
    failure raises AssertionError since valid inputs cannot produce one.
    """
    if a.n != b.n:
        raise ValueError(f"dimension mismatch ({a.n} vs {b.n})")
    n = a.n
    pm = _require_permutation_matrix(p)
    if pm.shape[0] != 2 * n:
        raise ValueError(f"permutation must be {2 * n} x {2 * n}")
    ta, tb = seidel_double(a).entries, seidel_double(b).entries
    if not np.array_equal(ta, pm @ tb @ pm.T):
        raise ValueError("permutation does not map the doubled matrices onto each other")

    eye = np.eye(n, dtype=np.int64)
    am, bm = a.entries, b.entries
    z = fold_permutation(pm)
    zd = z.doubled
    b_shift = bm - eye

    if not np.array_equal(zd @ b_shift @ zd.T, 4 * (am - eye)):
        raise AssertionError("fold failed to transport the shifted matrices")
    m2 = zd @ b_shift  # doubled entries of Z (B - I)
    if not np.isin(m2, (-2, 2)).all():
        raise AssertionError("Z (B - I) has entries other than +-1")

    q = integrate(z)
    qd = q.doubled
    if not np.array_equal(m2 @ qd.T, 4 * (am - eye)):
        raise AssertionError("integration failed to transport the shifted matrices")
    if not np.array_equal(m2, qd @ b_shift):
        raise AssertionError("Z (B - I) and Q (B - I) disagree")
    if not np.array_equal(qd @ bm @ qd.T, 4 * am):
        raise AssertionError("witness does not conjugate B onto A")
    return q
