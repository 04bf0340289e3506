"""Sieved arithmetic sequences: divisor counts d_n, two-square
representation counts r_n, and the Moebius function mu_n, with their
Dirichlet-series consistency targets."""

from __future__ import annotations

import struct
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import CapacityError, FormatError
from .special_functions import dirichlet_L_chi4, zeta

MAX_TABLE_SIZE = 50_000_000
_CACHE_MAGIC = b"SUMMATAB"
_CACHE_VERSION = 1


@dataclass(frozen=True)
class ArithmeticTables:
    """Immutable arrays d, r, mu on indices 0..limit (d, mu defined from 1)."""

    limit: int
    d: np.ndarray
    r: np.ndarray
    mu: np.ndarray

    def __post_init__(self):
        for name in ("d", "r", "mu"):
            getattr(self, name).setflags(write=False)


def build_tables(limit: int = 1_000_000) -> ArithmeticTables:
    """Sieve all three sequences up to ``limit`` (inclusive).

    d by incrementing multiples (O(N log N)), mu by a linear sieve,
    r by lattice enumeration of a^2 + b^2 <= limit.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    if limit > MAX_TABLE_SIZE:
        raise CapacityError(f"table limit {limit} exceeds budget {MAX_TABLE_SIZE}")
    n = limit + 1

    d = np.zeros(n, dtype=np.int32)
    for k in range(1, limit + 1):
        d[k::k] += 1

    mu = np.ones(n, dtype=np.int32)
    primes = np.ones(n, dtype=bool)
    primes[:2] = False
    for p in range(2, int(limit ** 0.5) + 1):
        if primes[p]:
            primes[p * p:: p] = False
            mu[p::p] *= -1
            mu[p * p:: p * p] = 0
    for p in range(int(limit ** 0.5) + 1, limit + 1):
        if primes[p]:
            mu[p::p] *= -1

    r = np.zeros(n, dtype=np.int32)
    amax = int(limit ** 0.5)
    for a in range(0, amax + 1):
        top = limit - a * a
        bs = np.arange(0, int(top ** 0.5) + 1)
        idx = a * a + bs * bs
        w = np.full(len(bs), 4, dtype=np.int32)  # (+-a, +-b)
        if a == 0:
            w //= 2
        w[bs == 0] //= 2
        np.add.at(r, idx, w)

    return ArithmeticTables(limit, d, r, mu)


def dirichlet_consistency(tables: ArithmeticTables, s, kind: str = "d"):
    """Truncated Dirichlet sum against its kernel product.

    kind 'd':  sum d_n n^-s        vs zeta(s)^2
    kind 'r':  (1/4) sum r_n n^-s  vs zeta(s) L(s, chi_4)
    kind 'mu': sum mu_n n^-s       vs 1 / zeta(s)
    Returns (partial, target).  Needs Re s >= 2 for a desk-scale check.
    """
    s = complex(s)
    if s.real < 2:
        raise ValueError("use Re s >= 2 so the truncation tail is negligible")
    n = np.arange(1, tables.limit + 1, dtype=float)
    pw = np.exp(-s * np.log(n))
    if kind == "d":
        partial = np.sum(tables.d[1:] * pw)
        target = complex(zeta(s)) ** 2
    elif kind == "r":
        partial = 0.25 * np.sum(tables.r[1:] * pw)
        target = complex(zeta(s)) * complex(dirichlet_L_chi4(s))
    elif kind == "mu":
        partial = np.sum(tables.mu[1:] * pw)
        target = 1.0 / complex(zeta(s))
    else:
        raise KeyError(f"unknown series kind {kind!r}")
    return complex(partial), target


def save_tables(tables: ArithmeticTables, path) -> None:
    """Binary cache: magic, version, limit, then d, r, mu as little-endian i32."""
    with open(path, "wb") as fh:
        fh.write(_CACHE_MAGIC)
        fh.write(struct.pack("<II", _CACHE_VERSION, tables.limit))
        for arr in (tables.d, tables.r, tables.mu):
            fh.write(arr.astype("<i4").tobytes())


def load_tables(path) -> ArithmeticTables:
    path = Path(path)
    raw = path.read_bytes()
    if raw[:8] != _CACHE_MAGIC:
        raise FormatError(f"{path}: bad magic")
    version, limit = struct.unpack("<II", raw[8:16])
    if version != _CACHE_VERSION:
        raise FormatError(f"{path}: unsupported cache version {version}")
    n = limit + 1
    body = raw[16:]
    if len(body) != 3 * 4 * n:
        raise FormatError(f"{path}: truncated table body")
    arrs = [np.frombuffer(body[i * 4 * n:(i + 1) * 4 * n], dtype="<i4").astype(np.int32)
            for i in range(3)]
    return ArithmeticTables(limit, *arrs)


_DEFAULT_TABLES: ArithmeticTables | None = None


def default_tables(limit: int = 1_000_000) -> ArithmeticTables:
    """Process-wide shared tables (built once, read-only afterwards)."""
    global _DEFAULT_TABLES
    if _DEFAULT_TABLES is None or _DEFAULT_TABLES.limit < limit:
        _DEFAULT_TABLES = build_tables(limit)
    return _DEFAULT_TABLES
