"""Fixture-file access: oracle-computed reference values committed to the
repository and regenerated by the standalone high-precision generator.

Formats (all text, tab-separated, '#' comment/header lines):
  value grids:  name  re(s)  im(s)  re(val)  im(val)
  zeros:        gamma  re(zeta')  im(zeta')   (header carries count and
                generator version)
  constants:    name  value
The SUMMA_FIXTURES environment variable overrides the default directory.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

from .errors import FormatError

_ENV_VAR = "SUMMA_FIXTURES"


def fixture_dir() -> Path:
    env = os.environ.get(_ENV_VAR)
    if env:
        return Path(env)
    return Path(__file__).resolve().parents[2] / "fixtures"


def _data_lines(path: Path):
    if not path.exists():
        raise FormatError(f"fixture file missing: {path}")
    header = []
    for ln, raw in enumerate(path.read_text().splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            header.append(line)
            continue
        yield ln, line.split("\t"), header


def load_value_grid(name: str, directory: Path | None = None):
    """Rows (label, s, value) from a complex-grid fixture file."""
    path = (directory or fixture_dir()) / name
    rows = []
    for ln, parts, _ in _data_lines(path):
        if len(parts) != 5:
            raise FormatError(f"{path}:{ln}: expected 5 tab-separated fields")
        label = parts[0]
        try:
            s = complex(float(parts[1]), float(parts[2]))
            val = complex(float(parts[3]), float(parts[4]))
        except ValueError as exc:
            raise FormatError(f"{path}:{ln}: {exc}") from None
        rows.append((label, s, val))
    if not rows:
        raise FormatError(f"{path}: no data rows")
    return rows


def load_constants(name: str = "constants.tsv", directory: Path | None = None) -> dict:
    path = (directory or fixture_dir()) / name
    out = {}
    for ln, parts, _ in _data_lines(path):
        if len(parts) != 2:
            raise FormatError(f"{path}:{ln}: expected 2 tab-separated fields")
        out[parts[0]] = float(parts[1])
    return out


def load_zero_rows(name: str = "zeta_zeros.tsv", directory: Path | None = None):
    """Rows (gamma, zeta_prime) plus the declared count from the header."""
    path = (directory or fixture_dir()) / name
    rows = []
    declared = None
    for ln, parts, header in _data_lines(path):
        if declared is None:
            for h in header:
                for tok in h.lstrip("# ").split():
                    if tok.startswith("count="):
                        declared = int(tok.split("=", 1)[1])
        if len(parts) != 3:
            raise FormatError(f"{path}:{ln}: expected 3 tab-separated fields")
        try:
            rows.append((float(parts[0]), complex(float(parts[1]), float(parts[2]))))
        except ValueError as exc:
            raise FormatError(f"{path}:{ln}: {exc}") from None
    if declared is not None and declared != len(rows):
        raise FormatError(f"{path}: header count={declared} but {len(rows)} rows")
    if not rows:
        raise FormatError(f"{path}: no data rows")
    return rows


def sha256_of(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def check_manifest(directory: Path | None = None) -> dict:
    """Verify every file listed in manifest.json against its checksum.

    Returns the manifest dict; raises FormatError on any mismatch."""
    directory = directory or fixture_dir()
    mpath = directory / "manifest.json"
    if not mpath.exists():
        raise FormatError(f"manifest missing: {mpath}")
    manifest = json.loads(mpath.read_text())
    for fname, digest in manifest.get("files", {}).items():
        fpath = directory / fname
        if not fpath.exists():
            raise FormatError(f"manifest lists missing file {fname}")
        actual = sha256_of(fpath)
        if actual != digest:
            raise FormatError(
                f"{fname}: checksum {actual[:12]}... != manifest {digest[:12]}...")
    return manifest
