"""Generator acceptance: dual-route digit agreement, deterministic
regeneration, and checksum bookkeeping."""

import hashlib
import json
from pathlib import Path

import mpmath as mp
import pytest

from oracle_fixtures import dual
from oracle_fixtures.generate import (FILES, DisagreementError,
                                      _require_agreement, gen_bessel_grid,
                                      gen_gamma_grid, gen_lchi4_grid,
                                      gen_oracle_sums, gen_zeta_grid,
                                      generate_all)

COMMITTED = Path(__file__).resolve().parents[2] / "fixtures"


@pytest.fixture(autouse=True)
def _dps():
    mp.mp.dps = 50
    yield


def test_dual_routes_agree_spot_checks():
    for s in (mp.mpc(-3.4, 17.5), mp.mpc(2.3, 0.7), mp.mpc(0.5, 49.0)):
        assert dual.agreement_digits(mp.gamma(s), dual.spouge_gamma(s)) >= 30
    for s in (mp.mpc(-9.6, 49.9), mp.mpc(0.5, 21.4), mp.mpc(3.0, 0.0)):
        assert dual.agreement_digits(mp.zeta(s), dual.em_zeta(s)) >= 30
    beta = lambda s: (mp.zeta(s, mp.mpf(1) / 4) - mp.zeta(s, mp.mpf(3) / 4)) / mp.mpf(4) ** s
    for s in (mp.mpc(-4.9, 9.2), mp.mpc(1.4, 37.8)):
        assert dual.agreement_digits(beta(s), dual.accel_beta_chi4(s)) >= 30
    for x in (mp.mpf("0.5"), mp.mpf(20)):
        assert dual.agreement_digits(mp.besselj(0, x), dual.j0_integral(x)) >= 30
        assert dual.agreement_digits(mp.bessely(0, x), dual.y0_series(x)) >= 30
        assert dual.agreement_digits(mp.besselk(0, x), dual.k0_integral(x)) >= 30
    assert dual.agreement_digits(mp.euler, dual.euler_gamma_em()) >= 30


def test_disagreement_detection():
    with pytest.raises(DisagreementError):
        _require_agreement("synthetic", mp.mpf(1), mp.mpf(1) + mp.mpf(10) ** -20)


def test_zeta_prime_dual_route():
    rho = mp.zetazero(3)
    assert dual.agreement_digits(mp.zeta(rho, derivative=1),
                                 dual.zeta_prime_central(rho)) >= 30


def test_grid_builders_reproduce_committed_files():
    builders = {"gamma_grid.tsv": gen_gamma_grid, "zeta_grid.tsv": gen_zeta_grid,
                "lchi4_grid.tsv": gen_lchi4_grid, "bessel_grid.tsv": gen_bessel_grid,
                "oracle_sums.tsv": gen_oracle_sums}
    for name, builder in builders.items():
        committed = (COMMITTED / name).read_text()
        assert builder() == committed, f"{name} regeneration diverged"


@pytest.mark.slow
def test_full_regeneration_bit_exact(tmp_path):
    manifest = generate_all(tmp_path, progress=False)
    committed_manifest = json.loads((COMMITTED / "manifest.json").read_text())
    assert manifest == committed_manifest
    for name in FILES:
        assert (tmp_path / name).read_bytes() == (COMMITTED / name).read_bytes()


def test_manifest_matches_committed_bytes():
    manifest = json.loads((COMMITTED / "manifest.json").read_text())
    for name, digest in manifest["files"].items():
        actual = hashlib.sha256((COMMITTED / name).read_bytes()).hexdigest()
        assert actual == digest, f"{name} drifted from its manifest checksum"
    assert manifest["precision_digits"] >= 50
