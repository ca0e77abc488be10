import json
import math

import pytest

import mkdvblab as lab


def test_grid_and_profile():
    g = lab.make_grid(64 * math.pi, 256)
    assert g.n == 256
    assert g.dx() == pytest.approx(64 * math.pi / 256)
    u = lab.make_profile(g, profile="gaussian", amplitude=0.5, width=2.0)
    assert u.shape == (256,)
    assert max(abs(u)) == pytest.approx(0.5, rel=1e-6)
    assert lab.sobolev_norm(g, u, 0.0) > 0.0


def test_grid_validation():
    with pytest.raises(ValueError):
        lab.make_grid(-1.0, 64)
    with pytest.raises(ValueError):
        lab.make_grid(10.0, 7)


def test_evolve_conserves_mass():
    g = lab.make_grid(64 * math.pi, 256)
    phi = lab.make_profile(g)
    times, fields = lab.evolve(g, phi, family="mkdv", T=0.2, dt=0.01, record_every=5)
    assert times[0] == 0.0
    assert times[-1] == pytest.approx(0.2)
    assert fields.shape == (len(times), 256)
    m0 = lab.sobolev_norm(g, fields[0], 0.0)
    mT = lab.sobolev_norm(g, fields[-1], 0.0)
    assert mT == pytest.approx(m0, rel=1e-8)
    h0 = lab.h1_mkdv(g, fields[0])
    hT = lab.h1_mkdv(g, fields[-1])
    assert hT == pytest.approx(h0, rel=1e-5)


def test_miura_and_resonance():
    g = lab.make_grid(2 * math.pi, 128)
    phi = lab.make_profile(g, profile="cosine", amplitude=1.0, mode=1)
    m = lab.miura_transform(g, phi)
    assert m.shape == (128,)
    assert lab.resonance(1.0, 1.0, 1.0) == -24.0
    assert lab.critical_regularity(1.0) == pytest.approx(-1.0)
    assert lab.critical_regularity(0.25) == -0.75
    with pytest.raises(ValueError):
        lab.critical_regularity(2.0)


def test_scaling_identity():
    g = lab.make_grid(64 * math.pi, 256)
    phi = lab.make_profile(g)
    assert lab.scaling_check(g, phi, 1.0, 1e-2, 1.0, 0.25, dt=0.01) <= 1e-12


def test_run_experiment(tmp_path):
    config = {
        "kind": "conserve",
        "grid": {"L": 64 * math.pi, "N": 128},
        "T": 0.1,
        "dt": 0.01,
    }
    status, written = lab.run_experiment(json.dumps(config), str(tmp_path))
    assert status == "full"
    names = {p.split("/")[-1] for p in written}
    assert "manifest.json" in names
    assert "long.csv" in names
    manifest = json.loads((tmp_path / "manifest.json").read_text())
    assert manifest["status"] == "full"
    assert manifest["tables"]
