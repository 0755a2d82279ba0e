"""Smoke test for the Python bindings. Run with pytest after `pip install --no-build-isolation -e crates/bridgewalk-py`."""

import bridgewalk as bw


def test_word_roundtrip():
    w = bw.Word(3, "1 -2 3")
    assert w.letters() == [1, -2, 3]
    assert len(w) == 3
    assert w.inverse().letters() == [-3, 2, -1]
    assert sorted(w.permutation()) == [1, 2, 3, 4, 5, 6]


def test_curves():
    d = bw.Curve.base(3, 1, 2)
    assert d.is_essential()
    assert d.is_disk() and d.is_disk_geometric()
    moved = d.apply(bw.Word(3, "2"))
    assert bw.intersection_number(d, moved) == 2
    assert not bw.fills(d, moved)
    assert d.apply(bw.Word(3, "1")) == d


def test_plat():
    assert bw.plat_export(bw.Word(2, "2")) == "PD[X(1,1,2,2)]"
    w = bw.Word(3, "2 2 4")
    assert bw.plat_components(w) == bw.orbit_components(w)


def test_disks_and_certificates():
    disks = bw.enumerate_disks(3, 4)
    assert len(disks) == 9
    status, witness, _ = bw.distance_certificate(bw.Word(3, "1"), 1)
    assert status == "COMMON_DISK" and witness is not None


def test_experiment():
    walk = bw.sample_walk(3, 5, seed=1, sample=2)
    assert len(walk) == 5
    rows, summary = bw.run_experiment("components", 3, [0, 4], 20, 7)
    assert rows.startswith("# NO_WITNESS")
    assert "k,samples,mean,variance,exact_mean" in summary
