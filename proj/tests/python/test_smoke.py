"""Smoke tests for the Python bindings.

Each test pins a small number of exact values that the C++ test suite
establishes independently; here we only confirm the bindings round-trip
them faithfully.
"""

import cmath
import math

import pytest

import nbspectra as nbs


def test_generate_and_degrees():
    g6 = nbs.generate("complete:4")
    assert nbs.degrees(g6) == [3, 3, 3, 3]
    assert nbs.degrees(nbs.generate("petal:2,3")) == [4, 2, 2, 2, 2]


def test_from_edges_matches_generator():
    tri = nbs.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert nbs.are_isomorphic(tri, nbs.generate("complete:3"))


def test_nb_info_counts():
    info = nbs.nb_info("complete:4")
    assert info["vertices"] == 12
    assert info["arcs"] == 24  # sum deg^2 - 2M = 36 - 12
    # Reversal is an involution without fixed points.
    rev = info["reversals"]
    assert all(rev[rev[i]] == i and rev[i] != i for i in range(12))
    # Arcs never backtrack: successor of i is not rev(i).
    for i, succs in enumerate(info["successors"]):
        assert rev[i] not in succs


def test_k4_nb_laplacian_spectrum():
    eigs = nbs.nb_eigenvalues("complete:4", "nb-laplacian")
    assert len(eigs) == 12
    expected = (
        [0j]
        + [0.5 + 0j] * 3
        + [complex(1.25, s * math.sqrt(7) / 4) for s in (-1, 1) for _ in range(3)]
        + [1.5 + 0j] * 2
    )
    for z in expected:
        assert min(abs(z - w) for w in eigs) < 1e-9


def test_char_poly_constant_term_zero():
    coeffs = nbs.char_poly("complete:4", "nb-laplacian")
    assert coeffs[0] == "0"  # 0 is always an eigenvalue
    assert coeffs[-1] == "1"  # monic


def test_cospectral_mates_share_key():
    # Smallest normalized-Laplacian cospectral pair among min-degree-2 graphs.
    a, b = "E?~o", "EFz_"
    assert not nbs.are_isomorphic(a, b)
    assert nbs.char_poly_key(a, "normalized-laplacian") == nbs.char_poly_key(
        b, "normalized-laplacian"
    )
    assert nbs.char_poly_key(a, "nb-laplacian") != nbs.char_poly_key(
        b, "nb-laplacian"
    )


def test_partite_cycle_divisors():
    assert nbs.partite("cycle:6")["feasible_k"] == [1, 2, 3, 6]
    assert nbs.partite("cycle:5")["feasible_k"] == [1, 5]
    labels = nbs.partite("cycle:6")["witness_labels"]
    assert len(labels) == 12 and max(labels) == 5


def test_gap_petal_sharpness():
    r = nbs.gap("petal:2,3")
    assert r["epsilon"] == pytest.approx(3 ** (-1 / 3), abs=1e-9)
    assert r["upper_bound"] == pytest.approx(r["epsilon"], abs=1e-9)
    assert r["lower_holds"] and r["upper_chain_holds"]


def test_petal_closed_form_matches_numeric():
    closed = nbs.petal_eigenvalues(2, 3)
    numeric = nbs.nb_eigenvalues("petal:2,3", "nb-laplacian")
    assert len(closed) == len(numeric) == 12
    for z in closed:
        assert min(abs(z - w) for w in numeric) < 1e-8


def test_independence_k4():
    r = nbs.independence("complete:4")
    assert r["alpha_out"] == 4
    assert r["alpha_s_out"] == 4


def test_nb_fraction():
    assert nbs.nb_fraction(2) == "1/4"
    assert nbs.nb_fraction(3) == "0"
    assert nbs.nb_fraction(4) == "3/2048"


def test_verify_k4_all_pass():
    rep = nbs.verify("complete:4")
    assert rep["ok"]
    assert rep["failed"] == 0
    names = {c["name"] for c in rep["checks"]}
    assert "transpose-identity" in names
    assert "gap-bounds" in names


def test_scan_csv_small():
    csv = nbs.scan_csv(5)
    lines = csv.strip().splitlines()
    assert lines[0] == "n,graphs,A,L,NB_A,NB_L"
    assert "5,11,0,0,0,0" in lines


def test_errors_are_python_exceptions():
    with pytest.raises(ValueError):
        nbs.degrees("petal:0,3")  # p >= 1 required
    with pytest.raises(ValueError):
        nbs.nb_eigenvalues("complete:4", "no-such-operator")
