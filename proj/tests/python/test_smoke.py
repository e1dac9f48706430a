import json
from pathlib import Path

import pytest

import goeritz

FIXTURES = Path(__file__).resolve().parents[2] / "fixtures"


def load_pd(name):
    return json.loads((FIXTURES / f"{name}.pd.json").read_text())["pd"]


def test_mu_worked_example():
    assert goeritz.mu([[2, -1], [-1, 2]]) == "-A^-5 - A^3 + A^7"
    assert goeritz.mu([]) == "1"


def test_tau_matches_mu_on_realization():
    g = [[3, -1, 0], [-1, 2, 1], [0, 1, -2]]
    graph = goeritz.realize(g)
    assert goeritz.tau(graph["vertices"], graph["edges"]) == goeritz.mu(g)
    assert goeritz.goeritz_from_graph(graph["vertices"], graph["edges"]) == g


def test_trefoil_diagram():
    pd = load_pd("trefoil")
    assert goeritz.genus(pd) == 0
    assert goeritz.bracket(pd) == "-A^-5 - A^3 + A^7"
    assert goeritz.jones(pd) == "-t^-4 + t^-3 + t^-1"
    assert goeritz.goeritz_from_pd(pd, shading=1) == [[2, -1], [-1, 2]]
    assert goeritz.nu(pd) == (goeritz.jones(pd), goeritz.jones(pd))
    dets = goeritz.determinant_set(pd)
    assert dets["det_g"] == 3 and dets["det_g_prime"] == 3 and dets["pairing"]


def test_medial_round_trip():
    pd = goeritz.medial(2, [(0, 1, 1)] * 3, [[0, 2, 4], [5, 3, 1]])
    assert goeritz.jones(pd) == goeritz.jones(load_pd("trefoil"))


def test_errors_carry_kind():
    with pytest.raises(goeritz.GoeritzError) as info:
        goeritz.jones(load_pd("torus-medial"))
    assert info.value.args[0] == "PositiveGenus"
    with pytest.raises(goeritz.GoeritzError) as info:
        goeritz.jones([[1, 2, 3, 4]])
    assert info.value.args[0] == "BadArcLabels"
