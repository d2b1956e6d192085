import pytest

import thuelab


def test_cycle_pi():
    assert thuelab.solve(thuelab.cycle_graph(5), "pi")["value"] == 4
    assert thuelab.solve(thuelab.cycle_graph(6), "pi")["value"] == 3


def test_square_detection():
    assert thuelab.find_square([0, 1, 0, 1]) == (0, 2)
    assert thuelab.find_square(thuelab.thue_word(500)) is None


def test_detectors_on_c4():
    g = thuelab.cycle_graph(4)
    assert thuelab.find_repetitive_path(g, [0, 1, 0, 1]) is not None
    assert thuelab.find_repetitive_path(g, [0, 1, 2, 3]) is None


def test_count_paths():
    assert thuelab.count_colourings(thuelab.path_graph(3), 3) == 12


def test_entropy_is_seeded():
    g = thuelab.path_graph(60)
    a = thuelab.entropy_colour(g, 4, seed=7)
    b = thuelab.entropy_colour(g, 4, seed=7)
    assert a == b
    assert a["success"]


def test_subdivision():
    assert thuelab.verify_subdivision_complete1(6)


def test_input_errors():
    with pytest.raises(ValueError):
        thuelab.Graph(2, [(0, 0)])
    with pytest.raises(ValueError):
        thuelab.solve(thuelab.path_graph(3), "nope")
