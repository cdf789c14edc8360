import numpy as np
from pytest import raises

from pymatchstick.angle_fan import CLOCKWISE, COUNTERCLOCKWISE, AngleFanError, angle_fan
from pymatchstick.catalog import FIG13_PRINTED_ANGLES, designated_fan, refined_entry

from .common import eq_, ok_, almost_eq_
from .data import hexagon_wheel, unit_square


def test_wheel_center_counterclockwise():
    fan = angle_fan(hexagon_wheel, 0, (0, 1), COUNTERCLOCKWISE)
    eq_(fan.neighbors, [1, 2, 3, 4, 5, 6])
    ok_(np.allclose(fan.angles, 60.0))
    almost_eq_(fan.total, 360.0, 1e-9)


def test_wheel_center_clockwise():
    fan = angle_fan(hexagon_wheel, 0, (1, 0), CLOCKWISE)
    eq_(fan.neighbors, [1, 6, 5, 4, 3, 2])


def test_rim_vertex_angles():
    # rim vertex of the wheel: two triangles and the outside
    fan = angle_fan(hexagon_wheel, 1, (0, 1), COUNTERCLOCKWISE)
    eq_(len(fan), 3)
    ok_(np.allclose(sorted(fan.angles), [60.0, 60.0, 240.0]))


def test_square_corner():
    fan = angle_fan(unit_square, 0, (0, 1), COUNTERCLOCKWISE)
    ok_(np.allclose(fan.angles, [90.0, 270.0]))
    fan = angle_fan(unit_square, 0, (0, 1), CLOCKWISE)
    ok_(np.allclose(fan.angles, [270.0, 90.0]))


def test_vertex_not_on_edge():
    with raises(AngleFanError):
        angle_fan(hexagon_wheel, 2, (0, 1))


def test_missing_edge():
    with raises(AngleFanError):
        angle_fan(hexagon_wheel, 1, (1, 3))


def test_unknown_orientation():
    with raises(AngleFanError):
        angle_fan(hexagon_wheel, 0, (0, 1), "sideways")


def test_printed_angles_sum_to_full_turn():
    eq_(len(FIG13_PRINTED_ANGLES), 11)
    almost_eq_(sum(FIG13_PRINTED_ANGLES), 360.0, 2e-4)


def test_fig13_angles_match_printed_list():
    embedding = refined_entry("fig13").embedding
    vertex, start_edge, orientation = designated_fan("fig13", embedding)
    eq_(embedding.degrees[vertex], 11)
    ok_(start_edge in embedding.edges_with_tag("red"))
    eq_(orientation, CLOCKWISE)
    fan = angle_fan(embedding, vertex, start_edge, orientation)
    eq_(len(fan), 11)
    for got, printed in zip(fan.angles, FIG13_PRINTED_ANGLES):
        almost_eq_(got, printed, 1e-4)
    almost_eq_(fan.total, 360.0, 1e-9)


def test_fig13_fan_lines():
    embedding = refined_entry("fig13").embedding
    fan = angle_fan(embedding, *designated_fan("fig13", embedding))
    lines = fan.to_lines()
    ok_(lines[0].startswith("angle_fan.vertex: "))
    ok_(lines[2].startswith("angle_fan.angles: 32.3625"))
