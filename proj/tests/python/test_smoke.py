import pytest

import twr


def test_rat_roundtrip():
    r = twr.Rat.parse("22/7")
    assert str(r) == "22/7"
    assert r + twr.Rat.parse("-1/7") == twr.Rat(3)
    assert abs(twr.Rat(1, 3).to_double() - 1 / 3) < 1e-15


def test_rat_infinity():
    inf = twr.Rat.infinity()
    assert inf.is_infinite()
    assert twr.Rat(10**6) < inf


def two_node_instance():
    inst = twr.build_metric(2, twr.MetricKind.tree, [twr.Edge(0, 1, twr.Rat(1))])
    requests = [
        twr.Request(0, 0, twr.Rat(0), twr.Rat(1)),
        twr.Request(1, 1, twr.Rat(2), twr.Rat(1), 2),
    ]
    return inst, requests


def test_metric_table():
    inst, _ = two_node_instance()
    assert inst.nodes == 2
    assert inst.d(0, 1) == twr.Rat(1)
    assert inst.d(1, 1) == twr.Rat(0)


def test_solve_matches_oracle():
    inst, requests = two_node_instance()
    trimmed = twr.trim_unit(requests)
    run = twr.solve_repairman(inst, trimmed, twr.SolveMode.tree)
    assert twr.run_profit(requests, run) == 3
    assert twr.brute_repairman(inst, requests).profit == 3
    report = twr.verify_run(inst, requests, run)
    assert report.feasible


def test_deliveryman_speed():
    inst, requests = two_node_instance()
    res = twr.delivery_graph(inst, twr.trim_unit(requests))
    assert res.speed == twr.fixed_order_min_speed(inst, res.visit_order)
    oracle = twr.brute_deliveryman(inst, requests)
    assert oracle.speed <= res.speed


def test_window12_quality():
    inst = twr.build_metric(2, twr.MetricKind.tree, [twr.Edge(0, 1, twr.Rat(1))])
    requests = [twr.Request(0, 1, twr.Rat(1, 2), twr.Rat(3, 2))]
    run = twr.window12(inst, requests, twr.SolveMode.tree)
    assert twr.run_profit(requests, run) == 1


def test_serialization_roundtrip():
    file = twr.generate_random(42, twr.RandomParams())
    text = twr.format_instance(file.inst, file.requests)
    back = twr.parse_instance(text)
    assert twr.format_instance(back.inst, back.requests) == text


def test_parse_error_line():
    with pytest.raises(twr.ParseError):
        twr.parse_instance("twr 2\n")


def test_partition_gadget():
    file = twr.generate_partition([1, 2, 3])
    full = twr.total_profit(file.requests)
    assert twr.brute_repairman(file.inst, file.requests).profit == full
    harder = twr.generate_partition([1, 1, 4])
    assert twr.brute_repairman(harder.inst, harder.requests).profit < twr.total_profit(
        harder.requests
    )
