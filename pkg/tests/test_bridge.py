from collections import Counter
from fractions import Fraction

import pytest

from barrierpath.bridge import (
    BarrierCertificate,
    DegeneratePolygon,
    InfeasiblePower,
    RouteCertificate,
    ShrinkVector,
    UnknownDiskId,
    barrier_candidates,
    build_gprime,
    check_barrier,
    check_mbs_reduction,
    check_route,
    crossing_parity,
    find_barrier,
    ideal_gprime,
    lift_to_shrinks,
    route_of,
    simple_routes,
    truncated_greedy,
    verify_mbs_reduction,
    weight_drifts,
)
from barrierpath.geom import Disk, Point
from barrierpath.graph import Path, PowerAssignment
from barrierpath.greedy import greedy_assign
from barrierpath.mbs import MbsInstance, build
from barrierpath.reduction import build as build_gadget
from barrierpath.solve import solve_bruteforce
from barrierpath.subset_sum import SubsetSumInstance

ONE = SubsetSumInstance((1,), 1)


def triangle_instance(x, y):
    disks = [
        Disk(Point(0, 0), 2, "a"),
        Disk(Point(3, 0), 2, "b"),
        Disk(Point(Fraction(3, 2), Fraction(26, 10)), 2, "c"),
    ]
    return MbsInstance(tuple(disks), Point(*x), Point(*y), (), 0, 1)


def test_triangle_barrier_separates():
    inst = triangle_instance((Fraction(3, 2), 1), (10, 10))
    assert check_barrier(inst, {}, BarrierCertificate(("a", "b", "c")))


def test_triangle_barrier_same_side():
    inst = triangle_instance((10, 10), (11, 10))
    assert not check_barrier(inst, {}, BarrierCertificate(("a", "b", "c")))


def test_barrier_with_open_link_fails():
    inst = triangle_instance((Fraction(3, 2), 1), (10, 10))
    assert not check_barrier(inst, {"a": Fraction(1, 2), "b": Fraction(1, 2)}, BarrierCertificate(("a", "b", "c")))


def test_barrier_unknown_disk():
    inst = triangle_instance((Fraction(3, 2), 1), (10, 10))
    with pytest.raises(UnknownDiskId):
        check_barrier(inst, {}, BarrierCertificate(("a", "b", "zz")))


def test_parity_on_edge_is_degenerate():
    square = [(0, 0), (2, 0), (2, 2), (0, 2)]
    assert crossing_parity(square, (1, 1)) == 1
    assert crossing_parity(square, (3, 1)) == 0
    with pytest.raises(DegeneratePolygon):
        crossing_parity(square, (2, 1))


def test_gprime_weights_near_targets():
    inst = build(SubsetSumInstance((2, 3), 4))
    g = build_gprime(inst)
    assert g.n == 3 * 2 + 2 and len(g.edges) == 4 * 2 + 2
    assert all(abs(d) <= 2 for d in weight_drifts(inst, g).values())


def test_ideal_weight_multiset():
    a, b = (2, 3), 4
    inst = build(SubsetSumInstance(a, b))
    L = inst.L
    ideal = Counter(e.w / inst.scale for e in ideal_gprime(inst).edges)
    expected = Counter()
    for ai in a:
        expected.update([L + 2 * ai, L + 2 * ai, L + ai, L + 3 * ai])
    expected.update([2 * b, 2 * b])
    assert ideal == expected


def test_gprime_matches_gadget_graph():
    inst_ss = SubsetSumInstance((1, 3, 2), 3)
    mbs = build(inst_ss)
    g = ideal_gprime(mbs)
    red = build_gadget(inst_ss).graph
    rename = {"x": "s", "y": "t"}
    for i in range(1, 4):
        rename.update({"alpha%d" % i: "up_%d" % i, "beta%d" % i: "lo_%d" % i, "y%d" % i: "u%d" % i})
    mine = Counter((frozenset((rename[e.u], rename[e.v])), e.w / mbs.scale) for e in g.edges)
    theirs = Counter((frozenset((e.u, e.v)), e.w) for e in red.edges)
    # the gadget's single closing edge is doubled in G'
    last = frozenset(("u3", "t"))
    theirs[(last, 2 * inst_ss.b)] += 1
    assert mine == theirs


def test_lift_zero_powers():
    inst = build(ONE)
    g = build_gprime(inst)
    with pytest.raises(InfeasiblePower):
        lift_to_shrinks(inst, PowerAssignment(), g)
    assert ShrinkVector({}).cost == 0


def test_lift_lower_route_on_ideal_weights():
    inst = build(ONE)
    g = ideal_gprime(inst)
    p = greedy_assign(Path.along(g, ["x", "beta1", "y1", "y"]), g)
    s = lift_to_shrinks(inst, p, g)
    # construction units: B1 gets L + a1 = 5, D1 gets (L + 3 a1) - 5 = 2, total C = 7
    assert dict(s.items()) == {"B1": 5 * inst.scale, "D1": 2 * inst.scale}
    assert s.cost == 7 * inst.scale == inst.budget


def test_lift_preserves_cost_and_opens_route():
    inst = build(SubsetSumInstance((2, 1, 2), 3))
    g = build_gprime(inst)
    for path in simple_routes(g):
        p = greedy_assign(path, g)
        s = lift_to_shrinks(inst, p, g, path)
        assert s.cost == p.cost
        assert check_route(inst, s, route_of(g, path), budget=s.cost)
        assert not check_route(inst, s, route_of(g, path), budget=s.cost - Fraction(1, 2 ** 41))


def test_lift_unknown_region():
    inst = build(ONE)
    with pytest.raises(InfeasiblePower):
        lift_to_shrinks(inst, {"nowhere": 3})


def test_route_checks():
    inst = build(ONE)
    check = check_mbs_reduction(ONE)
    s, cert = check.shrinks, check.route
    assert check_route(inst, s, cert, inst.slack_budget)
    assert not check_route(inst, ShrinkVector({}), cert, inst.slack_budget)
    skipping = RouteCertificate(cert.gaps[1:])
    assert not check_route(inst, s, skipping, inst.slack_budget)
    with pytest.raises(UnknownDiskId):
        check_route(inst, s, RouteCertificate((("D0", "Z9"),)), inst.slack_budget)


def test_route_reversed_pairs_accepted():
    inst = build(ONE)
    check = check_mbs_reduction(ONE)
    flipped = RouteCertificate(tuple((b, a) for a, b in check.route.gaps))
    assert check_route(inst, check.shrinks, flipped)


@pytest.mark.parametrize("a, b, yes", [((2, 3, 3, 2), 7, True), ((2, 4), 3, False), ((1,), 1, True)])
def test_end_to_end_examples(a, b, yes):
    check = check_mbs_reduction(SubsetSumInstance(a, b))
    assert check.passed and check.yes == yes
    if yes:
        assert check.route_ok and check.barrier is None
    else:
        assert check.barrier_ok and check.route is None


def test_fig3_route_cost():
    check = check_mbs_reduction(SubsetSumInstance((2, 3, 3, 2), 7))
    scale = check.mbs.scale
    assert check.mbs.budget == 115 * scale
    assert abs(check.shrinks.cost - 115 * scale) <= Fraction(scale, 3)


def test_exclusivity_on_lifted_solution():
    inst = build(SubsetSumInstance((1, 2), 3))
    check = check_mbs_reduction(SubsetSumInstance((1, 2), 3), inst)
    assert check.route_ok and find_barrier(inst, check.shrinks) is None


def test_no_instance_every_route_blocked():
    ss = SubsetSumInstance((2, 2), 3)
    inst = build(ss)
    g = build_gprime(inst)
    assert solve_bruteforce(g).cost > inst.slack_budget
    for path in simple_routes(g):
        p = truncated_greedy(g, path, inst.budget)
        assert p.cost <= inst.budget
    assert check_mbs_reduction(ss).passed


def test_unshrunk_instance_is_blocked_everywhere():
    inst = build(SubsetSumInstance((1, 2), 2))
    passing = [c for c in barrier_candidates(inst) if check_barrier(inst, {}, c)]
    assert len(passing) == len(barrier_candidates(inst))


def test_verify_single():
    assert verify_mbs_reduction(ONE)
