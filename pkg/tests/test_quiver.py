import pytest

from stratsys.quiver import (Quiver, admissible_numbering, canonical_apq,
                             classify_type, coxeter_transform, defect,
                             euler_form, injective_dim_vector, kronecker,
                             null_root, projective_dim_vector, validate)


def test_validate_kronecker_passes():
    assert validate(kronecker(2)).passed


def test_validate_self_loop_fails_acyclic():
    q = Quiver.make([1], [(1, 1, "a")])
    report = validate(q)
    assert not report.passed
    assert report.violations[0].axiom == "acyclic"


def test_validate_disconnected_fails():
    q = Quiver.make([1, 2, 3, 4], [(2, 1, "a"), (4, 3, "b")])
    report = validate(q)
    assert not report.passed
    assert report.violations[0].axiom == "connected"


def test_validate_duplicate_labels():
    q = Quiver.make([1, 2], [(2, 1, "a"), (2, 1, "a")])
    report = validate(q)
    assert not report.passed
    assert report.violations[0].axiom == "distinct-labels"


def _toposort_oracle(q):
    # independent reference: repeatedly remove the smallest remaining sink
    remaining = set(q.vertices)
    order = []
    while remaining:
        sinks = sorted(v for v in remaining
                       if all(a.tgt not in remaining for a in q.arrows if a.src == v))
        order.append(sinks[0])
        remaining.discard(sinks[0])
    return order


def test_numbering_linear_quiver_identity():
    q = Quiver.make([1, 2, 3], [(3, 2, "a"), (2, 1, "b")])
    assert admissible_numbering(q) == [1, 2, 3]


def test_numbering_kronecker():
    assert admissible_numbering(kronecker(5)) == [1, 2]


def test_numbering_apq_matches_toposort_oracle():
    q = canonical_apq(2, 3)
    order = admissible_numbering(q)
    assert order == _toposort_oracle(q)
    assert order[0] == 0  # the unique sink comes first
    position = {v: k for k, v in enumerate(order)}
    for a in q.arrows:
        assert position[a.src] > position[a.tgt]


def test_euler_form_kronecker_values():
    q = kronecker(2)
    assert euler_form(q, (1, 0), (1, 0)) == 1
    assert euler_form(q, (0, 1), (1, 0)) == -2


def test_euler_form_null_root_isotropic():
    q = canonical_apq(2, 3)
    delta = (1, 1, 1, 1, 1)
    assert euler_form(q, delta, delta) == 0
    assert null_root(q) == delta


def test_euler_form_length_mismatch():
    with pytest.raises(ValueError):
        euler_form(kronecker(2), (1, 0, 0), (1, 0))


def test_coxeter_kronecker_values():
    phi = coxeter_transform(kronecker(2))
    assert phi.apply((1, 1)) == (1, 1)
    assert phi.apply((1, 2)) == (3, 4)
    assert phi.apply_inverse((1, 0)) == (3, 2)


def test_coxeter_defining_property_all_quivers():
    for q in (kronecker(2), kronecker(3), canonical_apq(2, 3), canonical_apq(1, 2)):
        phi = coxeter_transform(q)
        for v in q.vertices:
            p = projective_dim_vector(q, v)
            i = injective_dim_vector(q, v)
            assert phi.apply(p) == tuple(-x for x in i)
            assert phi.apply_inverse(i) == tuple(-x for x in p)


def test_coxeter_power_inverse_round_trip():
    phi = coxeter_transform(canonical_apq(2, 3))
    v = (1, 2, 3, 4, 5)
    assert phi.power(phi.power(v, 4), -4) == v


def test_classify_examples():
    assert classify_type(kronecker(2)).tag == "Euclidean"
    assert classify_type(kronecker(3)).tag == "Wild"
    assert classify_type(canonical_apq(2, 3)).tag == "Euclidean"
    assert classify_type(canonical_apq(1, 2)).tag == "Euclidean"


def test_classify_catalogue():
    def path(n):
        return Quiver.make(range(n), [(i + 1, i, f"a{i}") for i in range(n - 1)])

    assert classify_type(path(1)).tag == "Dynkin"
    assert classify_type(path(5)).tag == "Dynkin"  # A_5

    def star(arms):
        arrows = []
        v = 1
        for arm in arms:
            prev = 0
            for _ in range(arm):
                arrows.append((v, prev, f"a{v}"))
                prev = v
                v += 1
        return Quiver.make(range(v), arrows)

    assert classify_type(star([1, 1, 2])).tag == "Dynkin"      # D_5
    assert classify_type(star([1, 2, 2])).tag == "Dynkin"      # E6
    assert classify_type(star([1, 2, 3])).tag == "Dynkin"      # E7
    assert classify_type(star([1, 2, 4])).tag == "Dynkin"      # E8
    assert classify_type(star([1, 2, 5])).tag == "Euclidean"   # E~8
    assert classify_type(star([2, 2, 2])).tag == "Euclidean"   # E~6
    assert classify_type(star([1, 3, 3])).tag == "Euclidean"   # E~7
    assert classify_type(star([1, 1, 1, 1])).tag == "Euclidean"  # D~4
    assert classify_type(star([1, 2, 6])).tag == "Wild"
    assert classify_type(star([2, 2, 3])).tag == "Wild"
    assert classify_type(star([1, 1, 1, 2])).tag == "Wild"
    # D~_5: central path 2-3 with both ends doubled
    dn = Quiver.make(range(6), [(0, 2, "a"), (1, 2, "b"), (3, 2, "x"),
                                (4, 3, "c"), (5, 3, "d")])
    assert classify_type(dn).tag == "Euclidean"
    # one twig lengthened: no longer in the catalogue
    long_twig = Quiver.make(range(7), [(0, 2, "a"), (1, 2, "b"), (3, 2, "x"),
                                       (4, 3, "c"), (5, 3, "d"), (6, 4, "e")])
    assert classify_type(long_twig).tag == "Wild"


def test_classify_orientation_independent():
    base = canonical_apq(2, 3)
    for k in range(len(base.arrows)):
        arrows = [(a.src, a.tgt, a.label) for a in base.arrows]
        src, tgt, label = arrows[k]
        arrows[k] = (tgt, src, label)
        flipped = Quiver.make(base.vertices, arrows)
        assert classify_type(flipped).tag == "Euclidean"


def test_kronecker_constructor():
    q = kronecker(2)
    assert q.vertices == (1, 2)
    assert len(q.arrows) == 2
    assert all(a.src == 2 and a.tgt == 1 for a in q.arrows)
    with pytest.raises(ValueError):
        kronecker(0)


def test_canonical_apq_shape():
    q = canonical_apq(2, 3)
    assert q.vertices == (0, 1, 2, 3, 4)
    assert len(q.arrows) == 5
    sinks = [v for v in q.vertices if not q.arrows_out(v)]
    sources = [v for v in q.vertices if not q.arrows_in(v)]
    assert sinks == [0] and sources == [4]
    with pytest.raises(ValueError):
        canonical_apq(3, 2)


def test_canonical_apq_1_1_is_kronecker_shape():
    q = canonical_apq(1, 1)
    assert q.n == 2 and len(q.arrows) == 2
    assert all(a.src == 1 and a.tgt == 0 for a in q.arrows)


def test_quiver_json_round_trip():
    q = canonical_apq(2, 3)
    assert Quiver.from_json(q.to_json()) == q


def test_defect_signs():
    q = canonical_apq(2, 3)
    assert defect(q, projective_dim_vector(q, 4)) < 0
    assert defect(q, injective_dim_vector(q, 0)) > 0
    assert defect(q, (1, 1, 1, 1, 1)) == 0
