import itertools

import pytest
from hypothesis import given, strategies as st

from isotemporal import (
    Beachball,
    Cycle,
    Daisy,
    Diaster,
    InvalidFamilyError,
    NoSwapScriptError,
    Star,
    Stem,
    TemporalNetwork,
    adjacency,
    apply_swap_script,
    binary_swap_sequence,
    brute_force_classes,
    build_network,
    check_transfer_conditions,
    diaster_signature,
    diaster_swap_permutation,
    edge_automorphism_group,
    enumerate_family_specs,
    generate,
    is_label_isomorphic,
    parse_family_spec,
    signature_classes,
    spec_string,
)
from isotemporal.families import NotGeneratedFamilyError, recognize_two_sided


# -- generators ---------------------------------------------------------------


def test_diaster_1_1_is_a_three_edge_path():
    g = generate(Diaster(1, 1))
    assert g.vertex_count == 4
    assert [pair for _, pair in g.edges] == [(0, 1), (0, 2), (1, 3)]


def test_daisy_2_is_one_vertex_two_loops():
    g = generate(Daisy(2))
    assert g.vertex_count == 1
    assert all(g.is_loop(e) for e in range(2))


def test_stem_of_two_single_daisies():
    g = generate(Stem(Daisy(1), Daisy(1)))
    assert g.vertex_count == 2
    assert [pair for _, pair in g.edges] == [(0, 1), (0, 0), (1, 1)]


def test_stem_of_stars_is_the_diaster():
    for a, b in [(1, 1), (1, 2), (2, 3)]:
        assert generate(Stem(Star(a), Star(b))) == generate(Diaster(a, b))


def test_generators_are_deterministic():
    for spec in (Diaster(2, 3), Beachball(3), Stem(Daisy(2), Beachball(1)), Cycle(6)):
        assert generate(spec) == generate(spec)


def test_invalid_parameters_rejected():
    with pytest.raises(InvalidFamilyError):
        Diaster(0, 0)
    with pytest.raises(InvalidFamilyError):
        Star(0)
    with pytest.raises(InvalidFamilyError):
        Cycle(2)
    with pytest.raises(InvalidFamilyError):
        Stem(Cycle(3), Star(1))


def test_spec_grammar_round_trip():
    for text in ["diaster:2,3", "star:4", "beachball:1", "daisy:7", "cycle:5", "stem:daisy:2/beachball:3"]:
        assert spec_string(parse_family_spec(text)) == text
    with pytest.raises(InvalidFamilyError):
        parse_family_spec("widget:3")
    with pytest.raises(InvalidFamilyError):
        parse_family_spec("diaster:1,x")
    with pytest.raises(InvalidFamilyError):
        parse_family_spec("stem:star:1")


def test_enumerate_family_specs_bounds_and_order():
    specs = enumerate_family_specs(4, include_cycles=True)
    strings = [spec_string(s) for s in specs]
    assert strings == sorted(strings)
    assert "diaster:1,2" in strings
    assert "cycle:4" in strings
    assert "diaster:0,3" not in strings
    from isotemporal.families import edge_count

    assert all(edge_count(s) <= 4 for s in specs)


# -- signatures ---------------------------------------------------------------


def test_signature_diaster_1_1_reflected():
    n = build_network(generate(Diaster(1, 1)), [(0, 2), (1, 1), (2, 3)])
    sig = diaster_signature(n)
    assert sig.central_label == 2
    assert sig.left_below == 1
    assert sig.reflective
    assert sig.key == (2, 0)


def test_signature_with_lowest_central_label_forces_k_zero():
    g = generate(Diaster(4, 7))
    labels = [(0, 1)] + [(e, e + 1) for e in range(1, 12)]
    sig = diaster_signature(build_network(g, labels))
    assert sig.central_label == 1
    assert sig.left_below == 0


def test_feasible_signature_lattice_of_d_4_7_has_40_points():
    a, b = 4, 7
    t = a + b + 1
    points = {
        (c, k)
        for c in range(1, t + 1)
        for k in range(max(0, c - 1 - b), min(a, c - 1) + 1)
    }
    assert len(points) == 40


def test_signature_keys_enumerate_classes_of_small_diaster():
    g = generate(Diaster(1, 2))
    keys = {
        diaster_signature(TemporalNetwork(g, labels)).key
        for labels in itertools.permutations(range(1, 5))
    }
    assert len(keys) == 6


def test_signature_partition_matches_brute_force():
    # every generated diaster and stem structure with at most 8 edges
    for spec in enumerate_family_specs(8):
        if not isinstance(spec, (Diaster, Stem)):
            continue
        g = generate(spec)
        assert signature_classes(g).blocks == brute_force_classes(g).blocks, spec


def test_signature_rejects_non_generated_graphs():
    with pytest.raises(NotGeneratedFamilyError):
        recognize_two_sided(generate(Cycle(4)))
    with pytest.raises(NotGeneratedFamilyError):
        # a one-sided diaster degenerates to a star: central edge not invariant
        recognize_two_sided(generate(Star(3)))


# -- binary swap sequences ------------------------------------------------------


def test_binary_swap_equal_sequences_need_no_swaps():
    assert binary_swap_sequence((0, 1, 0), (0, 1, 0)) == []


def test_binary_swap_single_forced_swap():
    assert binary_swap_sequence((0, 1), (1, 0)) == [(1, 2)]


def test_binary_swap_rightmost_first_construction():
    assert binary_swap_sequence((0, 0, 1), (1, 0, 0)) == [(2, 3), (1, 2)]


def test_binary_swap_rejects_mismatches():
    with pytest.raises(ValueError):
        binary_swap_sequence((0, 1), (0, 1, 1))
    with pytest.raises(ValueError):
        binary_swap_sequence((0, 0), (1, 1))
    with pytest.raises(ValueError):
        binary_swap_sequence((0, 2), (2, 0))


@given(data=st.data(), n=st.integers(min_value=1, max_value=10))
def test_binary_swap_property(data, n):
    a = data.draw(st.lists(st.integers(min_value=0, max_value=1), min_size=n, max_size=n))
    b = list(a)
    data.draw(st.randoms(use_true_random=False)).shuffle(b)
    steps = binary_swap_sequence(a, b)
    work = list(a)
    for i, j in steps:
        assert j == i + 1
        assert work[i - 1] != work[j - 1]
        work[i - 1], work[j - 1] = work[j - 1], work[i - 1]
    assert work == b


# -- swap scripts ----------------------------------------------------------------


def test_identical_labelings_give_empty_script():
    n = build_network(generate(Diaster(2, 2)), list(enumerate((1, 2, 3, 4, 5))))
    script = diaster_swap_permutation(n, n)
    assert len(script) == 0


def test_crossing_swap_moves_a_label_between_sides():
    # central label 3: label 1 starts left, must end right; labels above
    # central stay put
    g = generate(Diaster(1, 2))
    n = build_network(g, [(0, 3), (1, 1), (2, 2), (3, 4)])
    m = build_network(g, [(0, 3), (1, 2), (2, 1), (3, 4)])
    script = diaster_swap_permutation(n, m)
    assert [(s.labels, s.edges) for s in script] == [((1, 2), (1, 2))]
    assert apply_swap_script(n, script) == m


def test_above_central_script_touches_only_high_labels():
    g = generate(Diaster(2, 2))
    n = build_network(g, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)])
    m = build_network(g, [(0, 1), (1, 2), (2, 4), (3, 3), (4, 5)])
    script = diaster_swap_permutation(n, m)
    assert len(script) > 0
    assert all(min(step.labels) > 1 for step in script)
    assert is_label_isomorphic(apply_swap_script(n, script), m)


def test_script_steps_are_sequential_and_non_adjacent():
    g = generate(Stem(Daisy(2), Beachball(3)))
    adj = adjacency(g)
    n = build_network(g, [(0, 4), (1, 1), (2, 5), (3, 2), (4, 3), (5, 6)])
    m = build_network(g, [(0, 4), (1, 2), (2, 6), (3, 1), (4, 3), (5, 5)])
    script = diaster_swap_permutation(n, m)
    for step in script:
        assert step.labels[1] == step.labels[0] + 1
        assert not adj.adjacent(*step.edges)
    assert is_label_isomorphic(apply_swap_script(n, script), m)


def test_signature_mismatch_raises_no_script_error():
    g = generate(Diaster(1, 2))
    n = build_network(g, [(0, 1), (1, 2), (2, 3), (3, 4)])
    m = build_network(g, [(0, 2), (1, 1), (2, 3), (3, 4)])
    with pytest.raises(NoSwapScriptError):
        diaster_swap_permutation(n, m)


def test_wrong_family_raises():
    g = generate(Cycle(4))
    n = build_network(g, list(enumerate((1, 2, 3, 4))))
    with pytest.raises(NotGeneratedFamilyError):
        diaster_swap_permutation(n, n)


def test_reflection_case_uses_the_mirror_target():
    g = generate(Diaster(2, 2))
    n = build_network(g, [(0, 3), (1, 1), (2, 2), (3, 4), (4, 5)])
    m = build_network(g, [(0, 3), (1, 4), (2, 5), (3, 1), (4, 2)])
    script = diaster_swap_permutation(n, m)
    assert is_label_isomorphic(apply_swap_script(n, script), m)


# -- transfer conditions ---------------------------------------------------------


def test_transfer_holds_between_diaster_and_stem():
    report = check_transfer_conditions(
        generate(Diaster(2, 3)), generate(Stem(Daisy(2), Beachball(3)))
    )
    assert report.holds
    assert report.witness is not None
    assert report.failed_condition is None


def test_transfer_fails_between_path_and_triangle_of_loops():
    report = check_transfer_conditions(generate(Diaster(1, 1)), generate(Daisy(3)))
    assert not report.holds
    assert report.failed_condition == "edge-adjacency"


def test_transfer_holds_for_identity():
    g = generate(Diaster(1, 2))
    report = check_transfer_conditions(g, g)
    assert report.holds
    assert report.witness == tuple(range(g.edge_count))


def test_transfer_detects_group_mismatch():
    # D(2,2) and the mixed stem share edge adjacency but not automorphisms
    report = check_transfer_conditions(
        generate(Diaster(2, 2)), generate(Stem(Star(2), Daisy(2)))
    )
    assert not report.holds
    assert report.failed_condition == "edge-automorphisms"


def test_transfer_requires_equal_edge_counts():
    with pytest.raises(ValueError):
        check_transfer_conditions(generate(Star(2)), generate(Star(3)))


def test_transfer_between_diasters_and_all_stem_combinations():
    # Counts transfer from D(a,b) for every a != b combination and for
    # equal parameters with structurally equal sides.  Mixed-type a = b
    # stems lack the mirror symmetry, so their groups cannot match -- the
    # one exception is star/beachball at k = 1, where both sides are a
    # single pendant edge and the stem is the diaster itself.
    types = (Star, Beachball, Daisy)
    for a in range(1, 4):
        for b in range(1, 4):
            diaster = generate(Diaster(a, b))
            for left in types:
                for right in types:
                    report = check_transfer_conditions(diaster, generate(Stem(left(a), right(b))))
                    sides_equal = left is right or (
                        a == 1 and {left, right} == {Star, Beachball}
                    )
                    if a == b and not sides_equal:
                        assert not report.holds, (a, b, left, right)
                        assert report.failed_condition == "edge-automorphisms"
                    else:
                        assert report.holds, (a, b, left, right)


def test_transfer_witness_conjugates_the_groups():
    g = generate(Diaster(1, 2))
    h = generate(Stem(Beachball(1), Daisy(2)))
    report = check_transfer_conditions(g, h)
    assert report.holds
    phi = report.witness
    t = g.edge_count
    aut_g = set(edge_automorphism_group(g).elements)
    aut_h = set(edge_automorphism_group(h).elements)
    conjugated = set()
    for p in aut_g:
        image = [0] * t
        for e in range(t):
            image[phi[e]] = phi[p[e]]
        conjugated.add(tuple(image))
    assert conjugated == aut_h
