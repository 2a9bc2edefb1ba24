"""Smoke tests for the python bindings."""

import adinkra


def test_codes():
    d6 = adinkra.LinearCode.d2n(3)
    assert d6.length == 6
    assert d6.dimension == 2
    assert d6.basis == ["110011", "001111"]
    assert d6.contains("111100")
    cls = d6.classify()
    assert cls["doubly_even"] and cls["even"] and not cls["has_weight_1_or_2"]
    assert d6.codewords() == ["000000", "001111", "110011", "111100"]

    assert adinkra.weight_sum_identity("1100", "0110") == (2, 4, 1)

    f6 = adinkra.LinearCode(["111111"])
    assert f6.classify()["even"] and not f6.classify()["doubly_even"]


def test_hypercube_and_quotient():
    q3 = adinkra.hypercube(3)
    assert q3.n == 8
    assert len(q3.edges) == 12
    assert q3.parity == "bffbfbbf"  # weight parity of 000..111
    assert adinkra.is_quadrilateral(q3)
    assert adinkra.validate_regular_coloring(q3) == []
    assert adinkra.bipartition(q3) is not None

    d6 = adinkra.LinearCode.d2n(3)
    g = adinkra.quotient(6, d6)
    assert g.n == 16
    assert len(g.edges) == 48
    assert adinkra.extract_code(g) == d6

    round_trip = adinkra.ColoredGraph.from_agf(g.to_agf())
    assert round_trip == g


def test_structure():
    k4 = adinkra.complete_even(2)
    summary = adinkra.exchange_group(k4)
    assert summary["order"] == 4
    assert summary["elementary_abelian_2"]
    assert adinkra.is_perfect_1factorization(k4)
    assert adinkra.extract_code(k4).basis == ["111"]
    assert adinkra.reduce_walk(k4, [3, 1, 2], 1) == "111"

    report = adinkra.bicolor_report(k4)
    assert all(pair["m"] == 2 for pair in report)


def test_dashing_existence():
    f6 = adinkra.folded_cube(6)
    assert not adinkra.solve_dashings(f6).consistent

    g = adinkra.quotient(6, adinkra.LinearCode.d2n(3))
    system = adinkra.solve_dashings(g)
    assert system.consistent
    assert system.solution_count == 2 ** system.log2_solution_count
    dashed = adinkra.apply_dashing(g, system.particular)
    assert adinkra.validate_totally_odd(dashed) == []


def test_heights_and_susy():
    q2 = adinkra.hypercube(2)
    system = adinkra.solve_dashings(q2)
    dashed = adinkra.apply_dashing(q2, system.particular)
    graded = adinkra.with_heights(dashed, adinkra.valise(dashed))
    assert adinkra.heights_of(graded).rank_sequence == [2, 2]

    verdict = adinkra.run_verify(graded)
    assert verdict["verdict"] == "ADINKRA"

    rules = adinkra.emit_rules(graded)
    result = adinkra.verify_algebra(rules)
    assert result["ok"]
    assert result["checks"] == 4 * (2 + 1)

    text = adinkra.render_rules(rules, "text", 1)
    assert text.startswith("Q1(")

    raisable, lowerable = adinkra.movable_vertices(graded, adinkra.valise(graded))
    assert raisable and lowerable


def test_latin_and_matrix():
    k4 = adinkra.complete_even(2)
    latin = adinkra.to_latin(k4)
    assert latin.rows[0] == [4, 3, 2, 1]
    props = adinkra.latin_properties(latin)
    assert props["adjacency_ok"] and props["connected"] and props["quadrilateral"]
    assert adinkra.from_latin(latin) == k4

    matrix = adinkra.to_matrix(k4)
    assert matrix.line_sum == 6
    assert matrix.entry[0] == [0, 3, 2, 1]

    dot = adinkra.export_dot(k4)
    assert dot.startswith("graph adinkra {")
