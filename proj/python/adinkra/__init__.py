"""Adinkra combinatorics engine: colored graphs, GF(2) codes, hypercube
quotients, totally odd dashings, height gradings and supercharge rules."""

from adinkra._adinkra import (
    BitVector,
    ColoredGraph,
    DashingSystem,
    HeightAssignment,
    LatinAdjacencyList,
    LinearCode,
    SemiMagicMatrix,
    SupermultipletRules,
    apply_dashing,
    assign_heights,
    bicolor_report,
    bipartition,
    canonical_dashing_hypercube,
    color_permutations,
    complete_bipartite,
    complete_even,
    emit_rules,
    enumerate_dashings,
    exchange_group,
    export_dot,
    extract_code,
    folded_cube,
    from_latin,
    heights_of,
    hypercube,
    is_connected,
    is_perfect_1factorization,
    is_quadrilateral,
    latin_properties,
    lexicographic_order,
    movable_vertices,
    move_vertex,
    quotient,
    reduce_walk,
    render_latin,
    render_latin_csv,
    render_matrix,
    render_matrix_csv,
    render_rules,
    run_verify,
    solve_dashings,
    to_latin,
    to_matrix,
    valise,
    validate_regular_coloring,
    validate_totally_odd,
    verify_algebra,
    weight_sum_identity,
    with_heights,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
