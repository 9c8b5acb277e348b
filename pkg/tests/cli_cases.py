"""Golden CLI cases: (name, argv, expected exit code).

Paths are relative to ``tests/data``; stdout is compared byte for byte with
``tests/golden/<name>.out``.
"""

CASES = [
    ("matmul_inverse_pair", ["matmul", "inv_a.json", "inv_b.json"], 0),
    ("matmul_identity", ["matmul", "inv_a.json", "identity2.json"], 0),
    ("matmul_rect", ["matmul", "identity2.json", "rect.json"], 0),
    ("matmul_minplus", ["matmul", "minplus_a.json", "minplus_a.json"], 0),
    ("inverse_example", ["inverse", "inv_a.json"], 0),
    ("inverse_identity", ["inverse", "identity3.json"], 0),
    ("inverse_upper", ["inverse", "upper.json"], 1),
    ("inverse_minplus", ["inverse", "minplus_a.json"], 0),
    ("check_identity_idempotent", ["check", "identity3.json", "--predicate", "idempotent"], 0),
    ("check_ones_idempotent", ["check", "ones2.json", "--predicate", "idempotent"], 0),
    ("check_upper_orthogonal", ["check", "upper.json", "--predicate", "orthogonal"], 1),
    ("check_upper_conditions", ["check", "upper.json", "--predicate", "idempotent-conditions"], 0),
    ("check_example_monomial", ["check", "inv_a.json", "--predicate", "monomial"], 0),
    ("span_basis_open", ["span", "gens_basis3.json", "point_ones3.json", "--open"], 0),
    ("span_remark_closed", ["span", "gens_remark.json", "point_e3.json", "--closed"], 1),
    ("span_single_closed", ["span", "gens_single.json", "point_2v.json", "--closed"], 0),
    ("grass_example", ["grass", "gens_example.json", "--open"], 0),
    ("grass_basis", ["grass", "gens_basis3.json", "--closed"], 0),
    ("grass_proportional", ["grass", "gens_proportional.json", "--closed"], 1),
    ("decompose_example", ["decompose", "gens_example.json"], 0),
    ("decompose_interior", ["decompose", "gens_interior.json"], 0),
    ("decompose_basis", ["decompose", "gens_basis3.json"], 0),
    ("iso_check_default", ["iso-check", "--samples", "1000", "--seed", "42"], 0),
    ("iso_check_forced_pair", ["iso-check", "--samples", "1", "--pair", "1", "1"], 0),
]

ERROR_CASES = [
    ("matmul_shape", ["matmul", "identity2.json", "identity3.json"]),
    ("matmul_malformed", ["matmul", "malformed.json", "identity2.json"]),
    ("matmul_missing", ["matmul", "no_such_file.json", "identity2.json"]),
    ("inverse_negative", ["inverse", "negative.json"]),
    ("inverse_ragged", ["inverse", "ragged.json"]),
    ("inverse_non_square", ["inverse", "rect.json"]),
    ("check_wrong_kind", ["check", "gens_basis3.json", "--predicate", "monomial"]),
    ("span_dependent", ["span", "gens_dependent.json", "point_2d.json", "--closed"]),
    ("span_dimension", ["span", "gens_basis3.json", "point_2d.json", "--open"]),
    ("decompose_dependent", ["decompose", "gens_dependent.json"]),
    ("iso_check_zero", ["iso-check", "--samples", "0"]),
    ("plot_4d", ["plot", "config_4d.json", "-o", "never.svg"]),
]

PLOT_CASES = [
    ("plot_vertices", "config_vertices.json"),
    ("plot_example", "config_example.json"),
    ("plot_quad", "config_quad.json"),
]
