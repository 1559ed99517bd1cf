"""Malformed-input fixtures: (name, argv, exit code, text the diagnostic must contain)."""
from pathlib import Path

FIXTURES = Path(__file__).parent / "fixtures"


def fx(name: str) -> str:
    return str(FIXTURES / name)


MALFORMED = [
    ("entry out of range", ["analyze", fx("bad_entry.json")], 2, "table[1][2]"),
    ("non-associative table", ["analyze", fx("non_associative.json")], 2, "associativity"),
    ("ragged table", ["analyze", fx("ragged_table.json")], 2, "table[1]"),
    ("wrong kind", ["analyze", fx("wrong_kind.json")], 2, "kind"),
    ("invalid JSON", ["analyze", fx("invalid_json.json")], 2, "invalid JSON"),
    ("missing file", ["analyze", fx("no_such_file.json")], 2, "cannot read"),
    ("unknown field", ["construct", fx("rees_unknown_field.json"), "-o", "{out}"], 2, "sgima"),
    ("group with two idempotents", ["construct", fx("rees_not_a_group.json"), "-o", "{out}"], 2, "not a group"),
    ("sigma entry out of range", ["construct", fx("rees_sigma_out_of_range.json"), "-o", "{out}"], 2, "sigma[0][1]"),
    ("boolean size", ["construct", fx("rees_bool_size.json"), "-o", "{out}"], 2, "x_size"),
    ("size budget", ["--max-order", "5", "construct", fx("rees_2x2_c2.json"), "-o", "{out}"], 3, "budget"),
    ("not completely simple", ["decompose", fx("zero_semigroup_2.json"), "-o", "{out}"], 4, "proper_ideal_element"),
    ("swapped forward map", ["verify", fx("band_2x3.json"), fx("band_2x3_decomposition_swapped.json")], 5, "homomorphic"),
    ("size inconsistent", ["verify", fx("band_2x3.json"), fx("band_2x3_decomposition_size_inconsistent.json")], 5, "size_consistent"),
]
