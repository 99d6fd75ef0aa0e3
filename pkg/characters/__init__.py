from characters.table import (
    CharacterTable,
    character_table,
    column_orthogonality_check,
    dimension,
    induced_from_characters,
    mn_character,
    youngs_rule_decomposition,
)

__all__ = [
    "CharacterTable", "character_table", "column_orthogonality_check", "dimension",
    "induced_from_characters", "mn_character", "youngs_rule_decomposition",
]
