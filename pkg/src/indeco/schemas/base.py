"""
Base Pydantic schemas with strict validation.

ALL serialized models MUST inherit from StrictModel.
"""

import orjson
from pydantic import BaseModel, ConfigDict

JSON_OPTIONS = orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2


class StrictModel(BaseModel):
    """
    Base model with strict validation.

    Features:
    - Forbids extra fields (catches typos)
    - Validates on assignment (catches mutations)
    - Uses enum values in serialization
    - Validates default values
    """

    model_config = ConfigDict(
        extra="forbid",
        validate_assignment=True,
        use_enum_values=True,
        validate_default=True,
        str_strip_whitespace=True,
    )

    def to_json(self) -> bytes:
        """Byte-stable JSON: sorted keys, two-space indent."""
        return orjson.dumps(self.model_dump(mode="json"), option=JSON_OPTIONS)
