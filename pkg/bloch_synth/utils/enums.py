from __future__ import annotations

from enum import Enum
from typing import Any

from pydantic import GetCoreSchemaHandler
from pydantic_core import core_schema


class TypeEnum(Enum):
    """
    Enum addressed by kebab-case names (``synth-unitary`` for ``SYNTH_UNITARY``).

    Validates itself inside pydantic models and serializes back to the kebab name.
    """

    @classmethod
    def from_string(cls, string: TypeEnum | str) -> TypeEnum | None:
        if isinstance(string, cls):
            return string
        if not isinstance(string, str):
            return None
        return cls.__members__.get(string.upper().replace("-", "_"), None)

    @classmethod
    def get_all_field_names(cls) -> list[str]:
        return [member.lower().replace("_", "-") for member in cls.__members__]

    def to_string(self) -> str:
        return self.name.lower().replace("_", "-")

    @classmethod
    def validate(cls, string: Any):
        result = cls.from_string(string)
        if result is None:
            raise ValueError(
                f"{string!r} is not a valid {cls.__name__},"
                f" expected one of {cls.get_all_field_names()}"
            )
        return result

    @classmethod
    def __get_pydantic_core_schema__(
        cls, source: Any, handler: GetCoreSchemaHandler
    ) -> core_schema.CoreSchema:
        return core_schema.no_info_plain_validator_function(
            cls.validate,
            serialization=core_schema.plain_serializer_function_ser_schema(
                lambda member: member.to_string()
            ),
        )
