from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from ..utils.packing import render_packed


@dataclass
class SynthesisError(Exception):
    message: str
    data: Any = None
    code: int = 1

    def __str__(self) -> str:
        return self.message

    @property
    def kind(self) -> str:
        return type(self).__name__

    def to_packed(self) -> dict:
        return render_packed(
            data=self.data, code=self.code, message=self.message, error=self.kind
        )


class NonHermitianInput(SynthesisError):
    pass


class DomainError(SynthesisError):
    pass


class DegenerateInitialState(SynthesisError):
    pass


class InvalidFamilyParameter(SynthesisError):
    pass


class KindMismatch(SynthesisError):
    pass


class GaugeMismatch(SynthesisError):
    pass


class SingularShrinkStart(SynthesisError):
    pass


class UndefinedPhase(SynthesisError):
    pass


class NonzeroAlphaAtZero(SynthesisError):
    pass


class InvalidExpression(SynthesisError):
    pass


class ConfigError(SynthesisError):
    pass
