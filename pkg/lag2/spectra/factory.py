"""Factory for the spectrum constant strategies."""

from typing import Dict, List, Type

from ..core.errors import UsageError
from .base import BaseConstant
from .constants import DirichletConstant, LagrangeConstant, SecondLagrangeConstant


class ConstantFactory:
    """Create constant evaluators by name."""

    _registry: Dict[str, Type[BaseConstant]] = {
        LagrangeConstant.name: LagrangeConstant,
        SecondLagrangeConstant.name: SecondLagrangeConstant,
        DirichletConstant.name: DirichletConstant,
    }

    @classmethod
    def available(cls) -> List[str]:
        return sorted(cls._registry)

    @classmethod
    def create(cls, kind: str) -> BaseConstant:
        try:
            return cls._registry[kind]()
        except KeyError:
            raise UsageError(
                f"unknown constant {kind!r}; choose one of {', '.join(cls.available())}"
            ) from None
