from pathlib import Path
from typing import Any, Generic, Type, TypeVar

from app.repositories.base import BaseRepository

ModelType = TypeVar("ModelType")


class BaseController(Generic[ModelType]):
    """Base class for the stage controllers."""

    def __init__(self, model: Type[Any], repository: BaseRepository | None = None) -> None:
        self.model_class = model
        self.repository: BaseRepository[Any] | None = repository

    def load(self, path: Path, *args: Any, **kwargs: Any) -> ModelType:
        return self._require_repository().read(path, *args, **kwargs)

    def save(self, obj: ModelType, path: Path, *args: Any, **kwargs: Any) -> Path:
        return self._require_repository().write(obj, path, *args, **kwargs)

    def _require_repository(self) -> BaseRepository[Any]:
        if self.repository is None:
            raise RuntimeError(f"{type(self).__name__} has no repository configured")
        return self.repository
