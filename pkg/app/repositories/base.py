from pathlib import Path
from typing import Any, Generic, Iterator, Type, TypeVar

import pandas as pd

from app.core.exceptions import DataException

ModelType = TypeVar("ModelType")


class BaseRepository(Generic[ModelType]):
    """File-backed storage for one kind of artifact."""

    def __init__(self, model: Type[Any]):
        self.model_class = model

    def read(self, path: Path, *args: Any, **kwargs: Any) -> ModelType:
        raise NotImplementedError

    def write(self, obj: ModelType, path: Path, *args: Any, **kwargs: Any) -> Path:
        raise NotImplementedError

    def _lines(self, path: Path) -> Iterator[tuple[int, str]]:
        """Yield ``(line_number, text)`` for non-blank, non-comment lines."""
        try:
            with open(path, "r", encoding="utf-8") as handle:
                yield from self._stream_lines(handle)
        except OSError as e:
            raise DataException(f"cannot read {path}: {e}", ex=e)

    @staticmethod
    def _stream_lines(stream) -> Iterator[tuple[int, str]]:
        for line_number, raw in enumerate(stream, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            yield line_number, line

    def _read_frame(self, path: Path, columns: list[str]) -> pd.DataFrame:
        try:
            frame = pd.read_csv(
                path,
                header=None,
                names=columns,
                dtype=str,
                comment="#",
                skip_blank_lines=True,
                skipinitialspace=True,
            )
        except (OSError, pd.errors.ParserError) as e:
            raise DataException(f"cannot read {path}: {e}", ex=e)
        except pd.errors.EmptyDataError:
            return pd.DataFrame(columns=columns)
        if frame.isna().any(axis=None):
            raise DataException(f"{path}: every line needs {len(columns)} fields")
        return frame

    def _write_frame(
        self, frame: pd.DataFrame, path: Path, comment: str | None = None
    ) -> Path:
        body = frame.to_csv(index=False, header=False, lineterminator="\n")
        prefix = f"# {comment}\n" if comment else ""
        return self._write_text(prefix + body, path)

    def _write_text(self, text: str, path: Path) -> Path:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            with open(path, "w", encoding="utf-8", newline="\n") as handle:
                handle.write(text)
        except OSError as e:
            raise DataException(f"cannot write {path}: {e}", ex=e)
        return path
