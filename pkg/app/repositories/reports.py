from pathlib import Path
from typing import Sequence

import pandas as pd
from pydantic import BaseModel

from app.core.exceptions import DataException
from app.models.nodes import NodeIndex
from app.repositories.base import BaseRepository


def _format_float(value: float) -> str:
    return f"{value:.4f}"


class ReportRepository(BaseRepository[BaseModel]):
    """Machine-readable JSON documents and plain-text tables."""

    def read(self, path: Path, model: type[BaseModel] | None = None) -> BaseModel:
        try:
            with open(path, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as e:
            raise DataException(f"cannot read {path}: {e}", ex=e)
        return (model or self.model_class).model_validate_json(text)

    def write(self, document: BaseModel, path: Path) -> Path:
        return self._write_text(document.model_dump_json(indent=2) + "\n", path)

    def write_table(
        self, frame: pd.DataFrame, path: Path, title: str | None = None
    ) -> Path:
        return self.write_sections([(title, frame, False)], path)

    def write_sections(
        self, sections: Sequence[tuple[str | None, pd.DataFrame, bool]], path: Path
    ) -> Path:
        """Several titled tables in one text file; the flag keeps the row index."""
        blocks = []
        for title, frame, with_index in sections:
            heading = f"{title}\n\n" if title else ""
            table = frame.to_string(
                index=with_index, na_rep="-", float_format=_format_float
            )
            blocks.append(heading + table + "\n")
        return self._write_text("\n".join(blocks), path)

    def write_node_index(self, index: NodeIndex, path: Path) -> Path:
        frame = pd.DataFrame({"index": range(len(index)), "node": list(index.labels)})
        return self._write_frame(frame, path, comment="index,node")
