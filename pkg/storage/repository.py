from abc import ABC, abstractmethod
from typing import Any, Dict, Optional, Sequence


class ArtifactRepository(ABC):
    """Where exported documents and tables are written and read back."""

    @abstractmethod
    def save(self, path: str, payload: Dict[str, Any]) -> str:
        pass

    @abstractmethod
    def load(self, path: str, kind: Optional[str] = None) -> Dict[str, Any]:
        pass

    @abstractmethod
    def save_table(self, path: str, headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
        pass
