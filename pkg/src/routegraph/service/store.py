"""Durable graph storage: one canonical JSON file per graph id.

Writes go to a temp file in the store directory and are renamed into
place, so a crash mid-write leaves the previous file intact.  Mutations to
one graph id are serialized behind a per-id lock; reads always see the
last committed snapshot.
"""

from __future__ import annotations

import re
import threading
import uuid
from pathlib import Path
from typing import Callable, Iterator

from ..errors import GraphInvalid
from ..graph import Graph
from ..serialization import load_graph, save_graph

_ID_PATTERN = re.compile(r"^[A-Za-z0-9_-]{1,64}$")


class UnknownGraph(KeyError):
    """No graph stored under the requested id."""


class GraphStore:
    def __init__(self, root_dir: str | Path):
        self.root = Path(root_dir)
        self.root.mkdir(parents=True, exist_ok=True)
        self._graphs: dict[str, Graph] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._registry_lock = threading.Lock()
        for path in sorted(self.root.glob("*.json")):
            self._graphs[path.stem] = load_graph(path)

    def _path(self, graph_id: str) -> Path:
        if not _ID_PATTERN.match(graph_id):
            raise UnknownGraph(graph_id)
        return self.root / f"{graph_id}.json"

    def _lock(self, graph_id: str) -> threading.Lock:
        with self._registry_lock:
            return self._locks.setdefault(graph_id, threading.Lock())

    def ids(self) -> Iterator[str]:
        return iter(sorted(self._graphs))

    def __contains__(self, graph_id: str) -> bool:
        return graph_id in self._graphs

    def get(self, graph_id: str) -> Graph:
        try:
            return self._graphs[graph_id]
        except KeyError:
            raise UnknownGraph(graph_id) from None

    def create(self, g: Graph) -> str:
        graph_id = uuid.uuid4().hex[:12]
        self.put(graph_id, g)
        return graph_id

    def put(self, graph_id: str, g: Graph) -> None:
        """Create or replace; persisted before it becomes visible."""
        path = self._path(graph_id)
        with self._lock(graph_id):
            save_graph(g, path)
            self._graphs[graph_id] = g

    def mutate(self, graph_id: str, fn: Callable[[Graph], Graph]) -> Graph:
        """Apply one mutation under the per-graph write lock and persist it."""
        path = self._path(graph_id)
        with self._lock(graph_id):
            updated = fn(self.get(graph_id))
            save_graph(updated, path)
            self._graphs[graph_id] = updated
            return updated

    def overlay_file(self, graph_id: str) -> Path | None:
        """Absolute path of the graph's overlay image, if it is inside the store."""
        g = self.get(graph_id)
        if g.overlay is None:
            return None
        candidate = (self.root / g.overlay.image_path).resolve()
        if not candidate.is_relative_to(self.root.resolve()):
            raise GraphInvalid("overlay image path escapes the store directory")
        return candidate
