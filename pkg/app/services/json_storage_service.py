"""
JSON Storage Service Implementation

Reads and writes the toolkit's JSON files, JSON-lines traces and DOT
exports on the local filesystem.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import networkx as nx
from pydantic import ValidationError

from app.core.exceptions import InvalidGame, InvalidGraph
from app.models import CostVersion, DynamicsTrace, GameSpec, Move, StrategyProfile

from .storage_service import PathLike, StorageService

logger = logging.getLogger(__name__)


class JsonStorageService(StorageService):
    """File-based storage service"""

    def _load_json_file(self, path: PathLike) -> Any:
        file_path = Path(path)
        try:
            with open(file_path, "r", encoding="utf-8") as f:
                return json.load(f)
        except FileNotFoundError:
            raise InvalidGame(f"file not found: {file_path}")
        except json.JSONDecodeError as e:
            raise InvalidGame(f"invalid JSON in {file_path}: {e}")
        except UnicodeDecodeError as e:
            raise InvalidGame(f"{file_path} is not UTF-8 text: {e}")

    def _write(self, path: PathLike, text: str) -> None:
        file_path = Path(path)
        file_path.parent.mkdir(parents=True, exist_ok=True)
        with open(file_path, "w", encoding="utf-8") as f:
            f.write(text)
        logger.info(f"wrote {file_path}")

    def save_json(self, data: Any, path: PathLike) -> None:
        self._write(path, json.dumps(data, indent=2) + "\n")

    # ==================== GAMES ====================

    def load_game(self, path: PathLike) -> GameSpec:
        data = self._load_json_file(path)
        if not isinstance(data, dict) or "budgets" not in data:
            raise InvalidGame(f"{path}: expected an object with 'budgets'")
        budgets = data["budgets"]
        try:
            return GameSpec(
                n=data.get("n", len(budgets)),
                budgets=tuple(budgets),
                version=CostVersion(data.get("version", "sum")),
            )
        except (ValidationError, ValueError, TypeError) as e:
            raise InvalidGame(f"{path}: {e}")

    def save_game(self, spec: GameSpec, path: PathLike, meta: Optional[Dict] = None) -> None:
        data = {"n": spec.n, "budgets": list(spec.budgets), "version": spec.version.value}
        if meta:
            data["meta"] = meta
        self.save_json(data, path)

    # ==================== PROFILES ====================

    def load_profile(self, path: PathLike) -> StrategyProfile:
        data = self._load_json_file(path)
        if not isinstance(data, dict) or "strategies" not in data:
            raise InvalidGame(f"{path}: expected an object with 'strategies'")
        try:
            return StrategyProfile.from_one_based(data["strategies"])
        except (ValidationError, TypeError) as e:
            raise InvalidGame(f"{path}: {e}")

    def save_profile(
        self, profile: StrategyProfile, path: PathLike, meta: Optional[Dict] = None
    ) -> None:
        data = {"strategies": profile.to_one_based()}
        if meta:
            data["meta"] = meta
        self.save_json(data, path)

    # ==================== GRAPHS ====================

    def load_graph(self, path: PathLike) -> nx.Graph:
        data = self._load_json_file(path)
        try:
            n = int(data["n"])
            edges = [(int(u), int(v)) for u, v in data["edges"]]
        except (KeyError, TypeError, ValueError) as e:
            raise InvalidGraph(f"{path}: expected {{'n': int, 'edges': [[u, v]]}} ({e})")

        graph = nx.Graph()
        graph.add_nodes_from(range(1, n + 1))
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise InvalidGraph(f"{path}: edge ({u}, {v}) outside 1..{n}")
            if u == v:
                raise InvalidGraph(f"{path}: self-loop at {u}")
            if graph.has_edge(u, v):
                raise InvalidGraph(f"{path}: repeated edge ({u}, {v})")
            graph.add_edge(u, v)
        return graph

    def export_dot(
        self,
        spec: GameSpec,
        profile: StrategyProfile,
        path: PathLike,
        labels: Optional[Sequence[str]] = None,
    ) -> None:
        lines = [f"// n={spec.n} version={spec.version.value}", "digraph realization {"]
        for player in range(spec.n):
            label = labels[player] if labels else str(player + 1)
            lines.append(f'  {player + 1} [label="{label}"];')
        for owner, targets in enumerate(profile.strategies):
            for target in targets:
                lines.append(f"  {owner + 1} -> {target + 1};")
        lines.append("}")
        self._write(path, "\n".join(lines) + "\n")

    # ==================== TRACES ====================

    def write_trace(
        self, trace: DynamicsTrace, path: PathLike, meta: Optional[Dict] = None
    ) -> None:
        header = {
            "type": "header",
            "version": trace.version.value,
            "order": trace.order.value,
            "oracle": trace.oracle.value,
            "seed": trace.seed,
            "round_limit": trace.round_limit,
            "initial": trace.initial.to_one_based(),
        }
        if meta:
            header["meta"] = meta
        result = {
            "type": "result",
            "outcome": trace.outcome.value,
            "rounds": trace.rounds,
            "moves": len(trace.moves),
            "cycle_start": trace.cycle_start,
            "cycle_period": trace.cycle_period,
            "final": trace.final.to_one_based(),
        }
        records = [header]
        records.extend({"type": "move", **move.to_json()} for move in trace.moves)
        records.append(result)
        self._write(path, "".join(json.dumps(record) + "\n" for record in records))

    def read_trace(
        self, path: PathLike
    ) -> Tuple[Dict[str, Any], List[Move], Dict[str, Any]]:
        header: Dict[str, Any] = {}
        result: Dict[str, Any] = {}
        moves: List[Move] = []
        try:
            with open(Path(path), "r", encoding="utf-8") as f:
                for number, line in enumerate(f, start=1):
                    if not line.strip():
                        continue
                    record = json.loads(line)
                    kind = record.pop("type", "move")
                    if kind == "header":
                        header = record
                    elif kind == "result":
                        result = record
                    else:
                        moves.append(Move.from_json(record))
        except FileNotFoundError:
            raise InvalidGame(f"file not found: {path}")
        except UnicodeDecodeError as e:
            raise InvalidGame(f"{path} is not UTF-8 text: {e}")
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
            raise InvalidGame(f"{path}: malformed trace line {number}: {e}")
        return header, moves, result
