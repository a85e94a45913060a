"""
Construction Controller

Handles the generator families and writes their artifacts.
"""

import logging
from pathlib import Path
from typing import Any, Dict, Optional, Sequence

from app.core.config import DEFAULT_CANDIDATE_CAP, DEFAULT_VERTEX_CAP
from app.core.exceptions import CheckFailed, InvalidParameter
from app.engine import (
    construct_equilibrium,
    construction_expansion,
    gen_perfect_binary_tree,
    gen_spider,
    gen_sqrtlog_instance,
    gen_word_graph,
    verify_construction,
)
from app.models import ConstructionOutput, CostVersion
from app.services import storage_service

logger = logging.getLogger(__name__)

FAMILIES = ("spider", "binary-tree", "word-graph", "theorem3", "sqrtlog")

# larger instances are summarized without their strategy lists
INLINE_PROFILE_LIMIT = 200


class ConstructionController:
    """Controller for generator families"""

    def __init__(self):
        self.storage_service = storage_service

    def build(
        self,
        family: str,
        k: Optional[int] = None,
        t: Optional[int] = None,
        budgets: Optional[Sequence[int]] = None,
        version: Optional[str] = None,
        vertex_cap: int = DEFAULT_VERTEX_CAP,
    ) -> ConstructionOutput:
        """Dispatch on the family name"""
        if family not in FAMILIES:
            raise InvalidParameter(f"unknown family {family!r}, expected one of {FAMILIES}")

        if family == "theorem3":
            if not budgets:
                raise InvalidParameter("theorem3 needs --budgets")
            return construct_equilibrium(budgets, CostVersion(version or "sum"))
        if k is None:
            raise InvalidParameter(f"{family} needs --k")
        if family == "spider":
            return gen_spider(k)
        if family == "binary-tree":
            return gen_perfect_binary_tree(k)
        if family == "sqrtlog":
            return gen_sqrtlog_instance(k, vertex_cap)
        if t is None:
            raise InvalidParameter("word-graph needs --t")
        return gen_word_graph(t, k, vertex_cap)

    def generate(
        self,
        family: str,
        k: Optional[int] = None,
        t: Optional[int] = None,
        budgets: Optional[Sequence[int]] = None,
        version: Optional[str] = None,
        out_dir: Optional[str] = None,
        verify: bool = False,
        samples: int = 0,
        seed: int = 0,
        vertex_cap: int = DEFAULT_VERTEX_CAP,
        cap: int = DEFAULT_CANDIDATE_CAP,
        meta: Optional[Dict] = None,
    ) -> Dict[str, Any]:
        """Build one instance, optionally verify its claims and write artifacts"""
        output = self.build(family, k, t, budgets, version, vertex_cap)
        spec = output.spec

        summary: Dict[str, Any] = {
            "family": family,
            "provenance": output.provenance.value,
            "n": spec.n,
            "version": spec.version.value,
            "claims": [claim.model_dump(mode="json") for claim in output.claims],
            "details": output.details,
        }
        if output.permutation is not None:
            summary["permutation"] = [p + 1 for p in output.permutation]
        if spec.n <= INLINE_PROFILE_LIMIT:
            summary["budgets"] = list(spec.budgets)
            summary["strategies"] = output.profile.to_one_based()

        if out_dir:
            summary["files"] = self._write_artifacts(output, Path(out_dir), meta)

        if verify:
            verdicts, unchecked = verify_construction(output, cap, samples, seed)
            summary["verdicts"] = [v.model_dump(mode="json") for v in verdicts]
            summary["unchecked"] = unchecked
            summary["expansion"] = {"f": construction_expansion(output)}
            failed = [v.claim for v in verdicts if not v.holds]
            if failed:
                raise CheckFailed(f"claims failed: {', '.join(failed)}", data=summary)
        return summary

    def _write_artifacts(
        self, output: ConstructionOutput, out_dir: Path, meta: Optional[Dict]
    ) -> Dict[str, str]:
        files = {
            "game": out_dir / "game.json",
            "profile": out_dir / "profile.json",
            "graph": out_dir / "graph.dot",
            "construction": out_dir / "construction.json",
        }
        self.storage_service.save_game(output.spec, files["game"], meta)
        self.storage_service.save_profile(output.profile, files["profile"], meta)
        self.storage_service.export_dot(
            output.spec, output.profile, files["graph"], output.labels
        )
        record = {
            "provenance": output.provenance.value,
            "claims": [claim.model_dump(mode="json") for claim in output.claims],
            "permutation": None
            if output.permutation is None
            else [p + 1 for p in output.permutation],
            "details": output.details,
        }
        if meta:
            record["meta"] = meta
        self.storage_service.save_json(record, files["construction"])
        return {name: str(path) for name, path in files.items()}
