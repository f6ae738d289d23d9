"""Run manifests: reproducibility metadata written beside every CLI output."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .serialize import canonical_json, digest


@dataclass
class RunManifest:
    subcommand: str
    parameters: dict
    result_digest: str = ""
    wall_time_s: float = 0.0
    tool_version: str = __version__
    variant_metadata: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "tool_version": self.tool_version,
            "subcommand": self.subcommand,
            "parameters": self.parameters,
            "variant_metadata": self.variant_metadata,
            "result_digest": self.result_digest,
            "wall_time_s": round(self.wall_time_s, 3),
        }


def collect_variant_metadata() -> dict:
    from .graphs import variant_selection
    from .windows import shear_resolution_metadata

    return {
        "shear_orientation": shear_resolution_metadata(),
        "family_variant": variant_selection(),
    }


class ManifestWriter:
    """Times a run, digests its primary output, writes `<out>.manifest.json`.

    The digest covers only the output bytes, so runs with equal parameters
    produce equal digests regardless of timing.
    """

    def __init__(self, subcommand: str, parameters: dict):
        self.manifest = RunManifest(subcommand=subcommand, parameters=parameters)
        self._t0 = time.monotonic()

    def finish(self, output_text: str, out_path: str | Path | None) -> RunManifest:
        self.manifest.wall_time_s = time.monotonic() - self._t0
        self.manifest.result_digest = digest(output_text)
        self.manifest.variant_metadata = collect_variant_metadata()
        if out_path is not None:
            side = Path(str(out_path) + ".manifest.json")
            side.write_text(canonical_json(self.manifest.to_dict()), encoding="utf-8")
        return self.manifest
