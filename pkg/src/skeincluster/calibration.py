"""Frozen convention choices, stored in ``data/calibration.json``.

The file is produced by :func:`run_calibration` and read once per process.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from skeincluster.coeffs import LaurentSA
from skeincluster.skein import CalibrationError, SkeinParams

CALIBRATION_FILE = "calibration.json"


@dataclass(frozen=True)
class Calibration:
    skein: SkeinParams
    form_sign: int
    negative_scale: LaurentSA
    necklace_inner_sign: int

    @classmethod
    def from_json(cls, obj) -> "Calibration":
        return cls(
            SkeinParams.from_json(obj["annulus"]),
            int(obj["torus"]["form_sign"]),
            LaurentSA.from_json(obj["torus"]["negative_scale"]),
            int(obj["necklace"]["inner_sign"]),
        )


@lru_cache(maxsize=1)
def load_calibration() -> Calibration:
    try:
        text = resources.files("skeincluster.data").joinpath(CALIBRATION_FILE).read_text()
    except FileNotFoundError as exc:
        raise CalibrationError("calibration file missing; run `skeincluster calibrate`") from exc
    return Calibration.from_json(json.loads(text))


def run_calibration() -> dict:
    """Redo every convention search; abort unless each has one survivor."""
    from skeincluster import cpg, skein

    params = skein.calibrate()
    torus = cpg.calibrate_torus()
    if len(torus) != 1:
        raise CalibrationError(f"{len(torus)} torus conventions pass the five-term identity")
    necklace = cpg.calibrate_necklace()
    if len(necklace) != 1:
        raise CalibrationError(f"{len(necklace)} necklace orientations match")
    (sign, scale), = torus
    return {
        "annulus": {**params.to_json(), "degree": skein.CALIBRATION_DEGREE,
                    "search_size": len(skein.search_space())},
        "torus": {"form_sign": sign, "negative_scale": scale.to_json(), "cutoff": 4,
                  "search_size": len(cpg.torus_search_space())},
        "necklace": {"inner_sign": necklace[0]},
    }


def dumps_calibration(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
