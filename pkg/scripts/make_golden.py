"""Regenerate the frozen regression datasets in tests/golden.

Each dataset is one CLI invocation; the argument lists are written to
tests/golden/manifest.json so the regression test replays exactly the same
commands. Run from anywhere: python3 scripts/make_golden.py
"""
import json
from pathlib import Path

from diracguide.cli import main

GOLDEN_DIR = Path(__file__).resolve().parent.parent / "tests" / "golden"

ALPHA = ["--sweep", "alpha", "--grid", "0.05", "1.5", "60"]

DATASETS = {
    "transmission_angle_magnetic_a0_4": ["transmission", "--kind", "magnetic", "--k", "1", "--a0", "4", *ALPHA],
    "transmission_angle_magnetic_a0_1": ["transmission", "--kind", "magnetic", "--k", "1", "--a0", "1", *ALPHA],
    "transmission_angle_magnetic_a0_0.25": ["transmission", "--kind", "magnetic", "--k", "1", "--a0", "0.25", *ALPHA],
    "transmission_energy_magnetic_a0_4": ["transmission", "--kind", "magnetic", "--k", "1", "--a0", "4",
                                          "--sweep", "E", "--grid", "1.05", "12", "120"],
    "transmission_angle_electric_v0_8": ["transmission", "--kind", "electric", "--k", "1", "--v0", "8", *ALPHA],
    "transmission_angle_electric_v0_1": ["transmission", "--kind", "electric", "--k", "1", "--v0", "1", *ALPHA],
    "transmission_angle_electric_v0_0.125": ["transmission", "--kind", "electric", "--k", "1", "--v0", "0.125", *ALPHA],
    "transmission_energy_electric_v0_8": ["transmission", "--kind", "electric", "--k", "1", "--v0", "8",
                                          "--sweep", "E", "--grid", "1.05", "12", "120"],
    "curves_k_magnetic_a0_4": ["bound-spectrum", "--kind", "magnetic", "--a0", "4", "--curves", "k",
                               "--grid", "-8", "8", "33", "--grid-points", "400"],
    "curves_strength_magnetic_k_-3": ["bound-spectrum", "--kind", "magnetic", "--a0", "4", "--k", "-3",
                                      "--curves", "strength", "--grid", "0.25", "10", "40", "--grid-points", "400"],
    "curves_strength_electric_k_2.5": ["bound-spectrum", "--kind", "electric", "--v0", "4", "--k", "2.5",
                                       "--curves", "strength", "--grid", "-10", "10", "41", "--grid-points", "400"],
    "curves_k_electric_v0_4": ["bound-spectrum", "--kind", "electric", "--v0", "4", "--curves", "k",
                               "--grid", "-8", "8", "33", "--grid-points", "400"],
    "join_magnetic_a0_4": ["bound-spectrum", "--kind", "magnetic", "--a0", "4", "--join-resonances",
                           "--grid", "-8", "8", "33", "--grid-points", "400"],
    "join_electric_v0_4": ["bound-spectrum", "--kind", "electric", "--v0", "4", "--join-resonances",
                           "--grid", "-8", "8", "33", "--grid-points", "400"],
    "levels_electric_k_2.5_v0_4": ["bound-spectrum", "--kind", "electric", "--k", "2.5", "--v0", "4"],
    "levels_magnetic_k_-3_a0_4": ["bound-spectrum", "--kind", "magnetic", "--k", "-3", "--a0", "4"],
}


def regenerate(out_dir: Path = GOLDEN_DIR):
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, argv in DATASETS.items():
        code = main([*argv, "-o", str(out_dir / f"{name}.csv")])
        if code != 0:
            raise SystemExit(f"{name}: exit code {code}")
    (out_dir / "manifest.json").write_text(json.dumps(DATASETS, indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    regenerate()
    print(f"wrote {len(DATASETS)} datasets to {GOLDEN_DIR}")
