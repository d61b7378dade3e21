"""Write every plot dataset at full resolution into one directory.

    python3 scripts/figure_data.py [OUT_DIR] [--jobs N]

Each entry is a plain CLI invocation, so any single dataset can be
reproduced by hand with the same flags (see docs/figures.md).
"""
import argparse
import time
from pathlib import Path

from diracguide.cli import main

FULL = {
    # classical region diagrams
    "regions_electric_Ek_v0_1": ["classical-regions", "--kind", "electric", "--v0", "1", "--plane", "E-k",
                                 "--e-grid", "-4", "4", "321", "--p-grid", "-4", "4", "321"],
    "regions_electric_Ev0_k_1": ["classical-regions", "--kind", "electric", "--k", "1", "--plane", "E-v0",
                                 "--e-grid", "-4", "4", "321", "--p-grid", "-4", "4", "321"],
    "regions_magnetic_Ek_a0_1": ["classical-regions", "--kind", "magnetic", "--a0", "1", "--plane", "E-k",
                                 "--e-grid", "-4", "4", "321", "--p-grid", "-4", "4", "321"],
    "regions_magnetic_Ea0_k_-2": ["classical-regions", "--kind", "magnetic", "--k", "-2", "--plane", "E-a0",
                                  "--e-grid", "-4", "4", "321", "--p-grid", "-2", "8", "401"],
    # classical rays
    "ray_electric_scattering": ["trajectory", "--kind", "electric", "--k", "1", "--v0", "1", "--E", "2"],
    "ray_electric_grazing": ["trajectory", "--kind", "electric", "--k", "1", "--v0", "1", "--E", "1.0000001"],
    "ray_electric_trapped": ["trajectory", "--kind", "electric", "--k", "1", "--v0", "1", "--E", "0.5"],
    "ray_magnetic_k1_scattering": ["trajectory", "--kind", "magnetic", "--k", "1", "--a0", "1", "--E", "2.2360679774997898"],
    "ray_magnetic_k1_reflection": ["trajectory", "--kind", "magnetic", "--k", "1", "--a0", "1", "--E", "1.5"],
    "ray_magnetic_weak_scattering": ["trajectory", "--kind", "magnetic", "--k", "-2", "--a0", "1",
                                       "--E", "2.8284271247461903"],
    "ray_magnetic_weak_trapped": ["trajectory", "--kind", "magnetic", "--k", "-2", "--a0", "1", "--E", "1.5"],
    "ray_magnetic_shallow_scattering": ["trajectory", "--kind", "magnetic", "--k", "-2", "--a0", "3",
                                        "--E", "2.8284271247461903"],
    "ray_magnetic_deep_scattering": ["trajectory", "--kind", "magnetic", "--k", "-2", "--a0", "6", "--E", "4.5"],
    # transmission
    **{
        f"transmission_angle_magnetic_a0_{a0}": ["transmission", "--kind", "magnetic", "--k", "1", "--a0", a0,
                                                 "--sweep", "alpha", "--grid", "0.01", "1.5607963", "600"]
        for a0 in ("4", "1", "0.25")
    },
    "transmission_energy_magnetic_a0_4": ["transmission", "--kind", "magnetic", "--k", "1", "--a0", "4",
                                          "--sweep", "E", "--grid", "1.001", "20", "2000"],
    **{
        f"transmission_angle_electric_v0_{v0}": ["transmission", "--kind", "electric", "--k", "1", "--v0", v0,
                                                 "--sweep", "alpha", "--grid", "0.01", "1.5607963", "600"]
        for v0 in ("8", "1", "0.125")
    },
    "transmission_energy_electric_v0_8": ["transmission", "--kind", "electric", "--k", "1", "--v0", "8",
                                          "--sweep", "E", "--grid", "1.001", "20", "2000"],
    # bound spectra
    "curves_k_magnetic_a0_4": ["bound-spectrum", "--kind", "magnetic", "--a0", "4", "--curves", "k",
                               "--grid", "-8", "8", "321", "--grid-points", "600"],
    "curves_strength_magnetic_k_-3": ["bound-spectrum", "--kind", "magnetic", "--a0", "4", "--k", "-3",
                                      "--curves", "strength", "--grid", "0.02", "10", "500", "--grid-points", "600"],
    "levels_magnetic_k_-3_a0_4": ["bound-spectrum", "--kind", "magnetic", "--k", "-3", "--a0", "4"],
    "join_magnetic_a0_4": ["bound-spectrum", "--kind", "magnetic", "--a0", "4", "--join-resonances",
                           "--grid", "-8", "8", "321", "--grid-points", "600"],
    "curves_strength_electric_k_2.5": ["bound-spectrum", "--kind", "electric", "--v0", "4", "--k", "2.5",
                                       "--curves", "strength", "--grid", "-10", "10", "501", "--grid-points", "600"],
    "curves_k_electric_v0_4": ["bound-spectrum", "--kind", "electric", "--v0", "4", "--curves", "k",
                               "--grid", "-8", "8", "321", "--grid-points", "600"],
    "levels_electric_k_2.5_v0_4": ["bound-spectrum", "--kind", "electric", "--k", "2.5", "--v0", "4"],
    "join_electric_v0_4": ["bound-spectrum", "--kind", "electric", "--v0", "4", "--join-resonances",
                           "--grid", "-8", "8", "321", "--grid-points", "600"],
    # spinors
    **{
        f"spinor_magnetic_k_-3_a0_4_level_{n}": ["wavefunction", "--kind", "magnetic", "--k", "-3", "--a0", "4",
                                                 "--level", str(n)]
        for n in range(4)
    },
    **{
        f"spinor_electric_k_2.5_v0_4_level_{n}": ["wavefunction", "--kind", "electric", "--k", "2.5", "--v0", "4",
                                                  "--level", str(n)]
        for n in range(4)
    },
}

SWEEPS = ("curves_", "join_")


def run(out_dir: Path, jobs: int = 1):
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, argv in FULL.items():
        extra = ["--jobs", str(jobs)] if name.startswith(SWEEPS) else []
        t = time.perf_counter()
        code = main([*argv, *extra, "-o", str(out_dir / f"{name}.csv")])
        print(f"{name:45s} exit {code}  {time.perf_counter() - t:6.2f} s")
        if code != 0:
            raise SystemExit(code)


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("out_dir", nargs="?", default="figure_data")
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    run(Path(args.out_dir), args.jobs)
