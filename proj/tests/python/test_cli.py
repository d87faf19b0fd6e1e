"""End-to-end CLI checks: subcommands, exit codes, file outputs."""

import json
import os
import subprocess
import tempfile

CLI = os.environ["ORBITOPE_CLI"]


def run(*args, expect=0):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    assert proc.returncode == expect, (
        f"exit {proc.returncode} != {expect} for {args}\n{proc.stdout}\n{proc.stderr}"
    )
    return proc


def write(tmp, name, payload):
    path = os.path.join(tmp, name)
    with open(path, "w") as fh:
        json.dump(payload, fh)
    return path


def main():
    with tempfile.TemporaryDirectory() as tmp:
        so4 = write(tmp, "so4.json", {"family": "SquareRealSpecial", "n": 4, "x": [1, 1, 1, 1]})
        so3 = write(tmp, "so3.json", {"family": "SquareRealSpecial", "n": 3, "x": [1, 1, 1]})
        rect = write(tmp, "rect.json", {"family": "RectReal", "m": 3, "n": 2, "x": [2, 1]})
        zero_spec = write(tmp, "zero.json", {"family": "RectReal", "m": 3, "n": 2, "x": [0, 0]})
        refl = write(
            tmp,
            "refl.json",
            {"rows": 3, "cols": 3, "field": "R", "entries": [[1, 0, 0], [0, 1, 0], [0, 0, -1]]},
        )
        origin = write(
            tmp,
            "origin.json",
            {"rows": 3, "cols": 3, "field": "R", "entries": [[0, 0, 0], [0, 0, 0], [0, 0, 0]]},
        )
        bad_shape = write(
            tmp,
            "bad_shape.json",
            {"rows": 2, "cols": 2, "field": "R", "entries": [[1, 0], [0, 1]]},
        )

        # describe: text and json modes.
        out = run("describe", "--spec", so4.__str__()).stdout
        assert "D_4" in out and "half_spin_minus" in out
        desc = json.loads(run("describe", "--spec", so4, "--format", "json").stdout)
        assert desc["facets"] == [
            {"index": 1, "level": 1.0},
            {"index": 3, "level": 1.0},
        ]

        # member: exit 0 inside, 2 outside, 3 shape error, 4 polar of x=0.
        run("member", "--spec", so3, "--y", origin, "--which", "orbitope", expect=0)
        proc = run("member", "--spec", so3, "--y", refl, "--which", "pencil", expect=2)
        assert "half_spin_minus" in proc.stdout
        run("member", "--spec", so3, "--y", bad_shape, expect=3)
        run("member", "--spec", zero_spec, "--y", bad_shape, "--which", "polar", expect=4)

        # malformed spec JSON: nonzero exit.
        bad = os.path.join(tmp, "bad.json")
        with open(bad, "w") as fh:
            fh.write("{not json")
        run("describe", "--spec", bad, expect=1)

        # export: SDPA file exists and starts with the variable count;
        # json metadata names the blocks.
        sdpa = os.path.join(tmp, "rect.dat-s")
        run("export", "--spec", rect, "--target", "orbitope", "--format", "sdpa", "--out", sdpa)
        with open(sdpa) as fh:
            assert fh.readline().strip() == "6"
        ball = write(tmp, "ball.json", {"family": "RectReal", "m": 3, "n": 2, "x": [1, 1]})
        meta_path = os.path.join(tmp, "ball-meta.json")
        run("export", "--spec", ball, "--target", "polar", "--format", "json", "--out", meta_path)
        meta = json.load(open(meta_path))
        assert meta["blocks"][0]["kind"] == "exterior_2"
        # A two-weight base point has no single-block polar pencil.
        proc = run("export", "--spec", rect, "--target", "polar", "--format", "json",
                   "--out", meta_path, expect=1)
        assert "Cartan product" in proc.stderr

        # RectReal with m == n points at SquareRealSpecial, exit 3.
        square_rect = write(tmp, "sq_rect.json", {"family": "RectReal", "m": 3, "n": 3, "x": [1, 1, 1]})
        proc = run("describe", "--spec", square_rect, expect=3)
        assert "SquareRealSpecial" in proc.stderr

        # SO(5) polar pencil: one 16x16 half-spin block.
        so5 = write(tmp, "so5.json", {"family": "SquareRealSpecial", "n": 5, "x": [1, 1, 1, 1, 1]})
        so5_meta = os.path.join(tmp, "so5-meta.json")
        run("export", "--spec", so5, "--target", "polar", "--format", "json", "--out", so5_meta)
        so5_blocks = json.load(open(so5_meta))["blocks"]
        assert so5_blocks == [{"size": 16, "level": 0.5, "kind": "half_spin_plus"}]

        # Oversize request fails gracefully (a regular base point needs
        # every exterior power, and C(50, 10) blows the size cap).
        big = write(tmp, "big.json",
                    {"family": "RectComplex", "m": 30, "n": 20, "x": list(range(20, 0, -1))})
        proc = run("export", "--spec", big, "--target", "orbitope", "--format", "sdpa",
                   "--out", os.path.join(tmp, "big.dat-s"), expect=1)
        assert "cap" in proc.stderr

        # verify: passes, and seed changes preserve the verdict.
        run("verify", "--spec", so3, "--suite", "all", "--samples", "40", "--seed", "0")
        run("verify", "--spec", so3, "--suite", "all", "--samples", "40", "--seed", "7")
        # count=0 smoke mode.
        run("verify", "--spec", rect, "--suite", "kostant", "--samples", "0")

        # unknown flags are rejected.
        proc = subprocess.run([CLI, "describe", "--spec", so4, "--bogus"], capture_output=True, text=True)
        assert proc.returncode != 0  # unknown flags rejected

    print("cli checks passed")


if __name__ == "__main__":
    main()
