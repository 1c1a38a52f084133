"""Generate a spec file, run the full verification battery, render the image.

This drives the same machinery as the `galpha` command line:
  galpha gen --seed 11 --atoms 4 --alpha 0.3 --out member.json
  galpha verify member.json
  galpha render member.json --format svg --out member.svg
"""

import tempfile
from pathlib import Path

from galpha.cli import main

workdir = Path(tempfile.mkdtemp(prefix="galpha-demo-"))
spec_path = workdir / "member.json"

print("== gen ==")
main(["gen", "--seed", "11", "--atoms", "4", "--alpha", "0.3",
      "--out", str(spec_path)])

print("\n== verify ==")
code = main(["verify", str(spec_path)])
print(f"exit code: {code}")

print("\n== render ==")
svg_path = workdir / "member.svg"
main(["render", str(spec_path), "--radius", "0.98", "--samples", "720",
      "--format", "svg", "--out", str(svg_path)])
print(f"wrote {svg_path} ({svg_path.stat().st_size} bytes)")
print(f"machine report: {workdir / 'member.report.json'}")
