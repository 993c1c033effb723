"""The full file-based pipeline through the ``texcurate`` command.

Writes two synthetic 256x256 class images, crops them into 64x64 windows,
extracts features with class labels, then curates, scores and classifies.
Each step is the Python equivalent of the shell command shown alongside it.
"""
# %%
import tempfile
from pathlib import Path

import numpy as np
from PIL import Image

from texcurate.cli import main
from texcurate.synthetic import checkerboard, grating

work = Path(tempfile.mkdtemp(prefix="texcurate-"))
for label, img in {"stripes": grating(256, 12.0, 0.0), "checks": checkerboard(256, 10)}.items():
    (work / "raw" / label).mkdir(parents=True)
    Image.fromarray(img.pixels.astype(np.uint8)).save(work / "raw" / label / f"{label}.png")

# %%
# texcurate crop raw windows --window 64 --stride 32
main(["crop", str(work / "raw"), str(work / "windows"), "--window", "64", "--stride", "32"])
# texcurate extract windows --labels --out features.csv
main(["extract", str(work / "windows"), "--labels", "--out", str(work / "features.csv")])

# %%
# texcurate curate features.csv --n 4 --seed 0
main(["curate", str(work / "features.csv"), "--n", "4", "--seed", "0", "--out", str(work / "curated.json")])
print((work / "curated.json").read_text()[:200], "...")
# texcurate fisher features.csv
main(["fisher", str(work / "features.csv")])
# texcurate classify features.csv --k 1 3 --trials 5
main(["classify", str(work / "features.csv"), "--k", "1", "3", "--trials", "5"])
print("artifacts in", work)
