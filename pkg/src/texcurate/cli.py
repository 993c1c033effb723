"""Command-line front end: crop, extract, curate, fisher, classify.

Settings resolve as command-line flag, then ``--config`` JSON file, then
built-in default. Directory listings are sorted so every command is
reproducible.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import classify as clf
from .curation import curate, fisher
from .features import (
    FeatureConfig,
    fit_bounds,
    extract_with,
    normalize_pool,
    read_csv,
    write_csv,
    write_manifest,
)
from .image import SUPPORTED_SUFFIXES, CropSpec, ImageError, crop_windows, load_gray, save_pgm, window_offsets
from .lbp import LbpConfig

log = logging.getLogger("texcurate")

DEFAULTS = {
    "levels": 256,
    "gtdm_levels": 32,
    "gtdm_k": 1,
    "eps": 1e-6,
    "lbp_p": 8,
    "lbp_r": 1,
    "lbp_ut": None,
    "window": 128,
    "stride": 64,
    "n": None,
    "seed": 0,
    "max_iter": 100,
    "k": [1, 3, 5],
    "trials": 10,
    "train_frac": 0.4,
    "metric": "euclidean",
    "jobs": 1,
}


class CliError(Exception):
    pass


def list_images(root: Path) -> list[Path]:
    if not root.is_dir():
        raise CliError(f"{root}: not a readable directory")
    found = [p for p in root.rglob("*") if p.is_file() and p.suffix.lower() in SUPPORTED_SUFFIXES]
    return sorted(found, key=lambda p: p.relative_to(root).as_posix())


def resolve(args: argparse.Namespace) -> dict:
    cfg = dict(DEFAULTS)
    if getattr(args, "config", None):
        try:
            loaded = json.loads(Path(args.config).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise CliError(f"{args.config}: cannot read config ({exc})") from exc
        unknown = set(loaded) - set(DEFAULTS)
        if unknown:
            raise CliError(f"{args.config}: unknown keys {sorted(unknown)}")
        cfg.update(loaded)
    for key in DEFAULTS:
        val = getattr(args, key, None)
        if val is not None:
            cfg[key] = val
    return cfg


def feature_config(cfg: dict) -> FeatureConfig:
    return FeatureConfig(
        gtdm_K=cfg["gtdm_k"],
        eps=cfg["eps"],
        gtdm_levels=cfg["gtdm_levels"],
        lbp=LbpConfig(cfg["lbp_p"], cfg["lbp_r"], cfg["lbp_ut"]),
    )


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# -- commands ------------------------------------------------------------

def cmd_crop(args) -> int:
    cfg = resolve(args)
    src, dst = Path(args.input_dir), Path(args.output_dir)
    spec = CropSpec(cfg["window"], cfg["stride"])
    images = list_images(src)
    if not images:
        log.warning("%s: no PNG/PGM images found", src)
    try:
        dst.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise CliError(f"{dst}: cannot create output directory ({exc})") from exc
    manifest: dict[str, list[str]] = {}
    failed = 0
    for path in images:
        rel = path.relative_to(src)
        try:
            img = load_gray(path, cfg["levels"])
            windows = crop_windows(img, spec)
        except ImageError as exc:
            log.error("%s", exc)
            failed += 1
            continue
        outdir = dst / rel.parent
        outdir.mkdir(parents=True, exist_ok=True)
        names = []
        for (r, c), win in zip(window_offsets(img, spec), windows):
            name = f"{path.stem}_r{r}_c{c}.pgm"
            save_pgm(win, outdir / name)
            names.append((rel.parent / name).as_posix())
        manifest[rel.as_posix()] = names
    doc = {"window": spec.window, "stride": spec.stride, "levels": cfg["levels"], "sources": manifest}
    (dst / "manifest.json").write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return 1 if failed else 0


def _extract_one(job):
    path, levels, fcfg, source_id = job
    try:
        return extract_with(load_gray(path, levels), fcfg, source_id), None
    except (ImageError, ValueError) as exc:
        return None, f"{path}: {exc}"


def cmd_extract(args) -> int:
    cfg = resolve(args)
    src = Path(args.input_dir)
    fcfg = feature_config(cfg)
    images = list_images(src)
    if not images:
        log.warning("%s: no PNG/PGM images found", src)
    jobs = [(p, cfg["levels"], fcfg, p.relative_to(src).with_suffix("").as_posix()) for p in images]
    if cfg["jobs"] > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(cfg["jobs"]) as ex:
            results = list(ex.map(_extract_one, jobs))
    else:
        results = [_extract_one(j) for j in jobs]

    vectors, labels, failed = [], [], 0
    for (path, *_), (vec, err) in zip(jobs, results):
        if err:
            log.error("%s", err)
            failed += 1
            continue
        vectors.append(vec)
        labels.append(path.relative_to(src).parts[0] if len(path.relative_to(src).parts) > 1 else "")
    out = Path(args.out or "features.csv")
    write_csv(out, vectors, labels if args.labels else None)
    if vectors:
        write_manifest(out.with_suffix(".json"), fit_bounds(vectors), fcfg, cfg["levels"])
    log.info("wrote %d rows to %s", len(vectors), out)
    return 1 if failed else 0


def _load_pool(path):
    try:
        vectors, labels = read_csv(path)
    except (OSError, ValueError) as exc:
        raise CliError(str(exc)) from exc
    if not vectors:
        raise CliError(f"{path}: no feature rows")
    return vectors, labels


def _prepare(vectors, raw: bool):
    # min-max over the file's own rows unless the values are already normalised
    return vectors if raw else normalize_pool(vectors)[0]


def cmd_curate(args) -> int:
    cfg = resolve(args)
    vectors, _ = _load_pool(args.features)
    if cfg["n"] is None:
        raise CliError("--n is required")
    if not 1 <= cfg["n"] <= len(vectors):
        raise CliError(f"--n must lie in [1, {len(vectors)}], got {cfg['n']}")
    normed = _prepare(vectors, args.raw)
    result = curate(normed, cfg["n"], cfg["seed"], cfg["max_iter"])
    _emit(result.to_json(), args.out)
    return 0


def cmd_fisher(args) -> int:
    vectors, _ = _load_pool(args.features)
    normed = _prepare(vectors, args.raw)
    _emit(f"{fisher(normed):.6f}\n", args.out)
    return 0


def cmd_classify(args) -> int:
    cfg = resolve(args)
    vectors, labels = _load_pool(args.features)
    if labels is None:
        raise CliError(f"{args.features}: missing 'label' column")
    normed = _prepare(vectors, args.raw)
    data = [clf.LabeledVector(v, lab) for v, lab in zip(normed, labels)]
    try:
        reports = [
            clf.evaluate(data, k, cfg["trials"], cfg["train_frac"], cfg["seed"], cfg["metric"])
            for k in cfg["k"]
        ]
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    print(clf.format_table(reports))
    if args.out:
        Path(args.out).write_text(clf.reports_to_json(reports), encoding="utf-8")
    return 0


# -- parser --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="texcurate", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file with default settings")
    common.add_argument("--out", help="output path")

    raw = argparse.ArgumentParser(add_help=False)
    raw.add_argument("--raw", action="store_true", help="use CSV values as given (skip min-max normalisation)")

    feat = argparse.ArgumentParser(add_help=False)
    feat.add_argument("--levels", type=int, help="gray levels for histogram/LBP (default 256)")
    feat.add_argument("--gtdm-levels", type=int, help="gray levels for the GTDM path (default 32)")
    feat.add_argument("--gtdm-k", type=int, help="GTDM window half-size (default 1)")
    feat.add_argument("--eps", type=float, help="GTDM regulariser (default 1e-6)")
    feat.add_argument("--lbp-p", type=int, help="LBP neighbour count (default 8)")
    feat.add_argument("--lbp-r", type=int, help="LBP radius (default 1)")
    feat.add_argument("--lbp-ut", type=int, help="LBP uniformity threshold (default P/4)")

    c = sub.add_parser("crop", parents=[common], help="cut images into overlapping windows")
    c.add_argument("input_dir")
    c.add_argument("output_dir")
    c.add_argument("--levels", type=int)
    c.add_argument("--window", type=int)
    c.add_argument("--stride", type=int)
    c.set_defaults(func=cmd_crop)

    e = sub.add_parser("extract", parents=[common, feat], help="write the features CSV")
    e.add_argument("input_dir")
    e.add_argument("--labels", action="store_true", help="label rows by first sub-directory")
    e.add_argument("--jobs", type=int)
    e.set_defaults(func=cmd_extract)

    k = sub.add_parser("curate", parents=[common, raw], help="select N diverse candidates")
    k.add_argument("features")
    k.add_argument("--n", type=int)
    k.add_argument("--seed", type=int)
    k.add_argument("--max-iter", type=int)
    k.set_defaults(func=cmd_curate)

    f = sub.add_parser("fisher", parents=[common, raw], help="Fisher diversity of a feature set")
    f.add_argument("features")
    f.set_defaults(func=cmd_fisher)

    s = sub.add_parser("classify", parents=[common, raw], help="repeated-split KNN accuracy")
    s.add_argument("features")
    s.add_argument("--k", type=int, nargs="+")
    s.add_argument("--trials", type=int)
    s.add_argument("--train-frac", type=float)
    s.add_argument("--seed", type=int)
    s.add_argument("--metric", choices=clf.METRICS)
    s.set_defaults(func=cmd_classify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
    )
    try:
        return args.func(args)
    except (CliError, ImageError, ValueError) as exc:
        log.error("%s", exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
