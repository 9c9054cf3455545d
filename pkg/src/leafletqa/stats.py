"""CSV exports of the model statistics behind the usual diagnostic plots."""

from __future__ import annotations

import csv
from pathlib import Path

import numpy as np

from .distances import DistanceParams, build_distance_matrix, export_distance_csv
from .model import InsertModel


def _write_rows(path: Path, header, rows) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


def write_stats_bundle(model: InsertModel, outdir) -> list[Path]:
    """Emit the full statistics bundle into outdir; returns written paths.

    Files: word frequencies (full and top 40), the recomputed distance
    matrix, the full membership matrix, a per-cluster summary (including
    how many words have membership above 0.5, exactly 1, and above 0.999)
    and the above-0.5 member detail.
    """
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []

    by_frequency = sorted(
        model.vocabulary.entries, key=lambda e: (-e.frequency, e.stem)
    )
    freq_rows = [(e.stem, e.code, e.frequency) for e in by_frequency]
    path = outdir / "word_frequencies.csv"
    _write_rows(path, ("stem", "code", "frequency"), freq_rows)
    written.append(path)

    path = outdir / "word_frequencies_top40.csv"
    _write_rows(path, ("stem", "code", "frequency"), freq_rows[:40])
    written.append(path)

    D = build_distance_matrix(
        model.vocabulary, DistanceParams(a=model.config.a, b=model.config.b)
    )
    path = outdir / "distance_matrix.csv"
    export_distance_csv(D, path)
    written.append(path)

    U = model.clusters.U
    path = outdir / "membership_matrix.csv"
    _write_rows(
        path,
        ("stem",) + tuple(f"cluster_{k}" for k in range(U.shape[1])),
        (
            (model.vocabulary.stem_of(i),) + tuple(repr(float(x)) for x in U[i])
            for i in range(U.shape[0])
        ),
    )
    written.append(path)

    summary_rows = []
    member_rows = []
    for cluster in model.cluster_report(threshold=0.5):
        k = cluster["index"]
        column = U[:, k]
        summary_rows.append(
            (
                k,
                cluster["center_stem"],
                repr(cluster["potential"]),
                int(np.sum(column > 0.5)),
                int(np.sum(column == 1.0)),
                int(np.sum(column >= 0.999)),
            )
        )
        for member in cluster["members"]:
            member_rows.append(
                (k, cluster["center_stem"], member["stem"], repr(member["membership"]))
            )
    path = outdir / "clusters.csv"
    _write_rows(
        path,
        (
            "cluster",
            "center_stem",
            "potential",
            "members_over_0.5",
            "members_exactly_1",
            "members_at_least_0.999",
        ),
        summary_rows,
    )
    written.append(path)

    path = outdir / "cluster_members.csv"
    _write_rows(path, ("cluster", "center_stem", "stem", "membership"), member_rows)
    written.append(path)
    return written
