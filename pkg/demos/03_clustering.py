"""Cluster the bundled sample insert and inspect the result.

Run:  python demos/03_clustering.py
Writes distance_heatmap.png next to this script.
"""

from importlib import resources
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from leafletqa import DistanceParams, build_distance_matrix, build_model

text = (
    resources.files("leafletqa.data")
    .joinpath("sample_insert.txt")
    .read_text(encoding="utf-8")
)
model = build_model(text)
s = model.stats

print(f"documents        {s.documents}")
print(f"tokens           {s.tokens}")
print(f"relevant terms   {s.relevant_terms} ({100 * s.relevant_fraction:.2f}%)")
print(f"clusters         {s.clusters}")

# Centers are picked greedily by potential; each subtraction clears the
# neighbourhood of the accepted center so the next one lands elsewhere.
print("\ncenters in selection order:")
for k, (code, pot) in enumerate(
    zip(model.clusters.centers, model.clusters.center_potentials)
):
    print(f"  {k}: {model.vocabulary.stem_of(code)!r:14s} potential {pot:9.2f}")

print("\nstrong members (membership > 0.5) per cluster:")
for cluster in model.cluster_report():
    members = ", ".join(
        f"{m['stem']}({m['membership']:.2f})" for m in cluster["members"][:8]
    )
    print(f"  cluster {cluster['index']} [{cluster['center_stem']}]: {members}")

# The classic distance diagram: light cells mean close words.
D = build_distance_matrix(model.vocabulary, DistanceParams(model.config.a, model.config.b))
fig, ax = plt.subplots(figsize=(6, 5))
image = ax.imshow(D, cmap="gray_r")
ax.set_xlabel("word code")
ax.set_ylabel("word code")
ax.set_title("word distance (white = close)")
fig.colorbar(image, ax=ax)
out = Path(__file__).with_name("distance_heatmap.png")
fig.savefig(out, dpi=120, bbox_inches="tight")
print(f"\nwrote {out}")
