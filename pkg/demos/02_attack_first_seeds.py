"""Attack the first six training digits and save the before/after images.

For each seed we keep three pictures: the digit, what the autoencoder makes
of it, and the adversarial image.  They are tiled into ``demo_grid.pgm``,
which any image viewer that reads PGM can open.
"""

from pathlib import Path

from _common import load_data, model_pair
from latentga import attack, metrics
from latentga.attack import AttackConfig
from latentga.numerics import make_rng

OUT = Path("demo_output")

train, _ = load_data()
ae, clf = model_pair(train)
config = AttackConfig()

rows, triplets = [], []
for idx in range(6):
    result = attack.run_attack(ae, clf, train.images[idx], int(train.labels[idx]), config,
                               rng=make_rng([config.seed, idx]))
    rows.append(result.to_row(idx))
    triplets.append((result.seed_image, result.reconstruction, result.adversarial))
    status = "fooled" if result.success else "held"
    print(f"seed {idx}: {result.seed_label} -> {result.predicted_label} ({status}), "
          f"confidence {result.confidence:.4f}, {result.wall_time:.1f}s")

summary = metrics.summarize(rows, "ga")
metrics.emit_report([summary], OUT, triplets=triplets)
print(f"\nsuccess rate {summary.success_rate:.2f}; "
      f"mean L2 per pixel {summary.mean_l2_per_pixel_vs_original:.5f}")
print(f"wrote {OUT}/report.md and {OUT}/grid.pgm")
