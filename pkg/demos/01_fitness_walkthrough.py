"""How one chromosome is scored.

We take a single training digit, push it through the autoencoder, and score
a handful of hand-made latent noise vectors.  Watch the AP column: it stays
negative while the classifier still sees the true digit and turns positive
once it does not.  Only then do the PS and SD penalties kick in.
"""

import numpy as np

from _common import load_data, model_pair
from latentga import attack
from latentga.attack import AttackConfig, Chromosome
from latentga.numerics import make_rng

train, _ = load_data()
ae, clf = model_pair(train)
x, y = train.images[0], int(train.labels[0])
config = AttackConfig()
ctx = attack.SeedContext.prepare(ae, clf, x, y)

print(f"seed 0 is a {y}; the reconstruction is classified as "
      f"{int(np.argmax(clf.predict_proba(ctx.reconstruction)))}")
print(f"latent code: {ae.latent_dim} values, norm {np.linalg.norm(ctx.latent):.3f}\n")

rng = make_rng(0)
candidates = {"zero noise": np.zeros(ae.latent_dim)}
for scale in (0.5, 1.0, 2.0, 4.0):
    candidates[f"random, norm {scale}"] = rng.normal(size=ae.latent_dim)
    candidates[f"random, norm {scale}"] *= scale / np.linalg.norm(candidates[f"random, norm {scale}"])

print(f"{'chromosome':<18} {'label':>5} {'AP':>8} {'PS':>8} {'SD':>8} {'fitness':>9}")
for name, genes in candidates.items():
    c = attack.evaluate(ctx, Chromosome(genes), config)
    print(f"{name:<18} {c.label:>5} {c.ap:>8.4f} {c.ps:>8.4f} {c.sd:>8.4f} {c.fitness:>9.4f}")

# A random direction only flips the label at a large norm, where the PS and
# SD penalties sink its fitness.  The GA finds a much smaller noise vector
# that flips it with high confidence.
result = attack.run_attack(ae, clf, x, y, config, rng=make_rng([0, 0]))
print(f"\nGA after {result.generations_used} generations: {y} -> {result.predicted_label} "
      f"(confidence {result.confidence:.4f}), SD {result.sd:.4f}, PS {result.ps:.4f}")
