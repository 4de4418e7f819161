"""Put the GA next to white-box FGSM on the same twenty seeds.

FGSM reads the classifier's gradient and takes one signed step; the GA sees
only output probabilities.  We sweep FGSM's step size, find the smallest one
that fools as many seeds as the GA did, and compare average perturbation.
"""

from _common import load_data, model_pair
from latentga import attack, fgsm, metrics
from latentga.attack import AttackConfig
from latentga.numerics import make_rng

N_SEEDS = 20

train, _ = load_data()
ae, clf = model_pair(train)
config = AttackConfig()
images, labels = train.images[:N_SEEDS], train.labels[:N_SEEDS]

ga_rows = [attack.run_attack(ae, clf, x, int(y), config, rng=make_rng([config.seed, i])).to_row(i)
           for i, (x, y) in enumerate(zip(images, labels))]
ga = metrics.summarize(ga_rows, "ga")
print(f"GA: {ga.n_success}/{ga.n_seeds} fooled")

by_eps = fgsm.summarize_sweep(fgsm.sweep(clf, images, labels))
for eps, s in by_eps.items():
    l2 = "n/a" if s.mean_l2_per_pixel_vs_original is None else f"{s.mean_l2_per_pixel_vs_original:.5f}"
    print(f"FGSM eps={eps:<5} success {s.success_rate:.2f}  L2/pixel {l2}")

print("\n" + fgsm.compare(ga, by_eps).describe())
