"""Shared setup for the demo scripts: locate MNIST and get a model pair."""

import os
import sys
from pathlib import Path

from latentga import models
from latentga.data import load_mnist
from latentga.numerics import make_rng

ROOT = Path(__file__).resolve().parents[1]
DATA_DIR = Path(os.environ.get("LATENTGA_DATA_DIR", ROOT / "data" / "mnist"))
REFERENCE_DIR = ROOT / "reference" / "models"


def load_data():
    if not (DATA_DIR / "train-images-idx3-ubyte").is_file():
        sys.exit(f"MNIST not found in {DATA_DIR}; see README.md for how to fetch it")
    return load_mnist(DATA_DIR, "train"), load_mnist(DATA_DIR, "test")


def model_pair(train, quick_images=6000):
    """The cached reference models if present, otherwise a quick one-epoch pair.

    The quick pair trains in well under a minute and is good enough to watch
    the attack work, though its numbers are not the reference ones.
    """
    ae_path, clf_path = REFERENCE_DIR / "autoencoder.model", REFERENCE_DIR / "classifier.model"
    if ae_path.exists() and clf_path.exists():
        print(f"using reference models from {REFERENCE_DIR}")
        return models.load_model(ae_path), models.load_model(clf_path)
    print(f"no reference models; training a quick pair on {quick_images} images")
    subset = train.head(quick_images)
    ae, _ = models.train_autoencoder(subset, epochs=1, rng=make_rng(0))
    clf = models.train_classifier(subset, epochs=2, rng=make_rng(0))
    return ae, clf
