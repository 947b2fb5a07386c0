"""Small synthetic datasets, bundled in UCR format."""
from importlib import resources
from pathlib import Path

import numpy as np

from .bench import LabeledDataset, load_ucr

# Two plateaus-and-valley motifs. After quantization the first has a valley
# at level 51, the second at level 21, so their diagrams differ while every
# horizontal shift of a motif keeps its diagram.
MOTIFS = {
    "A": np.array([10.0, 5.0, 10.0]),
    "B": np.array([10.0, 2.0, 10.0]),
}


def shifted_motif(motif, offset, length):
    s = np.zeros(length)
    s[offset:offset + motif.size] = motif
    return s


def translation_toy(length=48):
    """Two classes whose members are horizontal shifts of one motif.

    Test items are placed where the other class sits in the training split,
    so raw L1 nearest neighbours pick the wrong class for some of them while
    the topological transform is blind to the shift.
    """
    train_offsets = {"A": (4, 9), "B": (30, 35)}
    test_offsets = {"A": (28, 33, 6), "B": (2, 7, 38)}

    def rows(offsets):
        return [(label, shifted_motif(MOTIFS[cls], off, length))
                for label, cls in ((1, "A"), (2, "B")) for off in offsets[cls]]

    return LabeledDataset("ToyTranslation", rows(train_offsets), rows(test_offsets))


def noisy_sines(n_train=15, n_test=15, length=40, seed=0, vary_length=False, noise=0.8):
    """Three classes of noisy sinusoids of different frequency.

    One test value is missing. With ``vary_length`` the series lose up to
    4 trailing samples each.
    """
    rng = np.random.default_rng(seed)
    freqs = {1: 1.0, 2: 2.0, 3: 3.0}

    def make(n):
        rows = []
        for k in range(n):
            label = 1 + k % 3
            m = length - int(rng.integers(0, 5)) if vary_length else length
            t = np.linspace(0, 2 * np.pi, m)
            phase = rng.uniform(0, 2 * np.pi)
            s = np.sin(freqs[label] * t + phase) + rng.normal(scale=noise, size=m)
            rows.append((label, np.round(s, 4)))
        return rows

    train, test = make(n_train), make(n_test)
    test[0][1][5] = np.nan
    return LabeledDataset("ToySines", train, test)


BUNDLED = ("ToyTranslation", "ToySines")


def bundled_path(name):
    """Directory of a bundled dataset."""
    if name not in BUNDLED:
        raise KeyError(f"no bundled dataset {name!r}; available: {', '.join(BUNDLED)}")
    return Path(resources.files("tdats") / "data" / name)


def load_bundled(name):
    return load_ucr(bundled_path(name))
