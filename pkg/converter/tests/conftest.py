"""Synthetic raw-file builders shared by the converter tests."""
import pickle

import numpy as np
import pytest
import scipy.sparse as sp


def one_hot(labels, k):
    out = np.zeros((len(labels), k))
    out[np.arange(len(labels)), labels] = 1.0
    return out


def write_raw(raw_dir, name, *, n_allx, d_x, d_y, n_train, test_order,
              graph, mutate=None):
    """Materialize a consistent ind.<name>.* family in `raw_dir`.

    Node i gets a single nonzero feature (column i % d_x, value i + 1) and
    class i % d_y, so tests can recognize every row after reordering.
    `test_order` is the file order of the test block (ids may skip values,
    producing gap nodes). `mutate` may edit the blob dict before writing.
    """
    ids = np.arange(max(test_order) + 1)  # gaps still get an id
    full = sp.csr_matrix((ids + 1.0, (ids, ids % d_x)),
                         shape=(ids.size, d_x))
    labels = ids % d_y
    test_order = np.asarray(test_order, dtype=np.int64)

    blobs = {
        "x": full[:n_train],
        "y": one_hot(labels[:n_train], d_y),
        "allx": full[:n_allx],
        "ally": one_hot(labels[:n_allx], d_y),
        "tx": sp.csr_matrix(sp.vstack([full[i] for i in test_order])),
        "ty": one_hot(labels[test_order], d_y),
        "graph": graph,
        "test.index": "\n".join(str(i) for i in test_order) + "\n",
    }
    if mutate:
        mutate(blobs)
    raw_dir.mkdir(parents=True, exist_ok=True)
    for suffix, blob in blobs.items():
        path = raw_dir / f"ind.{name}.{suffix}"
        if suffix == "test.index":
            path.write_text(blob, encoding="utf-8")
        else:
            with open(path, "wb") as fh:
                pickle.dump(blob, fh, protocol=2)
    return blobs


@pytest.fixture
def tiny_raw(tmp_path):
    """10 nodes: 6 allx rows, test ids {6,7,9} in file order [7,9,6], gap 8."""
    raw = tmp_path / "raw"
    write_raw(raw, "toy", n_allx=6, d_x=4, d_y=3, n_train=3,
              test_order=[7, 9, 6],
              graph={0: [1, 1, 2], 1: [0], 2: [0, 2], 6: [7], 7: [6],
                     9: [0]})
    return raw


@pytest.fixture
def big_raw(tmp_path):
    """520 nodes, enough unlabeled rows for the standard 500-node val pool."""
    raw = tmp_path / "raw"
    order = [517, 510, 519, 512, 515, 511, 513, 516]  # gaps: 514, 518
    graph = {i: [(i + 1) % 520, (i + 7) % 520] for i in range(0, 520, 3)}
    write_raw(raw, "big", n_allx=510, d_x=12, d_y=5, n_train=6,
              test_order=order, graph=graph)
    return raw
