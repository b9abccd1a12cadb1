"""Convert raw Planetoid pickles into plain-text dataset directories.

Input: the eight `ind.<name>.*` files as distributed with the Planetoid
datasets (x, y, tx, ty, allx, ally, graph, test.index).  Output: a directory
holding meta.json, graph.txt ("i j" per undirected edge), features.txt
("i k v" nonzero triplets), labels.txt (one integer per node), and
splits/fixed.json with the standard 20-per-class/500/1000 partition.

The node order follows the allx/tx convention: labeled training nodes first,
then unlabeled nodes, then the test block permuted into the positions named
by test.index.  CiteSeer's test block skips some ids; those isolated nodes
get all-zero feature rows and class 0 (their label one-hots are all zero,
matching the common preprocessing of this corpus).
"""
from __future__ import annotations

import json
import pickle
import sys
import warnings
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import scipy.sparse as sp

SUFFIXES = ("x", "y", "tx", "ty", "allx", "ally", "graph", "test.index")


class ConvertError(ValueError):
    """Missing or inconsistent raw input files."""


@dataclass(frozen=True)
class Converted:
    """Summary of one conversion, returned for logging and tests."""

    name: str
    n: int
    d_x: int
    d_y: int
    num_edges: int
    num_train: int
    num_val: int
    num_test: int
    filled_test_gaps: int


def _load_pickle(path: Path):
    # old pickles name scipy-internal modules that now warn on import
    with open(path, "rb") as fh, warnings.catch_warnings():
        warnings.filterwarnings("ignore", category=DeprecationWarning)
        return pickle.load(fh, encoding="latin1")


def read_raw(raw_dir, name: str) -> dict:
    """Load the eight raw files for one dataset; checks presence and shapes."""
    raw_dir = Path(raw_dir)
    blobs = {}
    for suffix in SUFFIXES:
        path = raw_dir / f"ind.{name}.{suffix}"
        if not path.is_file():
            raise ConvertError(f"{path}: missing raw file")
        if suffix == "test.index":
            text = path.read_text(encoding="utf-8").split()
            try:
                blobs[suffix] = np.asarray([int(t) for t in text], dtype=np.int64)
            except ValueError as exc:
                raise ConvertError(f"{path}: non-integer test index: {exc}") from exc
        else:
            blobs[suffix] = _load_pickle(path)
    for key in ("x", "tx", "allx"):
        blobs[key] = sp.csr_matrix(blobs[key])
    for key in ("y", "ty", "ally"):
        blobs[key] = np.asarray(blobs[key])
    if blobs["x"].shape[1] != blobs["allx"].shape[1]:
        raise ConvertError(f"{name}: x and allx disagree on feature width")
    if blobs["tx"].shape[1] != blobs["allx"].shape[1]:
        raise ConvertError(f"{name}: tx and allx disagree on feature width")
    if blobs["ally"].shape[0] != blobs["allx"].shape[0]:
        raise ConvertError(f"{name}: ally and allx disagree on node count")
    if blobs["ty"].shape[0] != blobs["tx"].shape[0]:
        raise ConvertError(f"{name}: ty and tx disagree on node count")
    return blobs


def assemble(blobs: dict, name: str):
    """Stitch the raw blocks into (features, labels, edges, split, gaps).

    Features come back as CSR with raw (unnormalized) values; labels as an
    int vector (argmax of the one-hot rows, zero rows map to class 0).

    The raw layout convention: node ids 0..len(allx)-1 are the allx rows and
    the test ids occupy [len(allx), n).  tx row r holds the features of node
    test.index[r] (file order).  Ids inside the test range but absent from
    test.index are isolated gap nodes padded with zero rows.
    """
    test_idx = blobs["test.index"]
    if test_idx.size == 0:
        raise ConvertError(f"{name}: empty test.index")
    if np.unique(test_idx).size != test_idx.size:
        raise ConvertError(f"{name}: duplicate ids in test.index")
    test_sorted = np.sort(test_idx)
    tx, ty = blobs["tx"], blobs["ty"]
    n_allx = blobs["allx"].shape[0]
    lo, hi = int(test_sorted[0]), int(test_sorted[-1])
    if lo != n_allx:
        raise ConvertError(
            f"{name}: test ids start at {lo}, expected {n_allx} (allx rows)")

    gaps = (hi - lo + 1) - test_idx.size
    if gaps:
        # place file-order rows at their sorted offsets; gap offsets stay zero
        tx_full = sp.lil_matrix((hi - lo + 1, tx.shape[1]))
        tx_full[test_sorted - lo, :] = tx
        tx = sp.csr_matrix(tx_full)
        ty_full = np.zeros((hi - lo + 1, ty.shape[1]))
        ty_full[test_sorted - lo, :] = ty
        ty = ty_full
    elif tx.shape[0] != test_idx.size:
        raise ConvertError(f"{name}: {tx.shape[0]} tx rows for "
                           f"{test_idx.size} test ids")

    features = sp.vstack([blobs["allx"], tx]).tolil()
    labels_1h = np.vstack([blobs["ally"], ty])
    n = features.shape[0]
    if hi != n - 1:
        raise ConvertError(f"{name}: test ids end at {hi}, expected {n - 1}")
    # rows currently sit in file order at the sorted positions; the swap
    # below moves each row to its true id (the right side copies first)
    features[test_idx, :] = features[test_sorted, :]
    labels_1h[test_idx, :] = labels_1h[test_sorted, :]
    features = sp.csr_matrix(features)
    labels = labels_1h.argmax(axis=1).astype(np.int64)

    graph = blobs["graph"]
    edges = []
    for i, nbrs in graph.items():
        if not 0 <= int(i) < n:
            raise ConvertError(f"{name}: graph key {i} outside [0, {n})")
        for j in nbrs:
            if not 0 <= int(j) < n:
                raise ConvertError(f"{name}: neighbor {j} of {i} outside [0, {n})")
            if int(i) != int(j):
                edges.append((int(i), int(j)))

    n_train = blobs["y"].shape[0]
    split = {
        "train": list(range(n_train)),
        "val": list(range(n_train, n_train + 500)),
        "test": [int(t) for t in test_sorted],
    }
    return features, labels, edges, split, gaps


def write_output(out_dir, name, features, labels, edges, split) -> int:
    """Write the dataset directory; returns the deduplicated edge count."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    n, d_x = features.shape
    d_y = int(labels.max()) + 1

    # dedupe to undirected pairs i < j
    pairs = {(min(i, j), max(i, j)) for i, j in edges if i != j}
    with open(out_dir / "graph.txt", "w", encoding="utf-8", newline="\n") as fh:
        for i, j in sorted(pairs):
            fh.write(f"{i} {j}\n")

    coo = features.tocoo()
    order = np.lexsort((coo.col, coo.row))
    with open(out_dir / "features.txt", "w", encoding="utf-8", newline="\n") as fh:
        for i, k, v in zip(coo.row[order], coo.col[order], coo.data[order]):
            fh.write(f"{i} {k} {v:.17g}\n")

    with open(out_dir / "labels.txt", "w", encoding="utf-8", newline="\n") as fh:
        for lab in labels:
            fh.write(f"{int(lab)}\n")

    meta = {
        "name": name,
        "n": int(n),
        "d_x": int(d_x),
        "d_y": d_y,
        "class_names": [f"class_{c}" for c in range(d_y)],
    }
    with open(out_dir / "meta.json", "w", encoding="utf-8", newline="\n") as fh:
        json.dump(meta, fh, indent=2)
        fh.write("\n")

    (out_dir / "splits").mkdir(exist_ok=True)
    with open(out_dir / "splits" / "fixed.json", "w", encoding="utf-8",
              newline="\n") as fh:
        json.dump(split, fh)
        fh.write("\n")
    return len(pairs)


def convert(raw_dir, name: str, out_dir, log=sys.stderr) -> Converted:
    """Full pipeline: read raw pickles, assemble, write the text directory."""
    blobs = read_raw(raw_dir, name)
    features, labels, edges, split, gaps = assemble(blobs, name)
    num_edges = write_output(out_dir, name, features, labels, edges, split)
    result = Converted(name=name, n=features.shape[0], d_x=features.shape[1],
                       d_y=int(labels.max()) + 1, num_edges=num_edges,
                       num_train=len(split["train"]), num_val=len(split["val"]),
                       num_test=len(split["test"]), filled_test_gaps=gaps)
    if log is not None:
        print(f"{name}: n={result.n} d_x={result.d_x} d_y={result.d_y} "
              f"edges={result.num_edges} train/val/test="
              f"{result.num_train}/{result.num_val}/{result.num_test} "
              f"gap_rows={result.filled_test_gaps}", file=log)
    return result
