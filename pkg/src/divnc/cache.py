"""On-disk JSON cache of posets.

A cache file stores the sorted tuples and the cover pairs; the order is
rebuilt as the reflexive-transitive closure of the covers and then passes
the same invariant checks as a fresh enumeration.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from .errors import UsageError
from .groups import CONVENTION_TAG
from .ncposet import DEFAULT_MAX_ELEMENTS, NcTuple, build_poset, check_size

CACHE_FORMAT = 1
CACHE_ENV = "DIVNC_CACHE_DIR"


def default_cache_dir():
    value = os.environ.get(CACHE_ENV)
    return Path(value) if value else None


def cache_path(cache_dir, G, m):
    name = G.label.replace("(", "_").replace(")", "")
    return Path(cache_dir) / f"{name}_m{m}.json"


def poset_to_dict(P):
    G = P.group
    return {
        "format_version": CACHE_FORMAT,
        "group_spec": {"family": G.spec.family, "param": G.spec.param, "label": G.label},
        "m": P.m,
        "convention_tag": CONVENTION_TAG,
        "coxeter": G.serialize(G.coxeter),
        "elements": [pi.serialize() for pi in P.elements],
        "cover_pairs": [list(p) for p in P.covers()],
    }


def poset_from_dict(G, data):
    if data.get("format_version") != CACHE_FORMAT:
        raise UsageError(f"unsupported cache format {data.get('format_version')!r}")
    if data.get("convention_tag") != CONVENTION_TAG or data["group_spec"]["label"] != G.label:
        raise UsageError("cache file does not match the requested group")
    c = G.deserialize(data["coxeter"])
    if c != G.coxeter:
        G = G.with_coxeter(c)
    elements = [NcTuple(tuple(G.deserialize(w) for w in parts), G) for parts in data["elements"]]
    covers = [[] for _ in elements]
    for i, j in data["cover_pairs"]:
        covers[i].append(j)
    rank = [int(G.length[pi.parts[0]]) for pi in elements]
    up = [None] * len(elements)
    for i in sorted(range(len(elements)), key=lambda i: -rank[i]):
        acc = {i}
        for j in covers[i]:
            acc.update(up[j])
        up[i] = sorted(acc)
    return build_poset(G, data["m"], elements=elements, up=up)


def write_atomic(path, text):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def save_poset(P, path):
    write_atomic(path, json.dumps(poset_to_dict(P), sort_keys=True, separators=(",", ":")))


def load_poset(G, path):
    with open(path) as fh:
        return poset_from_dict(G, json.load(fh))


def get_poset(G, m, cache_dir=None, max_elements=DEFAULT_MAX_ELEMENTS):
    """Load NC^(m)(W) from the cache if present, otherwise build it (and store it)."""
    if cache_dir is None:
        return build_poset(G, m, max_elements)
    path = cache_path(cache_dir, G, m)
    if path.exists():
        check_size(G, m, max_elements)
        return load_poset(G, path)
    P = build_poset(G, m, max_elements)
    save_poset(P, path)
    return P
