"""Plain-text file formats: edge lists, DOT, certificates and decomposition
bundles. Every writer is deterministic so bundles can be diffed byte-for-byte.

Edge list::

    n=4
    0000 0001
    0000 0010
    ...

One edge per line, both labels zero-padded to n characters, sorted by
(min, max). Certificates are ``key=value`` lines; see :func:`cert_to_text`.
"""
from __future__ import annotations

import os
from pathlib import Path
from typing import Union

from .aqcore import Graph, label, parse_label
from .decomposer import Decomposition, HamiltonianCycle
from .ladder import LadderCert

PathLike = Union[str, os.PathLike]

BUNDLE_FILES = ("H.edges", "K.edges", "certH.cert", "certK.cert", "meta")


class FormatError(ValueError):
    pass


def graph_to_edge_list(g: Graph) -> str:
    n = g.n
    lines = [f"n={n}"]
    lines += [f"{label(a, n)} {label(b, n)}" for a, b in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def edge_list_to_graph(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("n="):
        raise FormatError("edge list must start with 'n=<dim>'")
    try:
        n = int(lines[0][2:])
    except ValueError:
        raise FormatError(f"bad header {lines[0]!r}") from None
    if not 1 <= n <= 16:
        raise FormatError(f"dimension {n} out of range")
    pairs = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2 or any(len(p) != n for p in parts):
            raise FormatError(f"bad edge line {ln!r}")
        pairs.append(tuple(parts))
    try:
        pairs = [(parse_label(a), parse_label(b)) for a, b in pairs]
        if len({frozenset(p) for p in pairs}) != len(pairs):
            raise FormatError("duplicate edge in edge list")
        return Graph.from_edges(1 << n, pairs)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def graph_to_dot(g: Graph, name: str = "G") -> str:
    n = g.n
    lines = [f"graph {name} {{"]
    lines += [f'  "{label(v, n)}";' for v in range(g.order)]
    lines += [f'  "{label(a, n)}" -- "{label(b, n)}";' for a, b in g.sorted_edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def _labels(seq, n) -> str:
    return " ".join(label(x, n) for x in seq)


def cert_to_text(cert) -> str:
    if isinstance(cert, HamiltonianCycle):
        return (f"kind=cycle\nn={cert.n}\nlength={len(cert.seq)}\n"
                f"cycle={_labels(cert.seq, cert.n)}\n")
    lines = ["kind=ladder", f"n={cert.n}", f"m={cert.m}",
             f"u={_labels(cert.u, cert.n)}", f"v={_labels(cert.v, cert.n)}"]
    if cert.special_t is not None:
        lines += [f"special_t={cert.special_t}", f"special_dim={cert.special_dim}"]
    return "\n".join(lines) + "\n"


def _fields(text: str) -> dict:
    out = {}
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        key, sep, value = ln.partition("=")
        if not sep:
            raise FormatError(f"expected key=value, got {ln!r}")
        out[key.strip()] = value.strip()
    return out


def text_to_cert(text: str):
    f = _fields(text)
    try:
        n = int(f["n"])
        kind = f.get("kind", "ladder")
        if kind == "cycle":
            seq = tuple(parse_label(s) for s in f["cycle"].split())
            if "length" in f and int(f["length"]) != len(seq):
                raise FormatError("cycle length field does not match the listing")
            return HamiltonianCycle(n, seq)
        u = tuple(parse_label(s) for s in f["u"].split())
        v = tuple(parse_label(s) for s in f["v"].split())
        if "m" in f and int(f["m"]) != len(u):
            raise FormatError("m does not match the u listing")
        t = int(f["special_t"]) if "special_t" in f else None
        d = int(f["special_dim"]) if "special_dim" in f else None
        return LadderCert(n, u, v, special_t=t, special_dim=d)
    except KeyError as exc:
        raise FormatError(f"missing field {exc}") from None
    except ValueError as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(str(exc)) from None


def meta_to_text(d: Decomposition) -> str:
    lines = [f"n={d.n}", f"n1={d.n1}", f"n2={d.n2}"]
    lines += [f"rule.{level}={rule}" for level, rule in d.trace]
    return "\n".join(lines) + "\n"


def write_bundle(d: Decomposition, out: PathLike) -> Path:
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    payload = {
        "H.edges": graph_to_edge_list(d.H),
        "K.edges": graph_to_edge_list(d.K),
        "certH.cert": cert_to_text(d.cert_h),
        "certK.cert": cert_to_text(d.cert_k),
        "meta": meta_to_text(d),
    }
    for name in BUNDLE_FILES:
        (out / name).write_text(payload[name])
    return out


def read_bundle(path: PathLike) -> Decomposition:
    path = Path(path)
    for name in BUNDLE_FILES:
        if not (path / name).is_file():
            raise FormatError(f"bundle is missing {name}")
    meta = _fields((path / "meta").read_text())
    try:
        n, n1, n2 = int(meta["n"]), int(meta["n1"]), int(meta["n2"])
    except (KeyError, ValueError):
        raise FormatError("meta needs integer n, n1, n2") from None
    trace = tuple(sorted(((int(k.split(".", 1)[1]), v) for k, v in meta.items()
                          if k.startswith("rule.")), key=lambda kv: kv[0]))
    return Decomposition(
        n, n1, n2,
        edge_list_to_graph((path / "H.edges").read_text()),
        edge_list_to_graph((path / "K.edges").read_text()),
        text_to_cert((path / "certH.cert").read_text()),
        text_to_cert((path / "certK.cert").read_text()),
        trace,
    )
