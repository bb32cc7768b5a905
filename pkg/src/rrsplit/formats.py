"""Instance file formats and CSV result output.

edgelist
    first non-comment line ``n m``, then ``m`` lines ``a b`` (0-based ids);
    lines starting with ``#`` are ignored.
lad
    first line ``n``, then one line per vertex: its degree followed by its
    neighbours (0-based). Listings must be symmetric.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .graph import Graph, GraphError, build_graph, iter_members
from .solver import OPTIMAL, SolveReport

FORMATS = ("edgelist", "lad")

CSV_FIELDS = ("instance", "algorithm", "nq", "ng", "best_size", "branches", "elapsed_s", "terminated", "similarity")


class FormatError(GraphError):
    pass


def _int_tokens(line: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise FormatError(f"line {lineno}: expected integers, got {line.strip()!r}") from None


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            out.append((lineno, stripped))
    return out


def parse_edgelist(text: str) -> Graph:
    lines = _content_lines(text)
    if not lines:
        raise FormatError("missing 'n m' header")
    lineno, header = lines[0]
    head = _int_tokens(header, lineno)
    if len(head) != 2 or head[0] < 0 or head[1] < 0:
        raise FormatError(f"line {lineno}: malformed header {header!r}")
    n, m = head
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header announces {m} edges, found {len(body)}")
    edges = []
    for lineno, line in body:
        pair = _int_tokens(line, lineno)
        if len(pair) != 2:
            raise FormatError(f"line {lineno}: expected 'a b', got {line!r}")
        edges.append((pair[0], pair[1]))
    return build_graph(n, edges)


def parse_lad(text: str) -> Graph:
    lines = _content_lines(text)
    if not lines:
        raise FormatError("missing vertex count")
    lineno, first = lines[0]
    head = _int_tokens(first, lineno)
    if len(head) != 1 or head[0] < 0:
        raise FormatError(f"line {lineno}: malformed vertex count {first!r}")
    n = head[0]
    if len(lines) - 1 != n:
        raise FormatError(f"expected {n} adjacency lines, found {len(lines) - 1}")
    listed = []
    for i, (lineno, line) in enumerate(lines[1:]):
        toks = _int_tokens(line, lineno)
        deg, nbrs = toks[0], toks[1:]
        if deg != len(nbrs):
            raise FormatError(f"line {lineno}: vertex {i} declares degree {deg} but lists {len(nbrs)}")
        for j in nbrs:
            if not 0 <= j < n:
                raise FormatError(f"line {lineno}: neighbour {j} out of range")
            if j == i:
                raise FormatError(f"line {lineno}: self-loop at vertex {i}")
        if len(set(nbrs)) != len(nbrs):
            raise FormatError(f"line {lineno}: repeated neighbour for vertex {i}")
        listed.append(set(nbrs))
    for i, nbrs in enumerate(listed):
        for j in nbrs:
            if i not in listed[j]:
                raise FormatError(f"asymmetric adjacency: {j} listed for {i} but not {i} for {j}")
    return build_graph(n, [(i, j) for i, nbrs in enumerate(listed) for j in nbrs if i < j])


def format_edgelist(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{a} {b}" for a, b in edges]
    return "\n".join(lines) + "\n"


def format_lad(g: Graph) -> str:
    lines = [str(g.n)]
    for u in range(g.n):
        nbrs = list(iter_members(g.adj[u]))
        lines.append(" ".join(str(x) for x in [len(nbrs), *nbrs]))
    return "\n".join(lines) + "\n"


PARSERS = {"edgelist": parse_edgelist, "lad": parse_lad}


def read_graph(path: str | Path, fmt: str = "edgelist") -> Graph:
    if fmt not in PARSERS:
        raise FormatError(f"unknown format {fmt!r}")
    return PARSERS[fmt](Path(path).read_text(encoding="utf-8"))


def parse_mapping(text: str) -> list[tuple[int, int]]:
    """Pairs from ``u v`` lines (``#`` comments and blank lines skipped)."""
    pairs = []
    for lineno, line in _content_lines(text):
        toks = _int_tokens(line, lineno)
        if len(toks) != 2:
            raise FormatError(f"line {lineno}: expected 'u v', got {line!r}")
        pairs.append((toks[0], toks[1]))
    return pairs


def format_mapping(pairs: Iterable[tuple[int, int]]) -> str:
    return "".join(f"{u} {v}\n" for u, v in pairs)


@dataclass
class ReportRow:
    instance: str
    algorithm: str
    nq: int
    ng: int
    report: SolveReport

    def as_record(self) -> list[str]:
        r = self.report
        sim = ""
        if r.terminated == OPTIMAL and r.similarity is not None:
            sim = f"{float(r.similarity):.6f}"
        return [
            self.instance,
            self.algorithm,
            str(self.nq),
            str(self.ng),
            str(r.best_size),
            str(r.branches),
            f"{r.elapsed:.6f}",
            r.terminated,
            sim,
        ]


def csv_header() -> str:
    return ",".join(CSV_FIELDS) + "\n"


def csv_row(row: ReportRow) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerow(row.as_record())
    return buf.getvalue()


def write_report_csv(rows: Iterable[ReportRow]) -> str:
    return csv_header() + "".join(csv_row(r) for r in rows)
