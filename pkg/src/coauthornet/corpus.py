"""Bibliographic records: parsing, author reordering, descriptive statistics.

The corpus file format is JSON Lines: one object per line with fields
``paper_id`` (string), ``authors`` (array of strings in byline order),
``corresponding_index`` (optional integer, default 0) and ``year``
(optional integer, carried through but ignored by every analysis).
Author keys are assumed to be disambiguated upstream; comparison is
exact string equality.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable


class CorpusError(ValueError):
    """Raised for malformed corpus input, with the offending line number."""


class OrderingPolicy(str, Enum):
    BYLINE = "byline"
    CORRESPONDING_FIRST = "corresponding_first"


@dataclass(frozen=True)
class BibRecord:
    paper_id: str
    authors: tuple[str, ...]
    corresponding_index: int = 0
    year: int | None = None

    def __post_init__(self) -> None:
        if not self.paper_id:
            raise ValueError("paper_id must be non-empty")
        if not self.authors:
            raise ValueError(f"{self.paper_id}: author list must be non-empty")
        for author in self.authors:
            if not author or not author.strip():
                raise ValueError(f"{self.paper_id}: blank author key")
        if len(set(self.authors)) != len(self.authors):
            raise ValueError(f"{self.paper_id}: duplicate author within record")
        if not 0 <= self.corresponding_index < len(self.authors):
            raise ValueError(
                f"{self.paper_id}: corresponding_index {self.corresponding_index} "
                f"out of range for {len(self.authors)} authors"
            )

    @property
    def n_authors(self) -> int:
        return len(self.authors)


def apply_author_ordering(record: BibRecord, policy: OrderingPolicy) -> tuple[str, ...]:
    """Author list under the given policy.

    BYLINE returns the list unchanged. CORRESPONDING_FIRST promotes the
    corresponding author to the lead position; everyone else keeps their
    original relative order.
    """
    if policy is OrderingPolicy.BYLINE or record.corresponding_index == 0:
        return record.authors
    i = record.corresponding_index
    return (record.authors[i],) + record.authors[:i] + record.authors[i + 1 :]


def parse_corpus(lines: Iterable[str]) -> list[BibRecord]:
    """Parse JSONL records, preserving input order.

    Raises CorpusError naming the 1-based line number on any malformed
    line, duplicate paper_id, duplicate author within a record, or
    out-of-range corresponding_index. Blank lines are skipped; an empty
    stream is a valid empty corpus.
    """
    records: list[BibRecord] = []
    seen_ids: set[str] = set()
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            raw = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CorpusError(f"line {lineno}: invalid JSON ({exc.msg})") from exc
        if not isinstance(raw, dict):
            raise CorpusError(f"line {lineno}: record must be a JSON object")
        try:
            record = _record_from_dict(raw)
        except (ValueError, TypeError) as exc:
            raise CorpusError(f"line {lineno}: {exc}") from exc
        if record.paper_id in seen_ids:
            raise CorpusError(f"line {lineno}: duplicate paper_id {record.paper_id!r}")
        seen_ids.add(record.paper_id)
        records.append(record)
    return records


def _record_from_dict(raw: dict) -> BibRecord:
    paper_id = raw.get("paper_id")
    if not isinstance(paper_id, str):
        raise ValueError("paper_id must be a string")
    authors = raw.get("authors")
    if not isinstance(authors, list) or not all(isinstance(a, str) for a in authors):
        raise ValueError("authors must be an array of strings")
    corresponding = raw.get("corresponding_index", 0)
    if not isinstance(corresponding, int) or isinstance(corresponding, bool):
        raise ValueError("corresponding_index must be an integer")
    year = raw.get("year")
    if year is not None and (not isinstance(year, int) or isinstance(year, bool)):
        raise ValueError("year must be an integer")
    return BibRecord(
        paper_id=paper_id,
        authors=tuple(authors),
        corresponding_index=corresponding,
        year=year,
    )


def serialize_corpus(records: Iterable[BibRecord]) -> str:
    """JSONL text that parse_corpus reads back to an identical corpus."""
    lines = []
    for record in records:
        obj: dict = {
            "paper_id": record.paper_id,
            "authors": list(record.authors),
            "corresponding_index": record.corresponding_index,
        }
        if record.year is not None:
            obj["year"] = record.year
        lines.append(json.dumps(obj, ensure_ascii=False))
    return "\n".join(lines) + ("\n" if lines else "")


def load_corpus(path) -> list[BibRecord]:
    with open(path, encoding="utf-8") as handle:
        return parse_corpus(handle)


@dataclass(frozen=True)
class CorpusStats:
    """Corpus-level descriptive statistics.

    Averages are NaN when the filtered corpus is empty. Standard
    deviations are population SDs.
    """

    paper_count: int
    size_histogram: dict[int, int]
    unique_authors: int
    avg_papers_per_author: float
    sd_papers_per_author: float
    avg_authors_per_paper: float
    sd_authors_per_paper: float
    avg_coauthors_per_author: float
    sd_coauthors_per_author: float


def _mean_sd(values: list[float]) -> tuple[float, float]:
    if not values:
        return math.nan, math.nan
    mean = sum(values) / len(values)
    var = sum((v - mean) ** 2 for v in values) / len(values)
    return mean, math.sqrt(var)


def descriptive_stats(corpus: Iterable[BibRecord], include_singles: bool = False) -> CorpusStats:
    """Statistics over multi-authored records (all records with include_singles).

    Papers-per-author counts only the filtered papers; coauthors-per-author
    counts distinct collaborators across the filtered corpus.
    """
    papers = [r for r in corpus if include_singles or r.n_authors >= 2]
    histogram: dict[int, int] = {}
    papers_by_author: dict[str, int] = {}
    collaborators: dict[str, set[str]] = {}
    for record in papers:
        histogram[record.n_authors] = histogram.get(record.n_authors, 0) + 1
        for author in record.authors:
            papers_by_author[author] = papers_by_author.get(author, 0) + 1
            others = collaborators.setdefault(author, set())
            others.update(a for a in record.authors if a != author)
    avg_ppa, sd_ppa = _mean_sd([float(v) for v in papers_by_author.values()])
    avg_app, sd_app = _mean_sd([float(r.n_authors) for r in papers])
    avg_cpa, sd_cpa = _mean_sd([float(len(v)) for v in collaborators.values()])
    return CorpusStats(
        paper_count=len(papers),
        size_histogram=dict(sorted(histogram.items())),
        unique_authors=len(papers_by_author),
        avg_papers_per_author=avg_ppa,
        sd_papers_per_author=sd_ppa,
        avg_authors_per_paper=avg_app,
        sd_authors_per_paper=sd_app,
        avg_coauthors_per_author=avg_cpa,
        sd_coauthors_per_author=sd_cpa,
    )
