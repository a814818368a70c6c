"""Sentiment lexicon tables built from a SentiWordNet-3.0-format file.

The distribution format is tab-separated
``POS<TAB>ID<TAB>PosScore<TAB>NegScore<TAB>SynsetTerms<TAB>Gloss`` with
``#``-prefixed comment lines and synset terms written ``word#sense``.
Terms are Porter-stemmed and collapsed two ways:

  * a POS-agnostic table averaging each stem's scores over every
    occurrence under every part of speech (stems whose averaged positive
    and negative weights are equal are dropped);
  * a POS-aware table averaging per (stem, POS) key. Equal-weight
    entries are retained here by default; pass ``drop_equal_weights``
    to apply the same drop rule.

Averaging is over term occurrences: each ``word#sense`` in each synset
row counts once, which makes construction order-independent. Multi-word
(underscored) terms are skipped; scoring is token-level.

A synonym table for tweet expansion loads from tab-separated lines
``headword<TAB>syn1,syn2,...``; everything is lowercased on load.
"""

import logging
from dataclasses import dataclass

from .errors import ParseError, ValidationError
from .stemming import porter_stem

log = logging.getLogger(__name__)

POS_CLASSES = ("a", "n", "v", "r")


@dataclass(frozen=True)
class SynsetRow:
    pos: str
    synset_id: str
    pos_score: float
    neg_score: float
    terms: tuple


@dataclass(frozen=True)
class LexiconEntry:
    stem: str
    pos: str | None
    pos_weight: float
    neg_weight: float


def _strip_sense(term: str) -> str:
    word, sep, sense = term.rpartition("#")
    if sep and sense.isdigit():
        return word
    return term


def parse_sentiwordnet(path) -> list:
    """Read the lexicon file into raw synset rows. Sense numbers are
    stripped from terms; comment lines are skipped."""
    rows = []
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 6:
                raise ParseError(path, line_no,
                                 f"expected 6 tab-separated columns, got {len(fields)}")
            pos, synset_id, raw_pos, raw_neg, raw_terms, _gloss = fields
            try:
                pos_score = float(raw_pos)
                neg_score = float(raw_neg)
            except ValueError as exc:
                raise ParseError(path, line_no, str(exc)) from None
            if not 0 <= pos_score <= 1 or not 0 <= neg_score <= 1:
                raise ValidationError(
                    f"{path}:{line_no}: scores ({pos_score}, {neg_score}) "
                    f"outside [0, 1]")
            terms = tuple(_strip_sense(t) for t in raw_terms.split() if t)
            rows.append(SynsetRow(pos=pos, synset_id=synset_id,
                                  pos_score=pos_score, neg_score=neg_score,
                                  terms=terms))
    log.info("parsed %d synset rows from %s", len(rows), path)
    return rows


def _accumulate(groups, key, row):
    sums = groups.setdefault(key, [0.0, 0.0, 0])
    sums[0] += row.pos_score
    sums[1] += row.neg_score
    sums[2] += 1


def build_pos_agnostic_table(rows) -> dict:
    """stem -> LexiconEntry, averaged over all POS; equal-weight stems
    dropped."""
    groups = {}
    for row in rows:
        for term in row.terms:
            if "_" in term:
                continue
            _accumulate(groups, porter_stem(term.lower()), row)
    table = {}
    for stem, (pos_sum, neg_sum, count) in groups.items():
        pos_weight = pos_sum / count
        neg_weight = neg_sum / count
        if pos_weight == neg_weight:
            continue
        table[stem] = LexiconEntry(stem=stem, pos=None,
                                   pos_weight=pos_weight, neg_weight=neg_weight)
    log.info("POS-agnostic table: %d stems (%d before equal-weight drop)",
             len(table), len(groups))
    return table


def build_pos_aware_table(rows, drop_equal_weights=False) -> dict:
    """(stem, pos) -> LexiconEntry, averaged per key."""
    groups = {}
    for row in rows:
        for term in row.terms:
            if "_" in term:
                continue
            _accumulate(groups, (porter_stem(term.lower()), row.pos), row)
    table = {}
    for (stem, pos), (pos_sum, neg_sum, count) in groups.items():
        pos_weight = pos_sum / count
        neg_weight = neg_sum / count
        if drop_equal_weights and pos_weight == neg_weight:
            continue
        table[(stem, pos)] = LexiconEntry(stem=stem, pos=pos,
                                          pos_weight=pos_weight,
                                          neg_weight=neg_weight)
    log.info("POS-aware table: %d (stem, POS) keys", len(table))
    return table


def load_synonyms(path) -> dict:
    """headword -> tuple of synonyms, lowercased, self-references and
    duplicates removed. Duplicate headword lines merge."""
    table = {}
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip():
                continue
            head, sep, rest = line.partition("\t")
            if not sep:
                raise ParseError(path, line_no, "expected headword<TAB>synonyms")
            head = head.strip().lower()
            existing = list(table.get(head, ()))
            for syn in rest.split(","):
                syn = syn.strip().lower()
                if syn and syn != head and syn not in existing:
                    existing.append(syn)
            if existing:
                table[head] = tuple(existing)
    log.info("loaded %d synonym headwords from %s", len(table), path)
    return table
