"""Party keyword parsing and tweet selection.

Keyword files carry one term per line with two markers preserved from
the bundled lists: a leading ``#`` flags a Twitter topic, and ``_``
marks a required space (so ``_TORIES`` is a space-prefixed exact token
and ``Lib_ _Dem`` a two-token phrase). An optional first line
``!party=CON`` names the party; a party given by the caller wins.

Matching rules:
  * single terms match case-sensitively against whole tokens;
  * multi-term entries match when every term appears as a token,
    case-insensitively, in any order;
  * ``#`` topics match the hashtag token case-sensitively (the bundled
    lists carry e.g. ``#Tory`` and ``#tory`` as distinct entries);
  * ``_``-marked terms match case-sensitively as whole tokens.
"""

from dataclasses import dataclass
from enum import Enum

from .corpus import PARTIES, Tweet
from .errors import ParseError, ValidationError


class MatchMode(Enum):
    UNIGRAM = "unigram-case-sensitive"
    NGRAM = "ngram-all-terms"
    TOPIC = "topic"
    SPACE_PREFIXED = "space-prefixed"


@dataclass(frozen=True)
class Keyword:
    raw: str
    mode: MatchMode
    terms: tuple


@dataclass(frozen=True)
class KeywordSet:
    party: str
    keywords: tuple

    def __post_init__(self):
        if self.party not in PARTIES:
            raise ValidationError(f"unknown party {self.party!r}")
        if not self.keywords:
            raise ValidationError(f"no keywords for {self.party}")
        raws = [kw.raw for kw in self.keywords]
        if len(set(raws)) != len(raws):
            dupes = sorted({r for r in raws if raws.count(r) > 1})
            raise ValidationError(f"duplicate keywords for {self.party}: {dupes}")


def parse_keyword(raw: str) -> Keyword:
    if raw.startswith("#"):
        return Keyword(raw=raw, mode=MatchMode.TOPIC, terms=(raw[1:],))
    space_prefixed = raw.startswith("_")
    terms = tuple(t.strip("_") for t in raw.split() if t.strip("_"))
    if not terms:
        raise ValueError(f"keyword {raw!r} has no terms")
    if space_prefixed:
        return Keyword(raw=raw, mode=MatchMode.SPACE_PREFIXED, terms=terms)
    if len(terms) >= 2:
        return Keyword(raw=raw, mode=MatchMode.NGRAM, terms=terms)
    return Keyword(raw=raw, mode=MatchMode.UNIGRAM, terms=terms)


def parse_keyword_file(path, party=None) -> KeywordSet:
    keywords = []
    file_party = None
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip():
                continue
            if line.startswith("!party="):
                file_party = line.split("=", 1)[1].strip().upper()
                continue
            try:
                keywords.append(parse_keyword(line))
            except ValueError as exc:
                raise ParseError(path, line_no, str(exc)) from None
    resolved = party or file_party
    if resolved is None:
        raise ValidationError(f"{path}: no party given and no !party= header")
    if not keywords:
        raise ValidationError(f"{path}: empty keyword file")
    return KeywordSet(party=resolved.upper(), keywords=tuple(keywords))


def tokenize(text: str) -> list:
    """Whitespace split, then strip leading/trailing punctuation from
    each token, keeping a leading ``#``. Case is preserved."""
    tokens = []
    for chunk in text.split():
        start = 0
        end = len(chunk)
        while end > start and not chunk[end - 1].isalnum():
            end -= 1
        while start < end and not chunk[start].isalnum() and chunk[start] != "#":
            start += 1
        token = chunk[start:end]
        if token:
            tokens.append(token)
    return tokens


def matches(tweet: Tweet, kw: Keyword, tokens=None) -> bool:
    """Pure predicate; pass pre-tokenized text to avoid re-tokenizing."""
    if tokens is None:
        tokens = tokenize(tweet.text)
    if kw.mode is MatchMode.TOPIC:
        return ("#" + kw.terms[0]) in tokens
    if kw.mode is MatchMode.NGRAM:
        lowered = {t.lower() for t in tokens}
        return all(term.lower() in lowered for term in kw.terms)
    # unigram and space-prefixed: exact whole-token, case-sensitive
    return all(term in tokens for term in kw.terms)


def select_party_tweets(tweets, ks: KeywordSet) -> set:
    """Ids of tweets matching at least one keyword of the set."""
    selected = set()
    for tweet in tweets:
        tokens = tokenize(tweet.text)
        token_set = set(tokens)
        lowered = {t.lower() for t in tokens}
        for kw in ks.keywords:
            if kw.mode is MatchMode.TOPIC:
                hit = ("#" + kw.terms[0]) in token_set
            elif kw.mode is MatchMode.NGRAM:
                hit = all(term.lower() in lowered for term in kw.terms)
            else:
                hit = all(term in token_set for term in kw.terms)
            if hit:
                selected.add(tweet.id)
                break
    return selected
