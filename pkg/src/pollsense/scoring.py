"""Per-tweet sentiment scoring under the three extraction schemes.

  * ``score_snpos``: POS-agnostic lookup of Porter-stemmed tokens.
  * ``score_spos``: POS-aware lookup keyed by (stem, POS class); tags
    come from the tweet's stored ``tagged_tokens`` when present,
    otherwise from a pluggable tagger (token sequence in, equal-length
    tag sequence out).
  * ``score_sposw``: like ``score_spos`` but the token sequence is
    first extended with synonyms of any token found in the core-sense
    synonym table; appended synonyms are tagged in the extended
    sequence and are not themselves expanded.

Scores are sums of lexicon weights with multiplicity. Tweets with no
lexicon hit score (0, 0) and are flagged by ``matched_terms == 0`` so
aggregation can ignore them.
"""

from dataclasses import dataclass

from .corpus import Tweet
from .errors import ContractViolation
from .keywords import tokenize
from .stemming import porter_stem

POS_OTHER = "other"

# Closed-class function words the rule tagger maps to `other`
FUNCTION_WORDS = frozenset("""
a an the this that these those my your his her its our their some any no
each every either neither and or but nor so yet for if while because since
although though unless until when where whereas whether after before as of
in on at by to from with without within into onto over under above below
between among through during against about across around along near behind
beyond off out up down i you he she it we they me him them us mine yours
hers ours theirs myself yourself himself herself itself ourselves themselves
who whom whose which what is am are was were be been being do does did done
have has had having will would shall should can could may might must not
there here then than too very also just only both all most more less few
much many such own same other another
""".split())

# suffix -> POS class; checked in order, longest-sensible first
_SUFFIX_RULES = (
    ("ly", "r"),
    ("ous", "a"), ("ful", "a"), ("ive", "a"), ("al", "a"),
    ("tion", "n"), ("ness", "n"), ("ment", "n"), ("er", "n"),
    ("ize", "v"), ("ate", "v"),
)


@dataclass(frozen=True)
class SentimentScore:
    pos: float
    neg: float
    matched_terms: int

    @property
    def is_zero_signal(self) -> bool:
        return self.matched_terms == 0

    @property
    def clarity(self) -> float:
        return abs(self.pos - self.neg)


def baseline_tagger(tokens) -> list:
    """Deterministic rule tagger: function words -> other, then suffix
    rules, default noun."""
    tags = []
    for token in tokens:
        word = token.lower()
        if word in FUNCTION_WORDS:
            tags.append(POS_OTHER)
            continue
        for suffix, tag in _SUFFIX_RULES:
            if word.endswith(suffix):
                tags.append(tag)
                break
        else:
            tags.append("n")
    return tags


def map_tag(tag: str) -> str:
    """Map an arbitrary tagset onto {a, n, v, r, other}. Penn-style
    prefixes and spelled-out names are recognized."""
    t = tag.lower()
    if t in ("a", "n", "v", "r", POS_OTHER):
        return t
    if t == "s":
        return "a"
    if t in ("adj", "adjective") or t.startswith("jj"):
        return "a"
    if t in ("adv", "adverb") or t.startswith("rb") or t == "wrb":
        return "r"
    if t in ("noun",) or t.startswith("nn"):
        return "n"
    if t in ("verb",) or t.startswith("vb") or t == "md":
        return "v"
    return POS_OTHER


def _run_tagger(tagger, tokens) -> list:
    tags = list(tagger(tokens))
    if len(tags) != len(tokens):
        raise ContractViolation(
            f"tagger returned {len(tags)} tags for {len(tokens)} tokens")
    return tags


def _base_tokens_and_tags(tweet: Tweet, tagger):
    """Stored token/tag pairs win; otherwise tokenize and tag."""
    if tweet.tagged_tokens is not None:
        tokens = [tok for tok, _ in tweet.tagged_tokens]
        tags = [tag for _, tag in tweet.tagged_tokens]
        return tokens, tags
    tokens = tokenize(tweet.text)
    return tokens, _run_tagger(tagger or baseline_tagger, tokens)


def score_snpos(tweet: Tweet, table: dict) -> SentimentScore:
    """POS-agnostic score: sum weights of every token whose stem is in
    the table, with multiplicity."""
    pos = neg = 0.0
    matched = 0
    for token in tokenize(tweet.text):
        entry = table.get(porter_stem(token.lower()))
        if entry is not None:
            pos += entry.pos_weight
            neg += entry.neg_weight
            matched += 1
    return SentimentScore(pos=pos, neg=neg, matched_terms=matched)


def _score_tagged(tokens, tags, table) -> SentimentScore:
    pos = neg = 0.0
    matched = 0
    for token, tag in zip(tokens, tags):
        pos_class = map_tag(tag)
        if pos_class == POS_OTHER:
            continue
        entry = table.get((porter_stem(token.lower()), pos_class))
        if entry is not None:
            pos += entry.pos_weight
            neg += entry.neg_weight
            matched += 1
    return SentimentScore(pos=pos, neg=neg, matched_terms=matched)


def score_spos(tweet: Tweet, table: dict, tagger=None) -> SentimentScore:
    """POS-aware score keyed by (stem, POS class); `other` tokens and
    absent keys contribute nothing."""
    tokens, tags = _base_tokens_and_tags(tweet, tagger)
    return _score_tagged(tokens, tags, table)


def expand_tokens(tokens, synonyms: dict) -> list:
    """Append the synonyms of every token whose lowercased form is a
    headword; original order preserved, appended synonyms not expanded."""
    extension = []
    for token in tokens:
        extension.extend(synonyms.get(token.lower(), ()))
    return list(tokens) + extension


def expand_tweet(tweet: Tweet, synonyms: dict) -> list:
    if tweet.tagged_tokens is not None:
        tokens = [tok for tok, _ in tweet.tagged_tokens]
    else:
        tokens = tokenize(tweet.text)
    return expand_tokens(tokens, synonyms)


def score_sposw(tweet: Tweet, table: dict, synonyms: dict,
                tagger=None) -> SentimentScore:
    """score_spos over the synonym-extended token sequence. Stored tags
    keep their positions; appended synonyms are tagged by the tagger run
    over the extended sequence."""
    if tweet.tagged_tokens is not None:
        tokens = [tok for tok, _ in tweet.tagged_tokens]
        base_tags = [tag for _, tag in tweet.tagged_tokens]
    else:
        tokens = tokenize(tweet.text)
        base_tags = None
    extended = expand_tokens(tokens, synonyms)
    tags = _run_tagger(tagger or baseline_tagger, extended)
    if base_tags is not None:
        tags[: len(base_tags)] = base_tags
    return _score_tagged(extended, tags, table)
