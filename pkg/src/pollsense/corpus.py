"""Tweet and poll ingestion, validation and poll-window bucketing.

File formats:
  * tweets: one record per line, tab-separated
    ``id<TAB>ISO-8601 timestamp<TAB>text[<TAB>token/TAG token/TAG ...]``
    with literal tabs/newlines/backslashes in the text escaped as
    ``\\t`` / ``\\n`` / ``\\\\``;
  * polls: CSV ``start_date,end_date,con,lab,lib`` with ISO dates and
    raw percentages in [0, 100].

Poll percentages are normalized to three-party shares summing to 1;
raw values are retained for round-tripping. All returned structures are
immutable after loading and safe to share across threads.
"""

import csv
import logging
from dataclasses import dataclass, field
from datetime import date, datetime, timezone

from .errors import ParseError, ValidationError

log = logging.getLogger(__name__)

PARTIES = ("CON", "LAB", "LIB")


@dataclass(frozen=True)
class Tweet:
    id: str
    timestamp: datetime
    text: str
    tagged_tokens: tuple | None = None

    def __post_init__(self):
        if not self.text.strip():
            raise ValidationError(f"tweet {self.id}: empty text")
        if self.tagged_tokens is not None:
            for token, _tag in self.tagged_tokens:
                if not token:
                    raise ValidationError(f"tweet {self.id}: empty tagged token")

    @property
    def date(self) -> date:
        return self.timestamp.date()


@dataclass(frozen=True)
class PollRecord:
    start_date: date
    end_date: date
    raw_con: float
    raw_lab: float
    raw_lib: float
    con: float = field(init=False)
    lab: float = field(init=False)
    lib: float = field(init=False)

    def __post_init__(self):
        span = (self.end_date - self.start_date).days
        if span not in (0, 1):
            raise ValidationError(
                f"poll {self.start_date}..{self.end_date}: window must span "
                f"one or two days, got {span + 1}"
            )
        for name, value in (("con", self.raw_con), ("lab", self.raw_lab),
                            ("lib", self.raw_lib)):
            if not 0 <= value <= 100:
                raise ValidationError(
                    f"poll {self.start_date}: raw {name}={value} outside [0, 100]"
                )
        shares = normalize_ground_truth((self.raw_con, self.raw_lab, self.raw_lib))
        object.__setattr__(self, "con", shares[0])
        object.__setattr__(self, "lab", shares[1])
        object.__setattr__(self, "lib", shares[2])

    def share(self, party: str) -> float:
        return getattr(self, party.lower())

    def raw(self, party: str) -> float:
        return getattr(self, "raw_" + party.lower())

    def contains(self, day: date) -> bool:
        return self.start_date <= day <= self.end_date


@dataclass(frozen=True)
class TimeInstance:
    poll: PollRecord
    party_tweets: dict

    def __post_init__(self):
        for party, tweets in self.party_tweets.items():
            for tweet in tweets:
                if not self.poll.contains(tweet.date):
                    raise ValidationError(
                        f"tweet {tweet.id} dated {tweet.date} outside poll "
                        f"window {self.poll.start_date}..{self.poll.end_date} "
                        f"({party})"
                    )


def normalize_ground_truth(raw):
    """Rescale a raw (con, lab, lib) percentage triplet to shares
    summing to 1. Official polls are strictly positive; zero or negative
    components are rejected."""
    if any(v <= 0 for v in raw):
        raise ValidationError(f"raw poll percentages must be positive, got {raw}")
    total = sum(raw)
    return tuple(v / total for v in raw)


def _unescape(text: str) -> str:
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\\" and i + 1 < len(text):
            nxt = text[i + 1]
            if nxt == "t":
                out.append("\t")
                i += 2
                continue
            if nxt == "n":
                out.append("\n")
                i += 2
                continue
            if nxt == "\\":
                out.append("\\")
                i += 2
                continue
        out.append(ch)
        i += 1
    return "".join(out)


def _escape(text: str) -> str:
    return (text.replace("\\", "\\\\").replace("\t", "\\t").replace("\n", "\\n"))


def _parse_timestamp(value: str) -> datetime:
    if value.endswith("Z"):
        value = value[:-1] + "+00:00"
    ts = datetime.fromisoformat(value)
    if ts.tzinfo is None:
        ts = ts.replace(tzinfo=timezone.utc)
    return ts.astimezone(timezone.utc)


def parse_tweet_line(line: str, path="<line>", line_no=0) -> Tweet:
    fields = line.split("\t")
    if len(fields) not in (3, 4):
        raise ParseError(path, line_no,
                         f"expected 3 or 4 tab-separated fields, got {len(fields)}")
    tweet_id, raw_ts, raw_text = fields[0], fields[1], fields[2]
    try:
        ts = _parse_timestamp(raw_ts)
    except ValueError as exc:
        raise ParseError(path, line_no, f"bad timestamp {raw_ts!r}: {exc}") from None
    tagged = None
    if len(fields) == 4 and fields[3]:
        pairs = []
        for chunk in fields[3].split():
            token, sep, tag = chunk.rpartition("/")
            if not sep or not token or not tag:
                raise ParseError(path, line_no, f"bad token/TAG pair {chunk!r}")
            pairs.append((token, tag))
        tagged = tuple(pairs)
    try:
        return Tweet(id=tweet_id, timestamp=ts, text=_unescape(raw_text),
                     tagged_tokens=tagged)
    except ValidationError as exc:
        raise ParseError(path, line_no, str(exc)) from None


def format_tweet_line(tweet: Tweet) -> str:
    ts = tweet.timestamp.astimezone(timezone.utc).isoformat().replace("+00:00", "Z")
    line = f"{tweet.id}\t{ts}\t{_escape(tweet.text)}"
    if tweet.tagged_tokens is not None:
        line += "\t" + " ".join(f"{tok}/{tag}" for tok, tag in tweet.tagged_tokens)
    return line


def load_tweets(path, lenient=False) -> list:
    """Read a tweets file. In lenient mode malformed lines are skipped
    and counted; the default is to fail on the first bad line."""
    tweets = []
    skipped = 0
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            try:
                tweets.append(parse_tweet_line(line, path, line_no))
            except ParseError:
                if not lenient:
                    raise
                skipped += 1
    log.info("loaded %d tweets from %s (%d skipped)", len(tweets), path, skipped)
    return tweets


def save_tweets(tweets, path):
    with open(path, "w", encoding="utf-8") as fh:
        for tweet in tweets:
            fh.write(format_tweet_line(tweet) + "\n")


_POLL_COLUMNS = ["start_date", "end_date", "con", "lab", "lib"]


def load_polls(path) -> list:
    """Read the polls CSV, validate, and return records sorted by start
    date. Raw percentages are retained alongside normalized shares."""
    records = []
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None:
            raise ParseError(path, 1, "empty polls file")
        if [h.strip().lower() for h in header] != _POLL_COLUMNS:
            raise ParseError(path, 1,
                             f"expected header {','.join(_POLL_COLUMNS)}, got "
                             f"{','.join(header)}")
        for line_no, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 5:
                raise ParseError(path, line_no, f"expected 5 columns, got {len(row)}")
            try:
                start = date.fromisoformat(row[0].strip())
                end = date.fromisoformat(row[1].strip())
                values = [float(v) for v in row[2:5]]
            except ValueError as exc:
                raise ParseError(path, line_no, str(exc)) from None
            if end < start:
                raise ValidationError(
                    f"{path}:{line_no}: end_date {end} precedes start_date {start}")
            try:
                records.append(PollRecord(start, end, *values))
            except ValidationError as exc:
                raise ValidationError(f"{path}:{line_no}: {exc}") from None
    records.sort(key=lambda p: (p.start_date, p.end_date))
    log.info("loaded %d polls from %s", len(records), path)
    return records


def save_polls(polls, path):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(_POLL_COLUMNS)
        for poll in polls:
            writer.writerow([poll.start_date.isoformat(), poll.end_date.isoformat(),
                             repr(poll.raw_con), repr(poll.raw_lab),
                             repr(poll.raw_lib)])


def build_time_instances(tweets, polls, party_selections) -> list:
    """Bucket tweets into one TimeInstance per poll.

    A tweet lands in a party's bucket iff its (UTC) date lies inside the
    poll window, boundaries inclusive, and its id is in that party's
    selection. Buckets may overlap across parties and across abutting
    polls; empty buckets are legal and reported as warnings.
    """
    instances = []
    for poll in polls:
        buckets = {party: [] for party in PARTIES}
        for tweet in tweets:
            if not poll.contains(tweet.date):
                continue
            for party in PARTIES:
                if tweet.id in party_selections.get(party, ()):
                    buckets[party].append(tweet)
        for party, bucket in buckets.items():
            if not bucket:
                log.warning("poll %s..%s: empty %s bucket",
                            poll.start_date, poll.end_date, party)
        instances.append(TimeInstance(poll=poll, party_tweets=buckets))
    return instances
