"""Independent Porter-stemmer reference used as a test oracle.

Deliberately written in a different style from the production kernel:
immutable strings, explicit consonant/vowel flag vectors, and flat
ordered rule tables with first-match-stops semantics. Implements the
same canonical variant (length <= 2 unchanged, ``bli -> ble``,
``logi -> log``) so the two codebases can be checked word-for-word
against each other.
"""


def _flags(word):
    """True at consonant positions; y is a consonant iff it is the first
    letter or follows a vowel."""
    out = []
    for i, ch in enumerate(word):
        if ch in "aeiou":
            out.append(False)
        elif ch == "y":
            out.append(True if i == 0 else not out[i - 1])
        else:
            out.append(True)
    return out


def _measure(stem):
    """Count vowel->consonant transitions ([C](VC)^m[V] form)."""
    flags = _flags(stem)
    m = 0
    for i in range(1, len(flags)):
        if flags[i] and not flags[i - 1]:
            m += 1
    return m


def _has_vowel(stem):
    return not all(_flags(stem))


def _ends_double_consonant(word):
    if len(word) < 2 or word[-1] != word[-2]:
        return False
    return _flags(word)[-1]


def _ends_cvc(word, i=None):
    """cvc test at index i (default: last), final consonant not w/x/y."""
    if i is None:
        i = len(word) - 1
    if i < 2:
        return False
    flags = _flags(word)
    if not (flags[i] and not flags[i - 1] and flags[i - 2]):
        return False
    return word[i] not in "wxy"


def _step1a(word):
    if word.endswith("sses"):
        return word[:-2]
    if word.endswith("ies"):
        return word[:-3] + "i"
    if word.endswith("ss"):
        return word
    if word.endswith("s"):
        return word[:-1]
    return word


def _step1b(word):
    if word.endswith("eed"):
        if _measure(word[:-3]) > 0:
            return word[:-1]
        return word
    if word.endswith("ed") and _has_vowel(word[:-2]):
        return _step1b_fixup(word[:-2])
    if word.endswith("ing") and _has_vowel(word[:-3]):
        return _step1b_fixup(word[:-3])
    return word


def _step1b_fixup(stem):
    if stem.endswith(("at", "bl", "iz")):
        return stem + "e"
    if _ends_double_consonant(stem) and stem[-1] not in "lsz":
        return stem[:-1]
    if _measure(stem) == 1 and _ends_cvc(stem):
        return stem + "e"
    return stem


def _step1c(word):
    if word.endswith("y") and _has_vowel(word[:-1]):
        return word[:-1] + "i"
    return word


# (suffix, replacement) pairs; ordering mirrors the canonical branch
# order so that nested suffixes resolve identically
_STEP2_RULES = [
    ("ational", "ate"), ("tional", "tion"),
    ("enci", "ence"), ("anci", "ance"),
    ("izer", "ize"),
    ("bli", "ble"), ("alli", "al"), ("entli", "ent"), ("eli", "e"),
    ("ousli", "ous"),
    ("ization", "ize"), ("ation", "ate"), ("ator", "ate"),
    ("alism", "al"), ("iveness", "ive"), ("fulness", "ful"),
    ("ousness", "ous"),
    ("aliti", "al"), ("iviti", "ive"), ("biliti", "ble"),
    ("logi", "log"),
]

_STEP3_RULES = [
    ("icate", "ic"), ("ative", ""), ("alize", "al"),
    ("iciti", "ic"), ("ical", "ic"), ("ful", ""), ("ness", ""),
]

_STEP4_SUFFIXES = [
    "al", "ance", "ence", "er", "ic", "able", "ible",
    "ant", "ement", "ment", "ent", "ion", "ou", "ism",
    "ate", "iti", "ous", "ive", "ize",
]


def _apply_rules(word, rules, min_measure):
    """First matching suffix wins; a failed condition still stops the scan."""
    for suffix, repl in rules:
        if word.endswith(suffix) and len(suffix) <= len(word):
            stem = word[: len(word) - len(suffix)]
            if _measure(stem) > min_measure:
                return stem + repl
            return word
    return word


def _step4(word):
    for suffix in _STEP4_SUFFIXES:
        if word.endswith(suffix):
            stem = word[: len(word) - len(suffix)]
            if suffix == "ion" and not stem.endswith(("s", "t")):
                return word
            if _measure(stem) > 1:
                return stem
            return word
    return word


def _step5(word):
    if word.endswith("e"):
        m = _measure(word)
        if m > 1 or (m == 1 and not _ends_cvc(word, len(word) - 2)):
            word = word[:-1]
    if word.endswith("ll") and _measure(word) > 1:
        word = word[:-1]
    return word


def reference_stem(word):
    if len(word) <= 2:
        return word
    word = _step1a(word)
    word = _step1b(word)
    word = _step1c(word)
    word = _apply_rules(word, _STEP2_RULES, 0)
    word = _apply_rules(word, _STEP3_RULES, 0)
    word = _step4(word)
    word = _step5(word)
    return word
