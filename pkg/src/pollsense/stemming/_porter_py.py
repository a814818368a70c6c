"""Pure-Python Porter stemmer (suffix-stripping, 1980 algorithm).

This is the fallback backend; the compiled extension in ``_porter.pyx``
implements the identical algorithm. Both follow the widely distributed
"canonical" variant of the algorithm, which differs from the original
journal description in three places:

  * words of length <= 2 are returned unchanged;
  * step 2 rewrites ``bli -> ble`` (instead of ``abli -> able``);
  * step 2 carries the extra rule ``logi -> log``.

Only lowercase input produces meaningful stems; callers lowercase first.
The function is total and deterministic for arbitrary strings (digits and
punctuation are treated as consonants).
"""

_VOWELS = "aeiou"


class _Buffer:
    """Word buffer with the algorithm's (b, k, j) state.

    b is the character buffer, k the index of the last live character,
    j the split point set by a successful suffix match.
    """

    __slots__ = ("b", "k", "j")

    def __init__(self, word):
        self.b = word
        self.k = len(word) - 1
        self.j = 0

    def cons(self, i):
        ch = self.b[i]
        if ch in _VOWELS:
            return False
        if ch == "y":
            return True if i == 0 else not self.cons(i - 1)
        return True

    def m(self):
        # number of vowel-consonant sequences in b[0..j]
        i = 0
        j = self.j
        while True:
            if i > j:
                return 0
            if not self.cons(i):
                break
            i += 1
        i += 1
        n = 0
        while True:
            while True:
                if i > j:
                    return n
                if self.cons(i):
                    break
                i += 1
            i += 1
            n += 1
            while True:
                if i > j:
                    return n
                if not self.cons(i):
                    break
                i += 1
            i += 1

    def vowel_in_stem(self):
        return any(not self.cons(i) for i in range(self.j + 1))

    def doublec(self, j):
        return j > 0 and self.b[j] == self.b[j - 1] and self.cons(j)

    def cvc(self, i):
        # consonant-vowel-consonant ending, last consonant not w, x or y;
        # guards the restoration of a final -e on short stems
        if i < 2 or not self.cons(i) or self.cons(i - 1) or not self.cons(i - 2):
            return False
        return self.b[i] not in "wxy"

    def ends(self, s):
        length = len(s)
        if s[-1] != self.b[self.k]:
            return False
        if length > self.k + 1:
            return False
        if self.b[self.k - length + 1 : self.k + 1] != s:
            return False
        self.j = self.k - length
        return True

    def setto(self, s):
        self.b = self.b[: self.j + 1] + s
        self.k = len(self.b) - 1

    def r(self, s):
        if self.m() > 0:
            self.setto(s)


def _step1ab(w):
    # plurals and -ed / -ing
    if w.b[w.k] == "s":
        if w.ends("sses"):
            w.k -= 2
        elif w.ends("ies"):
            w.setto("i")
        elif w.b[w.k - 1] != "s":
            w.k -= 1
    if w.ends("eed"):
        if w.m() > 0:
            w.k -= 1
    elif (w.ends("ed") or w.ends("ing")) and w.vowel_in_stem():
        w.k = w.j
        if w.ends("at"):
            w.setto("ate")
        elif w.ends("bl"):
            w.setto("ble")
        elif w.ends("iz"):
            w.setto("ize")
        elif w.doublec(w.k):
            if w.b[w.k - 1] not in "lsz":
                w.k -= 1
        elif w.m() == 1 and w.cvc(w.k):
            w.setto("e")


def _step1c(w):
    # terminal y -> i when the stem has another vowel
    if w.ends("y") and w.vowel_in_stem():
        w.b = w.b[: w.k] + "i"


def _step2(w):
    if w.k < 1:
        return
    ch = w.b[w.k - 1]
    if ch == "a":
        if w.ends("ational"):
            w.r("ate")
        elif w.ends("tional"):
            w.r("tion")
    elif ch == "c":
        if w.ends("enci"):
            w.r("ence")
        elif w.ends("anci"):
            w.r("ance")
    elif ch == "e":
        if w.ends("izer"):
            w.r("ize")
    elif ch == "l":
        if w.ends("bli"):
            w.r("ble")
        elif w.ends("alli"):
            w.r("al")
        elif w.ends("entli"):
            w.r("ent")
        elif w.ends("eli"):
            w.r("e")
        elif w.ends("ousli"):
            w.r("ous")
    elif ch == "o":
        if w.ends("ization"):
            w.r("ize")
        elif w.ends("ation"):
            w.r("ate")
        elif w.ends("ator"):
            w.r("ate")
    elif ch == "s":
        if w.ends("alism"):
            w.r("al")
        elif w.ends("iveness"):
            w.r("ive")
        elif w.ends("fulness"):
            w.r("ful")
        elif w.ends("ousness"):
            w.r("ous")
    elif ch == "t":
        if w.ends("aliti"):
            w.r("al")
        elif w.ends("iviti"):
            w.r("ive")
        elif w.ends("biliti"):
            w.r("ble")
    elif ch == "g":
        if w.ends("logi"):
            w.r("log")


def _step3(w):
    ch = w.b[w.k]
    if ch == "e":
        if w.ends("icate"):
            w.r("ic")
        elif w.ends("ative"):
            w.r("")
        elif w.ends("alize"):
            w.r("al")
    elif ch == "i":
        if w.ends("iciti"):
            w.r("ic")
    elif ch == "l":
        if w.ends("ical"):
            w.r("ic")
        elif w.ends("ful"):
            w.r("")
    elif ch == "s":
        if w.ends("ness"):
            w.r("")


def _step4(w):
    if w.k < 1:
        return
    ch = w.b[w.k - 1]
    if ch == "a":
        if not w.ends("al"):
            return
    elif ch == "c":
        if not w.ends("ance") and not w.ends("ence"):
            return
    elif ch == "e":
        if not w.ends("er"):
            return
    elif ch == "i":
        if not w.ends("ic"):
            return
    elif ch == "l":
        if not w.ends("able") and not w.ends("ible"):
            return
    elif ch == "n":
        if w.ends("ant"):
            pass
        elif w.ends("ement"):
            pass
        elif w.ends("ment"):
            pass
        elif w.ends("ent"):
            pass
        else:
            return
    elif ch == "o":
        if w.ends("ion") and w.j >= 0 and w.b[w.j] in "st":
            pass
        elif w.ends("ou"):
            pass
        else:
            return
    elif ch == "s":
        if not w.ends("ism"):
            return
    elif ch == "t":
        if not w.ends("ate") and not w.ends("iti"):
            return
    elif ch == "u":
        if not w.ends("ous"):
            return
    elif ch == "v":
        if not w.ends("ive"):
            return
    elif ch == "z":
        if not w.ends("ize"):
            return
    else:
        return
    if w.m() > 1:
        w.k = w.j


def _step5(w):
    # final -e removal and -ll -> -l; j stays at the entry value of k for
    # both checks, exactly as in the reference flow
    w.j = w.k
    if w.b[w.k] == "e":
        a = w.m()
        if a > 1 or (a == 1 and not w.cvc(w.k - 1)):
            w.k -= 1
    if w.b[w.k] == "l" and w.doublec(w.k) and w.m() > 1:
        w.k -= 1


def porter_stem(word):
    """Return the Porter stem of ``word``.

    Words of length <= 2 come back unchanged.
    """
    if len(word) <= 2:
        return word
    w = _Buffer(word)
    _step1ab(w)
    _step1c(w)
    _step2(w)
    _step3(w)
    _step4(w)
    _step5(w)
    return w.b[: w.k + 1]


def stem_words(words):
    """Stem a sequence of words, returning a list."""
    return [porter_stem(word) for word in words]
