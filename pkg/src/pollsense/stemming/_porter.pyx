# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled Porter stemmer kernel.

Same canonical algorithm as ``_porter_py`` (which see), operating on a
stack char buffer. Non-ASCII or very long words are delegated to the
pure-Python twin so both backends return identical results for every
input.
"""

from libc.string cimport memcmp, memcpy

from ._porter_py import porter_stem as _py_stem

DEF MAXWORD = 255


cdef struct Buf:
    char b[MAXWORD + 1]
    int k
    int j


cdef bint _cons(Buf* w, int i) noexcept:
    cdef char ch = w.b[i]
    if ch == b'a' or ch == b'e' or ch == b'i' or ch == b'o' or ch == b'u':
        return False
    if ch == b'y':
        if i == 0:
            return True
        return not _cons(w, i - 1)
    return True


cdef int _m(Buf* w) noexcept:
    cdef int i = 0
    cdef int n = 0
    cdef int j = w.j
    while True:
        if i > j:
            return 0
        if not _cons(w, i):
            break
        i += 1
    i += 1
    while True:
        while True:
            if i > j:
                return n
            if _cons(w, i):
                break
            i += 1
        i += 1
        n += 1
        while True:
            if i > j:
                return n
            if not _cons(w, i):
                break
            i += 1
        i += 1


cdef bint _vowel_in_stem(Buf* w) noexcept:
    cdef int i
    for i in range(w.j + 1):
        if not _cons(w, i):
            return True
    return False


cdef bint _doublec(Buf* w, int j) noexcept:
    return j > 0 and w.b[j] == w.b[j - 1] and _cons(w, j)


cdef bint _cvc(Buf* w, int i) noexcept:
    if i < 2 or not _cons(w, i) or _cons(w, i - 1) or not _cons(w, i - 2):
        return False
    cdef char ch = w.b[i]
    return ch != b'w' and ch != b'x' and ch != b'y'


cdef bint _ends(Buf* w, const char* s, int length) noexcept:
    if s[length - 1] != w.b[w.k]:
        return False
    if length > w.k + 1:
        return False
    if memcmp(w.b + (w.k - length + 1), s, length) != 0:
        return False
    w.j = w.k - length
    return True


cdef void _setto(Buf* w, const char* s, int length) noexcept:
    memcpy(w.b + w.j + 1, s, length)
    w.k = w.j + length


cdef void _r(Buf* w, const char* s, int length) noexcept:
    if _m(w) > 0:
        _setto(w, s, length)


cdef void _step1ab(Buf* w) noexcept:
    if w.b[w.k] == b's':
        if _ends(w, b"sses", 4):
            w.k -= 2
        elif _ends(w, b"ies", 3):
            _setto(w, b"i", 1)
        elif w.b[w.k - 1] != b's':
            w.k -= 1
    if _ends(w, b"eed", 3):
        if _m(w) > 0:
            w.k -= 1
    elif (_ends(w, b"ed", 2) or _ends(w, b"ing", 3)) and _vowel_in_stem(w):
        w.k = w.j
        if _ends(w, b"at", 2):
            _setto(w, b"ate", 3)
        elif _ends(w, b"bl", 2):
            _setto(w, b"ble", 3)
        elif _ends(w, b"iz", 2):
            _setto(w, b"ize", 3)
        elif _doublec(w, w.k):
            if w.b[w.k - 1] != b'l' and w.b[w.k - 1] != b's' and w.b[w.k - 1] != b'z':
                w.k -= 1
        elif _m(w) == 1 and _cvc(w, w.k):
            _setto(w, b"e", 1)


cdef void _step1c(Buf* w) noexcept:
    if _ends(w, b"y", 1) and _vowel_in_stem(w):
        w.b[w.k] = b'i'


cdef void _step2(Buf* w) noexcept:
    if w.k < 1:
        return
    cdef char ch = w.b[w.k - 1]
    if ch == b'a':
        if _ends(w, b"ational", 7):
            _r(w, b"ate", 3)
        elif _ends(w, b"tional", 6):
            _r(w, b"tion", 4)
    elif ch == b'c':
        if _ends(w, b"enci", 4):
            _r(w, b"ence", 4)
        elif _ends(w, b"anci", 4):
            _r(w, b"ance", 4)
    elif ch == b'e':
        if _ends(w, b"izer", 4):
            _r(w, b"ize", 3)
    elif ch == b'l':
        if _ends(w, b"bli", 3):
            _r(w, b"ble", 3)
        elif _ends(w, b"alli", 4):
            _r(w, b"al", 2)
        elif _ends(w, b"entli", 5):
            _r(w, b"ent", 3)
        elif _ends(w, b"eli", 3):
            _r(w, b"e", 1)
        elif _ends(w, b"ousli", 5):
            _r(w, b"ous", 3)
    elif ch == b'o':
        if _ends(w, b"ization", 7):
            _r(w, b"ize", 3)
        elif _ends(w, b"ation", 5):
            _r(w, b"ate", 3)
        elif _ends(w, b"ator", 4):
            _r(w, b"ate", 3)
    elif ch == b's':
        if _ends(w, b"alism", 5):
            _r(w, b"al", 2)
        elif _ends(w, b"iveness", 7):
            _r(w, b"ive", 3)
        elif _ends(w, b"fulness", 7):
            _r(w, b"ful", 3)
        elif _ends(w, b"ousness", 7):
            _r(w, b"ous", 3)
    elif ch == b't':
        if _ends(w, b"aliti", 5):
            _r(w, b"al", 2)
        elif _ends(w, b"iviti", 5):
            _r(w, b"ive", 3)
        elif _ends(w, b"biliti", 6):
            _r(w, b"ble", 3)
    elif ch == b'g':
        if _ends(w, b"logi", 4):
            _r(w, b"log", 3)


cdef void _step3(Buf* w) noexcept:
    cdef char ch = w.b[w.k]
    if ch == b'e':
        if _ends(w, b"icate", 5):
            _r(w, b"ic", 2)
        elif _ends(w, b"ative", 5):
            _r(w, b"", 0)
        elif _ends(w, b"alize", 5):
            _r(w, b"al", 2)
    elif ch == b'i':
        if _ends(w, b"iciti", 5):
            _r(w, b"ic", 2)
    elif ch == b'l':
        if _ends(w, b"ical", 4):
            _r(w, b"ic", 2)
        elif _ends(w, b"ful", 3):
            _r(w, b"", 0)
    elif ch == b's':
        if _ends(w, b"ness", 4):
            _r(w, b"", 0)


cdef void _step4(Buf* w) noexcept:
    if w.k < 1:
        return
    cdef char ch = w.b[w.k - 1]
    if ch == b'a':
        if not _ends(w, b"al", 2):
            return
    elif ch == b'c':
        if not _ends(w, b"ance", 4) and not _ends(w, b"ence", 4):
            return
    elif ch == b'e':
        if not _ends(w, b"er", 2):
            return
    elif ch == b'i':
        if not _ends(w, b"ic", 2):
            return
    elif ch == b'l':
        if not _ends(w, b"able", 4) and not _ends(w, b"ible", 4):
            return
    elif ch == b'n':
        if _ends(w, b"ant", 3):
            pass
        elif _ends(w, b"ement", 5):
            pass
        elif _ends(w, b"ment", 4):
            pass
        elif _ends(w, b"ent", 3):
            pass
        else:
            return
    elif ch == b'o':
        if _ends(w, b"ion", 3) and w.j >= 0 and (w.b[w.j] == b's' or w.b[w.j] == b't'):
            pass
        elif _ends(w, b"ou", 2):
            pass
        else:
            return
    elif ch == b's':
        if not _ends(w, b"ism", 3):
            return
    elif ch == b't':
        if not _ends(w, b"ate", 3) and not _ends(w, b"iti", 3):
            return
    elif ch == b'u':
        if not _ends(w, b"ous", 3):
            return
    elif ch == b'v':
        if not _ends(w, b"ive", 3):
            return
    elif ch == b'z':
        if not _ends(w, b"ize", 3):
            return
    else:
        return
    if _m(w) > 1:
        w.k = w.j


cdef void _step5(Buf* w) noexcept:
    cdef int a
    w.j = w.k
    if w.b[w.k] == b'e':
        a = _m(w)
        if a > 1 or (a == 1 and not _cvc(w, w.k - 1)):
            w.k -= 1
    if w.b[w.k] == b'l' and _doublec(w, w.k) and _m(w) > 1:
        w.k -= 1


cdef inline object _stem_one(str word):
    cdef Py_ssize_t n = len(word)
    if n <= 2:
        return word
    if n > MAXWORD:
        return _py_stem(word)
    cdef Buf w
    cdef Py_ssize_t i
    cdef Py_UCS4 ch
    for i in range(n):
        ch = word[i]
        if ch > 127:
            return _py_stem(word)
        w.b[i] = <char>ch
    w.k = <int>n - 1
    _step1ab(&w)
    _step1c(&w)
    _step2(&w)
    _step3(&w)
    _step4(&w)
    _step5(&w)
    return w.b[: w.k + 1].decode("ascii")


def porter_stem(str word):
    """Return the Porter stem of ``word``.

    Words of length <= 2 come back unchanged.
    """
    return _stem_one(word)


def stem_words(words):
    """Stem a sequence of words, returning a list."""
    return [_stem_one(word) for word in words]
