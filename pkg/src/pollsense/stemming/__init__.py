"""Porter stemming kernel with a compiled core and a pure-Python fallback.

The compiled extension is selected at import when it was built; set
``POLLSENSE_PURE_PYTHON=1`` to force the pure-Python backend. Both
backends are tested to agree word-for-word.
"""

import os

if os.environ.get("POLLSENSE_PURE_PYTHON", "0") not in ("", "0"):
    from ._porter_py import porter_stem, stem_words

    BACKEND = "python"
else:
    try:
        from ._porter import porter_stem, stem_words

        BACKEND = "cython"
    except ImportError:
        from ._porter_py import porter_stem, stem_words

        BACKEND = "python"

__all__ = ["porter_stem", "stem_words", "BACKEND"]
