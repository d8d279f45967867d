"""Unicode normalization helpers shared across the package.

Two folding regimes exist because the metric and the lexicon need different
treatment of the Nordic letters: chrF preprocessing folds them to ASCII
(å→a, ø→o, æ→ae) so Russenorsk/Norwegian strings become comparable, while
lexicon lookup keeps å/ø/æ distinct (they are phonemic in Norwegian) and only
strips true combining marks.
"""

from __future__ import annotations

import unicodedata

# ø and æ have no canonical decomposition, so NFD alone cannot fold them.
# å does decompose (a + U+030A) but is listed for clarity and for the
# uppercase forms that survive when case folding is disabled.
_NORDIC_FOLD = {
    "å": "a",
    "Å": "A",
    "ø": "o",
    "Ø": "O",
    "æ": "ae",
    "Æ": "AE",
}

_PRESERVED = frozenset("åøæ")


def strip_marks(text: str) -> str:
    """Apply canonical decomposition and drop all combining marks."""
    decomposed = unicodedata.normalize("NFD", text)
    return "".join(ch for ch in decomposed if not unicodedata.combining(ch))


def fold_diacritics(text: str) -> str:
    """Full diacritic fold: Nordic letters to ASCII, then strip marks."""
    folded = "".join(_NORDIC_FOLD.get(ch, ch) for ch in text)
    return strip_marks(folded)


def lexicon_key(text: str) -> str:
    """Case- and diacritic-insensitive key that keeps å/ø/æ distinct.

    Composed first so a decomposed "a + ring" still counts as å.
    """
    composed = unicodedata.normalize("NFC", text.casefold())
    out = []
    for ch in composed:
        if ch in _PRESERVED:
            out.append(ch)
        else:
            out.append(strip_marks(ch))
    return "".join(out)


def match_key(text: str) -> str:
    """Casefolded, fully diacritic-stripped form used for keyword matching."""
    return fold_diacritics(text.casefold())
