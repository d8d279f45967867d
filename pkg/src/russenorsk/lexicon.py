"""Structured Russenorsk vocabulary: parsing, validation, querying, grouping.

The vocabulary file is a UTF-8 JSON array of entry objects. Each entry
records one lemma (or fixed expression) with its variant spellings, an
optional Cyrillic representation, glosses in English/Norwegian/Russian,
part of speech, claimed origin, free-text comment, an attested example
sentence with translations, and provenance pointers (page reference,
link, IPA).

All values are immutable after parsing and safe to share across threads.
"""

from __future__ import annotations

import json
import unicodedata
import warnings
from dataclasses import dataclass
from enum import Enum

from .textnorm import lexicon_key


class LexiconError(Exception):
    """Base class for vocabulary file problems."""


class LexiconParseError(LexiconError):
    """The document is not well-formed JSON."""

    def __init__(self, message: str, byte_offset: int):
        super().__init__(f"{message} (byte offset {byte_offset})")
        self.byte_offset = byte_offset


class LexiconValidationError(LexiconError):
    """An entry violates the schema or an invariant."""

    def __init__(self, index: int, fieldname: str, message: str):
        super().__init__(f"entry {index}, field '{fieldname}': {message}")
        self.index = index
        self.fieldname = fieldname


class DuplicateEntryError(LexiconError):
    """Two entries share the same canonical form and part of speech."""

    def __init__(self, index: int, form: str, pos: "PartOfSpeech"):
        super().__init__(f"entry {index}: duplicate form/pos pair ({form!r}, {pos.value})")
        self.index = index
        self.form = form
        self.pos = pos


class UnknownFieldWarning(UserWarning):
    """An entry carries a key outside the schema (kept, not fatal)."""


class Origin(Enum):
    RUSSIAN = "russian"
    NORWEGIAN = "norwegian"
    DUTCH = "dutch"
    LOW_GERMAN = "low_german"
    HIGH_GERMAN = "high_german"
    ENGLISH = "english"
    DUAL = "dual"
    UNKNOWN = "unknown"


class PartOfSpeech(Enum):
    NOUN = "noun"
    VERB = "verb"
    ADJECTIVE = "adjective"
    ADVERB = "adverb"
    PRONOUN = "pronoun"
    PREPOSITION = "preposition"
    PARTICLE = "particle"
    INTERJECTION = "interjection"
    NUMERAL = "numeral"
    PHRASE = "phrase"
    OTHER = "other"


_POS_ALIASES = {
    "adj": PartOfSpeech.ADJECTIVE,
    "adv": PartOfSpeech.ADVERB,
    "n": PartOfSpeech.NOUN,
    "v": PartOfSpeech.VERB,
    "prep": PartOfSpeech.PREPOSITION,
    "pron": PartOfSpeech.PRONOUN,
    "intj": PartOfSpeech.INTERJECTION,
    "num": PartOfSpeech.NUMERAL,
}

_SCHEMA_KEYS = (
    "form",
    "variants",
    "cyrillic",
    "gloss_en",
    "gloss_no",
    "gloss_ru",
    "pos",
    "origin",
    "comment",
    "example_rn",
    "example_no",
    "example_ru",
    "page_ref",
    "link",
    "ipa",
)


@dataclass(frozen=True)
class LexiconEntry:
    """One Russenorsk lemma with translations, origin, and provenance."""

    form: str
    pos: PartOfSpeech
    origin: Origin = Origin.UNKNOWN
    variants: tuple[str, ...] = ()
    cyrillic: str | None = None
    gloss_en: str | None = None
    gloss_no: str | None = None
    gloss_ru: str | None = None
    comment: str | None = None
    example_rn: str | None = None
    example_no: str | None = None
    example_ru: str | None = None
    page_ref: str | None = None
    source_link: str | None = None
    ipa: str | None = None


class OriginProfile(Enum):
    SINGLE_ORIGIN = "single_origin"
    DUAL_ORIGIN = "dual_origin"
    MIXED = "mixed"


@dataclass(frozen=True)
class SynonymGroup:
    """Entries sharing a normalized English gloss."""

    concept_key: str
    members: tuple[LexiconEntry, ...]
    origin_profile: OriginProfile


@dataclass(frozen=True)
class QueryFilter:
    """Conjunction of optional entry filters; unset fields match everything."""

    origin: Origin | None = None
    pos: PartOfSpeech | None = None
    form_contains: str | None = None
    gloss_contains: str | None = None


def parse_origin(raw: str | None, index: int) -> Origin:
    if raw is None:
        return Origin.UNKNOWN
    token = raw.strip().casefold().replace(" ", "_").replace("-", "_")
    if token == "":
        return Origin.UNKNOWN
    if token == "lowgerman":
        token = "low_german"
    if token == "highgerman":
        token = "high_german"
    try:
        return Origin(token)
    except ValueError:
        raise LexiconValidationError(index, "origin", f"unrecognized origin {raw!r}") from None


def parse_pos(raw: str, index: int) -> tuple[PartOfSpeech, str | None]:
    """Map a source POS string to the closed tagset.

    Returns (pos, note); note is non-None when the string was unrecognized
    and must be preserved in the entry comment.
    """
    if not isinstance(raw, str) or not raw.strip():
        raise LexiconValidationError(index, "pos", "missing or empty")
    token = raw.strip().casefold()
    if token in _POS_ALIASES:
        return _POS_ALIASES[token], None
    try:
        return PartOfSpeech(token), None
    except ValueError:
        return PartOfSpeech.OTHER, f"unrecognized pos {raw.strip()!r}"


def _optional_str(record: dict, key: str, index: int) -> str | None:
    value = record.get(key)
    if value is None:
        return None
    if not isinstance(value, str):
        raise LexiconValidationError(index, key, f"expected string, got {type(value).__name__}")
    return value if value.strip() else None


def _parse_entry(record: dict, index: int) -> LexiconEntry:
    if not isinstance(record, dict):
        raise LexiconValidationError(index, "", f"expected object, got {type(record).__name__}")

    unknown = [k for k in record if k not in _SCHEMA_KEYS]
    if unknown:
        warnings.warn(
            f"entry {index}: unknown keys {sorted(unknown)} ignored",
            UnknownFieldWarning,
            stacklevel=3,
        )

    form = record.get("form")
    if not isinstance(form, str) or not form.strip():
        raise LexiconValidationError(index, "form", "missing or empty")
    form = form.strip()

    raw_variants = record.get("variants", [])
    if not isinstance(raw_variants, list) or any(not isinstance(v, str) for v in raw_variants):
        raise LexiconValidationError(index, "variants", "expected array of strings")
    variants = tuple(v.strip() for v in raw_variants if v.strip())
    seen: set[str] = {form.casefold()}
    for v in variants:
        key = v.casefold()
        if key in seen:
            raise LexiconValidationError(index, "variants", f"duplicate spelling {v!r}")
        seen.add(key)

    pos, pos_note = parse_pos(record.get("pos"), index)
    origin = parse_origin(record.get("origin"), index)

    comment = _optional_str(record, "comment", index)
    if pos_note:
        comment = f"{comment}; {pos_note}" if comment else pos_note

    entry = LexiconEntry(
        form=form,
        pos=pos,
        origin=origin,
        variants=variants,
        cyrillic=_optional_str(record, "cyrillic", index),
        gloss_en=_optional_str(record, "gloss_en", index),
        gloss_no=_optional_str(record, "gloss_no", index),
        gloss_ru=_optional_str(record, "gloss_ru", index),
        comment=comment,
        example_rn=_optional_str(record, "example_rn", index),
        example_no=_optional_str(record, "example_no", index),
        example_ru=_optional_str(record, "example_ru", index),
        page_ref=_optional_str(record, "page_ref", index),
        source_link=_optional_str(record, "link", index),
        ipa=_optional_str(record, "ipa", index),
    )
    if entry.example_rn and not (entry.example_no or entry.example_ru):
        raise LexiconValidationError(
            index, "example_rn", "a Russenorsk example requires a Norwegian or Russian translation"
        )
    return entry


def parse_lexicon(data: bytes | str) -> list[LexiconEntry]:
    """Parse a vocabulary document into validated entries, order preserved."""
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise LexiconParseError("invalid UTF-8", exc.start) from exc
    else:
        text = data
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        byte_offset = len(text[: exc.pos].encode("utf-8"))
        raise LexiconParseError(exc.msg, byte_offset) from exc
    if not isinstance(payload, list):
        raise LexiconParseError("top-level value must be an array", 0)

    entries: list[LexiconEntry] = []
    seen_pairs: set[tuple[str, PartOfSpeech]] = set()
    for index, record in enumerate(payload):
        entry = _parse_entry(record, index)
        pair = (entry.form.casefold(), entry.pos)
        if pair in seen_pairs:
            raise DuplicateEntryError(index, entry.form, entry.pos)
        seen_pairs.add(pair)
        entries.append(entry)
    return entries


def serialize_lexicon(entries: list[LexiconEntry]) -> str:
    """Render entries back to the vocabulary JSON format."""
    records = []
    for e in entries:
        record: dict = {"form": e.form}
        if e.variants:
            record["variants"] = list(e.variants)
        for key, value in (
            ("cyrillic", e.cyrillic),
            ("gloss_en", e.gloss_en),
            ("gloss_no", e.gloss_no),
            ("gloss_ru", e.gloss_ru),
        ):
            if value is not None:
                record[key] = value
        record["pos"] = e.pos.value
        record["origin"] = e.origin.value
        for key, value in (
            ("comment", e.comment),
            ("example_rn", e.example_rn),
            ("example_no", e.example_no),
            ("example_ru", e.example_ru),
            ("page_ref", e.page_ref),
            ("link", e.source_link),
            ("ipa", e.ipa),
        ):
            if value is not None:
                record[key] = value
        records.append(record)
    return json.dumps(records, ensure_ascii=False, indent=2) + "\n"


def query(entries: list[LexiconEntry], flt: QueryFilter) -> list[LexiconEntry]:
    """Entries matching every set filter, in their original order."""
    form_needle = lexicon_key(flt.form_contains) if flt.form_contains else None
    gloss_needle = lexicon_key(flt.gloss_contains) if flt.gloss_contains else None

    out = []
    for e in entries:
        if flt.origin is not None and e.origin != flt.origin:
            continue
        if flt.pos is not None and e.pos != flt.pos:
            continue
        if form_needle is not None:
            spellings = (e.form, *e.variants)
            if not any(form_needle in lexicon_key(s) for s in spellings):
                continue
        if gloss_needle is not None:
            glosses = [g for g in (e.gloss_en, e.gloss_no, e.gloss_ru) if g]
            if not any(gloss_needle in lexicon_key(g) for g in glosses):
                continue
        out.append(e)
    return out


def find_form(entries: list[LexiconEntry], word: str) -> list[LexiconEntry]:
    """Exact lookup by canonical form or any variant, diacritic-insensitive."""
    needle = lexicon_key(word)
    return [e for e in entries if any(lexicon_key(s) == needle for s in (e.form, *e.variants))]


_ARTICLES = frozenset({"a", "an", "the", "to"})


def concept_key(gloss: str) -> str:
    """Normalize an English gloss for synonym grouping.

    Case-folds, strips punctuation, drops leading articles/infinitive
    markers, and collapses whitespace. No stemming: "fish" and "fishing"
    stay distinct to avoid false merges.
    """
    folded = gloss.casefold()
    cleaned = "".join(ch if not _is_punct(ch) else " " for ch in folded)
    tokens = cleaned.split()
    while tokens and tokens[0] in _ARTICLES:
        tokens = tokens[1:]
    return " ".join(tokens)


def _is_punct(ch: str) -> bool:
    return unicodedata.category(ch).startswith("P")


def _profile(members: tuple[LexiconEntry, ...]) -> OriginProfile:
    origins = {m.origin for m in members}
    if Origin.RUSSIAN in origins and Origin.NORWEGIAN in origins:
        return OriginProfile.DUAL_ORIGIN
    if len(origins) == 1:
        return OriginProfile.SINGLE_ORIGIN
    return OriginProfile.MIXED


def group_synonyms(entries: list[LexiconEntry]) -> list[SynonymGroup]:
    """Group entries that share a normalized English gloss.

    Entries without an English gloss are left ungrouped, and a group needs
    at least two members. Groups come back sorted by concept key.
    """
    buckets: dict[str, list[LexiconEntry]] = {}
    for e in entries:
        if not e.gloss_en:
            continue
        key = concept_key(e.gloss_en)
        if not key:
            continue
        buckets.setdefault(key, []).append(e)

    groups = []
    for key in sorted(buckets):
        members = tuple(buckets[key])
        if len(members) < 2:
            continue
        groups.append(SynonymGroup(key, members, _profile(members)))
    return groups


def origin_stats(entries: list[LexiconEntry]) -> dict[Origin, int]:
    """Histogram of claimed origins; every origin appears, counts sum to len."""
    counts = {origin: 0 for origin in Origin}
    for e in entries:
        counts[e.origin] += 1
    return counts
