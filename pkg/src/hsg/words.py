"""Alphabets, words, the marker symbol and free-monoid homomorphisms.

Words are plain tuples of string tokens.  A token may be longer than one
character (``"a^-1"``), which is why the text format separates tokens by
whitespace whenever that is needed.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence, Union

MARKER = "#"
EPS = "@eps"
RESERVED = frozenset({EPS, "@one", "@empty"})

Word = tuple  # tuple[str, ...]


class AlphabetError(ValueError):
    """A symbol is not in the alphabet, or two alphabets do not fit together."""


class CapExceeded(RuntimeError):
    """An enumeration grew past its configured cap."""


def element_cap() -> int:
    return int(os.environ.get("HSG_CAP_ELEMENTS", 10**6))


@dataclass(frozen=True)
class Alphabet:
    letters: tuple
    marked: bool = False

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        if len(set(letters)) != len(letters):
            raise AlphabetError(f"duplicate letters in {letters}")
        for a in letters:
            if not isinstance(a, str) or not a or any(c.isspace() for c in a):
                raise AlphabetError(f"bad letter {a!r}")
            if a in RESERVED:
                raise AlphabetError(f"{a!r} is reserved")
        if MARKER in letters and not self.marked:
            raise AlphabetError("the marker # is added with with_marker()")
        if self.marked and MARKER not in letters:
            object.__setattr__(self, "letters", letters + (MARKER,))

    @classmethod
    def of(cls, letters: Union[str, Iterable[str]]) -> "Alphabet":
        """``Alphabet.of("ab")`` or ``Alphabet.of(["a", "a^-1"])``; # is allowed here."""
        if isinstance(letters, str):
            letters = letters.split() if any(c.isspace() for c in letters) else list(letters)
        letters = tuple(letters)
        return cls(letters, marked=MARKER in letters)

    def __iter__(self):
        return iter(self.letters)

    def __len__(self):
        return len(self.letters)

    def __contains__(self, a):
        return a in self._index

    @property
    def _index(self) -> dict:
        try:
            return self.__dict__["_idx"]
        except KeyError:
            idx = {a: i for i, a in enumerate(self.letters)}
            object.__setattr__(self, "_idx", idx)
            return idx

    def index(self, a: str) -> int:
        return self._index[a]

    def with_marker(self) -> "Alphabet":
        if self.marked:
            return self
        return Alphabet(self.letters + (MARKER,), marked=True)

    def base(self) -> "Alphabet":
        return Alphabet(tuple(a for a in self.letters if a != MARKER))

    def union(self, other: Iterable[str]) -> "Alphabet":
        extra = tuple(a for a in other if a not in self)
        letters = self.letters + extra
        return Alphabet(letters, marked=MARKER in letters)

    def check(self, w: Sequence[str]) -> Word:
        w = tuple(w)
        for a in w:
            if a not in self:
                raise AlphabetError(f"symbol {a!r} not in alphabet {self.letters}")
        return w

    def sort_key(self, w: Sequence[str]) -> tuple:
        """Length first, then lexicographic in declared letter order."""
        idx = self._index
        return (len(w), tuple(idx[a] for a in w))

    def multichar(self) -> bool:
        return any(len(a) > 1 for a in self.letters)


def parse_word(text: str) -> Word:
    text = text.strip()
    if text in ("", EPS):
        return ()
    if any(c.isspace() for c in text):
        return tuple(t for t in text.split() if t != EPS)
    return tuple(text)


def format_word(w: Sequence[str], spaced: bool | None = None) -> str:
    if not w:
        return EPS
    if spaced is None:
        spaced = any(len(a) > 1 for a in w)
    return " ".join(w) if spaced else "".join(w)


def as_word(w) -> Word:
    return parse_word(w) if isinstance(w, str) else tuple(w)


def reverse(w: Sequence[str]) -> Word:
    return tuple(reversed(tuple(w)))


@dataclass(frozen=True)
class MarkedWord:
    u: Word
    v: Word
    w: Word

    def __post_init__(self):
        for part in (self.u, self.v, self.w):
            if MARKER in part:
                raise AlphabetError("marked-word components must be #-free")

    @property
    def word(self) -> Word:
        return tuple(self.u) + (MARKER,) + tuple(self.v) + (MARKER,) + reverse(self.w)

    def __str__(self):
        return format_word(self.word)


def mark(u, v, w) -> MarkedWord:
    return MarkedWord(as_word(u), as_word(v), as_word(w))


def unmark(t) -> tuple:
    """Split ``u#v#w^r`` back into ``(u, v, w)``."""
    if isinstance(t, MarkedWord):
        return t.u, t.v, t.w
    t = as_word(t)
    pos = [i for i, a in enumerate(t) if a == MARKER]
    if len(pos) != 2:
        raise AlphabetError(f"expected exactly two markers, found {len(pos)}")
    i, j = pos
    return t[:i], t[i + 1 : j], reverse(t[j + 1 :])


@dataclass(frozen=True, eq=False)
class FreeHom:
    """Homomorphism between free monoids given by letter images.

    In semigroup mode (``monoid=False``) every image must be nonempty.
    """

    source: Alphabet
    target: Alphabet
    image: Mapping = field(default_factory=dict)
    monoid: bool = False

    def __post_init__(self):
        img = {a: as_word(x) for a, x in dict(self.image).items()}
        missing = [a for a in self.source if a not in img]
        if missing:
            raise AlphabetError(f"homomorphism undefined on {missing}")
        extra = [a for a in img if a not in self.source]
        if extra:
            raise AlphabetError(f"image given for letters outside source: {extra}")
        for a, x in img.items():
            self.target.check(x)
            if not x and not self.monoid:
                raise AlphabetError(f"empty image of {a!r} in semigroup mode")
        object.__setattr__(self, "image", img)

    def __call__(self, w: Sequence[str]) -> Word:
        out = []
        img = self.image
        for a in w:
            try:
                out.extend(img[a])
            except KeyError:
                raise AlphabetError(f"symbol {a!r} not in source alphabet") from None
        return tuple(out)

    @classmethod
    def identity(cls, alphabet: Alphabet) -> "FreeHom":
        return cls(alphabet, alphabet, {a: (a,) for a in alphabet})

    def with_marker(self) -> "FreeHom":
        """Extend by # -> #."""
        img = dict(self.image)
        img[MARKER] = (MARKER,)
        return FreeHom(self.source.with_marker(), self.target.with_marker(), img, self.monoid)

    def is_letter_to_letter(self) -> bool:
        return all(len(x) == 1 for x in self.image.values())

    def is_weak(self) -> bool:
        return all(len(x) <= 1 for x in self.image.values())

    def to_json(self) -> dict:
        return {a: format_word(x) for a, x in self.image.items()}


def apply_hom(h: FreeHom, w: Sequence[str]) -> Word:
    return h(w)
