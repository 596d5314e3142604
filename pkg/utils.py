# utils.py

import hashlib
import logging
import re
from typing import Iterable, Iterator

from rapidfuzz import fuzz, process

from config import SUGGESTION_SCORE_THRESHOLD
from errors import ParseError

# Configure logging
logger = logging.getLogger(__name__)

_DIGITS = re.compile(r"(\d+)")
_COMMENT = re.compile(r"(?:^|\s)#")


def natural_key(name: str) -> tuple:
    """Sort key that orders embedded integers numerically, so beta[1.10] follows beta[1.9]."""
    return tuple(int(part) if part.isdigit() else part for part in _DIGITS.split(str(name)))


def suggest(name: str, known: Iterable[str]) -> str:
    """Return a ' (did you mean ...?)' hint for a mistyped identifier, or an empty string."""
    choices = list(known)
    if not choices:
        return ""
    match = process.extractOne(name, choices, scorer=fuzz.ratio, score_cutoff=SUGGESTION_SCORE_THRESHOLD)
    if match is None:
        return ""
    return f" (did you mean '{match[0]}'?)"


def iter_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    """Yield (line number, tokens) for each non-blank line. A token starting with '#' opens a comment."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _COMMENT.split(raw, 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_word_tokens(tokens: list[str], lineno: int | None = None) -> list[tuple[str, int]]:
    """Parse `g` / `g^-1` tokens into (name, exponent) letters."""
    letters = []
    for token in tokens:
        if token.endswith('^-1'):
            name, exponent = token[:-3], -1
        elif token.endswith('^1'):
            name, exponent = token[:-2], 1
        else:
            name, exponent = token, 1
        if not name or '^' in name:
            raise ParseError(f"malformed word token '{token}'", lineno)
        letters.append((name, exponent))
    return letters


def format_letters(letters: Iterable[tuple[str, int]]) -> str:
    return ' '.join(name if exponent == 1 else f"{name}^-1" for name, exponent in letters)


def digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()
