"""
Text grammar for words.

    word := term { term } | '1'
    term := atom [ '^' int ] | '[' word ',' word ']' [ '^' int ] | '(' word ')' [ '^' int ]
    atom := identifier

``[u, v]`` desugars to ``u v u^-1 v^-1``. An identifier that is not a generator name but is
a run of one-character generator names (``xyx``) is read letter by letter; a trailing power
binds to the last letter only.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from cutnumber.core.group.word import Alphabet, Word, commutator
from cutnumber.utils.errors import WordSyntaxError

IDENTITY_TEXT = "1"
DIGITS = "0123456789"


def is_identifier(text: str) -> bool:
    """Check for a generator name: ASCII digits allowed after the first character."""
    return bool(text) and (text[0].isalpha() or text[0] == "_") and all(
        c.isalpha() or c in DIGITS or c == "_" for c in text
    )


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str, line: int = 1, column: int = 1) -> List[Token]:
    """
    Split word text into tokens.

    Args:
        text: Source text
        line: Line number of the first character (for error reporting)
        column: Column of the first character

    Returns:
        Tokens, terminated by an ``end`` token

    Raises:
        WordSyntaxError: On an unexpected character
    """
    tokens: List[Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        col = column + i
        if ch.isspace() or ch == "*":
            i += 1
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalpha() or text[j] in DIGITS or text[j] == "_"):
                j += 1
            tokens.append(Token("ident", text[i:j], line, col))
            i = j
        elif ch in DIGITS or (ch in "+-" and i + 1 < len(text) and text[i + 1] in DIGITS):
            j = i + 1
            while j < len(text) and text[j] in DIGITS:
                j += 1
            tokens.append(Token("int", text[i:j], line, col))
            i = j
        elif ch in "[](),^":
            tokens.append(Token(ch, ch, line, col))
            i += 1
        else:
            raise WordSyntaxError(f"Unexpected character {ch!r}", line, col)
    tokens.append(Token("end", "", line, column + len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens: List[Token], alphabet: Alphabet) -> None:
        self.tokens = tokens
        self.pos = 0
        self.alphabet = alphabet

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def error(
        self, message: str, token: Optional[Token] = None, **details: object
    ) -> WordSyntaxError:
        token = token or self.current
        return WordSyntaxError(message, token.line, token.column, **details)

    def expect(self, kind: str) -> Token:
        token = self.current
        if token.kind != kind:
            shown = token.text or "end of input"
            raise self.error(f"Expected {kind!r}, found {shown!r}")
        self.pos += 1
        return token

    def parse(self) -> Word:
        word = self.word(("end",))
        self.expect("end")
        return word

    def word(self, stop: Sequence[str]) -> Word:
        if self.current.kind == "int" and self.current.text == IDENTITY_TEXT:
            self.pos += 1
            result = self.alphabet.identity()
            if self.current.kind not in stop:
                raise self.error("Identity '1' must stand alone")
            return result
        if self.current.kind in stop:
            raise self.error("Empty word")
        result = self.alphabet.identity()
        while self.current.kind not in stop:
            result = result * self.term()
        return result

    def power(self) -> int:
        if self.current.kind != "^":
            return 1
        self.pos += 1
        token = self.expect("int")
        try:
            return int(token.text)
        except ValueError:
            raise self.error(f"Invalid exponent {token.text!r}", token) from None

    def term(self) -> Word:
        token = self.current
        if token.kind == "ident":
            self.pos += 1
            prefix, last = self.letters(token)
            return prefix * (last ** self.power())
        if token.kind == "[":
            self.pos += 1
            left = self.word((",",))
            self.expect(",")
            right = self.word(("]",))
            self.expect("]")
            return commutator(left, right) ** self.power()
        if token.kind == "(":
            self.pos += 1
            inner = self.word((")",))
            self.expect(")")
            return inner ** self.power()
        shown = token.text or "end of input"
        raise self.error(f"Unexpected {shown!r}")

    def letters(self, token: Token) -> Tuple[Word, Word]:
        names = self.alphabet.names
        if token.text in names:
            return self.alphabet.identity(), self.alphabet.gen(names.index(token.text))
        if all(ch in names for ch in token.text):
            gens = [self.alphabet.gen(names.index(ch)) for ch in token.text]
            prefix = self.alphabet.identity()
            for g in gens[:-1]:
                prefix = prefix * g
            return prefix, gens[-1]
        raise self.error(
            f"Unknown generator {token.text!r}", token, generator=token.text
        )


def parse_word(
    text: str, alphabet: Union[Alphabet, Sequence[str]], line: int = 1, column: int = 1
) -> Word:
    """
    Parse word text over an alphabet.

    Args:
        text: Source text, e.g. ``"[x, y]^2 x^-1"``
        alphabet: Alphabet or list of generator names
        line: Line number used in error messages
        column: Column of the first character used in error messages

    Returns:
        The freely reduced word

    Raises:
        WordSyntaxError: With line and column on malformed input or unknown generators
    """
    if not isinstance(alphabet, Alphabet):
        alphabet = Alphabet.from_names(alphabet)
    return _Parser(tokenize(text, line, column), alphabet).parse()


def format_word(word: Word) -> str:
    """
    Render a word so that ``parse_word`` reads it back unchanged.

    Runs of one generator are collapsed to powers, e.g. ``x^2 y^-1 x``; the identity
    prints as ``1``.

    Args:
        word: Word to render

    Returns:
        Text form
    """
    if word.is_identity():
        return IDENTITY_TEXT
    names = word.alphabet.names
    pieces: List[str] = []
    run_index, run_power = word.letters[0][0], 0
    for index, sign in word.letters:
        if index == run_index and (run_power == 0 or (run_power > 0) == (sign > 0)):
            run_power += sign
            continue
        pieces.append(_format_run(names[run_index], run_power))
        run_index, run_power = index, sign
    pieces.append(_format_run(names[run_index], run_power))
    return " ".join(pieces)


def _format_run(name: str, power: int) -> str:
    return name if power == 1 else f"{name}^{power}"
