"""
Finite group presentations and primitive characters to the integers.

Presentation file format (UTF-8)::

    # comment
    gens x y z
    rel [x, y]
    rel [y, z]

One ``gens`` line, then one ``rel`` line per relator; ``rel 1`` is the empty relator.
"""

import hashlib
import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from cutnumber.core.group import (
    Alphabet,
    Word,
    commutator,
    format_word,
    is_identifier,
    parse_word,
)
from cutnumber.core.ring import integer_rank
from cutnumber.utils.errors import (
    ArityMismatchError,
    InconsistentPhiError,
    NonPrimitivePhiError,
    PresentationError,
    WordSyntaxError,
)
from cutnumber.utils.io import read_text, resolve_presentation_path
from cutnumber.utils.logger import get_logger

logger = get_logger("alexander.presentation")


@dataclass(frozen=True)
class Presentation:
    """A finite presentation: generators (the alphabet) and freely reduced relators."""

    alphabet: Alphabet
    relators: Tuple[Word, ...] = ()

    def __post_init__(self) -> None:
        if len(self.alphabet) < 1:
            raise PresentationError("A presentation needs at least one generator")
        for relator in self.relators:
            if relator.alphabet != self.alphabet:
                raise PresentationError("Relator over a foreign alphabet")

    @property
    def generator_count(self) -> int:
        return len(self.alphabet)

    @property
    def names(self) -> Tuple[str, ...]:
        return self.alphabet.names

    def exponent_sum_matrix(self) -> List[List[int]]:
        """Get the relator-by-generator matrix of exponent sums."""
        return [list(r.abelianization()) for r in self.relators]

    def betti_number(self) -> int:
        """Get the first Betti number: generators minus the rank of the exponent-sum matrix."""
        return self.generator_count - integer_rank(
            self.exponent_sum_matrix(), self.generator_count
        )

    def with_relator(self, relator: Word) -> "Presentation":
        """Append a relator (a Tietze move when it is a consequence of the others)."""
        return Presentation(self.alphabet, self.relators + (relator,))

    def with_generator(self, name: str, definition: Word) -> "Presentation":
        """
        Add a generator together with a defining relator ``name^-1 * definition``.

        Args:
            name: New generator name
            definition: Word in the old generators

        Returns:
            The extended presentation
        """
        alphabet = Alphabet(self.alphabet.names + (name,))
        embed = alphabet.generators()[: len(self.alphabet)]
        relators = tuple(r.substitute(embed) for r in self.relators)
        new = alphabet.gen(len(self.alphabet))
        return Presentation(alphabet, relators + (new.inverse() * definition.substitute(embed),))

    def to_text(self) -> str:
        lines = ["gens " + " ".join(self.names)]
        lines.extend(f"rel {format_word(r)}" for r in self.relators)
        return "\n".join(lines) + "\n"

    def digest(self) -> str:
        """SHA-256 of the canonical text form."""
        return hashlib.sha256(self.to_text().encode("utf-8")).hexdigest()


def parse_presentation(text: str, source: str = "<presentation>") -> Presentation:
    """
    Parse presentation text.

    Args:
        text: File contents
        source: Name used in error messages

    Returns:
        The presentation

    Raises:
        PresentationError: On an empty file, a missing or duplicate ``gens`` line, or an
            unknown keyword
        WordSyntaxError: On a malformed relator, with line and column
    """
    alphabet: Optional[Alphabet] = None
    relators: List[Word] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        stripped = line.strip()
        if not stripped:
            continue
        parts = stripped.split(None, 1)
        keyword = parts[0]
        rest = parts[1] if len(parts) > 1 else ""
        keyword_end = line.index(keyword) + len(keyword)
        if keyword == "gens":
            if alphabet is not None:
                raise PresentationError(
                    f"{source}: duplicate gens line", line=number, source=source
                )
            names = rest.split()
            if not names:
                raise PresentationError(f"{source}: gens line lists no generators", line=number)
            for name in names:
                if not is_identifier(name):
                    raise PresentationError(
                        f"{source}: invalid generator name {name!r}", line=number
                    )
            try:
                alphabet = Alphabet.from_names(names)
            except Exception as e:
                raise PresentationError(f"{source}: {e}", line=number) from e
        elif keyword == "rel":
            if alphabet is None:
                raise PresentationError(f"{source}: rel before gens", line=number)
            column = (line.find(rest, keyword_end) if rest else len(line)) + 1
            relators.append(parse_word(rest, alphabet, line=number, column=column))
        else:
            raise PresentationError(
                f"{source}: unknown keyword {keyword!r}", line=number, source=source
            )
    if alphabet is None:
        raise PresentationError(f"{source}: no gens line (empty presentation)", source=source)
    presentation = Presentation(alphabet, tuple(relators))
    logger.debug(
        f"Parsed {source}: {presentation.generator_count} generators, {len(relators)} relators"
    )
    return presentation


def load_presentation(path_or_name: str) -> Presentation:
    """
    Read a presentation file or a bundled presentation by name.

    Args:
        path_or_name: File path, or ``torus``, ``free2``, ``model2``

    Returns:
        The presentation
    """
    path = resolve_presentation_path(path_or_name)
    try:
        text = read_text(path)
    except OSError as e:
        raise PresentationError(f"Cannot read presentation {path_or_name!r}: {e}") from e
    return parse_presentation(text, source=path)


def free_group_presentation(n: int) -> Presentation:
    """Get ``<x1, ..., xn | >``."""
    return Presentation(Alphabet.standard(n))


def free_abelian_presentation(m: int) -> Presentation:
    """Get ``<x1, ..., xm | [x_i, x_j], i < j>``."""
    alphabet = Alphabet.standard(m)
    x = alphabet.generators()
    relators = tuple(commutator(x[i], x[j]) for i in range(m) for j in range(i + 1, m))
    return Presentation(alphabet, relators)


@dataclass(frozen=True)
class PhiMap:
    """Character to the integers sending generator ``i`` to ``n[i]``."""

    n: Tuple[int, ...]

    @classmethod
    def parse(cls, text: str) -> "PhiMap":
        """Parse ``"1,0,0"``."""
        try:
            return cls(tuple(int(p) for p in text.replace(" ", "").split(",") if p != ""))
        except ValueError:
            raise WordSyntaxError(f"Invalid character vector {text!r}") from None

    def __len__(self) -> int:
        return len(self.n)

    def __iter__(self) -> Iterator[int]:
        return iter(self.n)

    def gcd(self) -> int:
        return reduce(math.gcd, (abs(v) for v in self.n), 0)

    def is_primitive(self) -> bool:
        return self.gcd() == 1

    def negate(self) -> "PhiMap":
        return PhiMap(tuple(-v for v in self.n))

    def inconsistent_relators(self, presentation: Presentation) -> List[int]:
        """Get the indices of relators with non-zero image."""
        return [
            i for i, r in enumerate(presentation.relators) if r.exponent_sum(self.n) != 0
        ]

    def validate(self, presentation: Presentation) -> "PhiMap":
        """
        Check that this is a primitive character of the presented group.

        Args:
            presentation: The presentation

        Returns:
            ``self``

        Raises:
            ArityMismatchError: If the length differs from the generator count
            NonPrimitivePhiError: If the gcd of the entries is not 1
            InconsistentPhiError: If some relator has non-zero image
        """
        if len(self.n) != presentation.generator_count:
            raise ArityMismatchError(
                f"phi has {len(self.n)} entries for {presentation.generator_count} generators",
                phi=list(self.n),
            )
        if not self.is_primitive():
            raise NonPrimitivePhiError(
                f"phi={list(self.n)} is not primitive (gcd {self.gcd()})", phi=list(self.n)
            )
        bad = self.inconsistent_relators(presentation)
        if bad:
            raise InconsistentPhiError(
                f"phi={list(self.n)} does not kill relator(s) {bad}",
                phi=list(self.n),
                relators=bad,
            )
        return self

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.n)


PhiLike = Union[PhiMap, Sequence[int]]


def as_phi(phi: PhiLike) -> PhiMap:
    return phi if isinstance(phi, PhiMap) else PhiMap(tuple(phi))
