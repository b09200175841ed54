"""Presentations of involution systems and purely word-level checks.

A presentation is a finite alphabet of involution generators together with a
set of relator words over them; the square of every generator is an implicit
relator and is never stored.  Words are tuples of generator indices; the empty
tuple is the identity.  Since every generator is an involution, the inverse of
a word is its reversal and free reduction just deletes adjacent equal letters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Sequence

from .errors import ParseError, PreconditionError

Word = tuple  # tuple[int, ...]

INF = math.inf

RESERVED_CHARS = set("()^#")


# ---------------------------------------------------------------------------
# words


def free_reduce(word: Sequence[int]) -> Word:
    """Delete adjacent equal letters until none remain.

    Idempotent and length-nonincreasing; the result is the unique reduced
    word equal to the input in the universal quotient.
    """
    out: list[int] = []
    for s in word:
        if out and out[-1] == s:
            out.pop()
        else:
            out.append(s)
    return tuple(out)


def is_reduced(word: Sequence[int]) -> bool:
    return all(word[i] != word[i + 1] for i in range(len(word) - 1))


def inverse(word: Sequence[int]) -> Word:
    """Inverse of a word over involutions: its reversal."""
    return tuple(reversed(word))


def is_cyclically_reduced(word: Sequence[int]) -> bool:
    if not is_reduced(word):
        return False
    return len(word) < 2 or word[0] != word[-1]


def cyclic_shifts(word: Sequence[int]) -> frozenset:
    w = tuple(word)
    return frozenset(w[i:] + w[:i] for i in range(max(len(w), 1)))


@dataclass(frozen=True)
class CyclicClass:
    """Orbit of a cyclically reduced word under cyclic shift.

    With ``includes_inverse`` the orbit of the reversed word is merged in,
    which is the closure relevant to relator bookkeeping.
    """

    representatives: frozenset
    includes_inverse: bool

    def __contains__(self, word):
        return tuple(word) in self.representatives

    def __iter__(self):
        return iter(sorted(self.representatives))

    def __len__(self):
        return len(self.representatives)

    def canonical(self) -> Word:
        return min(self.representatives)


def shift_class(word: Sequence[int]) -> CyclicClass:
    """The orbit of ``word`` under cyclic shift only."""
    _require_cyclically_reduced(word)
    return CyclicClass(cyclic_shifts(word), includes_inverse=False)


def cyc(word: Sequence[int]) -> CyclicClass:
    """All cyclic shifts of ``word`` and of its inverse."""
    _require_cyclically_reduced(word)
    reps = cyclic_shifts(word) | cyclic_shifts(inverse(word))
    return CyclicClass(reps, includes_inverse=True)


def cyc_canonical(word: Sequence[int]) -> Word:
    """Lexicographically least member of cyc(word); the class representative."""
    return cyc(word).canonical()


def _require_cyclically_reduced(word) -> None:
    if not is_cyclically_reduced(word):
        raise PreconditionError(
            f"word {tuple(word)} is not cyclically reduced (first letter equals last)"
        )


# ---------------------------------------------------------------------------
# presentations


@dataclass(frozen=True)
class Generator:
    symbol: str


@dataclass(frozen=True)
class Presentation:
    """Alphabet plus relator words; generator squares are implicit."""

    generators: tuple  # tuple[str, ...]
    relators: tuple  # tuple[Word, ...]

    @property
    def rank(self) -> int:
        return len(self.generators)

    def index(self, symbol: str) -> int:
        return self.generators.index(symbol)

    def word_to_str(self, word: Sequence[int]) -> str:
        if not word:
            return "1"
        syms = [self.generators[i] for i in word]
        if all(len(g) == 1 for g in self.generators):
            return "".join(syms)
        return " ".join(syms)

    def word_from_str(self, text: str) -> Word:
        """Parse a word using the relator grammar; free-reduces the result."""
        toks = _tokenize_expr(text, 0)
        word, pos = _parse_wordexpr(toks, 0, self.generators, 0)
        if pos != len(toks):
            t = toks[pos]
            raise ParseError(f"unexpected token {t.text!r}", t.line, t.col)
        return free_reduce(word)

    def serialize(self) -> str:
        """Canonical DSL form: canonical cyc-representatives, sorted."""
        lines = ["gens: " + " ".join(self.generators)]
        reps = sorted(
            cyc_canonical(r) if is_cyclically_reduced(r) else r for r in self.relators
        )
        for r in reps:
            lines.append("rel: " + self.word_to_str(r))
        return "\n".join(lines) + "\n"


def make_presentation(generators: Iterable[str], relators: Iterable = ()) -> Presentation:
    """Build a presentation from symbols and relators (words or strings).

    Relators are free-reduced, normalized to canonical cyc-representatives
    when cyclically reduced, and deduplicated per cyc-class.  Rejects empty
    and one- or two-letter relators, which would kill or collapse generators.
    """
    gens = tuple(generators)
    _validate_symbols(gens)
    skeleton = Presentation(gens, ())
    out: list[Word] = []
    seen = set()
    for rel in relators:
        if isinstance(rel, str):
            word = skeleton.word_from_str(rel)
        else:
            word = free_reduce(tuple(rel))
        if any(not 0 <= s < len(gens) for s in word):
            raise ParseError(f"relator {word} uses an index outside the alphabet")
        if len(word) == 0:
            raise ParseError("relator is empty after free reduction")
        if len(word) == 1:
            raise ParseError(
                f"single-letter relator {skeleton.word_to_str(word)!r} kills a generator"
            )
        if len(word) == 2:
            raise ParseError(
                f"two-letter relator {skeleton.word_to_str(word)!r} collapses two generators"
            )
        if is_cyclically_reduced(word):
            word = cyc_canonical(word)
            key = word
        else:
            key = word
        if key not in seen:
            seen.add(key)
            out.append(word)
    return Presentation(gens, tuple(out))


def _validate_symbols(gens) -> None:
    if len(set(gens)) != len(gens):
        raise ParseError("generator symbols must be pairwise distinct")
    for g in gens:
        if not g or any(c.isspace() for c in g) or set(g) & RESERVED_CHARS:
            raise ParseError(f"bad generator symbol {g!r}")


# ---------------------------------------------------------------------------
# DSL parser


@dataclass
class _Tok:
    kind: str  # 'sym' | 'uint' | '(' | ')' | '^'
    text: str
    line: int
    col: int


def _tokenize_expr(text: str, line: int) -> list:
    toks = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c in "()^":
            toks.append(_Tok(c, c, line, i + 1))
            i += 1
        elif c.isdigit() and toks and toks[-1].kind == "^":
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(_Tok("uint", text[i:j], line, i + 1))
            i = j
        elif c == "#":
            break
        else:
            j = i
            while j < len(text) and not text[j].isspace() and text[j] not in RESERVED_CHARS:
                j += 1
            toks.append(_Tok("sym", text[i:j], line, i + 1))
            i = j
    return toks


def _sym_to_letters(tok: _Tok, gens) -> list:
    if tok.text in gens:
        return [gens.index(tok.text)]
    if all(len(g) == 1 for g in gens):
        letters = []
        for k, c in enumerate(tok.text):
            if c not in gens:
                raise ParseError(f"unknown generator symbol {c!r}", tok.line, tok.col + k)
            letters.append(gens.index(c))
        return letters
    raise ParseError(f"unknown generator symbol {tok.text!r}", tok.line, tok.col)


def _parse_wordexpr(toks, pos, gens, line):
    """wordexpr := term+ ; term := sym | '(' wordexpr ')' '^' uint"""
    word: list[int] = []
    start = pos
    while pos < len(toks) and toks[pos].kind in ("sym", "("):
        if toks[pos].kind == "sym":
            word.extend(_sym_to_letters(toks[pos], gens))
            pos += 1
        else:
            open_tok = toks[pos]
            inner, pos = _parse_wordexpr(toks, pos + 1, gens, line)
            if pos >= len(toks) or toks[pos].kind != ")":
                raise ParseError("expected ')'", open_tok.line, open_tok.col)
            pos += 1
            if pos >= len(toks) or toks[pos].kind != "^":
                raise ParseError("expected '^' after ')'", open_tok.line, open_tok.col)
            pos += 1
            if pos >= len(toks) or toks[pos].kind != "uint":
                raise ParseError("expected integer exponent", open_tok.line, open_tok.col)
            word.extend(inner * int(toks[pos].text))
            pos += 1
    if pos == start:
        where = toks[pos] if pos < len(toks) else _Tok("", "", line, 0)
        raise ParseError("expected a word", where.line or line, where.col)
    return word, pos


def parse_presentation(text: str) -> Presentation:
    """Parse DSL source: one ``gens:`` line then any number of ``rel:`` lines."""
    gens = None
    relator_exprs = []  # (line_no, expr_text)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("gens:"):
            if gens is not None:
                raise ParseError("duplicate gens: line", lineno)
            gens = tuple(line[len("gens:"):].split())
            if not gens:
                raise ParseError("gens: line declares no generators", lineno)
            _validate_symbols(gens)
        elif line.startswith("rel:"):
            if gens is None:
                raise ParseError("rel: before gens:", lineno)
            relator_exprs.append((lineno, line[len("rel:"):]))
        else:
            raise ParseError(f"expected 'gens:' or 'rel:', got {line!r}", lineno)
    if gens is None:
        raise ParseError("missing gens: line")

    skeleton = Presentation(gens, ())
    words = []
    for lineno, expr in relator_exprs:
        toks = _tokenize_expr(expr, lineno)
        word, pos = _parse_wordexpr(toks, 0, gens, lineno)
        if pos != len(toks):
            t = toks[pos]
            raise ParseError(f"unexpected token {t.text!r}", t.line, t.col)
        words.append(tuple(word))
    try:
        return make_presentation(gens, words)
    except ParseError:
        raise
    except Exception as exc:  # normalize unexpected issues into ParseError
        raise ParseError(str(exc))


# ---------------------------------------------------------------------------
# sign character and 2-recognizability


def has_sign_character(p: Presentation) -> bool:
    """True iff every relator has even length (the system is an EIS)."""
    return all(len(r) % 2 == 0 for r in p.relators)


@dataclass(frozen=True)
class TwoRecResult:
    ok: bool
    condition: int | None = None  # violated condition id: 1, 2 or 5
    witness: tuple = ()  # offending relator(s)
    detail: str = ""

    def __bool__(self):
        return self.ok


TWO_REC_OK = TwoRecResult(True)


def is_two_recognizable(p: Presentation) -> TwoRecResult:
    """Check the defining conditions of a 2-recognizable relator set.

    (1) every relator is cyclically reduced; (2) every relator has even
    length at least 4; (5) no two distinct words of the shift-and-inverse
    closure of the relator set begin with the same two letters.  The first
    violation found is returned with a witness.
    """
    for r in p.relators:
        if not is_cyclically_reduced(r):
            return TwoRecResult(False, 1, (r,), "relator is not cyclically reduced")
    for r in p.relators:
        if len(r) % 2 != 0 or len(r) < 4:
            return TwoRecResult(False, 2, (r,), "relator length is odd or below 4")
    by_prefix = {}
    for r in p.relators:
        for w in sorted(cyc(r).representatives):
            key = w[:2]
            other = by_prefix.get(key)
            if other is not None and other != w:
                return TwoRecResult(
                    False, 5, (other, w),
                    f"two words of cyc(R0) start with the 2-factor {key}",
                )
            by_prefix[key] = w
    return TWO_REC_OK


# ---------------------------------------------------------------------------
# rank-3 classification


@dataclass(frozen=True)
class Rank3Class:
    """Classification tag for a rank-3 two-recognizable presentation.

    ``family`` is one of "I", "II", "III", "IV" or "not-two-recognizable";
    ``params`` uses math.inf for an absent relator.  ``relabeling`` maps the
    input generator at position i to the role of canonical letter
    relabeling[i] (0=a, 1=b, 2=c).
    """

    family: str
    params: tuple = ()
    relabeling: tuple | None = None
    violation: TwoRecResult | None = field(default=None, compare=False)


def rank3_presentation(family: str, *params) -> Presentation:
    """Generate the canonical presentation of a rank-3 family member."""
    a, b, c = 0, 1, 2
    gens = ("a", "b", "c")

    def power(base, k):
        return tuple(base) * k

    fam = family.upper()
    if fam == "I":
        (m,) = params
        if not (isinstance(m, int) and m >= 1):
            raise PreconditionError("family I needs integer m >= 1")
        rels = [power((a, b, c), 2 * m)]
    elif fam == "II":
        (m,) = params
        if not (isinstance(m, int) and m >= 1):
            raise PreconditionError("family II needs integer m >= 1")
        rels = [power((a, b, a, c, b, c), m)]
    elif fam == "III":
        m, n = params
        if not (isinstance(m, int) and m >= 1):
            raise PreconditionError("family III needs integer m >= 1")
        if not (n == INF or (isinstance(n, int) and n >= 2)):
            raise PreconditionError("family III needs n >= 2 or inf")
        rels = [power((a, b, a, c), m)]
        if n != INF:
            rels.append(power((b, c), n))
    elif fam == "IV":
        m, n, l = params
        for k in (m, n, l):
            if not (k == INF or (isinstance(k, int) and k >= 2)):
                raise PreconditionError("family IV needs labels >= 2 or inf")
        rels = []
        for pair, k in (((a, b), m), ((b, c), n), ((a, c), l)):
            if k != INF:
                rels.append(power(pair, k))
    else:
        raise PreconditionError(f"unknown family {family!r}")
    return make_presentation(gens, rels)


def _relabel(word, perm):
    return tuple(perm[s] for s in word)


def _param_key(params):
    return tuple(float(x) for x in params)


def classify_rank3(p: Presentation) -> Rank3Class:
    """Match a rank-3 presentation against the four canonical families.

    Tries all six generator relabelings and replaces relators by canonical
    members of their cyc-classes; returns the family tag with parameters and
    the relabeling used, or the not-two-recognizable verdict.
    """
    if p.rank != 3:
        raise PreconditionError("classification applies to rank-3 presentations only")
    check = is_two_recognizable(p)
    if not check:
        return Rank3Class("not-two-recognizable", violation=check)

    matches = []  # (family_order, param_key, perm, family, params)
    for perm in permutations(range(3)):
        canon = frozenset(cyc_canonical(_relabel(r, perm)) for r in p.relators)
        for family, params in _match_family(canon):
            order = "I II III IV".split().index(family)
            matches.append((order, _param_key(params), perm, family, params))
    if not matches:
        # unreachable for genuinely 2-recognizable rank-3 input (the four
        # families are exhaustive); kept as a hard failure for safety
        raise PreconditionError("no family matched a two-recognizable rank-3 presentation")
    _, _, perm, family, params = min(matches)
    return Rank3Class(family, params, perm)


def _match_family(canon: frozenset):
    """Yield (family, params) for every family whose canonical relator set
    over letters a=0, b=1, c=2 equals ``canon``."""
    a, b, c = 0, 1, 2
    rels = sorted(canon)
    n_rel = len(rels)

    if n_rel == 0:
        yield "IV", (INF, INF, INF)
        return

    if n_rel == 1:
        (w,) = rels
        L = len(w)
        if L % 6 == 0:
            m = L // 6
            if w == cyc_canonical((a, b, c) * (2 * m)):
                yield "I", (m,)
            if w == cyc_canonical((a, b, a, c, b, c) * m):
                yield "II", (m,)
        if L % 4 == 0:
            m = L // 4
            if w == cyc_canonical((a, b, a, c) * m):
                yield "III", (m, INF)

    # family III with both relators
    if n_rel == 2:
        for w_abac in rels:
            other = next(r for r in rels if r is not w_abac)
            if len(w_abac) % 4 == 0 and len(other) % 2 == 0 and len(other) >= 4:
                m = len(w_abac) // 4
                n = len(other) // 2
                if (
                    m >= 1
                    and n >= 2
                    and w_abac == cyc_canonical((a, b, a, c) * m)
                    and other == cyc_canonical((b, c) * n)
                ):
                    yield "III", (m, n)

    # family IV: every relator an alternating two-letter power
    labels = {}
    ok = True
    for w in rels:
        letters = sorted(set(w))
        if len(letters) != 2 or len(w) % 2 != 0:
            ok = False
            break
        x, y = letters
        k = len(w) // 2
        if w != cyc_canonical((x, y) * k) or k < 2 or (x, y) in labels:
            ok = False
            break
        labels[(x, y)] = k
    if ok and rels:
        yield "IV", (
            labels.get((a, b), INF),
            labels.get((b, c), INF),
            labels.get((a, c), INF),
        )
