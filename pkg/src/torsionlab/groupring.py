"""Words in a free group and integral group-ring elements.

Words are stored freely reduced as tuples of nonzero signed generator
indices (g > 0 is the generator, -g its inverse).  No relator rewriting is
ever attempted; identities that depend on relators are checked after
evaluation at a representation.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence


class Word:
    """Freely reduced word in a free group."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[int] = ()):
        out: list[int] = []
        for x in letters:
            x = int(x)
            if x == 0:
                raise ValueError("generator indices are nonzero")
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
        self.letters = tuple(out)

    @staticmethod
    def identity() -> "Word":
        return Word(())

    @staticmethod
    def generator(g: int) -> "Word":
        return Word((g,))

    def is_identity(self) -> bool:
        return not self.letters

    def inverse(self) -> "Word":
        return Word(tuple(-x for x in reversed(self.letters)))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        out = Word.identity()
        for _ in range(n):
            out = out * self
        return out

    def max_generator(self) -> int:
        return max((abs(x) for x in self.letters), default=0)

    def exponent_sum(self, gens: int) -> tuple[int, ...]:
        """Abelianized exponent vector over the first `gens` generators."""
        v = [0] * gens
        for x in self.letters:
            v[abs(x) - 1] += 1 if x > 0 else -1
        return tuple(v)

    def substitute(self, images: Sequence["Word"]) -> "Word":
        """Replace generator g by images[g-1] (inverses handled)."""
        out: list[int] = []
        for x in self.letters:
            w = images[abs(x) - 1]
            out.extend(w.letters if x > 0 else w.inverse().letters)
        return Word(out)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        if not self.letters:
            return "e"

        def sym(x):
            base = _letter_name(abs(x))
            return base if x > 0 else base + "'"

        return "".join(sym(x) for x in self.letters)


def _letter_name(i: int) -> str:
    alphabet = "abcdefgh"
    return alphabet[i - 1] if i <= len(alphabet) else f"g{i}"


class GroupRingElt:
    """Finite integer combination of free-group words."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, int] | None = None):
        clean: dict[Word, int] = {}
        if terms:
            for w, n in terms.items():
                n = int(n)
                if n:
                    clean[w] = clean.get(w, 0) + n
                    if clean[w] == 0:
                        del clean[w]
        self.terms = clean

    @staticmethod
    def zero() -> "GroupRingElt":
        return GroupRingElt()

    @staticmethod
    def one() -> "GroupRingElt":
        return GroupRingElt({Word.identity(): 1})

    @staticmethod
    def of(w: Word, n: int = 1) -> "GroupRingElt":
        return GroupRingElt({w: n})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "GroupRingElt") -> "GroupRingElt":
        out = dict(self.terms)
        for w, n in other.terms.items():
            out[w] = out.get(w, 0) + n
            if out[w] == 0:
                del out[w]
        return GroupRingElt(out)

    def __neg__(self) -> "GroupRingElt":
        return GroupRingElt({w: -n for w, n in self.terms.items()})

    def __sub__(self, other: "GroupRingElt") -> "GroupRingElt":
        return self + (-other)

    def __mul__(self, other: "GroupRingElt") -> "GroupRingElt":
        out: dict[Word, int] = {}
        for w1, n1 in self.terms.items():
            for w2, n2 in other.terms.items():
                w = w1 * w2
                out[w] = out.get(w, 0) + n1 * n2
                if out[w] == 0:
                    del out[w]
        return GroupRingElt(out)

    def left_mul_word(self, w: Word) -> "GroupRingElt":
        return GroupRingElt({w * v: n for v, n in self.terms.items()})

    def substitute(self, images: Sequence[Word]) -> "GroupRingElt":
        out: dict[Word, int] = {}
        for w, n in self.terms.items():
            s = w.substitute(images)
            out[s] = out.get(s, 0) + n
            if out[s] == 0:
                del out[s]
        return GroupRingElt(out)

    def max_generator(self) -> int:
        return max((w.max_generator() for w in self.terms), default=0)

    def __eq__(self, other):
        return isinstance(other, GroupRingElt) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for w in sorted(self.terms, key=lambda w: (len(w.letters), w.letters)):
            n = self.terms[w]
            ws = repr(w)
            if ws == "e":
                bits.append(str(n))
            elif n == 1:
                bits.append(ws)
            elif n == -1:
                bits.append(f"-{ws}")
            else:
                bits.append(f"{n}*{ws}")
        return " + ".join(bits).replace("+ -", "- ")


def fox_derivative(w: Word, gen: int) -> GroupRingElt:
    """Free differential calculus: d(uv) = du + u dv, dg = delta,
    d(g^-1) = -g^-1 delta."""
    if gen <= 0:
        raise ValueError("generator index must be positive")
    out = GroupRingElt.zero()
    prefix = Word.identity()
    for x in w.letters:
        if x == gen:
            out = out + GroupRingElt.of(prefix)
        elif x == -gen:
            out = out - GroupRingElt.of(prefix * Word((-gen,)))
        prefix = prefix * Word((x,))
    return out
