"""Framed braid words and their semidirect normal data.

A word is a sequence of letters s<i> (strand crossings, 1 <= i <= n-1) and
t<i> (ribbon twists, 1 <= i <= n), each with exponent +-1.  The group they
generate splits as Z^n x| B_n: every word equals a product of twists
t1^{l1}..tn^{ln} followed by its crossing subword, and `semidirect_form`
computes that framing vector exactly.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class FramedBraidWord:
    n: int
    letters: tuple  # of (kind, index, exp) with kind in {"s","t"}, exp +-1

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("strand count must be >= 1")
        for kind, idx, exp in self.letters:
            if kind == "s":
                if not 1 <= idx <= self.n - 1:
                    raise ValueError("s index %d out of range for n=%d" % (idx, self.n))
            elif kind == "t":
                if not 1 <= idx <= self.n:
                    raise ValueError("t index %d out of range for n=%d" % (idx, self.n))
            else:
                raise ValueError("unknown generator kind %r" % (kind,))
            if exp not in (1, -1):
                raise ValueError("letter exponent must be +-1")

    def inverse(self):
        return FramedBraidWord(
            self.n, tuple((k, i, -e) for k, i, e in reversed(self.letters))
        )

    def __mul__(self, other):
        if self.n != other.n:
            raise ValueError("strand counts differ")
        return FramedBraidWord(self.n, self.letters + other.letters)

    def to_json_obj(self):
        return {"n": self.n, "letters": [[k, i, e] for k, i, e in self.letters]}

    @classmethod
    def from_json_obj(cls, obj):
        return cls(int(obj["n"]), tuple((k, int(i), int(e)) for k, i, e in obj["letters"]))

    def __str__(self):
        if not self.letters:
            return "<empty>"
        return " ".join(
            "%s%d%s" % (k, i, "" if e == 1 else "^-1") for k, i, e in self.letters
        )


@dataclass(frozen=True)
class SemidirectForm:
    framing: tuple  # length n, integer twist counts
    braid: tuple    # s-letters only, original order


def parse_word(text, n):
    """Parse whitespace-separated tokens s<i>, t<i>, optionally ^-1 or ^1."""
    letters = []
    for token in text.split():
        body, _, power = token.partition("^")
        if power == "":
            exp = 1
        elif power in ("1", "+1"):
            exp = 1
        elif power == "-1":
            exp = -1
        else:
            raise ValueError("bad exponent in token %r (only ^1, ^-1)" % token)
        if len(body) < 2 or body[0] not in "st" or not body[1:].isdigit():
            raise ValueError("bad token %r" % token)
        letters.append((body[0], int(body[1:]), exp))
    return FramedBraidWord(n, tuple(letters))


def semidirect_form(w):
    """Push every twist letter to the left; collect the framing vector.

    Moving t_j leftward through a crossing s_i (either sign) relabels its
    strand by the transposition (i, i+1).  Walking the word once while
    maintaining the composed relabeling gives each twist's final slot.
    """
    n = w.n
    framing = [0] * n
    # relabel[j] = where a twist at strand j, inserted here, lands on the left
    relabel = list(range(n + 1))
    braid = []
    for kind, idx, exp in w.letters:
        if kind == "s":
            relabel[idx], relabel[idx + 1] = relabel[idx + 1], relabel[idx]
            braid.append((kind, idx, exp))
        else:
            framing[relabel[idx] - 1] += exp
    return SemidirectForm(tuple(framing), tuple(braid))


def underlying_permutation(w):
    """Image in the symmetric group: s_i -> (i, i+1), t_i -> identity.

    Returned as a tuple p with p[k-1] the image of k (1-based).
    """
    perm = list(range(1, w.n + 1))
    # left action: the word g_1...g_k maps x to g_1(g_2(...g_k(x)));
    # swapping value slots composes the transposition on the right
    for kind, idx, _exp in w.letters:
        if kind == "s":
            perm[idx - 1], perm[idx] = perm[idx], perm[idx - 1]
    return tuple(perm)
