from collections.abc import Iterable

from lefschetz._braid.errors import StrandSubsetError
from lefschetz._braid.word import BraidWord


def forget_strands(w: BraidWord, keep: Iterable[int]) -> BraidWord:
    """The braid induced on a subset of strands.

    Strands are numbered 1..n by their starting position. Each crossing is kept only
    when both strands involved are kept, and is renumbered by the relative order of the
    kept strands at that moment.
    """
    kept = set(keep)
    if not kept:
        msg = "Cannot forget every strand; keep at least one."
        raise StrandSubsetError(msg)
    if min(kept) < 1 or max(kept) > w.strands:
        msg = f"Strands {sorted(kept)} are not all in 1..{w.strands}."
        raise StrandSubsetError(msg)

    # at[pos] is the (1-based) starting label of the strand currently at position pos
    at = list(range(1, w.strands + 1))
    letters: list[int] = []
    for letter in w.letters:
        i = abs(letter)
        left, right = at[i - 1], at[i]
        if left in kept and right in kept:
            rank = sum(1 for strand in at[:i] if strand in kept)
            letters.append(rank if letter > 0 else -rank)
        at[i - 1], at[i] = right, left

    return BraidWord(strands=len(kept), letters=tuple(letters))
