"""The block-pass braids T and U and the master full-twist identity.

For a pencil of genus g with parameter h, the 2g+2 strands split into an upper block of
k = 2h+2 strands and a lower block of m = 2g-2h strands. T passes the upper block over
the lower one and U passes it back; each combines an explicit pass word with a power of
a chain word on one block. Which chain word, on which block, and on which side is fixed
by searching a small convention space against the identity

    T U (s_1 ... s_{k-1})^m (s_{k-1} ... s_1)^{2g+2} (s_{k+1} ... s_{2g+1})^m = Delta^2

together with exponent-sum, factorization and strand-forgetting checks.
"""

import itertools
from collections.abc import Iterable, Iterator

from pydantic import BaseModel, ConfigDict

from lefschetz._braid.errors import ConventionSearchError, GeneratorRangeError
from lefschetz._braid.garside import equals
from lefschetz._braid.hurwitz import FactoredBraid, product
from lefschetz._braid.standard import chain, full_twist
from lefschetz._braid.strands import forget_strands
from lefschetz._braid.word import (
    BraidWord,
    compose,
    exponent_sum,
    identity,
    invert,
    power,
)
from lefschetz._config import lefschetz_config
from lefschetz._conventions import BlockPassConvention, read_conventions

ANCHORS: tuple[tuple[int, int], ...] = ((2, 1), (3, 1), (3, 2))


class BlockPassBraids(BaseModel):
    """T and U together with their factorizations into single-crossing braids.

    `t_factors` and `u_factors` are in product order. The letters are labelled so that
    T = tau_1 ... tau_m and U = upsilon_m ... upsilon_1.
    """

    model_config = ConfigDict(frozen=True)

    g: int
    h: int
    t: BraidWord
    u: BraidWord
    t_factors: FactoredBraid
    u_factors: FactoredBraid

    def tau(self, j: int) -> BraidWord:
        return self.t_factors.factors[j - 1]

    def upsilon(self, j: int) -> BraidWord:
        return self.u_factors.factors[len(self.u_factors) - j]


def _check_gh(g: int, h: int) -> None:
    if not 1 <= h < g:
        msg = f"Block-pass braids need 1 <= h < g, got g={g}, h={h}."
        raise GeneratorRangeError(msg)


def _sizes(g: int, h: int) -> tuple[int, int, int]:
    k = 2 * h + 2
    m = 2 * g - 2 * h
    return k, m, k + m


def _t_pass_groups(g: int, h: int) -> list[BraidWord]:
    """pi_i = s_{k+i-1} ... s_i, moving the i-th lower strand to position i."""
    k, m, n = _sizes(g, h)
    return [
        BraidWord(strands=n, letters=tuple(range(k + i - 1, i - 1, -1)))
        for i in range(1, m + 1)
    ]


def _u_pass_groups(g: int, h: int) -> list[BraidWord]:
    """mu_j = s_{m-j+1} ... s_{m-j+k}, moving a lower strand back past the upper one."""
    k, m, n = _sizes(g, h)
    return [
        BraidWord(strands=n, letters=tuple(range(m - j + 1, m - j + k + 1)))
        for j in range(1, m + 1)
    ]


def _unit(
    g: int, h: int, *, internal: str, inverse: bool, block: str
) -> BraidWord:
    k, m, n = _sizes(g, h)
    start = 1 if block == "first" else m + 1
    word = chain(n, k, 1, reversed_=internal == "reversed", start=start)
    return invert(word) if inverse else word


def _telescope(
    groups: list[BraidWord], unit: BraidWord, placement: str
) -> list[BraidWord]:
    """Split unit^m * (g_1 ... g_m), or (g_1 ... g_m) * unit^m, into m conjugates.

    left:  f_j = unit^(m-j+1) g_j unit^-(m-j)
    right: f_j = unit^-(j-1) g_j unit^j
    """
    m = len(groups)
    factors = []
    for j, group in enumerate(groups, start=1):
        if placement == "left":
            factors.append(
                compose(power(unit, m - j + 1), group, power(unit, -(m - j)))
            )
        else:
            factors.append(compose(power(unit, -(j - 1)), group, power(unit, j)))
    return factors


def _assemble(
    groups: list[BraidWord],
    *,
    internal: str,
    inverse: bool,
    block: str,
    placement: str,
    g: int,
    h: int,
) -> tuple[BraidWord, FactoredBraid]:
    _, m, n = _sizes(g, h)
    unit = _unit(g, h, internal=internal, inverse=inverse, block=block)
    passes = compose(*groups)
    if placement == "left":
        word = compose(power(unit, m), passes)
    else:
        word = compose(passes, power(unit, m))
    factors = FactoredBraid(
        strands=n, factors=tuple(_telescope(groups, unit, placement))
    )
    return word, factors


def block_pass_braids(
    g: int, h: int, convention: BlockPassConvention | None = None
) -> BlockPassBraids:
    """Build T and U for (g, h) under a block-pass convention.

    Without an explicit convention, the frozen one from the conventions file is used.
    Nothing is verified here; see `check_block_pass`.
    """
    _check_gh(g, h)
    if convention is None:
        convention = read_conventions(lefschetz_config.conventions_path).block_pass

    t, t_factors = _assemble(
        _t_pass_groups(g, h),
        internal=convention.t_internal,
        inverse=convention.t_inverse,
        block=convention.t_block,
        placement=convention.t_placement,
        g=g,
        h=h,
    )
    u, u_factors = _assemble(
        _u_pass_groups(g, h),
        internal=convention.u_internal,
        inverse=convention.u_inverse,
        block=convention.u_block,
        placement=convention.u_placement,
        g=g,
        h=h,
    )
    return BlockPassBraids(
        g=g, h=h, t=t, u=u, t_factors=t_factors, u_factors=u_factors
    )


def master_tail(g: int, h: int) -> BraidWord:
    """The part of the master word after T U."""
    k, m, n = _sizes(g, h)
    return compose(
        chain(n, k, m),
        chain(n, k, n, reversed_=True),
        chain(n, m, m, start=k + 1),
    )


def master_word(braids: BlockPassBraids) -> BraidWord:
    return compose(braids.t, braids.u, master_tail(braids.g, braids.h))


def _is_inverse_chain_power(w: BraidWord, size: int, count: int) -> bool:
    return any(
        equals(w, chain(size, size, -count, reversed_=reversed_))
        for reversed_ in (False, True)
    )


def _is_trivial(w: BraidWord) -> bool:
    return equals(w, identity(w.strands))


def check_block_pass(braids: BlockPassBraids) -> list[str]:
    """The conditions a block-pass pair fails, cheapest first; empty when all hold."""
    k, m, n = _sizes(braids.g, braids.h)
    failures: list[str] = []

    if exponent_sum(braids.t) != m or exponent_sum(braids.u) != m:
        failures.append(
            f"exponent sums of T and U are {exponent_sum(braids.t)} and "
            f"{exponent_sum(braids.u)}, expected {m}"
        )
        return failures

    for name, whole, factors in (
        ("T", braids.t, braids.t_factors),
        ("U", braids.u, braids.u_factors),
    ):
        sums = [exponent_sum(f) for f in factors.factors]
        if len(sums) != m or any(s != 1 for s in sums):
            failures.append(f"{name} does not split into {m} letters of degree 1")
        elif product(factors).letters != whole.letters:
            failures.append(f"the factors of {name} do not multiply to {name}")
    if failures:
        return failures

    upper, lower = range(1, k + 1), range(k + 1, n + 1)
    # U starts where T leaves the blocks: lower strands first
    u_upper, u_lower = range(m + 1, n + 1), range(1, m + 1)
    for name, word, kept, other in (
        ("T", braids.t, upper, lower),
        ("U", braids.u, u_upper, u_lower),
    ):
        if not _is_inverse_chain_power(forget_strands(word, kept), k, m):
            failures.append(f"{name} restricted to its upper block is not a chain^-m")
        if not _is_trivial(forget_strands(word, other)):
            failures.append(f"{name} restricted to its lower block is not trivial")
    if failures:
        return failures

    if not equals(master_word(braids), full_twist(n)):
        failures.append(f"the master word is not the full twist in B_{n}")
    return failures


def _candidates(
    frozen: BlockPassConvention | None,
) -> Iterator[BlockPassConvention]:
    if frozen is not None:
        yield frozen
    choices = itertools.product(
        ("chain", "reversed"), (True, False), ("first", "last"), ("left", "right")
    )
    for t_choice, u_choice in itertools.product(list(choices), repeat=2):
        candidate = BlockPassConvention(
            t_internal=t_choice[0],
            t_inverse=t_choice[1],
            t_block=t_choice[2],
            t_placement=t_choice[3],
            u_internal=u_choice[0],
            u_inverse=u_choice[1],
            u_block=u_choice[2],
            u_placement=u_choice[3],
        )
        if frozen is None or candidate.model_dump(
            exclude={"derived_on"}
        ) != frozen.model_dump(exclude={"derived_on"}):
            yield candidate


def derive_convention(
    anchors: Iterable[tuple[int, int]] = ANCHORS,
    frozen: BlockPassConvention | None = None,
) -> BlockPassConvention:
    """The first convention whose braids pass every check on every anchor.

    The frozen convention, when given, is tried first.
    """
    anchors = tuple(anchors)
    for candidate in _candidates(frozen):
        if all(
            not check_block_pass(block_pass_braids(g, h, candidate))
            for g, h in anchors
        ):
            return candidate.model_copy(update={"derived_on": list(anchors)})

    msg = (
        f"No block-pass convention satisfies the master identity on {list(anchors)}; "
        "the pass words or the identity itself are wrong."
    )
    raise ConventionSearchError(msg)


def verified_block_pass_braids(g: int, h: int) -> BlockPassBraids:
    """Block-pass braids under the frozen convention, checked for this (g, h)."""
    braids = block_pass_braids(g, h)
    failures = check_block_pass(braids)
    if failures:
        msg = (
            f"The frozen block-pass convention fails for g={g}, h={h}: "
            + "; ".join(failures)
            + ". Re-derive it with `lefschetz selftest --rederive`."
        )
        raise ConventionSearchError(msg)
    return braids
