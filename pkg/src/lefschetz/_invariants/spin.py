"""When the pencils X'_{g,h}[i] are spin."""

from lefschetz._factorization.params import pencil_spec
from lefschetz._invariants.classify import DiffeoType, classify
from lefschetz._invariants.errors import (
    RokhlinError,
    SpinHypothesisError,
    SpinMismatchError,
)


def spin_from_canonical(d: DiffeoType) -> bool:
    """The fiber-sum rule: H_h(m) and Z_h(1) #_f H_h(m-1) are spin iff h odd, m even.

    The product Sigma_h x S^2 is always spin.
    """
    if d.product:
        return True
    canonical = d.canonical()
    summands = canonical.z_copies + canonical.h_copies
    return d.h % 2 == 1 and summands % 2 == 0


def spin_predicate(g: int, h: int, i: int) -> bool:
    """Spin iff h is odd and g and i have the same parity.

    Only stated when i < 2p-1, or i = 2p-1 with r != 0. A spin answer is audited
    against Rokhlin's theorem and against the fiber-sum rule.
    """
    spec = pencil_spec(g, h, i)
    if spec.chain_repeats == 0 and spec.r == 0:
        msg = (
            f"X'_{{{g},{h}}}[{i}] is the product Σ_{h} × S², outside the range "
            "where the parity criterion applies."
        )
        raise SpinHypothesisError(msg)

    spin = h % 2 == 1 and g % 2 == i % 2
    classification = classify(g, h, i)
    _, sigma = classification.invariants
    if spin and sigma % 16 != 0:
        msg = (
            f"X'_{{{g},{h}}}[{i}] is predicted spin but σ = {sigma} is not divisible "
            "by 16."
        )
        raise RokhlinError(msg)

    from_canonical = spin_from_canonical(classification.canonical)
    if spin != from_canonical:
        msg = (
            f"The parity criterion says spin={spin} for X'_{{{g},{h}}}[{i}], but "
            f"{classification.canonical} gives spin={from_canonical}."
        )
        raise SpinMismatchError(msg)
    return spin


def spin_explanation(g: int, h: int, i: int) -> str:
    spec = pencil_spec(g, h, i)
    if spec.chain_repeats == 0 and spec.r == 0:
        return f"Σ_{h} × S² is a product of spin manifolds."
    if h % 2 == 0:
        return f"h = {h} is even; not spin."
    if g % 2 != i % 2:
        return f"h is odd but g = {g} and i = {i} have different parity; not spin."
    return f"h = {h} is odd and g = {g}, i = {i} have the same parity; spin."
