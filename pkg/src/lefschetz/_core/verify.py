from collections import Counter
from pathlib import Path

from lefschetz._braid.blockpass import master_word, verified_block_pass_braids
from lefschetz._braid.standard import chain, full_twist
from lefschetz._braid.word import identity
from lefschetz._console import box_print, tick_print, write_output
from lefschetz._core.certificate import (
    Certificate,
    braid_certificate,
    symplectic_certificate,
)
from lefschetz._factorization.curves import BlockLoop, TwistFactorization
from lefschetz._factorization.params import pencil_params, pencil_spec
from lefschetz._factorization.pencil import build_pencil_word
from lefschetz._factorization.projection import project_to_braid
from lefschetz._factorization.relations import chain_split, hyperelliptic_power
from lefschetz._factorization.serialize import canonical_json
from lefschetz._factorization.surgery import cap_boundary, unchaining_path
from lefschetz._invariants.symplectic import sp_image
from lefschetz.errors import ParameterError


def _report(certificate: Certificate, out: Path | None) -> Certificate:
    if certificate.verified:
        tick_print(f"Verified {certificate.claim}.")
    else:
        box_print(f"Could not verify {certificate.claim}.")
    write_output(certificate.dumps(), out, what="certificate")
    return certificate


def verify_block_pass_identity(
    g: int, h: int, *, out: Path | None = None, full: bool = False
) -> Certificate:
    """T U (s_1...s_{k-1})^m (s_{k-1}...s_1)^n (lower chain)^m = Δ² in B_{2g+2}."""
    pencil_params(g, h)
    braids = verified_block_pass_braids(g, h)
    n = 2 * g + 2
    certificate = braid_certificate(
        f"block-pass-identity g={g} h={h}",
        master_word(braids),
        full_twist(n),
        full=full,
    )
    return _report(certificate, out)


def verify_pencil_projection(
    g: int, h: int, i: int, *, out: Path | None = None, full: bool = False
) -> Certificate:
    """The capped pencil word projects to the full twist on 2g+2 strands."""
    braids = verified_block_pass_braids(g, h)
    capped = cap_boundary(build_pencil_word(g, h, i, braids))
    projected = project_to_braid(capped)
    certificate = braid_certificate(
        f"pencil-projection g={g} h={h} i={i}",
        projected,
        full_twist(projected.strands),
        full=full,
    )
    return _report(certificate, out)


def verify_reversing(
    m: int, *, out: Path | None = None, full: bool = False
) -> Certificate:
    """(sigma_1 ... sigma_m)^{m+1} = (sigma_m ... sigma_1)^{m+1} in B_{m+1}."""
    if m < 2:
        msg = f"The reversing identity needs m >= 2, got m={m}."
        raise ParameterError(msg)
    strands = m + 1
    certificate = braid_certificate(
        f"reversing m={m}",
        chain(strands, strands, strands),
        chain(strands, strands, strands, reversed_=True),
        full=full,
    )
    return _report(certificate, out)


def _loop_census(f: TwistFactorization) -> Counter[tuple[int, int, int]]:
    return Counter(
        (kind.first, kind.last, kind.sheet)
        for kind in (letter.curve.kind for letter in f.letters)
        if isinstance(kind, BlockLoop)
    )


def verify_unchain(
    g: int, h: int, i: int, *, out: Path | None = None, full: bool = False
) -> Certificate:
    """Unchaining the Sigma_g^2 relation gives the pencil curves; both project to Δ².

    The capped block loops must match the pencil word; when they do not, the
    certificate compares the projection with the identity braid so that it fails.
    """
    spec = pencil_spec(g, h, i)
    path = cap_boundary(unchaining_path(g, h, i))
    pencil = cap_boundary(build_pencil_word(g, h, i))
    projected = project_to_braid(path)

    same_count = len(path) == spec.nodal_fibers == len(pencil)
    same_loops = _loop_census(path) == _loop_census(pencil)
    if not (same_count and same_loops):
        box_print(
            f"The unchained relation has {len(path)} letters and the pencil word "
            f"{len(pencil)}; their block loops {'agree' if same_loops else 'differ'}."
        )
        target = identity(projected.strands)
    else:
        target = full_twist(projected.strands)

    certificate = braid_certificate(
        f"unchain g={g} h={h} i={i}", projected, target, full=full
    )
    return _report(certificate, out)


def verify_hyperelliptic_split(
    h: int, n: int, *, out: Path | None = None, full: bool = False
) -> Certificate:
    """(t_c1...t_c_{2h+1} t_c_{2h+1}...t_c1)^n and its split form act alike on H_1."""
    split = chain_split(h, n)
    certificate = symplectic_certificate(
        f"hyperelliptic-split-sp h={h} n={n}",
        canonical_json(split),
        sp_image(hyperelliptic_power(h, n)),
        sp_image(split),
        full=full,
    )
    return _report(certificate, out)
