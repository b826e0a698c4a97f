"""Desk-scale acceptance checks, and re-derivation of the frozen conventions."""

from collections.abc import Callable
from pathlib import Path

from lefschetz._braid.blockpass import (
    block_pass_braids,
    check_block_pass,
    derive_convention,
)
from lefschetz._braid.garside import equals
from lefschetz._braid.standard import block_full_twist, chain
from lefschetz._config import lefschetz_config
from lefschetz._console import box_print, err_print, info_print, tick_print
from lefschetz._conventions import Conventions, read_conventions, write_conventions
from lefschetz._cover.script import run_proof_script
from lefschetz._factorization.params import pencil_spec
from lefschetz._factorization.pencil import build_pencil_word
from lefschetz._factorization.projection import projects_to_full_twist
from lefschetz._factorization.relations import (
    chain_split,
    hyperelliptic,
    hyperelliptic_power,
    odd_chain,
)
from lefschetz._factorization.surgery import cap_boundary, fiber_sum, repeat
from lefschetz._invariants.classify import classify
from lefschetz._invariants.closed_form import (
    closed_form_invariants,
    euler_from_word,
    signature_hyperelliptic,
    signature_z,
)
from lefschetz._invariants.endo import sigma_endo_hyperelliptic
from lefschetz._invariants.family import degree_double, family_params
from lefschetz._invariants.meyer import calibrate, sigma_meyer
from lefschetz._invariants.record import grid
from lefschetz._invariants.spin import spin_predicate
from lefschetz._invariants.symplectic import sp_image
from lefschetz.errors import LefschetzError

SELFTEST_G_MAX = 6
SPLIT_H_MAX = 3
SPLIT_N_MAX = 4


def _block_pass_identity() -> bool:
    pairs = {(g, h) for g, h, _ in grid(SELFTEST_G_MAX)}
    return all(not check_block_pass(block_pass_braids(g, h)) for g, h in pairs)


def _pencil_projection() -> bool:
    return all(
        projects_to_full_twist(cap_boundary(build_pencil_word(g, h, i)))
        for g, h, i in grid(SELFTEST_G_MAX)
    )


def _chain_identities() -> bool:
    reversing = all(
        equals(chain(n, n, n), chain(n, n, n, reversed_=True))
        for n in range(3, 7)
    )
    block_twist = all(
        equals(chain(k, k, k), block_full_twist(k, k)) for k in range(2, 7)
    )
    return reversing and block_twist


def _euler_from_words() -> bool:
    for g, h, i in grid(6):
        capped = cap_boundary(build_pencil_word(g, h, i))
        e = euler_from_word(capped, pencil_spec(g, h, i).base_points)
        if e != closed_form_invariants(g, h, i)[0]:
            return False
    return True


def _classification() -> bool:
    # classify raises when its fiber sum disagrees with the closed forms
    for g, h, i in grid(12):
        classify(g, h, i)
    return True


def _hyperelliptic_split() -> bool:
    return all(
        sp_image(hyperelliptic_power(h, n)) == sp_image(chain_split(h, n))
        for h in range(1, SPLIT_H_MAX + 1)
        for n in range(1, SPLIT_N_MAX + 1)
    )


def _signatures() -> bool:
    for h in (1, 2, 3):
        z, hyp = odd_chain(h), hyperelliptic(h)
        if sigma_meyer(z) != signature_z(h):
            return False
        if sigma_endo_hyperelliptic(z) != signature_z(h):
            return False
        if sigma_meyer(hyp) != signature_hyperelliptic(h):
            return False
    sums = [
        (fiber_sum(odd_chain(1), hyperelliptic(1)), -16),
        (fiber_sum(odd_chain(2), hyperelliptic(2)), -30),
        (repeat(hyperelliptic(2), 3), -36),
    ]
    return all(sigma_meyer(f) == sigma for f, sigma in sums)


def _worked_example() -> bool:
    spec = pencil_spec(17, 2, 7)
    return (
        spec.nodal_fibers == 196
        and spec.base_points == 16
        and closed_form_invariants(17, 2, 7) == (116, -72)
        and str(classify(17, 2, 7).canonical) == "H_2(6)"
    )


def _family() -> bool:
    members = family_params(2, 1, 0)
    base_points = [2 * (next(members)[1] + 1) for _ in range(2, 51)]
    return all(b % 4 for b in base_points) and degree_double(2, 4) == (7, 16)


def _rokhlin() -> bool:
    # spin_predicate raises on a Rokhlin violation
    for g, h, i in grid(12):
        spec = pencil_spec(g, h, i)
        if spec.chain_repeats or spec.r:
            spin_predicate(g, h, i)
    return True


def _cover_replay() -> bool:
    for g, h, i in grid(6):
        run_proof_script(g, h, i)
    return True


CHECKS: list[tuple[str, Callable[[], bool]]] = [
    ("block-pass identity", _block_pass_identity),
    ("pencil projection", _pencil_projection),
    ("reversing and block-twist identities", _chain_identities),
    ("hyperelliptic split on homology", _hyperelliptic_split),
    ("Euler characteristic from twist counts", _euler_from_words),
    ("classification against closed forms", _classification),
    ("signature engines", _signatures),
    ("genus 17 worked example", _worked_example),
    ("family base points and degree doubling", _family),
    ("Rokhlin audit", _rokhlin),
    ("cover replay", _cover_replay),
]


def run_selftest() -> bool:
    passed = True
    for name, check in CHECKS:
        try:
            ok = check()
        except LefschetzError as err:
            err_print(err)
            ok = False
        if ok:
            tick_print(f"Passed: {name}.")
        else:
            box_print(f"Failed: {name}.")
            passed = False
    return passed


def rederive(path: Path | None = None) -> Conventions:
    """Search both convention spaces again and write the result to a TOML file."""
    if path is None:
        path = lefschetz_config.conventions_path or Path("conventions.toml")

    current = read_conventions(lefschetz_config.conventions_path)
    block_pass = derive_convention(frozen=current.block_pass)
    meyer = calibrate()
    for line in meyer.transcript:
        info_print(line)

    conventions = Conventions(block_pass=block_pass, meyer=meyer)
    write_conventions(conventions, path)
    tick_print(f"Wrote the re-derived conventions to '{path}'.")
    if path != lefschetz_config.conventions_path:
        info_print(f"Use them with '--config {path}'.")
    return conventions
