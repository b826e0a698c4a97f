from itertools import islice

from lefschetz._console import info_print, tick_print, write_output
from lefschetz._invariants.family import doubling_orbit, family_params


def _divisibility(b: int) -> str:
    return "≡ 0 mod 4" if b % 4 == 0 else "not ≡ 0 mod 4"


def doubling_report(g: int, b: int, iterations: int) -> list[tuple[int, int]]:
    """Print the degree-doubling orbit of a genus g pencil with b base points."""
    orbit = doubling_orbit(g, b, iterations)
    for genus, base_points in orbit:
        write_output(f"({genus},{base_points}) {_divisibility(base_points)}")
    return orbit


def family_report(h: int, q: int, r: int, count: int) -> list[tuple[int, int, int]]:
    """Print the first members of the family of pencils Z_h(q) #_f H_h(r).

    Each row is (g, i, base points); the summary line says whether any base-point
    count is divisible by 4, which doubling alone always produces.
    """
    rows = [
        (g, i, 2 * (i + 1)) for g, i in islice(family_params(h, q, r), count)
    ]
    for g, i, base_points in rows:
        divisibility = _divisibility(base_points)
        write_output(f"g={g} i={i} base_points={base_points} {divisibility}")

    if rows and all(base_points % 4 for _, _, base_points in rows):
        tick_print("No base-point count in the family is divisible by 4.")
    elif rows:
        info_print("Some base-point counts in the family are divisible by 4.")
    return rows
