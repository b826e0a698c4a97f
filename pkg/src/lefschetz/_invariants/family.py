from collections.abc import Iterator

from lefschetz._invariants.errors import InvariantParameterError


def family_start(q: int) -> int:
    """The smallest p with p >= (q+1)/2 and p >= 2."""
    return max((q + 2) // 2, 2)


def family_params(h: int, q: int, r: int) -> Iterator[tuple[int, int]]:
    """(g(p), i(p)) = (p(h+1)+r-1, 2p-1-q) for p = family_start(q), ...

    Every pencil of the family is Z_h(q) #_f H_h(r). The generator never ends.
    """
    if h < 1:
        msg = f"The fiber genus h must be at least 1, got {h}."
        raise InvariantParameterError(msg)
    if q < 0:
        msg = f"The number of Z_h summands must be nonnegative, got q={q}."
        raise InvariantParameterError(msg)
    if not 0 <= r < h + 1:
        msg = f"Need 0 <= r < h+1 = {h + 1}, got r={r}."
        raise InvariantParameterError(msg)

    p = family_start(q)
    while True:
        yield p * (h + 1) + r - 1, 2 * p - 1 - q
        p += 1


def degree_double(g: int, b: int) -> tuple[int, int]:
    """A genus g pencil with b base points gives one of genus 2g+b-1 with 4b."""
    if b < 1:
        msg = f"Degree doubling needs at least one base point, got b={b}."
        raise InvariantParameterError(msg)
    if g < 0:
        msg = f"The genus must be nonnegative, got g={g}."
        raise InvariantParameterError(msg)
    return 2 * g + b - 1, 4 * b


def doubling_orbit(g: int, b: int, iterations: int) -> list[tuple[int, int]]:
    if iterations < 0:
        msg = f"The number of iterations must be nonnegative, got {iterations}."
        raise InvariantParameterError(msg)
    orbit = []
    for _ in range(iterations):
        g, b = degree_double(g, b)
        orbit.append((g, b))
    return orbit
