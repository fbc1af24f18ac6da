"""Alexander quandles over finite Laurent quotient modules, and the closed
forms for their component structure.

The quandle operation on a module is a * b = t a + (1 - t) b.  Its component
count is the gcd of the generators evaluated at 1 (together with the
modulus), components are translates of the image of 1 - t, and each is again
an Alexander quandle over an explicitly presented quotient.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional

from .laurent import LaurentPoly, eval_one, format_poly, gcd_vec, split_one_minus_t, syzygy_basis
from .quandle import FiniteQuandle, connected_components
from .tmodule import FiniteTModule, IdealPresentation, build


@dataclass(frozen=True)
class AlexanderQuandle:
    """A finite module together with its derived quandle table."""

    module: FiniteTModule
    quandle: FiniteQuandle
    presentation: IdealPresentation


def alexander_quandle(module: FiniteTModule) -> AlexanderQuandle:
    """Tabulate a * b = t a + (1 - t) b over the module elements.

    Elements are indexed in the module's enumeration order and labeled with
    the module's labels, so tables and reports are deterministic.
    """
    elems = module.elements()
    index = {e: i for i, e in enumerate(elems)}
    timg = [module.t_act(e) for e in elems]
    delta = [module.add(e, module.neg(timg[i])) for i, e in enumerate(elems)]
    table = [
        [index[module.add(ta, delta[j])] for j in range(len(elems))]
        for ta in timg
    ]
    labels = [module.label(e) for e in elems]
    return AlexanderQuandle(module, FiniteQuandle(table, labels), module.presentation)


def dihedral(m: int) -> AlexanderQuandle:
    """The dihedral quandle on Z_m (a * b = 2b - a), built as the quotient by
    (m, t + 1)."""
    if m < 1:
        raise ValueError("order must be positive")
    return alexander_quandle(build(IdealPresentation(m, (LaurentPoly({0: 1, 1: 1}),))))


def orbit_count(gens: Iterable[LaurentPoly], modulus: int | None = None) -> int:
    """Number of connected components: gcd of the generator values at t = 1
    (and the modulus, when given).  Zero means every value vanished, which
    only happens for infinite quotients."""
    values = [eval_one(f) for f in gens]
    if modulus is not None:
        values.append(modulus)
    return gcd_vec(values)


@dataclass(frozen=True)
class ComponentIdeal:
    """Generators presenting the quotient that every component is isomorphic to."""

    orbit_count: int
    generators: tuple[LaurentPoly, ...]
    note: Optional[str] = None


def _linear_note(gens) -> Optional[str]:
    gl = [f for f in gens if f]
    if len(gl) != 2:
        return None
    consts = [f for f in gl if f.min_exp == f.max_exp == 0]
    linear = [f for f in gl if f.min_exp >= 0 and f.max_exp == 1 and f.coeff(1) == 1]
    if len(consts) != 1 or len(linear) != 1:
        return None
    m = abs(consts[0].coeff(0))
    a = linear[0].coeff(0)
    g = math.gcd(m, 1 + a)
    if g <= 1:
        return None
    return f"ideal equals ({m // g}; {format_poly(linear[0])})"


def component_ideal(gens: Iterable[LaurentPoly]) -> ComponentIdeal:
    """Augment the generators so the quotient presents a single component.

    Writing each generator as f = (1 - t) q + f(1), every integer syzygy s of
    the values at 1 contributes the combination sum_i s_i q_i.  Integer
    syzygies suffice because the Laurent ring is free over the integers, so
    the kernel over it is generated by the integer kernel lattice.  The
    returned generators present the ideal; they are not a canonical form,
    and identity claims should be settled through ideals_equal.
    """
    gl = list(gens)
    if not gl:
        raise ValueError("need at least one generator")
    splits = [split_one_minus_t(f) for f in gl]
    values = [c for _, c in splits]
    extras = []
    for vec in syzygy_basis(values):
        combo = LaurentPoly()
        for coeff, (q, _) in zip(vec, splits):
            combo = combo + coeff * q
        if combo:
            extras.append(combo)
    return ComponentIdeal(gcd_vec(values), tuple(gl + extras), _linear_note(gl))


def translation_iso(aq: AlexanderQuandle, a: tuple[int, ...]) -> dict:
    """The translation x -> x + a from the component of 0 onto the component
    of a, verified to transport the operation."""
    module = aq.module
    elems = module.elements()
    index = {e: i for i, e in enumerate(elems)}
    comps = connected_components(aq.quandle)
    orb0 = comps.block_of(index[module.zero()])
    target = set(comps.block_of(index[a]))
    phi = {elems[i]: module.add(elems[i], a) for i in orb0}
    if {index[y] for y in phi.values()} != target:
        raise RuntimeError("translation does not map onto the target component")
    table = aq.quandle.table
    for x in orb0:
        for y in orb0:
            image = module.add(elems[table[x][y]], a)
            if image != elems[table[index[phi[elems[x]]]][index[phi[elems[y]]]]]:
                raise RuntimeError("translation is not a homomorphism")
    return phi


@dataclass(frozen=True)
class GcdChain:
    """The modulus chain n_{i+1} = n_i / gcd(n_i, 1 + a) down to its fixed
    point, with the block count and final modulus it predicts."""

    chain: tuple[int, ...]
    depth: int
    block_count: int
    block_modulus: int


def gcd_chain(n0: int, a: int) -> GcdChain:
    """Closed-form decomposition data for the quandle of (n0, t + a).

    The chain divides n_i by gcd(n_i, 1 + a) until it stabilizes; the
    predicted number of maximal blocks is the product of those gcds, and each
    block is a copy of the quandle of (n_l, t + a).
    """
    if n0 < 1:
        raise ValueError("n0 must be positive")
    chain = [n0]
    while True:
        g = math.gcd(chain[-1], 1 + a)
        nxt = chain[-1] // g
        if nxt == chain[-1]:
            break
        chain.append(nxt)
    depth = len(chain) - 1
    count = 1
    for i in range(depth):
        count *= math.gcd(chain[i], 1 + a)
    return GcdChain(tuple(chain), depth, count, chain[-1])
