"""
Lattice families: chains, boolean lattices, direct products, glued sums,
interval removal, L(n,k), G(k) and the nine-element breadth-two example.
"""
import logging
import re
from itertools import product as cartesian
from typing import Optional, Sequence, Tuple

import numpy as np

from latmed.exceptions import (
    BadParams,
    NotAProduct,
    NotComparable,
    NotJoinPrime,
    ZeroForbidden,
)
from latmed.models import (
    ConstructionSpec,
    IntervalRemovalSpec,
    Lattice,
    LnkConstruction,
    ProductElement,
    Profile,
)
from latmed.properties import is_join_prime


logger = logging.getLogger(__name__)

FIGURE1_LABELS = "ABCDEFGHI"
FIGURE1_COVERS = (
    ("A", "B"), ("A", "C"),
    ("B", "D"), ("B", "E"),
    ("C", "D"), ("C", "F"),
    ("D", "H"), ("D", "I"),
    ("E", "H"), ("F", "H"),
    ("H", "G"), ("I", "G"),
)


def chain(n) -> Lattice:
    n = Lattice._is_valid_int(n, "n", 1)
    return Lattice(
        n,
        [(i, i + 1) for i in range(n - 1)],
        name="C{n}".format(n=n),
        coords=[(i,) for i in range(n)],
    )


def product(factors: Sequence[Lattice], name: str = None) -> Lattice:
    """
    Direct product ordered coordinatewise. The flat index of an element is
    its mixed-radix encoding with the last factor varying fastest; a
    product of no factors is the singleton.
    """
    factors = tuple(factors)
    radices = tuple(f.n for f in factors)
    coords = list(cartesian(*(range(r) for r in radices)))
    covers = []
    for index, point in enumerate(coords):
        for j, factor in enumerate(factors):
            for up in factor.upper_covers(point[j]):
                target = point[:j] + (up,) + point[j + 1:]
                covers.append(
                    (index, ProductElement(target, radices).index)
                )
    if name is None:
        name = "x".join(f.name or str(f.n) for f in factors) or "C1"
    return Lattice(
        len(coords), covers, name=name, coords=coords, factors=factors
    )


def boolean(k) -> Lattice:
    k = Lattice._is_valid_int(k, "k", 0)
    return product([chain(2)] * k, name="B{k}".format(k=k))


def glued_sum(lower: Lattice, upper: Lattice, name: str = None) -> Lattice:
    """
    ``upper`` placed on top of ``lower`` with the top of ``lower``
    identified with the bottom of ``upper``. Elements of ``lower`` keep
    their indices; the other elements of ``upper`` follow in index order.
    """
    offset = {}
    for x in upper.elements:
        if x == upper.bottom:
            offset[x] = lower.top
        else:
            offset[x] = lower.n + len(offset) - (
                1 if upper.bottom in offset else 0
            )
    covers = list(lower.covers)
    covers.extend((offset[a], offset[b]) for a, b in upper.covers)
    if name is None:
        name = "{a}+{b}".format(a=lower.name or lower.n, b=upper.name or upper.n)
    return Lattice(lower.n + upper.n - 1, covers, name=name)


def _check_removal(spec: IntervalRemovalSpec):
    base = spec.base
    if spec.e == base.bottom:
        raise ZeroForbidden("e must not be the bottom element")
    if not is_join_prime(base, spec.e):
        raise NotJoinPrime("e is not join-prime")
    if not base.leq[spec.e, spec.f]:
        raise NotComparable("e is not below f")


def surviving_elements(spec: IntervalRemovalSpec) -> Tuple[int, ...]:
    """
    Elements of the base lattice outside [e, f], in increasing order; the
    removal result renumbers them 0, 1, ... in this order.
    """
    _check_removal(spec)
    removed = spec.base.interval(spec.e, spec.f)
    return tuple(x for x in spec.base.elements if x not in removed)


def remove_interval(spec: IntervalRemovalSpec, name: str = None) -> Lattice:
    """
    The subposet K ∖ [e, f] with the induced order. Its covers are read off
    the induced order and the result is validated as a lattice from
    scratch; only joins are known to agree with K.
    """
    base = spec.base
    survivors = surviving_elements(spec)
    keep = np.asarray(survivors)
    strict = base.leq[np.ix_(keep, keep)].copy()
    np.fill_diagonal(strict, False)
    as_float = strict.astype(np.float32)
    between = (as_float @ as_float) > 0
    covers = np.argwhere(strict & ~between)
    coords = None
    if base.coords is not None:
        coords = [base.coords[x] for x in survivors]
    if name is None:
        name = "{b}-[{e},{f}]".format(b=base.name or base.n, e=spec.e, f=spec.f)
    lattice = Lattice(
        len(survivors),
        [(int(a), int(b)) for a, b in covers],
        name=name,
        coords=coords,
    )
    logger.info(
        "removed %d elements from %s, %d remain",
        base.n - lattice.n, base.name, lattice.n,
    )
    return lattice


def build_lnk(n, k) -> LnkConstruction:
    """
    L(n,k): the product of k copies of C_n and one C_2 with the interval
    [(0,...,0,1,0), (n-2,...,n-2,n-1,0)] removed, together with the element
    z = (0,...,0,n-1,1) and the three-entry profile whose medians include z.
    """
    n = Lattice._is_valid_int(n, "n", 0)
    k = Lattice._is_valid_int(k, "k", 0)
    if n < 4 or k < 3:
        raise BadParams(
            "L(n,k) needs n >= 4 and k >= 3, got n={n}, k={k}".format(n=n, k=k)
        )
    ambient = product(
        [chain(n)] * k + [chain(2)], name="K{n}_{k}".format(n=n, k=k)
    )
    radices = (n,) * k + (2,)

    def flat(*coords):
        return ProductElement(coords, radices).index

    zeros = (0,) * (k - 1)
    e = flat(*zeros, 1, 0)
    f = flat(*((n - 2,) * (k - 1)), n - 1, 0)
    spec = IntervalRemovalSpec(ambient, e, f)
    survivors = surviving_elements(spec)
    lattice = remove_interval(spec, name="L{n}_{k}".format(n=n, k=k))
    position = {x: i for i, x in enumerate(survivors)}

    x0 = zeros + (0, 0)
    x1 = (n - 1,) + (0,) * (k - 2) + (n - 1, 0)
    x2 = (0, n - 1) + (0,) * (k - 3) + (n - 1, 0)
    xi = Profile(position[flat(*x)] for x in (x0, x1, x2))
    z = position[flat(*zeros, n - 1, 1)]
    return LnkConstruction(
        n, k, lattice, ambient, e, f, z, xi, survivors
    )


def build_gk(k) -> Lattice:
    """
    G(k): L(4,3) with the 2^k-element boolean lattice glued on top. The
    elements of L(4,3) keep their indices.
    """
    k = Lattice._is_valid_int(k, "k", 0)
    if k <= 3:
        raise BadParams("G(k) needs k > 3, got k={k}".format(k=k))
    return glued_sum(
        build_lnk(4, 3).lattice, boolean(k), name="G{k}".format(k=k)
    )


def figure1() -> Lattice:
    """
    Nine-element semimodular lattice of breadth two that is not planar;
    elements A..I are 0..8.
    """
    index = {label: i for i, label in enumerate(FIGURE1_LABELS)}
    return Lattice(
        len(FIGURE1_LABELS),
        [(index[a], index[b]) for a, b in FIGURE1_COVERS],
        name="figure1",
    )


def product_join_prime_profile(lattice: Lattice, u) -> Optional[int]:
    """
    For a product lattice: the 1-based coordinate i such that u is nonzero
    join-prime exactly through a nonzero join-prime i-th component with all
    other components zero; None when u is not of that form.
    """
    if lattice.factors is None:
        raise NotAProduct(
            "{name} was not built as a direct product".format(
                name=lattice.name or lattice.n
            )
        )
    radices = tuple(f.n for f in lattice.factors)
    point = ProductElement.from_index(u, radices).coords
    nonzero = [
        i for i, (c, f) in enumerate(zip(point, lattice.factors))
        if c != f.bottom
    ]
    if len(nonzero) != 1:
        return None
    i = nonzero[0]
    if not is_join_prime(lattice.factors[i], point[i]):
        return None
    return i + 1


def build(spec: ConstructionSpec) -> Lattice:
    """
    Builds the lattice named by a construction spec.
    """
    family = spec.family
    if family == "chain":
        spec.require("n")
        if spec.n < 1:
            raise BadParams("chain needs n >= 1")
        return chain(spec.n)
    if family == "boolean":
        spec.require("k")
        return boolean(spec.k)
    if family == "product":
        if not spec.inputs:
            raise BadParams("product needs at least one --input")
        return product(spec.inputs)
    if family == "gluedsum":
        if len(spec.inputs) != 2:
            raise BadParams("gluedsum needs exactly two --input files")
        return glued_sum(*spec.inputs)
    if family == "remove-interval":
        if len(spec.inputs) != 1:
            raise BadParams("remove-interval needs exactly one --input")
        spec.require("e", "f")
        base = spec.inputs[0]
        return remove_interval(IntervalRemovalSpec(base, spec.e, spec.f))
    if family == "lnk":
        spec.require("n", "k")
        return build_lnk(spec.n, spec.k).lattice
    if family == "gk":
        spec.require("k")
        return build_gk(spec.k)
    return figure1()


_lnk_name = re.compile(r"L([0-9]+)_([0-9]+)")


def match_lnk(lattice: Lattice) -> Optional[LnkConstruction]:
    """
    Recognises a lattice named ``L<n>_<k>`` whose covers are those of
    L(n,k) and returns the full construction; None otherwise.
    """
    found = _lnk_name.fullmatch(lattice.name or "")
    if found is None:
        return None
    n, k = int(found.group(1)), int(found.group(2))
    if n < 4 or k < 3 or 2 * n ** k - (n - 1) ** k != lattice.n:
        return None
    construction = build_lnk(n, k)
    if construction.lattice.covers != lattice.covers:
        return None
    return construction
