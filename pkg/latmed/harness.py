"""
Property campaigns over enumerated or supplied lattices.

Every campaign maps one top-level check function over a list of jobs, one
job per lattice (or factor pair). A check returns a ``CampaignResult`` for
its job with exactly one outcome per property, and the results are merged
in job order, so the outcome does not depend on the worker count.
"""
import logging
import os
from itertools import combinations_with_replacement
from multiprocessing import Pool
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from latmed import lat, settings
from latmed.breadth import breadth, breadth_bruteforce
from latmed.constructions import boolean, chain, figure1, product
from latmed.enumeration import enumerate_lattices, lattices_up_to
from latmed.exceptions import CapExceeded, ValidationError
from latmed.medians import (
    MAJORITY,
    c1,
    check_c1_property,
    lnk_remoteness,
    m_lower,
    m_upper,
    median_set,
    profile_blocks,
    remoteness_vector,
    repair_witness,
)
from latmed.models import (
    AbstractModel,
    CampaignResult,
    CounterexampleReport,
    Lattice,
    LnkConstruction,
    Profile,
    Violation,
)
from latmed.models.fields import WorkersField
from latmed.properties import (
    chain_additivity_violation,
    distance_identity_violation,
    is_codistributive,
    is_distributive,
    is_graded,
    is_join_prime,
    is_modular,
    is_semimodular,
    join_irreducibles,
    metric_violation,
)


logger = logging.getLogger(__name__)

SUITES = ("theorem-a", "lemmas", "survey", "products")

SEMIMODULAR_BREADTH_2 = "semimodular-breadth-2"
RESTRICTIONS = (SEMIMODULAR_BREADTH_2, "distributive", "none")

THEOREM_A = ("c1-median", "hierarchy", "breadth-oracle")
LEMMAS = (
    "two-profile",
    "pb-exclusion",
    "repair",
    "metric",
    "distance-identity",
    "chain-additivity",
)
SURVEY = (
    "barbut-monjardet",
    "leclerc",
    "lower-bound-converse",
    "modular-c1",
    "modular-sublattice",
    "height-six",
)
PRODUCTS = (
    "distance-additivity",
    "breadth-additivity",
    "median-factorization",
    "semimodular-product",
    "c1-product",
    "converse-semimodular",
)

PRODUCT_FACTOR_SIZES = (2, 5)


class Campaign(WorkersField, AbstractModel):
    """
    Runs one check function over a list of jobs, in a process pool when
    more than one worker is configured.
    """

    __slots__ = [
        'suite',
        'family',
        'properties',
        'max_size',
        'max_k',
    ]

    def __init__(
        self,
        suite: str,
        family: str,
        properties: Sequence[str],
        max_size: Optional[int] = None,
        max_k: Optional[int] = None,
        workers: Optional[int] = None,
    ):
        self.suite = suite
        self.family = family
        self.properties = tuple(properties)
        self.max_size = max_size
        self.max_k = max_k
        self.workers = workers

    def _outcomes(self, check: Callable, jobs: List) -> Iterable:
        if self.workers == 1 or len(jobs) < 2:
            return map(check, jobs)
        with Pool(min(self.workers, len(jobs))) as pool:
            return list(pool.imap(check, jobs))

    def run(self, check: Callable, jobs: Iterable) -> CampaignResult:
        jobs = list(jobs)
        logger.info(
            "%s: %d job(s) over %s with %d worker(s)",
            self.suite, len(jobs), self.family, self.workers,
        )
        result = CampaignResult(
            self.suite,
            self.family,
            self.max_size,
            self.max_k,
            self.properties,
        )
        for outcome in self._outcomes(check, jobs):
            result = result.merge(outcome)
        logger.info(
            "%s: %d examined, %d violation(s)",
            self.suite, result.examined, len(result.violations),
        )
        return result

    def create_dict(self, **kwargs) -> dict:
        return dict(
            suite=self.suite,
            family=self.family,
            properties=list(self.properties),
            max_size=self.max_size,
            max_k=self.max_k,
            workers=self.workers,
        )


def _job_result(suite: str, properties: Sequence[str]) -> CampaignResult:
    result = CampaignResult(suite, "", properties=properties)
    result.examined = 1
    return result


def _outcome(
    result: CampaignResult, prop: str, violation: Optional[Violation]
):
    if violation is None:
        result.record(prop, "holds")
    else:
        result.record(prop, "fails")
        result.fail(violation)


def _check_k_max(k_max) -> int:
    k_max = Lattice._is_valid_int(k_max, "k_max", 1)
    if k_max > settings.EXTENDED_MAX_K:
        raise CapExceeded(
            "profile size is capped at k={c}, got k={k}".format(
                c=settings.EXTENDED_MAX_K, k=k_max
            )
        )
    return k_max


def _enumerated(max_n, lattices) -> Tuple[str, List[Lattice]]:
    if lattices is not None:
        lattices = list(lattices)
        names = ",".join(lt.name or str(lt.n) for lt in lattices)
        return "supplied {names}".format(names=names or "none"), lattices
    max_n = Lattice._is_valid_int(max_n, "max_n", 1)
    cap = settings.enumeration_cap()
    if max_n > cap:
        raise CapExceeded(
            "enumeration is capped at n={c}, got n={n}".format(c=cap, n=max_n)
        )
    family = "enumerated n<={n}".format(n=max_n)
    return family, list(lattices_up_to(max_n))


def _profiles(lattice: Lattice, k_max: int):
    """
    Every bounded profile with its remoteness column and median mask.
    """
    for block in profile_blocks(lattice, k_max):
        medians = block.median_mask()
        for j in range(len(block.lasts)):
            yield block.profile(j), block.values[:, j], medians[:, j]


def hierarchy_violation(lattice: Lattice) -> Optional[str]:
    """
    Checks distributive => modular => semimodular => graded together with
    the join-prime relations of every element.
    """
    distributive = is_distributive(lattice)
    modular = is_modular(lattice)
    semimodular = is_semimodular(lattice)
    if distributive and not modular:
        return "distributive but not modular"
    if modular and not semimodular:
        return "modular but not semimodular"
    if semimodular and not is_graded(lattice):
        return "semimodular but not graded"
    irreducible = join_irreducibles(lattice)
    for u in lattice.elements:
        prime = is_join_prime(lattice, u)
        if prime and u not in irreducible:
            return "{u} is join-prime but not join-irreducible".format(u=u)
        if u in irreducible and is_codistributive(lattice, u) and not prime:
            return (
                "{u} is codistributive and join-irreducible but not "
                "join-prime".format(u=u)
            )
    return None


def _check_theorem_a(job) -> CampaignResult:
    lattice, k_max, restrict = job
    result = _job_result("theorem-a", THEOREM_A)
    width = breadth(lattice)

    if restrict == SEMIMODULAR_BREADTH_2:
        applies = width <= 2 and is_semimodular(lattice)
    elif restrict == "distributive":
        applies = is_distributive(lattice)
    else:
        applies = True
    if applies:
        report = check_c1_property(lattice, k_max)
        violation = None
        if report.has_violation:
            violation = Violation(
                "c1-median", lattice, report.profile, report.witness,
                "median not below c1",
            )
        _outcome(result, "c1-median", violation)
    else:
        result.record("c1-median", "skipped")

    problem = hierarchy_violation(lattice)
    _outcome(
        result, "hierarchy",
        Violation("hierarchy", lattice, detail=problem) if problem else None,
    )

    if lattice.n <= settings.BRUTEFORCE_MAX_SIZE:
        brute = breadth_bruteforce(lattice, width + 1)
        violation = None
        if brute != width:
            violation = Violation(
                "breadth-oracle", lattice,
                detail="breadth {a} but brute force {b}".format(
                    a=width, b=brute
                ),
            )
        _outcome(result, "breadth-oracle", violation)
    else:
        result.record("breadth-oracle", "skipped")
    logger.debug("theorem-a checked %s", lattice.name)
    return result


def dump_reproductions(
    result: CampaignResult, directory: str = None
) -> List[str]:
    """
    Writes every violation as a lattice file whose comment lines name the
    property, profile and witness; returns the written paths.
    """
    directory = directory or settings.repro_dir()
    os.makedirs(directory, exist_ok=True)
    paths = []
    for i, violation in enumerate(result.violations):
        path = os.path.join(
            directory,
            "{p}-{name}-{i}.lat".format(
                p=violation.prop,
                name=violation.lattice.name or violation.lattice.n,
                i=i,
            ),
        )
        lat.convert(path, violation.lattice, [violation.to_text()])
        logger.warning("reproduction written to %s", path)
        paths.append(path)
    return paths


def verify_theorem_a(
    max_n=settings.DEFAULT_MAX_SIZE,
    k_max=settings.DEFAULT_MAX_K,
    workers: int = None,
    lattices: Iterable[Lattice] = None,
    restrict: str = SEMIMODULAR_BREADTH_2,
) -> CampaignResult:
    """
    c1-median check on every enumerated (or supplied) lattice admitted by
    ``restrict``, plus the predicate hierarchy and the breadth oracle.
    """
    if restrict not in RESTRICTIONS:
        raise ValidationError(
            "restrict must be one of {r}".format(r=", ".join(RESTRICTIONS))
        )
    k_max = _check_k_max(k_max)
    family, lattices = _enumerated(max_n, lattices)
    campaign = Campaign(
        "theorem-a",
        "{f} ({r})".format(f=family, r=restrict),
        THEOREM_A,
        max_size=None if family.startswith("supplied") else max_n,
        max_k=k_max,
        workers=workers,
    )
    result = campaign.run(
        _check_theorem_a, ((lt, k_max, restrict) for lt in lattices)
    )
    if restrict == SEMIMODULAR_BREADTH_2 and result.violations:
        logger.warning(
            "theorem-a falsified on %d lattice(s)", len(result.violations)
        )
        dump_reproductions(result)
    return result


def _check_lemmas(job) -> CampaignResult:
    lattice, k_max = job
    result = _job_result("lemmas", LEMMAS)
    problem = metric_violation(lattice)
    _outcome(
        result, "metric",
        Violation("metric", lattice, detail=problem) if problem else None,
    )
    if not is_semimodular(lattice):
        for prop in LEMMAS:
            if prop != "metric":
                result.record(prop, "skipped")
        return result

    pair = distance_identity_violation(lattice)
    _outcome(
        result, "distance-identity",
        Violation(
            "distance-identity", lattice,
            detail="pair {a},{b}".format(a=pair[0], b=pair[1]),
        ) if pair else None,
    )
    triple = chain_additivity_violation(lattice)
    _outcome(
        result, "chain-additivity",
        Violation(
            "chain-additivity", lattice,
            detail="chain {t}".format(t=",".join(map(str, triple))),
        ) if triple else None,
    )

    leq = lattice.leq
    repairable = breadth(lattice) <= 2
    found = {"two-profile": None, "pb-exclusion": None, "repair": None}
    for block in profile_blocks(lattice, k_max):
        k = len(block.prefix) + 1
        medians = block.median_mask()
        above_c1 = ~leq[:, block.joins]
        # below[z, j]: entries of profile j lying below z
        below = (
            leq[list(block.prefix), :].sum(axis=0)[:, None]
            + leq[block.lasts, :].T
        )
        if k == 2 and found["two-profile"] is None:
            bad = np.argwhere(medians & above_c1)
            if len(bad):
                z, j = bad[0]
                found["two-profile"] = Violation(
                    "two-profile", lattice, block.profile(j), int(z),
                    "median not below x1 v x2",
                )
        if found["pb-exclusion"] is None:
            bad = np.argwhere(medians & above_c1 & (2 * below >= k))
            if len(bad):
                z, j = bad[0]
                found["pb-exclusion"] = Violation(
                    "pb-exclusion", lattice, block.profile(j), int(z),
                    "|P| <= |B| but z is a median",
                )
        if repairable and found["repair"] is None:
            for z, j in np.argwhere(above_c1 & (2 * below < k)):
                w = repair_witness(lattice, block.profile(j), int(z))
                if w is None or block.values[w, j] >= block.values[z, j]:
                    found["repair"] = Violation(
                        "repair", lattice, block.profile(j), int(z),
                        "no strictly better join z v x_i",
                    )
                    break

    _outcome(result, "two-profile", found["two-profile"])
    _outcome(result, "pb-exclusion", found["pb-exclusion"])
    if repairable:
        _outcome(result, "repair", found["repair"])
    else:
        result.record("repair", "skipped")
    logger.debug("lemmas checked %s", lattice.name)
    return result


def verify_lemmas(
    max_n=settings.LEMMAS_MAX_SIZE,
    k_max=settings.DEFAULT_MAX_K,
    workers: int = None,
    lattices: Iterable[Lattice] = None,
) -> CampaignResult:
    """
    Two-element profiles, the P/B exclusion and the median repair on every
    semimodular lattice, the metric identities on all of them.
    """
    k_max = _check_k_max(k_max)
    family, lattices = _enumerated(max_n, lattices)
    campaign = Campaign(
        "lemmas", family, LEMMAS,
        max_size=None if family.startswith("supplied") else max_n,
        max_k=k_max,
        workers=workers,
    )
    return campaign.run(_check_lemmas, ((lt, k_max) for lt in lattices))


def _closed_under(lattice: Lattice, members: np.ndarray) -> bool:
    index = np.flatnonzero(members)
    grid = np.ix_(index, index)
    return bool(
        members[lattice.join_table[grid]].all()
        and members[lattice.meet_table[grid]].all()
    )


def _check_survey(job) -> CampaignResult:
    lattice, k_max = job
    result = _job_result("survey", SURVEY)
    leq = lattice.leq
    distributive = is_distributive(lattice)
    modular = is_modular(lattice)
    semimodular = is_semimodular(lattice)

    found = dict.fromkeys(SURVEY)
    converse = None
    for profile, values, medians in _profiles(lattice, k_max):
        low = m_lower(lattice, profile, MAJORITY)
        high = m_upper(lattice, profile, MAJORITY)
        between = leq[low, :] & leq[:, high]
        above_low = leq[low, :]
        if distributive and found["barbut-monjardet"] is None:
            if (medians != between).any():
                found["barbut-monjardet"] = Violation(
                    "barbut-monjardet", lattice, profile,
                    detail="median set is not [m, m']",
                )
        if semimodular and found["leclerc"] is None:
            outside = np.flatnonzero(medians & ~above_low)
            if len(outside):
                found["leclerc"] = Violation(
                    "leclerc", lattice, profile, int(outside[0]),
                    "median not above m",
                )
        if not semimodular and converse is None:
            if (medians & ~above_low).any():
                converse = profile
        if modular and found["modular-sublattice"] is None:
            if (medians & ~between).any() or not _closed_under(
                lattice, medians
            ):
                found["modular-sublattice"] = Violation(
                    "modular-sublattice", lattice, profile,
                    detail="median set is not a sublattice of [m, m']",
                )

    if distributive:
        _outcome(result, "barbut-monjardet", found["barbut-monjardet"])
    else:
        result.record("barbut-monjardet", "skipped")
    if semimodular:
        _outcome(result, "leclerc", found["leclerc"])
    else:
        result.record("leclerc", "skipped")
    result.record(
        "lower-bound-converse", "holds" if converse is not None else "skipped"
    )
    if modular:
        _outcome(result, "modular-sublattice", found["modular-sublattice"])
    else:
        result.record("modular-sublattice", "skipped")

    for prop, applies in (
        ("modular-c1", modular),
        ("height-six", semimodular and lattice.length() <= 6),
    ):
        if not applies:
            result.record(prop, "skipped")
            continue
        report = check_c1_property(lattice, k_max)
        _outcome(
            result, prop,
            Violation(
                prop, lattice, report.profile, report.witness,
                "median not below c1",
            ) if report.has_violation else None,
        )
    logger.debug("survey checked %s", lattice.name)
    return result


def verify_survey(
    max_n=settings.DEFAULT_MAX_SIZE,
    k_max=settings.DEFAULT_MAX_K,
    workers: int = None,
    lattices: Iterable[Lattice] = None,
) -> CampaignResult:
    """
    Interval bounds of the median set on distributive, modular and
    semimodular lattices, using strict-majority index sets.
    """
    k_max = _check_k_max(k_max)
    family, lattices = _enumerated(max_n, lattices)
    campaign = Campaign(
        "survey", family, SURVEY,
        max_size=None if family.startswith("supplied") else max_n,
        max_k=k_max,
        workers=workers,
    )
    return campaign.run(_check_survey, ((lt, k_max) for lt in lattices))


def _check_products(job) -> CampaignResult:
    first, second, k_max = job
    result = _job_result("products", PRODUCTS)
    lattice = product([first, second])
    coords = np.asarray(lattice.coords)
    a, b = coords[:, 0], coords[:, 1]

    expected = (
        first.dist_matrix[np.ix_(a, a)] + second.dist_matrix[np.ix_(b, b)]
    )
    bad = np.argwhere(lattice.dist_matrix != expected)
    _outcome(
        result, "distance-additivity",
        Violation(
            "distance-additivity", lattice,
            detail="pair {x},{y}".format(x=bad[0][0], y=bad[0][1]),
        ) if len(bad) else None,
    )

    if first.n > 1 and second.n > 1:
        total = breadth(first) + breadth(second)
        width = breadth(lattice)
        _outcome(
            result, "breadth-additivity",
            Violation(
                "breadth-additivity", lattice,
                detail="breadth {w} but factors sum to {t}".format(
                    w=width, t=total
                ),
            ) if width != total else None,
        )
    else:
        result.record("breadth-additivity", "skipped")

    violation = None
    for profile, values, medians in _profiles(lattice, k_max):
        left = remoteness_vector(first, [a[x] for x in profile])
        right = remoteness_vector(second, [b[x] for x in profile])
        factored = (left[a] == left.min()) & (right[b] == right.min())
        if (medians != factored).any():
            violation = Violation(
                "median-factorization", lattice, profile,
                detail="medians are not the product of factor medians",
            )
            break
    _outcome(result, "median-factorization", violation)

    semimodular = is_semimodular(lattice)
    factors_semimodular = is_semimodular(first) and is_semimodular(second)
    if factors_semimodular:
        _outcome(
            result, "semimodular-product",
            None if semimodular else Violation(
                "semimodular-product", lattice,
                detail="semimodular factors, non-semimodular product",
            ),
        )
    else:
        result.record("semimodular-product", "skipped")
    if semimodular:
        _outcome(
            result, "converse-semimodular",
            None if factors_semimodular else Violation(
                "converse-semimodular", lattice,
                detail="semimodular product, non-semimodular factor",
            ),
        )
    else:
        result.record("converse-semimodular", "skipped")

    if any(check_c1_property(f, k_max).has_violation for f in (first, second)):
        result.record("c1-product", "skipped")
    else:
        report = check_c1_property(lattice, k_max)
        _outcome(
            result, "c1-product",
            Violation(
                "c1-product", lattice, report.profile, report.witness,
                "median not below c1",
            ) if report.has_violation else None,
        )
    logger.debug("products checked %s", lattice.name)
    return result


def product_sample(
    sizes: Tuple[int, int] = PRODUCT_FACTOR_SIZES,
) -> List[Tuple[Lattice, Lattice]]:
    """
    All unordered pairs of enumerated lattices with sizes in the given
    range, followed by a few constructed pairs.
    """
    low, high = sizes
    pool = [lt for n in range(low, high + 1) for lt in enumerate_lattices(n)]
    pairs = list(combinations_with_replacement(pool, 2))
    pairs.extend([
        (boolean(2), chain(3)),
        (chain(3), chain(3)),
        (figure1(), chain(2)),
        (chain(1), chain(4)),
    ])
    return pairs


def verify_product_laws(
    k_max=settings.DEFAULT_MAX_K,
    pairs: Iterable[Tuple[Lattice, Lattice]] = None,
    workers: int = None,
) -> CampaignResult:
    """
    Distance and breadth additivity, median factorisation and the
    preservation of semimodularity and of the c1-median property on
    two-factor products.
    """
    k_max = _check_k_max(k_max)
    if pairs is None:
        family = "factor pairs of size {a}..{b} and constructed".format(
            a=PRODUCT_FACTOR_SIZES[0], b=PRODUCT_FACTOR_SIZES[1]
        )
        pairs = product_sample()
    else:
        pairs = list(pairs)
        family = "supplied {c} pair(s)".format(c=len(pairs))
    campaign = Campaign(
        "products", family, PRODUCTS, max_k=k_max, workers=workers
    )
    return campaign.run(
        _check_products, ((x, y, k_max) for x, y in pairs)
    )


def verify(
    suite: str,
    max_n=None,
    k_max=settings.DEFAULT_MAX_K,
    workers: int = None,
) -> CampaignResult:
    """
    Run one named suite. Without max_n the lemmas run up to size 6 and the
    other enumerated suites up to size 7.
    """
    if max_n is None:
        max_n = (
            settings.LEMMAS_MAX_SIZE if suite == "lemmas"
            else settings.DEFAULT_MAX_SIZE
        )
    if suite == "theorem-a":
        return verify_theorem_a(max_n, k_max, workers)
    if suite == "lemmas":
        return verify_lemmas(max_n, k_max, workers)
    if suite == "survey":
        return verify_survey(max_n, k_max, workers)
    if suite == "products":
        return verify_product_laws(k_max, workers=workers)
    raise ValidationError(
        "unknown suite {s!r}, expected one of: {a}".format(
            s=suite, a=", ".join(SUITES)
        )
    )


def counterexample_report(
    lattice: Lattice,
    xi,
    construction: Optional[LnkConstruction] = None,
) -> CounterexampleReport:
    """
    Median dossier of a profile. With the L(n,k) construction it also
    compares the closed-form remoteness with the metric on every element
    and lists the ambient elements with smaller remoteness than z.
    """
    report = median_set(lattice, xi)
    values = np.asarray(report.remoteness)
    top = c1(lattice, report.profile)
    below = [bool(lattice.leq[y, top]) for y in report.medians]
    if construction is None:
        return CounterexampleReport(
            lattice.name, report, values.max(), below
        )

    n, k = construction.n, construction.k
    lnk = construction.lattice
    mismatches = [
        y for y in lnk.elements
        if lnk_remoteness(n, k, lnk.coords[y]) != values[y]
    ]
    z = construction.z
    ambient = construction.ambient
    ambient_xi = Profile(construction.embedding[x] for x in report.profile)
    ambient_values = remoteness_vector(ambient, ambient_xi)
    improvers = np.flatnonzero(ambient_values < values[z])
    removed = ambient.leq[construction.e] & ambient.leq[:, construction.f]
    return CounterexampleReport(
        lattice.name,
        report,
        values.max(),
        below,
        closed_form_checked=lnk.n,
        closed_form_mismatches=mismatches,
        z=z,
        z_remoteness=int(values[z]),
        ambient_improvers=[int(y) for y in improvers],
        improvers_removed=bool(removed[improvers].all()),
    )
