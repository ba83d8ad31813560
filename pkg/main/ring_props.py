"""
Ring-theoretic properties of the ring of step functions, read off its ideal
structure, and the harness that checks the implications between them.

Every finitely generated ideal (f_1, ..., f_n) equals the principal ideal of
f_b with b = ⋁ coz(f_i), because the ring is regular: Σ f_i² has cozero b and
its product with its quasi-inverse is f_b. Ideals are therefore handled as
elements b of the clopen algebra, and ``ideal_of`` re-verifies both
inclusions on every call.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from dataclasses import field
from dataclasses import fields
from dataclasses import replace
from fractions import Fraction
from itertools import product
from typing import Iterable
from typing import Iterator
from typing import Sequence

from .exceptions import InvariantViolation
from .exceptions import LabError
from .lattice_core import Element
from .realfun import DEFAULT_POOL
from .realfun import StepFunction
from .realfun import atom_values
from .realfun import characteristic
from .realfun import common_topoframe
from .realfun import countable_coz_join
from .realfun import coz_of
from .realfun import enumerate_functions
from .realfun import from_atom_values
from .realfun import idempotent_normal_form
from .realfun import is_unit
from .realfun import is_zerodivisor
from .realfun import make_constant
from .realfun import quasi_inverse
from .realfun import random_function
from .realfun import random_rational
from .realfun import separate
from .realfun import separating_element
from .realfun import separating_element_ed
from .realfun import zero_of
from .topoframe import PropertyCheck
from .topoframe import Topoframe
from .topoframe import is_completely_regular
from .topoframe import is_ed_frame
from .topoframe import is_ed_topoframe
from .topoframe import is_p_topoframe

logger = logging.getLogger(__name__)

PASS = "PASS"
HYPOTHESIS_NOT_MET = "HYPOTHESIS-NOT-MET"
FAIL = "FAIL"

SELFINJECTIVE_MODES = ("finite-as-aleph0", "full")


@dataclass(frozen=True)
class IdealHandle:
    """The ideal I_b = {f : coz(f) ≤ b} for a clopen b."""

    topoframe: Topoframe
    b: Element

    def __contains__(self, f: object) -> bool:
        return isinstance(f, StepFunction) and coz_of(f) <= self.b

    def __le__(self, other: "IdealHandle") -> bool:
        return self.b <= other.b

    def __lt__(self, other: "IdealHandle") -> bool:
        return self.b < other.b

    def __str__(self) -> str:
        return f"I_{self.b}"

    @property
    def generator(self) -> StepFunction:
        return characteristic(self.topoframe, self.b)

    @property
    def is_zero(self) -> bool:
        return self.b == self.topoframe.lattice.bottom

    @property
    def is_whole(self) -> bool:
        return self.b == self.topoframe.lattice.top


def ideals(tf: Topoframe) -> tuple[IdealHandle, ...]:
    return tuple(IdealHandle(tf, b) for b in tf.clopen_algebra.carrier)


def ideal_of(
    generators: Iterable[StepFunction], topoframe: Topoframe | None = None
) -> IdealHandle:
    """The ideal generated by a finite list of functions."""
    generators = list(generators)
    tf = common_topoframe(generators, topoframe)
    b = tf.lattice.big_join(coz_of(f) for f in generators)
    f_b = characteristic(tf, b)
    for f in generators:
        if f * f_b != f:
            raise InvariantViolation("f = f·f_b for each generator", f)
    total = make_constant(tf, 0)
    for f in generators:
        total = total + f * f
    if total * quasi_inverse(total) != f_b:
        raise InvariantViolation("f_b = (Σf²)·quasi_inverse(Σf²)", b)
    return IdealHandle(tf, b)


def annihilator(
    S: Iterable[StepFunction], topoframe: Topoframe | None = None
) -> IdealHandle:
    """Ann(S) = I_b where b is the largest clopen disjoint from ⋁ coz(S)."""
    S = list(S)
    tf = common_topoframe(S, topoframe)
    lattice = tf.lattice
    algebra = tf.clopen_algebra
    cover = lattice.big_join(coz_of(f) for f in S)
    disjoint = [c for c in algebra.carrier if (c & cover) == lattice.bottom]
    b = lattice.big_join(disjoint)
    if b not in algebra:
        raise InvariantViolation("annihilator carrier is clopen", b)
    f_b = characteristic(tf, b)
    for f in S:
        if not (f_b * f).is_zero:
            raise InvariantViolation("f_b·f = 0 on S", f)
    for c in disjoint:
        if not c <= b:
            raise InvariantViolation("annihilator is maximal", c)
    return IdealHandle(tf, b)


def is_essential(ideal: IdealHandle) -> PropertyCheck:
    """
    Every nonzero ideal meets ``ideal`` nontrivially. A failure carries the
    disjoint ideal together with the zero product of the two generators.
    """
    return is_essential_in(ideal, IdealHandle(ideal.topoframe, ideal.topoframe.lattice.top))


def is_essential_in(ideal: IdealHandle, larger: IdealHandle) -> PropertyCheck:
    tf = ideal.topoframe
    if larger.topoframe is not tf:
        raise InvariantViolation("ideals share a topoframe", larger)
    if not ideal <= larger:
        return PropertyCheck(False, detail=f"{ideal} is not contained in {larger}")
    bottom = tf.lattice.bottom
    generator = ideal.generator
    for d in tf.clopen_algebra.carrier:
        if d == bottom or not d <= larger.b:
            continue
        product_ = characteristic(tf, d) * generator
        if (d & ideal.b) == bottom:
            if not product_.is_zero:
                raise InvariantViolation("disjoint ideals have zero product", d)
            return PropertyCheck(
                False,
                witness=IdealHandle(tf, d),
                detail=f"{IdealHandle(tf, d)} meets {ideal} only in zero",
                evidence=(characteristic(tf, d), generator),
            )
        if product_.is_zero:
            raise InvariantViolation("overlapping ideals share a nonzero function", d)
    return PropertyCheck(True)


def is_closed_ideal(ideal: IdealHandle) -> PropertyCheck:
    """Not essential in any strictly larger ideal."""
    for larger in ideals(ideal.topoframe):
        if ideal < larger and is_essential_in(ideal, larger):
            return PropertyCheck(False, witness=larger)
    return PropertyCheck(True)


def is_summand(ideal: IdealHandle) -> PropertyCheck:
    tf = ideal.topoframe
    lattice = tf.lattice
    complement = lattice.complement_of(ideal.b)
    other = IdealHandle(tf, complement)
    if (ideal.b & complement) != lattice.bottom or (ideal.b | complement) != lattice.top:
        return PropertyCheck(False)
    if ideal.generator + other.generator != make_constant(tf, 1):
        raise InvariantViolation("f_b + f_b' = 1", ideal.b)
    return PropertyCheck(True, witness=other)


def instance_functions(
    tf: Topoframe,
    limit: int = 256,
    rng: random.Random | None = None,
    pool: Sequence[Fraction] = DEFAULT_POOL,
) -> list[StepFunction]:
    """
    Every function with atom values from ``pool`` when there are at most
    ``limit`` of them; otherwise the characteristic functions plus a seeded
    random sample.
    """
    atoms = tf.clopen_algebra.atoms
    if len(pool) ** len(atoms) <= limit:
        return list(enumerate_functions(tf, pool))
    rng = rng if rng is not None else random.Random(0)
    logger.warning(
        "Sampling %d of %d functions over %d atoms",
        limit,
        len(pool) ** len(atoms),
        len(atoms),
    )
    functions = [characteristic(tf, b) for b in tf.clopen_algebra.carrier]
    functions.extend(random_function(tf, rng, pool) for _ in range(limit - len(functions)))
    return list(dict.fromkeys(functions))


def check_regular(tf: Topoframe, functions: Sequence[StepFunction]) -> PropertyCheck:
    """Every function has a quasi-inverse g with f = g·f²."""
    witnesses = []
    for f in functions:
        try:
            witnesses.append((f, quasi_inverse(f)))
        except LabError:
            return PropertyCheck(False, witness=f)
    return PropertyCheck(True, witness=tuple(witnesses), evidence=len(witnesses))


def check_kasch(tf: Topoframe, functions: Sequence[StepFunction]) -> PropertyCheck:
    """
    Every proper finitely generated ideal is non-essential: its annihilator is
    nonzero. Also every proper ideal holds no unit and every nonzero nonunit
    generates a non-essential principal ideal.
    """
    witnesses = []
    for ideal in ideals(tf):
        if ideal.is_whole:
            continue
        annihilating = annihilator([ideal.generator], tf)
        if annihilating.is_zero:
            return PropertyCheck(False, witness=ideal, detail="annihilator is zero")
        witness = annihilating.generator
        if not (witness * ideal.generator).is_zero:
            raise InvariantViolation("annihilator witness kills the ideal", ideal)
        if is_essential(ideal):
            return PropertyCheck(False, witness=ideal, detail="proper ideal is essential")
        witnesses.append((ideal, witness))
    regular_ideal = check_no_regular_ideal(tf, functions)
    if not regular_ideal:
        return regular_ideal
    for f in functions:
        if f.is_zero or is_unit(f):
            continue
        principal = ideal_of([f])
        essential = is_essential(principal)
        if essential:
            return PropertyCheck(False, witness=f, detail="nonunit generates an essential ideal")
        if not (essential.witness.generator * f).is_zero:
            raise InvariantViolation("disjoint ideal annihilates f", f)
    return PropertyCheck(True, witness=tuple(witnesses), evidence=len(witnesses))


def check_no_regular_ideal(tf: Topoframe, functions: Sequence[StepFunction]) -> PropertyCheck:
    """No proper ideal contains a non-zerodivisor."""
    for ideal in ideals(tf):
        if ideal.is_whole:
            continue
        for f in functions:
            member = f * ideal.generator
            if is_unit(member):
                return PropertyCheck(False, witness=(ideal, member))
            if not member.is_zero and not is_zerodivisor(member):
                return PropertyCheck(False, witness=(ideal, member))
    return PropertyCheck(True)


def check_pp(tf: Topoframe, functions: Sequence[StepFunction]) -> PropertyCheck:
    """Ann(f) is generated by the idempotent f_{z(f)}."""
    for f in functions:
        annihilating = annihilator([f])
        if annihilating.b != zero_of(f):
            return PropertyCheck(False, witness=f)
        e = annihilating.generator
        if e * e != e:
            raise InvariantViolation("annihilator generator is idempotent", f)
    return PropertyCheck(True, evidence=len(functions))


def _families(
    functions: Sequence[StepFunction], rng: random.Random, limit: int
) -> Iterator[list[StepFunction]]:
    yield []
    for f in functions:
        yield [f]
    if len(functions) < 2:
        return
    for _ in range(limit):
        yield rng.sample(list(functions), rng.randint(2, min(4, len(functions))))


def check_baer(
    tf: Topoframe,
    functions: Sequence[StepFunction],
    rng: random.Random | None = None,
) -> PropertyCheck:
    """Ann(S) = I_e for an idempotent e, over sampled subsets S."""
    rng = rng if rng is not None else random.Random(0)
    algebra = tf.clopen_algebra
    checked = 0
    for family in _families(functions, rng, len(functions)):
        annihilating = annihilator(family, tf)
        e = annihilating.generator
        if annihilating.b not in algebra or e * e != e:
            return PropertyCheck(False, witness=tuple(family))
        for f in family:
            if not (e * f).is_zero:
                return PropertyCheck(False, witness=tuple(family))
        checked += 1
    return PropertyCheck(True, evidence=checked)


def check_essential_in_idempotent(tf: Topoframe) -> PropertyCheck:
    """Every nonzero ideal is essential in a principal ideal generated by an idempotent."""
    witnesses = []
    for ideal in ideals(tf):
        if ideal.is_zero:
            continue
        idempotent = ideal.generator
        principal = ideal_of([idempotent])
        if not is_essential_in(ideal, principal):
            return PropertyCheck(False, witness=ideal)
        witnesses.append((ideal, idempotent))
    return PropertyCheck(True, witness=tuple(witnesses))


def check_cs(tf: Topoframe) -> PropertyCheck:
    """Every closed ideal is a direct summand."""
    for ideal in ideals(tf):
        if is_closed_ideal(ideal) and not is_summand(ideal):
            return PropertyCheck(False, witness=ideal)
    return PropertyCheck(True, evidence=len(tf.clopen_algebra))


def _set_partitions(items: Sequence[Element]) -> Iterator[list[list[Element]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in _set_partitions(rest):
        yield [[first], *partition]
        for position in range(len(partition)):
            yield [
                *partition[:position],
                [first, *partition[position]],
                *partition[position + 1 :],
            ]


def orthogonal_families(
    tf: Topoframe,
    rng: random.Random,
    assignments: int = 3,
    pool: Sequence[Fraction] = DEFAULT_POOL,
) -> Iterator[tuple[list[StepFunction], list[StepFunction]]]:
    """
    Disjoint orthogonal pairs (S, T): each atom of B is left out or given to
    S or T, the atoms of each side are grouped into function supports, and
    every support receives ``assignments`` random nonzero value choices.
    """
    atoms = tf.clopen_algebra.atoms
    nonzero_pool = [value for value in pool if value != 0]

    def nonzero_value() -> Fraction:
        while True:
            value = rng.choice(nonzero_pool) if rng.random() < 0.5 else random_rational(rng)
            if value != 0:
                return value

    def build(block: list[Element]) -> StepFunction:
        values = [nonzero_value() if atom in block else Fraction(0) for atom in atoms]
        return from_atom_values(tf, values)

    for labels in product((None, "S", "T"), repeat=len(atoms)):
        s_atoms = [atom for atom, label in zip(atoms, labels) if label == "S"]
        t_atoms = [atom for atom, label in zip(atoms, labels) if label == "T"]
        for s_blocks in _set_partitions(s_atoms):
            for t_blocks in _set_partitions(t_atoms):
                for _ in range(assignments):
                    yield [build(block) for block in s_blocks], [build(block) for block in t_blocks]


def check_selfinjective(
    tf: Topoframe,
    mode: str = "full",
    rng: random.Random | None = None,
    assignments: int = 3,
    regular: PropertyCheck | None = None,
) -> PropertyCheck:
    """
    Regular plus a separating element for every disjoint orthogonal pair.

    All orthogonal families are finite here, so the countable and the full
    form of the criterion run the same check.
    """
    if mode not in SELFINJECTIVE_MODES:
        raise ValueError(f"Unknown selfinjectivity mode {mode!r}")
    rng = rng if rng is not None else random.Random(0)
    if regular is None:
        regular = check_regular(tf, instance_functions(tf, rng=rng))
    if not regular:
        return PropertyCheck(False, witness=regular.witness, detail="ring is not regular")
    boolean = all(tf.lattice.is_complemented(element) for element in tf.lattice)
    checked = 0
    for S, T in orthogonal_families(tf, rng, assignments):
        try:
            h = separating_element(S, T, tf)
            separate(S, T, tf)
            if boolean and separating_element_ed(S, T, tf) != h:
                raise InvariantViolation("both separating constructions agree on Boolean L", h)
        except LabError as error:
            logger.debug("Separation failed: %s", error)
            return PropertyCheck(False, witness=(tuple(S), tuple(T)), detail=str(error))
        checked += 1
    return PropertyCheck(
        True,
        evidence=checked,
        detail=f"{mode}: every orthogonal family is finite, both modes coincide",
    )


def _chains(elements: Sequence[Element]) -> Iterator[tuple[Element, ...]]:
    def extend(chain: tuple[Element, ...]) -> Iterator[tuple[Element, ...]]:
        yield chain
        for element in elements:
            if chain[-1] < element:
                yield from extend(chain + (element,))

    for element in elements:
        yield from extend((element,))


def check_continuity_completeness(tf: Topoframe) -> tuple[PropertyCheck, PropertyCheck]:
    """
    (complete, upper continuous) for the lattice of principal ideals, which
    is isomorphic to the clopen algebra.
    """
    lattice = tf.lattice
    algebra = tf.clopen_algebra
    size = len(algebra)
    complete = algebra.is_complete()
    if not complete:
        return complete, PropertyCheck(False, detail="principal ideals are not complete")
    chains = 0
    for chain in _chains(algebra.carrier):
        chains += 1
        top = lattice.big_join(chain)
        for a in algebra.carrier:
            if (a & top) != lattice.big_join(a & b for b in chain):
                return PropertyCheck(True, evidence=size), PropertyCheck(False, witness=(a, chain))
    return PropertyCheck(True, evidence=size), PropertyCheck(True, evidence=chains)


def check_monomorphisms(tf: Topoframe, functions: Sequence[StepFunction]) -> PropertyCheck:
    """
    Multiplication by g is injective iff g is a non-zerodivisor iff g is a
    unit, and then multiplication by the inverse undoes it.
    """
    for g in functions:
        injective = annihilator([g]).is_zero
        unit = is_unit(g)
        if injective != bool(unit):
            return PropertyCheck(False, witness=g, detail="injective differs from unit")
        if not g.is_zero and injective == bool(is_zerodivisor(g)):
            return PropertyCheck(False, witness=g, detail="injective differs from non-zerodivisor")
        if unit:
            for f in functions[:16]:
                if g * f * unit.witness != f:
                    raise InvariantViolation("multiplication by g⁻¹ inverts g", g)
    return PropertyCheck(True, evidence=len(functions))


def check_countable_ideal_containment(
    tf: Topoframe,
    functions: Sequence[StepFunction],
    rng: random.Random | None = None,
) -> PropertyCheck:
    """
    A family with (⋁ coz)′ ≠ ⊥ generates an ideal inside the non-essential
    principal ideal of f_{⋁ coz}.
    """
    rng = rng if rng is not None else random.Random(0)
    lattice = tf.lattice
    checked = 0
    for family in _families(functions, rng, len(functions)):
        cover = lattice.big_join(coz_of(f) for f in family)
        if cover == lattice.top:
            continue
        generator = countable_coz_join(family, tf)
        principal = ideal_of([generator])
        if any(f * generator != f for f in family) or is_essential(principal):
            return PropertyCheck(False, witness=tuple(family))
        checked += 1
    return PropertyCheck(True, evidence=checked)


def check_orthogonal_idempotent_suprema(tf: Topoframe) -> PropertyCheck:
    """Every set of orthogonal idempotents has a supremum among the idempotents."""
    lattice = tf.lattice
    algebra = tf.clopen_algebra
    idempotents = [characteristic(tf, b) for b in algebra.carrier]
    checked = 0
    for labels in product((False, True), repeat=len(algebra.atoms)):
        chosen = [atom for atom, keep in zip(algebra.atoms, labels) if keep]
        for blocks in _set_partitions(chosen):
            family = [characteristic(tf, lattice.big_join(block)) for block in blocks]
            supremum = characteristic(tf, lattice.big_join(coz_of(e) for e in family))
            if any(supremum * e != e for e in family):
                return PropertyCheck(False, witness=tuple(family))
            for bound in idempotents:
                if all(bound * e == e for e in family) and bound * supremum != supremum:
                    return PropertyCheck(False, witness=tuple(family))
            checked += 1
    return PropertyCheck(True, evidence=checked)


def check_idempotent_correspondence(tf: Topoframe) -> PropertyCheck:
    """e ↦ coz(e) and a ↦ f_a are inverse order isomorphisms, and f_a·f_b = f_{a∧b}."""
    carrier = tf.clopen_algebra.carrier
    for a in carrier:
        f_a = characteristic(tf, a)
        complement = tf.lattice.complement_of(a)
        if idempotent_normal_form(f_a) != a or zero_of(f_a) != complement:
            return PropertyCheck(False, witness=a)
        if f_a + characteristic(tf, complement) != make_constant(tf, 1):
            return PropertyCheck(False, witness=a)
        for b in carrier:
            f_b = characteristic(tf, b)
            if f_a * f_b != characteristic(tf, a & b):
                return PropertyCheck(False, witness=(a, b))
            if (a <= b) != (f_a * f_b == f_a):
                return PropertyCheck(False, witness=(a, b))
    return PropertyCheck(True, evidence=len(carrier))


def check_atom_isomorphism(
    tf: Topoframe, rng: random.Random, pairs: int = 1000
) -> PropertyCheck:
    """
    f ↦ (value on each atom of B) is a ring isomorphism onto a product of
    copies of the rationals; exact, on random pairs.
    """
    atoms = tf.clopen_algebra.atoms
    zero = make_constant(tf, 0)
    one = make_constant(tf, 1)
    if atom_values(zero) != (0,) * len(atoms) or atom_values(one) != (1,) * len(atoms):
        return PropertyCheck(False, witness=(zero, one))
    for _ in range(pairs):
        f = random_function(tf, rng)
        g = random_function(tf, rng)
        image_f, image_g = atom_values(f), atom_values(g)
        if from_atom_values(tf, image_f) != f:
            return PropertyCheck(False, witness=f, detail="not injective")
        if atom_values(f + g) != tuple(x + y for x, y in zip(image_f, image_g)):
            return PropertyCheck(False, witness=(f, g), detail="addition")
        if atom_values(f * g) != tuple(x * y for x, y in zip(image_f, image_g)):
            return PropertyCheck(False, witness=(f, g), detail="multiplication")
        if bool(is_unit(f)) != all(image_f):
            return PropertyCheck(False, witness=f, detail="units")
        if (f * f == f) != all(x in (0, 1) for x in image_f):
            return PropertyCheck(False, witness=f, detail="idempotents")
    return PropertyCheck(True, evidence=pairs)


@dataclass(frozen=True)
class PropertyReport:
    """
    Every property flag of one instance. Flags listed in ``FINITE_FORCED``
    hold on every finite instance; the others discriminate between instances.
    """

    FINITE_FORCED = frozenset(
        {
            "p_topoframe",
            "regular",
            "aleph0_kasch",
            "aleph0_selfinjective",
            "baer",
            "pp",
            "cs",
            "complete_regular",
            "continuous_regular",
        }
    )

    p_topoframe: PropertyCheck
    ed_frame: PropertyCheck
    ed_tau: PropertyCheck
    ed_topoframe: PropertyCheck
    completely_regular: PropertyCheck
    regular: PropertyCheck
    aleph0_kasch: PropertyCheck
    baer: PropertyCheck
    pp: PropertyCheck
    cs: PropertyCheck
    essential_in_idempotent: PropertyCheck
    aleph0_selfinjective: PropertyCheck
    selfinjective: PropertyCheck
    complete_idempotents: PropertyCheck
    orthogonal_idempotent_suprema: PropertyCheck
    continuous_regular: PropertyCheck
    complete_regular: PropertyCheck
    monomorphisms: PropertyCheck
    no_regular_ideal: PropertyCheck
    countable_ideal_containment: PropertyCheck
    idempotent_correspondence: PropertyCheck
    atom_isomorphism: PropertyCheck
    clopen_count: int = 0
    atom_count: int = 0

    def flags(self) -> dict[str, PropertyCheck]:
        return {
            item.name: getattr(self, item.name)
            for item in fields(self)
            if isinstance(getattr(self, item.name), PropertyCheck)
        }


def build_property_report(
    tf: Topoframe,
    *,
    seed: int = 0,
    function_limit: int = 256,
    assignments: int = 3,
    isomorphism_pairs: int = 200,
) -> PropertyReport:
    rng = random.Random(seed)
    algebra = tf.clopen_algebra
    functions = instance_functions(tf, function_limit, rng)
    logger.debug("Checking %d functions over %d clopens", len(functions), len(algebra))

    regular = check_regular(tf, functions)
    # Finite orthogonal families make both modes the same check.
    selfinjective = check_selfinjective(tf, "full", random.Random(seed), assignments, regular)
    aleph0_selfinjective = replace(
        selfinjective,
        detail=selfinjective.detail.replace("full:", "finite-as-aleph0:", 1),
    )
    complete_idempotents, continuous = check_continuity_completeness(tf)
    return PropertyReport(
        p_topoframe=is_p_topoframe(tf),
        ed_frame=is_ed_frame(tf.lattice),
        ed_tau=is_ed_frame(tf),
        ed_topoframe=is_ed_topoframe(tf),
        completely_regular=is_completely_regular(tf),
        regular=regular,
        aleph0_kasch=check_kasch(tf, functions),
        baer=check_baer(tf, functions, rng),
        pp=check_pp(tf, functions),
        cs=check_cs(tf),
        essential_in_idempotent=check_essential_in_idempotent(tf),
        aleph0_selfinjective=aleph0_selfinjective,
        selfinjective=selfinjective,
        complete_idempotents=complete_idempotents,
        orthogonal_idempotent_suprema=check_orthogonal_idempotent_suprema(tf),
        continuous_regular=PropertyCheck(
            bool(regular and continuous), evidence=continuous.evidence
        ),
        complete_regular=PropertyCheck(
            bool(regular and complete_idempotents), evidence=complete_idempotents.evidence
        ),
        monomorphisms=check_monomorphisms(tf, functions),
        no_regular_ideal=check_no_regular_ideal(tf, functions),
        countable_ideal_containment=check_countable_ideal_containment(tf, functions, rng),
        idempotent_correspondence=check_idempotent_correspondence(tf),
        atom_isomorphism=check_atom_isomorphism(tf, rng, isomorphism_pairs),
        clopen_count=len(algebra),
        atom_count=len(algebra.atoms),
    )


@dataclass(frozen=True)
class TheoremVerdict:
    theorem: str
    status: str
    hypotheses: dict[str, bool] = field(default_factory=dict)
    claims: dict[str, bool] = field(default_factory=dict)
    note: str = ""


@dataclass(frozen=True)
class TheoremReport:
    verdicts: tuple[TheoremVerdict, ...]

    @property
    def failures(self) -> tuple[TheoremVerdict, ...]:
        return tuple(verdict for verdict in self.verdicts if verdict.status == FAIL)

    def verdict(self, theorem: str) -> TheoremVerdict:
        for verdict in self.verdicts:
            if verdict.theorem == theorem:
                return verdict
        raise KeyError(theorem)

    def counts(self) -> dict[str, int]:
        counts = {PASS: 0, HYPOTHESIS_NOT_MET: 0, FAIL: 0}
        for verdict in self.verdicts:
            counts[verdict.status] += 1
        return counts


def _equivalent(*flags: bool) -> bool:
    return len(set(flags)) <= 1


def _verdict(
    theorem: str, hypotheses: dict[str, bool], claims: dict[str, bool], holds: bool, note: str = ""
) -> TheoremVerdict:
    if not all(hypotheses.values()):
        return TheoremVerdict(theorem, HYPOTHESIS_NOT_MET, hypotheses, claims, note)
    return TheoremVerdict(theorem, PASS if holds else FAIL, hypotheses, claims, note)


def verify_theorems(tf: Topoframe, report: PropertyReport | None = None) -> TheoremReport:
    """
    Evaluate every implication between independently computed flags. An
    implication is only asserted where its hypotheses hold.
    """
    if report is None:
        report = build_property_report(tf)
    flag = {name: bool(check) for name, check in report.flags().items()}
    cr = {"completely_regular": flag["completely_regular"]}

    converse = ""
    if flag["selfinjective"] and not flag["ed_frame"]:
        converse = "converse_exhibit: selfinjective while L is not extremally disconnected"

    verdicts = (
        _verdict(
            "p-topoframe-implies-aleph0-kasch",
            {"p_topoframe": flag["p_topoframe"]},
            {"aleph0_kasch": flag["aleph0_kasch"]},
            flag["aleph0_kasch"],
        ),
        _verdict(
            "p-topoframe-iff-regular",
            {},
            {"p_topoframe": flag["p_topoframe"], "regular": flag["regular"]},
            _equivalent(flag["p_topoframe"], flag["regular"]),
        ),
        _verdict(
            "p-topoframe-iff-aleph0-selfinjective",
            {},
            {
                "p_topoframe": flag["p_topoframe"],
                "aleph0_selfinjective": flag["aleph0_selfinjective"],
            },
            _equivalent(flag["p_topoframe"], flag["aleph0_selfinjective"]),
        ),
        _verdict(
            "regular-iff-aleph0-selfinjective",
            {},
            {"regular": flag["regular"], "aleph0_selfinjective": flag["aleph0_selfinjective"]},
            _equivalent(flag["regular"], flag["aleph0_selfinjective"]),
        ),
        _verdict(
            "ed-frame-and-p-implies-selfinjective",
            {"ed_frame": flag["ed_frame"], "p_topoframe": flag["p_topoframe"]},
            {"selfinjective": flag["selfinjective"]},
            flag["selfinjective"],
            converse,
        ),
        _verdict(
            "tau-ed-iff-topoframe-ed",
            {},
            {"ed_tau": flag["ed_tau"], "ed_topoframe": flag["ed_topoframe"]},
            _equivalent(flag["ed_tau"], flag["ed_topoframe"]),
        ),
        _verdict(
            "completely-regular-ed-baer-cs",
            cr,
            {
                "ed_topoframe": flag["ed_topoframe"],
                "baer": flag["baer"],
                "essential_in_idempotent": flag["essential_in_idempotent"],
                "cs": flag["cs"],
            },
            _equivalent(
                flag["ed_topoframe"], flag["baer"], flag["essential_in_idempotent"], flag["cs"]
            ),
        ),
        _verdict(
            "baer-iff-pp-and-complete-idempotents",
            {},
            {
                "baer": flag["baer"],
                "pp": flag["pp"],
                "complete_idempotents": flag["complete_idempotents"],
                "orthogonal_idempotent_suprema": flag["orthogonal_idempotent_suprema"],
            },
            _equivalent(
                flag["baer"],
                flag["pp"] and flag["complete_idempotents"],
                flag["pp"] and flag["orthogonal_idempotent_suprema"],
            ),
        ),
        _verdict(
            "completely-regular-five-way",
            cr,
            {
                "baer_regular": flag["baer"] and flag["regular"],
                "continuous_regular": flag["continuous_regular"],
                "complete_regular": flag["complete_regular"],
                "ed_p_topoframe": flag["ed_topoframe"] and flag["p_topoframe"],
                "selfinjective": flag["selfinjective"],
            },
            _equivalent(
                flag["baer"] and flag["regular"],
                flag["continuous_regular"],
                flag["complete_regular"],
                flag["ed_topoframe"] and flag["p_topoframe"],
                flag["selfinjective"],
            ),
        ),
    )
    theorem_report = TheoremReport(verdicts)
    for verdict in theorem_report.failures:
        logger.error("Theorem %s failed with claims %s", verdict.theorem, verdict.claims)
    return theorem_report
