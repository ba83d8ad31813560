import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict
from dataclasses import dataclass
from dataclasses import field
from typing import Any
from typing import Callable
from typing import Iterable

import sentry_sdk
import shortuuid
from django.conf import settings

from .exceptions import LabError
from .realfun import StepFunction
from .realfun import absorb_laws
from .realfun import coz_of
from .realfun import evaluate
from .realfun import interval_continuity_check
from .realfun import is_unit
from .realfun import points
from .realfun import quasi_inverse
from .realfun import random_function
from .realfun import zero_of
from .ring_props import FAIL
from .ring_props import build_property_report
from .ring_props import verify_theorems
from .spec_io import ReportDocument
from .spec_io import TopoframeDocument
from .spec_io import enumerate_topoframes
from .spec_io import parse
from .spec_io import print_document

logger = logging.getLogger(__name__)


def instance_identifier(document_text: str) -> str:
    """A stable identifier derived from the canonical document text."""
    return shortuuid.uuid(name=document_text)


@dataclass(frozen=True)
class LabConfig:
    seed: int = 0
    function_limit: int = 256
    assignments: int = 3
    isomorphism_pairs: int = 200
    schema: int = 1

    @classmethod
    def from_settings(cls, **overrides: Any) -> "LabConfig":
        values = {
            "seed": settings.TFLAB_SEED,
            "function_limit": settings.TFLAB_FUNCTION_SAMPLE,
            "assignments": settings.TFLAB_SEPARATION_ASSIGNMENTS,
            "isomorphism_pairs": settings.TFLAB_ISOMORPHISM_PAIRS,
            "schema": settings.REPORT_SCHEMA_VERSION,
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)


def analyse_document(document: TopoframeDocument, config: LabConfig) -> ReportDocument:
    canonical = print_document(document)
    tf = document.topoframe
    properties = build_property_report(
        tf,
        seed=config.seed,
        function_limit=config.function_limit,
        assignments=config.assignments,
        isomorphism_pairs=config.isomorphism_pairs,
    )
    theorems = verify_theorems(tf, properties)
    return ReportDocument(instance_identifier(canonical), canonical, properties, theorems)


def _analyse_text(arguments: tuple[str, dict[str, Any]]) -> dict[str, Any]:
    # Runs in worker processes, which parse their own copy of the document.
    text, config = arguments
    lab_config = LabConfig(**config)
    return analyse_document(parse(text), lab_config).as_dict(lab_config.schema)


def verify_instances(
    documents: Iterable[str], config: LabConfig, workers: int = 1
) -> list[dict[str, Any]]:
    """
    Analyse every document and return JSON-ready reports ordered by
    instance identifier.
    """
    jobs = [(text, asdict(config)) for text in documents]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(_analyse_text, jobs, chunksize=8))
    else:
        results = [_analyse_text(job) for job in jobs]
    results.sort(key=lambda result: result["instance"])

    failures = 0
    for result in results:
        for verdict in result.get("theorems", []):
            if verdict["status"] == FAIL:
                failures += 1
                logger.error(
                    "Theorem %s failed on instance %s", verdict["theorem"], result["instance"]
                )
                sentry_sdk.capture_message(
                    f"Theorem {verdict['theorem']} failed on instance {result['instance']}",
                    level="error",
                )
    logger.info("Verified %d instances with %d failures", len(results), failures)
    return results


def enumerated_documents(points: int, up_to_isomorphism: bool = False) -> list[str]:
    return [
        print_document(TopoframeDocument(tf, {}))
        for tf in enumerate_topoframes(
            points,
            bound=settings.TFLAB_MAX_POINTS,
            subframe_cap=settings.TFLAB_SUBFRAME_CAP,
            up_to_isomorphism=up_to_isomorphism,
        )
    ]


def random_document(rng: random.Random, max_points: int = 3, functions: int = 2) -> str:
    """A random topology with random named functions, as canonical text."""
    size = rng.randint(0, max_points)
    topoframes = list(enumerate_topoframes(size, bound=max_points))
    tf = rng.choice(topoframes)
    named = {f"f{position}": random_function(tf, rng) for position in range(functions)}
    return print_document(TopoframeDocument(tf, named))


Law = Callable[[StepFunction, StepFunction], bool]


def _ring_laws() -> dict[str, Law]:
    def zero_sum_law(f: StepFunction, g: StepFunction) -> bool:
        lower = zero_of(f) & zero_of(g)
        if f.is_nonnegative() and g.is_nonnegative():
            return zero_of(f + g) == lower
        return lower <= zero_of(f + g)

    def pointwise_product_law(f: StepFunction, g: StepFunction) -> bool:
        lattice = f.topoframe.lattice
        a = coz_of(g)
        f_a = g * quasi_inverse(g)
        for subset in (points(0), points(*g.values), ~points(0), points(0, *f.values)):
            expected = (
                lattice.complement_of(a) | evaluate(f, subset)
                if 0 in subset
                else a & evaluate(f, subset)
            )
            if evaluate(f * f_a, subset) != expected:
                return False
        return True

    return {
        "addition is commutative": lambda f, g: f + g == g + f,
        "multiplication is commutative": lambda f, g: f * g == g * f,
        "addition is associative": lambda f, g: (f + g) + f == f + (g + f),
        "multiplication is associative": lambda f, g: (f * g) * f == f * (g * f),
        "multiplication distributes": lambda f, g: f * (g + f) == f * g + f * f,
        "zero and one are neutral": lambda f, g: f + 0 == f and f * 1 == f,
        "ring is reduced": lambda f, g: not (f * f).is_zero or f.is_zero,
        "z(f) = z(-f) = z(|f|) = z(f^n)": lambda f, g: zero_of(f)
        == zero_of(-f)
        == zero_of(abs(f))
        == zero_of(f**2)
        == zero_of(f**3),
        "z(fg) = z(f) v z(g)": lambda f, g: zero_of(f * g) == zero_of(f) | zero_of(g),
        "z(f+g) bounds": zero_sum_law,
        "z(f) = top iff f = 0": lambda f, g: (zero_of(f) == f.topoframe.lattice.top)
        == f.is_zero,
        "z(f) = bottom iff f is a unit": lambda f, g: (
            zero_of(f) == f.topoframe.lattice.bottom
        )
        == bool(is_unit(f)),
        "z(f) is the complement of coz(f)": lambda f, g: zero_of(f)
        == f.topoframe.lattice.complement_of(coz_of(f)),
        "(f v g) + (f ^ g) = f + g": lambda f, g: f.maximum(g) + f.minimum(g) == f + g,
        "f = g quasi-inverse f^2": lambda f, g: quasi_inverse(f) * f * f == f,
        "absorb laws": lambda f, g: absorb_laws([f, g]).holds,
        "multiplying by an idempotent": pointwise_product_law,
        "interval continuity": lambda f, g: bool(interval_continuity_check(f)),
    }


@dataclass
class FuzzResult:
    seed: int
    checked: int = 0
    failures: list[tuple[str, str, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def run_fuzz(document: TopoframeDocument, seed: int, count: int) -> FuzzResult:
    """
    Check the ring and zero-map laws on ``count`` random pairs drawn from
    random functions and the document's named functions.
    """
    rng = random.Random(seed)
    tf = document.topoframe
    named = list(document.functions.values())
    laws = _ring_laws()
    result = FuzzResult(seed)
    for _ in range(count):
        f = rng.choice(named) if named and rng.random() < 0.25 else random_function(tf, rng)
        g = random_function(tf, rng)
        for name, law in laws.items():
            try:
                holds = law(f, g)
            except LabError as error:
                logger.error("Law %r raised %s for f=%s, g=%s", name, error, f, g)
                holds = False
            if not holds:
                result.failures.append((name, str(f), str(g)))
        result.checked += 1
    if result.failures:
        logger.error("Fuzzing found %d law failures", len(result.failures))
        sentry_sdk.capture_message(
            f"Fuzzing found {len(result.failures)} law failures", level="error"
        )
    return result
