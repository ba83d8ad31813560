"""
Topoframe documents, set descriptors, instance enumeration and report
rendering.

A document declares a lattice, its open elements and named functions::

    # two discrete points
    space powerset 2
    tau {} {1} {2} {1,2}
    fn f = 2@{1} ; 0@{2}

The lattice line is one of ``space powerset N``, ``poset K`` followed by
``cover i j`` lines (the downset lattice of the poset), or ``order K``
followed by ``le i j`` lines (the elements ``1..K`` ordered by the
reflexive-transitive closure of the pairs). ``#`` starts a comment.
"""

from __future__ import annotations

import json
import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from itertools import permutations
from pathlib import Path
from typing import Any
from typing import Iterator
from typing import NamedTuple
from typing import Sequence

from .exceptions import BoundExceeded
from .exceptions import DocumentSyntaxError
from .exceptions import DocumentValidationError
from .exceptions import LabError
from .exceptions import ValidationError
from .lattice_core import Element
from .lattice_core import Lattice
from .lattice_core import Poset
from .lattice_core import birkhoff
from .lattice_core import build_from_order
from .realfun import EMPTY
from .realfun import REALS
from .realfun import Interval
from .realfun import RealSet
from .realfun import SetDescriptor
from .realfun import StepFunction
from .ring_props import IdealHandle
from .ring_props import PropertyReport
from .ring_props import TheoremReport
from .topoframe import PropertyCheck
from .topoframe import Topoframe
from .topoframe import validate_topoframe

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r"\S+")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

# Points accepted on a ``space powerset N`` or ``poset K`` line; an
# ``order K`` line may name up to ``1 << DOCUMENT_POINTS`` elements.
DOCUMENT_POINTS = 8


class TopoframeDocument(NamedTuple):
    topoframe: Topoframe
    functions: dict[str, StepFunction]


def _tokens(line: str) -> list[tuple[str, int]]:
    return [(match.group(), match.start() + 1) for match in _TOKEN.finditer(line)]


def _integer(token: str, line: int, column: int) -> int:
    if not token.isdigit():
        raise DocumentSyntaxError(f"expected a non-negative integer, got {token!r}", line, column)
    return int(token)


def _rational(token: str, line: int, column: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise DocumentSyntaxError(f"expected a rational, got {token!r}", line, column) from None


def _element(lattice: Lattice, token: str, line: int, column: int) -> Element:
    try:
        return lattice.element(token)
    except KeyError:
        raise DocumentValidationError(f"unknown element {token}", line, column) from None


def _build_lattice(kind: str, size: int, pairs: list[tuple[int, int]]) -> Lattice:
    if kind == "powerset":
        return Lattice.powerset(size)
    if kind == "poset":
        return birkhoff(Poset(size, frozenset(pairs)))
    nodes = list(range(1, size + 1))
    below = {node: {node} for node in nodes}
    for lower, upper in pairs:
        if not (1 <= lower <= size and 1 <= upper <= size):
            raise ValidationError(f"order pair ({lower}, {upper}) is out of range")
        below[upper].add(lower)
    changed = True
    while changed:
        changed = False
        for node in nodes:
            closure = set().union(*(below[lower] for lower in below[node]))
            if closure != below[node]:
                below[node] = closure
                changed = True
    return build_from_order(
        nodes,
        [(lower, upper) for upper in nodes for lower in sorted(below[upper])],
        origin=("order", size, tuple(pairs)),
    )


def parse_function_literal(
    tf: Topoframe, body: str, line: int = 1, offset: int = 0
) -> StepFunction:
    """Parse ``v1@ELEM ; v2@ELEM ; ...``; columns are shifted by ``offset``."""
    pieces = []
    for match in re.finditer(r"[^;]+", body):
        text = match.group().strip()
        if not text:
            continue
        column = offset + match.start() + (len(match.group()) - len(match.group().lstrip())) + 1
        value, at, carrier = text.partition("@")
        if not at or not carrier:
            raise DocumentSyntaxError(f"expected VALUE@ELEMENT, got {text!r}", line, column)
        pieces.append(
            (
                _rational(value, line, column),
                _element(tf.lattice, carrier, line, column + len(value) + 1),
            )
        )
    return StepFunction(tf, pieces)


def _check_size(kind: str, size: int, max_points: int) -> int:
    bound = 1 << max_points if kind == "order" else max_points
    if size > bound:
        raise BoundExceeded(size, bound)
    return size


def parse(document_text: str, max_points: int = DOCUMENT_POINTS) -> TopoframeDocument:
    """
    Parse and validate a document.

    Raises DocumentSyntaxError for malformed text, DocumentValidationError
    (chaining the library error) for a well-formed but invalid object and
    BoundExceeded for a lattice line above ``max_points``.
    """
    header: tuple[str, int, int, int] | None = None
    pairs: list[tuple[int, int]] = []
    lattice: Lattice | None = None
    tf: Topoframe | None = None
    functions: dict[str, StepFunction] = {}
    line_number = 0

    def ensure_lattice() -> Lattice:
        nonlocal lattice
        if lattice is None:
            assert header is not None
            kind, size, header_line, header_column = header
            try:
                lattice = _build_lattice(kind, size, pairs)
            except ValidationError as error:
                raise DocumentValidationError(str(error), header_line, header_column) from error
        return lattice

    for line_number, raw in enumerate(document_text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        tokens = _tokens(content)
        if not tokens:
            continue
        keyword, column = tokens[0]

        if header is None:
            if keyword == "space" and len(tokens) == 3 and tokens[1][0] == "powerset":
                kind, size_token = "powerset", tokens[2]
            elif keyword in ("poset", "order") and len(tokens) == 2:
                kind, size_token = keyword, tokens[1]
            else:
                raise DocumentSyntaxError(
                    "expected 'space powerset N', 'poset K' or 'order K'", line_number, column
                )
            size = _integer(size_token[0], line_number, size_token[1])
            header = (kind, _check_size(kind, size, max_points), line_number, column)
            continue

        if keyword in ("cover", "le"):
            expected = "cover" if header[0] == "poset" else "le"
            if keyword != expected or lattice is not None:
                raise DocumentSyntaxError(f"unexpected {keyword!r} line", line_number, column)
            if len(tokens) != 3:
                raise DocumentSyntaxError(f"expected '{keyword} i j'", line_number, column)
            pairs.append(
                (
                    _integer(tokens[1][0], line_number, tokens[1][1]),
                    _integer(tokens[2][0], line_number, tokens[2][1]),
                )
            )
            continue

        if keyword == "tau":
            if tf is not None:
                raise DocumentSyntaxError("duplicate tau line", line_number, column)
            current = ensure_lattice()
            opens = [_element(current, token, line_number, col) for token, col in tokens[1:]]
            try:
                tf = validate_topoframe(current, opens)
            except ValidationError as error:
                raise DocumentValidationError(str(error), line_number, column) from error
            continue

        if keyword == "fn":
            if tf is None:
                raise DocumentSyntaxError("function before the tau line", line_number, column)
            name_and_body = content[column + 1 :]
            name, equals, body = name_and_body.partition("=")
            name = name.strip()
            if not equals or not _NAME.match(name):
                raise DocumentSyntaxError("expected 'fn NAME = ...'", line_number, column)
            if name in functions:
                raise DocumentSyntaxError(f"duplicate function {name}", line_number, column)
            offset = column + 1 + len(name_and_body) - len(body)
            try:
                functions[name] = parse_function_literal(tf, body, line_number, offset)
            except ValidationError as error:
                if isinstance(error, DocumentValidationError):
                    raise
                raise DocumentValidationError(str(error), line_number, column) from error
            continue

        raise DocumentSyntaxError(f"unknown keyword {keyword!r}", line_number, column)

    if header is None:
        raise DocumentSyntaxError("empty document", line_number + 1, 1)
    if tf is None:
        ensure_lattice()
        raise DocumentSyntaxError("missing tau line", line_number + 1, 1)
    return TopoframeDocument(tf, functions)


def read_document(path: str | Path, max_points: int = DOCUMENT_POINTS) -> TopoframeDocument:
    data = Path(path).read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as error:
        prefix = data[: error.start]
        line = prefix.count(b"\n") + 1
        column = error.start - (prefix.rfind(b"\n") + 1) + 1
        raise DocumentSyntaxError(
            f"invalid UTF-8 byte 0x{data[error.start]:02x}", line, column
        ) from error
    return parse(text, max_points)


def print_document(document: TopoframeDocument) -> str:
    """The canonical text of a document; parsing it gives back the same objects."""
    tf, functions = document
    origin = tf.lattice.origin
    if origin is None:
        raise ValueError("Only lattices declared by a document can be printed.")
    kind, size, pairs = origin
    lines = []
    if kind == "powerset":
        lines.append(f"space powerset {size}")
    else:
        lines.append(f"{kind} {size}")
        keyword = "cover" if kind == "poset" else "le"
        lines.extend(f"{keyword} {lower} {upper}" for lower, upper in pairs)
    lines.append(" ".join(["tau", *(open_.label for open_ in tf.opens)]))
    lines.extend(f"fn {name} = {f}" for name, f in functions.items())
    return "\n".join(lines) + "\n"


_SET_TOKEN = re.compile(
    r"""
    (?P<space>\s+)
  | (?P<interval>
        (?P<open>[(\[])\s*(?P<lower>-inf|[-+]?\d+(?:/\d+)?)\s*,
        \s*(?P<upper>\+?inf|[-+]?\d+(?:/\d+)?)\s*(?P<close>[)\]])
    )
  | (?P<points>\{[^{}]*\})
  | (?P<reals>R)
  | (?P<operator>[~&|])
  | (?P<lparen>\()
  | (?P<rparen>\))
    """,
    re.VERBOSE,
)


def _tokenize_set(text: str) -> list[tuple[str, re.Match[str]]]:
    tokens = []
    position = 0
    while position < len(text):
        match = _SET_TOKEN.match(text, position)
        if match is None:
            raise DocumentSyntaxError(f"unexpected {text[position]!r}", 1, position + 1)
        if match.lastgroup != "space":
            kind = match.lastgroup
            if match.group("interval") is not None:
                kind = "interval"
            assert kind is not None
            tokens.append((kind, match))
        position = match.end()
    return tokens


def parse_set_descriptor(text: str) -> RealSet:
    """
    Parse ``R``, point sets ``{0,1/2}``, intervals ``(p,q)``, ``[p,q]``,
    ``(p,q]``, ``[p,q)`` with ``-inf``/``inf``, complement ``~``,
    intersection ``&`` and union ``|`` (binding in that order), and
    parentheses for grouping.
    """
    tokens = _tokenize_set(text)
    position = 0

    def peek() -> tuple[str, re.Match[str]] | None:
        return tokens[position] if position < len(tokens) else None

    def fail(message: str) -> DocumentSyntaxError:
        token = peek()
        column = token[1].start() + 1 if token else len(text) + 1
        return DocumentSyntaxError(message, 1, column)

    def is_operator(symbol: str) -> bool:
        token = peek()
        return token is not None and token[0] == "operator" and token[1].group() == symbol

    def union() -> RealSet:
        nonlocal position
        result = intersection()
        while is_operator("|"):
            position += 1
            result = result | intersection()
        return result

    def intersection() -> RealSet:
        nonlocal position
        result = unary()
        while is_operator("&"):
            position += 1
            result = result & unary()
        return result

    def unary() -> RealSet:
        nonlocal position
        if is_operator("~"):
            position += 1
            return ~unary()
        return atom()

    def atom() -> RealSet:
        nonlocal position
        token = peek()
        if token is None:
            raise fail("unexpected end of set descriptor")
        kind, match = token
        position += 1
        if kind == "reals":
            return REALS
        if kind == "points":
            inner = match.group()[1:-1].strip()
            if not inner:
                return EMPTY
            values = []
            for item in inner.split(","):
                try:
                    values.append(Fraction(item.strip()))
                except (ValueError, ZeroDivisionError):
                    raise DocumentSyntaxError(
                        f"bad point {item.strip()!r}", 1, match.start() + 1
                    ) from None
            return SetDescriptor(points=frozenset(values))
        if kind == "interval":
            lower = match.group("lower")
            upper = match.group("upper")
            return SetDescriptor(
                (
                    Interval(
                        None if lower == "-inf" else Fraction(lower),
                        None if upper.lstrip("+") == "inf" else Fraction(upper),
                        match.group("open") == "[" and lower != "-inf",
                        match.group("close") == "]" and upper.lstrip("+") != "inf",
                    ),
                )
            )
        if kind == "lparen":
            inner = union()
            if peek() is None or peek()[0] != "rparen":  # type: ignore[index]
                raise fail("expected ')'")
            position += 1
            return inner
        position -= 1
        raise fail(f"unexpected {match.group()!r}")

    result = union()
    if peek() is not None:
        raise fail("trailing input")
    return result


def _linear_extension(elements: Sequence[Element]) -> list[Element]:
    return sorted(elements, key=lambda e: (sum(1 for other in elements if other <= e), e.index))


def _subframes(lattice: Lattice, candidates: Sequence[Element]) -> Iterator[list[Element]]:
    """
    Subsets of ``candidates`` closed, together with ⊥ and ⊤, under binary
    meet and join. Candidates come in a linear extension, so the meet of a new
    candidate with a chosen one is already decided and the join is still ahead.
    """
    bottom, top = lattice.bottom, lattice.top

    def extend(
        position: int, chosen: list[Element], required: frozenset[Element]
    ) -> Iterator[list[Element]]:
        if position == len(candidates):
            yield chosen
            return
        candidate = candidates[position]
        if candidate not in required:
            yield from extend(position + 1, chosen, required)
        needed = set(required)
        for other in chosen:
            meet = candidate & other
            if meet != bottom and meet not in chosen:
                return
            join = candidate | other
            if join != top and join != candidate:
                needed.add(join)
        needed.discard(candidate)
        if any(element not in candidates[position + 1 :] for element in needed):
            return
        yield from extend(position + 1, [*chosen, candidate], frozenset(needed))

    yield from extend(0, [], frozenset())


def _canonical_masks(masks: Sequence[int], points: int) -> tuple[int, ...]:
    best: tuple[int, ...] | None = None
    for permutation in permutations(range(points)):
        image = tuple(
            sorted(
                sum(1 << permutation[bit] for bit in range(points) if mask >> bit & 1)
                for mask in masks
            )
        )
        if best is None or image < best:
            best = image
    assert best is not None
    return best


def enumerate_topoframes(
    points: int | None = None,
    *,
    lattice: Lattice | None = None,
    bound: int = 4,
    subframe_cap: int = 16,
    up_to_isomorphism: bool = False,
) -> Iterator[Topoframe]:
    """
    All topologies on ``points`` labelled points, or all subframes of
    complemented elements of ``lattice``.

    Raises BoundExceeded above ``bound`` points or ``subframe_cap``
    complemented elements.
    """
    if lattice is None:
        if points is None:
            raise ValueError("Pass a number of points or a lattice.")
        if points > bound:
            raise BoundExceeded(points, bound)
        lattice = Lattice.powerset(points)
    elif up_to_isomorphism:
        raise ValueError("Isomorphism reduction needs a powerset carrier.")
    complemented = lattice.complemented_elements()
    if len(complemented) > subframe_cap:
        raise BoundExceeded(len(complemented), subframe_cap)
    candidates = _linear_extension(
        [element for element in complemented if element not in (lattice.bottom, lattice.top)]
    )
    seen: set[tuple[int, ...]] = set()
    count = 0
    for chosen in _subframes(lattice, candidates):
        tau = {lattice.bottom, lattice.top, *chosen}
        if up_to_isomorphism:
            assert lattice.masks is not None and points is not None
            key = _canonical_masks([lattice.masks[e.index] for e in tau], points)
            if key in seen:
                continue
            seen.add(key)
        count += 1
        yield validate_topoframe(lattice, tau)
    logger.info("Enumerated %d topoframes", count)


def brute_force_topologies(points: int) -> list[frozenset[int]]:
    """
    Every family of subsets of ``{1..points}`` (as bitmasks) that contains
    the empty and the full set and is closed under pairwise union and
    intersection, found by filtering all families.
    """
    full = (1 << points) - 1
    middle = [mask for mask in range(1, full)]
    topologies = []
    for selection in range(1 << len(middle)):
        family = {0, full} | {mask for bit, mask in enumerate(middle) if selection >> bit & 1}
        if all(a | b in family and a & b in family for a, b in combinations(family, 2)):
            topologies.append(frozenset(family))
    return topologies


def render_witness(value: Any) -> Any:
    """A JSON-ready rendering in document syntax."""
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (Element, StepFunction, IdealHandle, Topoframe)):
        return str(value)
    if isinstance(value, PropertyCheck):
        return {"holds": value.holds, "witness": render_witness(value.witness)}
    if isinstance(value, dict):
        return {str(key): render_witness(item) for key, item in value.items()}
    if isinstance(value, (list, tuple, frozenset, set)):
        return [render_witness(item) for item in value]
    return str(value)


@dataclass(frozen=True)
class ReportDocument:
    instance: str
    document: str
    properties: PropertyReport
    theorems: TheoremReport | None = None

    def as_dict(self, schema: int = 1) -> dict[str, Any]:
        properties = {
            name: {
                "holds": check.holds,
                "witness": render_witness(check.witness),
                "detail": check.detail,
                "finite_forced": name in PropertyReport.FINITE_FORCED,
            }
            for name, check in self.properties.flags().items()
        }
        result: dict[str, Any] = {
            "schema": schema,
            "instance": self.instance,
            "document": self.document,
            "clopen_count": self.properties.clopen_count,
            "atom_count": self.properties.atom_count,
            "properties": properties,
        }
        if self.theorems is not None:
            result["theorems"] = [
                {
                    "theorem": verdict.theorem,
                    "status": verdict.status,
                    "hypotheses": verdict.hypotheses,
                    "claims": verdict.claims,
                    "note": verdict.note,
                }
                for verdict in self.theorems.verdicts
            ]
        return result


def dump_json(payload: Any) -> str:
    """Byte-stable JSON: sorted keys, fixed indentation."""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)


def render_report_json(
    documents: Sequence[ReportDocument] | ReportDocument, schema: int = 1
) -> str:
    if isinstance(documents, ReportDocument):
        return dump_json(documents.as_dict(schema))
    return dump_json({"schema": schema, "instances": [doc.as_dict(schema) for doc in documents]})


def render_report_text(document: ReportDocument) -> str:
    lines = [f"instance {document.instance}"]
    for name, check in document.properties.flags().items():
        line = f"  {name}: {'true' if check.holds else 'false'}"
        if check.witness is not None and not check.holds:
            line += f" witness {json.dumps(render_witness(check.witness), ensure_ascii=False)}"
        if check.detail:
            line += f" ({check.detail})"
        if name in PropertyReport.FINITE_FORCED:
            line += " [forced at finite scale]"
        lines.append(line)
    if document.theorems is not None:
        for verdict in document.theorems.verdicts:
            line = f"  {verdict.theorem}: {verdict.status}"
            if verdict.note:
                line += f" ({verdict.note})"
            lines.append(line)
    return "\n".join(lines)


def describe_error(error: LabError) -> str:
    return f"{type(error).__name__}: {error}"
