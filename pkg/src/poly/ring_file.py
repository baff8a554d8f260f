"""
Ring files: a small line-oriented format for presented rings

    # comment
    field QQ            (or: field GF 101)
    vars x y z w
    weights 1 1 1 1     (optional)
    relations
    x^2*z
    y*w
    end
"""

from dataclasses import dataclass, field as dataclass_field
from pathlib import Path

from ..errors import ParseError
from ..utils.config import EngineConfig
from .fields import FieldSpec, parse_field
from .parser import parse_polynomial
from .ring import RingPresentation, build_ring, polynomial_ring, validate_variables


@dataclass(frozen=True)
class RingFile:
    """A parsed ring file with the source kept for error reporting"""

    presentation: RingPresentation
    source: str
    path: str | None = None
    relation_lines: tuple[int, ...] = dataclass_field(default=())


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_ring_file(text: str, *, path: str | None = None, config: EngineConfig | None = None) -> RingFile:
    """
    Parse ring file text.

    Raises:
        ParseError: with the 1-based line of the offending directive
    """
    field_spec: FieldSpec | None = None
    variables: list[str] | None = None
    weights: list[int] | None = None
    relation_texts: list[tuple[int, str]] = []
    in_relations = False
    closed = False

    for number, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        if in_relations:
            if line == "end":
                in_relations = False
                closed = True
            else:
                relation_texts.append((number, line))
            continue

        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        if keyword == "field":
            if field_spec is not None:
                raise ParseError("duplicate 'field' directive", line=number)
            try:
                field_spec = parse_field(rest)
            except ParseError as exc:
                raise ParseError(exc.message, line=number)
        elif keyword == "vars":
            if variables is not None:
                raise ParseError("duplicate 'vars' directive", line=number)
            variables = rest.split()
        elif keyword == "weights":
            try:
                weights = [int(w) for w in rest.split()]
            except ValueError:
                raise ParseError("weights must be positive integers", line=number)
        elif keyword == "relations":
            if closed:
                raise ParseError("duplicate 'relations' block", line=number)
            in_relations = True
        else:
            raise ParseError(f"unknown directive {keyword!r}", line=number)

    if in_relations:
        raise ParseError("'relations' block is missing its 'end'")
    if field_spec is None:
        raise ParseError("missing 'field' directive")
    if variables is None:
        raise ParseError("missing 'vars' directive")

    checked_weights = validate_variables(variables, weights)
    ring = polynomial_ring(field_spec, variables, checked_weights)
    relations = [parse_polynomial(body, ring, field_spec, line=number) for number, body in relation_texts]
    presentation = build_ring(field_spec, variables, checked_weights, relations, config=config)
    return RingFile(
        presentation=presentation,
        source=text,
        path=path,
        relation_lines=tuple(number for number, _ in relation_texts),
    )


def load_ring_file(path: str | Path, *, config: EngineConfig | None = None) -> RingFile:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read ring file {str(path)!r}: {exc.strerror}")
    return parse_ring_file(text, path=str(path), config=config)


def emit_ring_file(presentation: RingPresentation) -> str:
    """Ring file text that parses back to an equivalent presentation"""
    lines = [
        f"field {presentation.field}",
        "vars " + " ".join(presentation.variables),
    ]
    if any(w != 1 for w in presentation.weights):
        lines.append("weights " + " ".join(str(w) for w in presentation.weights))
    lines.append("relations")
    lines.extend(presentation.format(f) for f in presentation.relations)
    lines.append("end")
    return "\n".join(lines) + "\n"
