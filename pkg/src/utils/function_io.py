"""Plain-text step-function files.

Format::

    # comments and blank lines are ignored
    domain unit            (or: domain halfline T)
    0
    x_1 v_1
    ...
    x_n v_n

The first data line is x_0 = 0; every following line holds a breakpoint and
the value on the piece that ends there.
"""

from pathlib import Path

from src.core.errors import DomainError
from src.settings import CSV_SIGNIFICANT_DIGITS, custom_logger
from src.structs import Domain, StepFunction

# Create logger
logger = custom_logger("Function Files")


def _number(token: str, lineno: int) -> float:
    try:
        return float(token)
    except ValueError as e:
        raise DomainError(f"line {lineno}: not a number: {token!r}") from e


def parse_function_spec(text: str) -> StepFunction:
    """Parse the text form of a step function.

    Raises:
        DomainError: If the header, a number or the mesh is malformed.
    """
    domain: Domain | None = None
    breaks: list[float] = []
    vals: list[float] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if domain is None:
            if tokens[0] != "domain" or len(tokens) < 2:
                raise DomainError(f"line {lineno}: expected 'domain unit' or 'domain halfline T'")
            if tokens[1] == "unit" and len(tokens) == 2:
                domain = Domain.unit()
            elif tokens[1] == "halfline" and len(tokens) == 3:
                domain = Domain.halfline(_number(tokens[2], lineno))
            else:
                raise DomainError(f"line {lineno}: unknown domain {' '.join(tokens[1:])!r}")
            continue
        if not breaks:
            if len(tokens) != 1:
                raise DomainError(f"line {lineno}: the first data line is the single breakpoint x_0")
            breaks.append(_number(tokens[0], lineno))
            continue
        if len(tokens) != 2:
            raise DomainError(f"line {lineno}: expected 'x_i v_i'")
        breaks.append(_number(tokens[0], lineno))
        vals.append(_number(tokens[1], lineno))

    if domain is None or not vals:
        raise DomainError("function file needs a domain header and at least one piece")
    try:
        return StepFunction.from_arrays(breaks, vals, domain)
    except ValueError as e:
        raise DomainError(str(e)) from e


def read_function_spec(path: str | Path) -> StepFunction:
    """Read a step function from a file."""
    logger.debug(f"reading function spec from {path}")
    return parse_function_spec(Path(path).read_text(encoding="utf-8"))


def format_function_spec(f: StepFunction) -> str:
    """Text form with 17 significant digits, so that parsing it back is exact."""
    fmt = f"%.{CSV_SIGNIFICANT_DIGITS}g"
    header = "domain unit" if f.domain.is_unit else f"domain halfline {fmt % f.domain.T}"
    lines = [header, fmt % f.breaks[0]]
    lines += [f"{fmt % x} {fmt % v}" for x, v in zip(f.breaks[1:], f.vals)]
    return "\n".join(lines) + "\n"


def write_function_spec(f: StepFunction, path: str | Path) -> Path:
    """Write f to path, creating parent directories."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_function_spec(f), encoding="utf-8")
    logger.debug(f"wrote function spec with {f.n_cells} cells to {path}")
    return path
