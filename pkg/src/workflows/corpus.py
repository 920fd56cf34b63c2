"""Seeded random step functions and sequences for the verification suites."""

import numpy as np

from src.settings import custom_logger
from src.structs import CorpusSpec, Seq, StepFunction, merge_meshes

# Create logger
logger = custom_logger("Corpus Generator")


def _log_uniform(rng: np.random.Generator, spec: CorpusSpec, n: int) -> np.ndarray:
    return np.exp(rng.uniform(np.log(spec.value_low), np.log(spec.value_high), n))


def _breakpoints(rng: np.random.Generator, n: int, dyadic: bool) -> np.ndarray:
    """n + 1 breakpoints on [0, 1]: a random subset of a dyadic grid, or uniform draws."""
    if dyadic:
        level = int(np.ceil(np.log2(n + 1))) + 2
        grid = np.arange(1, 2**level) / 2**level
        inner = np.sort(rng.choice(grid, size=n - 1, replace=False))
    else:
        inner = np.sort(rng.uniform(0.0, 1.0, n - 1))
    return merge_meshes([0.0], inner, [1.0])


def random_step_function(rng: np.random.Generator, spec: CorpusSpec, index: int) -> StepFunction:
    """One corpus member; even indices use dyadic breakpoints, odd ones uniform draws."""
    n = int(rng.integers(spec.min_pieces, spec.max_pieces + 1))
    unit_mesh = _breakpoints(rng, n, dyadic=index % 2 == 0)
    vals = _log_uniform(rng, spec, unit_mesh.size - 1)
    if spec.nonincreasing:
        vals = np.sort(vals)[::-1]

    a, b = spec.support or (0.0, spec.domain.T)
    mesh = a + (b - a) * unit_mesh
    mesh[-1] = b
    if a > 0:
        mesh = np.concatenate(([0.0], mesh))
        vals = np.concatenate(([0.0], vals))
    if spec.domain.is_unit and b < 1.0:
        mesh = np.append(mesh, 1.0)
        vals = np.append(vals, 0.0)
    return StepFunction.from_arrays(mesh, vals, spec.domain)


def random_step_functions(spec: CorpusSpec) -> list[StepFunction]:
    """The deterministic corpus of spec.count step functions for spec.seed."""
    rng = np.random.default_rng(spec.seed)
    corpus = [random_step_function(rng, spec, i) for i in range(spec.count)]
    logger.debug(f"generated {len(corpus)} step functions (seed {spec.seed}, {spec.domain.label()})")
    return corpus


def random_sequences(spec: CorpusSpec) -> list[Seq]:
    """Finitely supported sequences with min_pieces..max_pieces log-uniform entries."""
    rng = np.random.default_rng(spec.seed)
    corpus = []
    for _ in range(spec.count):
        n = int(rng.integers(spec.min_pieces, spec.max_pieces + 1))
        vals = _log_uniform(rng, spec, n)
        if spec.nonincreasing:
            vals = np.sort(vals)[::-1]
        corpus.append(Seq(vals=tuple(vals)))
    return corpus
