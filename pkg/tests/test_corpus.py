"""Tests for the seeded random corpus."""

import numpy as np
import pytest
from pydantic import ValidationError

from src.structs import CorpusSpec, Domain
from src.workflows import random_sequences, random_step_functions


class TestStepCorpus:
    """Random step functions."""

    def test_deterministic(self):
        """The same seed gives the same corpus."""
        spec = CorpusSpec(count=5, seed=11)
        assert random_step_functions(spec) == random_step_functions(spec)
        assert random_step_functions(spec) != random_step_functions(spec.model_copy(update={"seed": 12}))

    def test_shape(self):
        """Pieces and values stay in the configured ranges."""
        spec = CorpusSpec(count=10, min_pieces=2, max_pieces=8, value_low=0.1, value_high=10.0)
        for f in random_step_functions(spec):
            assert 2 <= f.n_cells <= 8
            assert np.all((f.v >= 0.1) & (f.v <= 10.0))
            assert f.x[0] == 0.0 and f.end == pytest.approx(1.0)

    def test_support(self):
        """Supported corpora vanish outside their interval."""
        spec = CorpusSpec(count=6, support=(0.5, 1.0))
        for f in random_step_functions(spec):
            assert f.support_start() >= 0.5
            assert float(f(0.25)) == 0.0

    def test_nonincreasing(self):
        """The monotone corpus is non-increasing."""
        spec = CorpusSpec(count=6, nonincreasing=True)
        assert all(f.is_nonincreasing() for f in random_step_functions(spec))

    def test_halfline(self):
        """Half-line corpora span [0, T]."""
        spec = CorpusSpec(count=4, domain=Domain.halfline(16.0), support=(0.0, 4.0))
        for f in random_step_functions(spec):
            assert not f.domain.is_unit
            assert f.end == pytest.approx(4.0)

    def test_invalid(self):
        """Inconsistent ranges are rejected."""
        with pytest.raises(ValidationError):
            CorpusSpec(min_pieces=5, max_pieces=2)
        with pytest.raises(ValidationError):
            CorpusSpec(support=(0.5, 2.0))


class TestSequenceCorpus:
    """Random finitely supported sequences."""

    def test_deterministic(self):
        """Sequences are reproducible per seed."""
        spec = CorpusSpec(count=4, max_pieces=10)
        seqs = random_sequences(spec)
        assert seqs == random_sequences(spec)
        assert all(1 <= x.N <= 10 for x in seqs)
        assert all(x.total() > 0 for x in seqs)
