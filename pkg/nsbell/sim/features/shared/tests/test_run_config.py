from pathlib import Path

import pytest
from pydantic import ValidationError

from nsbell.nsbell_config import settings
from nsbell.sim.features.shared.run_config import RunConfig


class TestRunConfig:
    def test_defaults(self):
        config = RunConfig(out=Path("x.csv"))

        assert config.seed == settings.default_seed
        assert config.workers == 1

    @pytest.mark.parametrize("seed", [-1, 2**64])
    def test_seed_range(self, seed):
        with pytest.raises(ValidationError, match="64-bit"):
            RunConfig(out=Path("x.csv"), seed=seed)

    def test_largest_seed_accepted(self):
        assert RunConfig(out=Path("x.csv"), seed=2**64 - 1).seed == 2**64 - 1

    def test_workers_positive(self):
        with pytest.raises(ValidationError, match="workers"):
            RunConfig(out=Path("x.csv"), workers=0)

    def test_echo_is_json_ready(self):
        echoed = RunConfig(out=Path("dir/x.csv"), seed=3).echo()

        assert echoed == {"seed": 3, "workers": 1, "out": "dir/x.csv"}
