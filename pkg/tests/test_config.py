"""
运行配置、参数校验与采样器
"""

import pytest

from src.config import DEFAULT_SAMPLES, DEFAULT_SEED, ReportFormat, Suite
from src.core.config import RunConfig, SamplingConfig
from src.core.exceptions import ConfigurationError
from src.utils.sampling import RationalSampler
from src.verification.runner import validate_config


def test_defaults():
    config = RunConfig()
    assert config.seed == DEFAULT_SEED
    assert config.sample_count(Suite.JORDAN) == DEFAULT_SAMPLES["jordan"] == 100
    assert config.sample_count("composition") == 200
    assert config.sample_count(Suite.G2) == 50
    assert config.sample_count(Suite.SPINOR) == 20


def test_samples_override():
    config = RunConfig(samples=3)
    assert all(config.sample_count(s) == 3 for s in (Suite.JORDAN, Suite.G2, Suite.SPINOR, "composition"))


def test_dict_round_trip_keeps_sampling():
    config = RunConfig(command="check-g2", cases=["thm1.x"], seed=5, samples=4, sampling=SamplingConfig(numerator_bound=3))
    again = RunConfig.from_dict(config.to_dict())
    assert again.to_dict() == config.to_dict()
    assert again.sampling.numerator_bound == 3


def test_to_dict_excludes_output_settings():
    data = RunConfig(out="somewhere.json", fmt="text", n_jobs=4, verbose=True).to_dict()
    assert not {"out", "fmt", "n_jobs", "verbose"} & set(data)


def test_from_dict_ignores_unknown_keys():
    assert RunConfig.from_dict({"seed": 9, "colour": "blue"}).seed == 9


@pytest.mark.parametrize(
    "kwargs",
    [
        {"samples": 0},
        {"samples": -2},
        {"fmt": "xml"},
        {"n_jobs": 0},
        {"sampling": SamplingConfig(denominator_bound=0)},
    ],
)
def test_validate_config_rejects(kwargs):
    with pytest.raises(ConfigurationError):
        validate_config(RunConfig(**kwargs))


def test_validate_config_accepts_negative_jobs():
    assert validate_config(RunConfig(n_jobs=-1)).n_jobs == -1


def test_sampler_reproducible():
    a, b = RationalSampler(11), RationalSampler(11)
    assert [a.rational() for _ in range(20)] == [b.rational() for _ in range(20)]
    assert a.spawn(3).rational() == b.spawn(3).rational()


def test_sampler_bounds():
    sampler = RationalSampler(2, SamplingConfig(numerator_bound=2, denominator_bound=3))
    for _ in range(100):
        q = sampler.rational(nonzero=True)
        assert q != 0
        assert abs(q.numerator) <= 2
        assert q.denominator <= 3


def test_complex_components():
    sampler = RationalSampler(4, SamplingConfig(complex_components=True))
    values = [sampler.scalar() for _ in range(20)]
    assert any(not v.is_rational() for v in values)


def test_validate_config_accepts_every_format():
    for fmt in ReportFormat.ALL_FORMATS:
        assert validate_config(RunConfig(fmt=fmt)).fmt == fmt
