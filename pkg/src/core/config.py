"""
核心配置类
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from ..config.constants import DEFAULT_SAMPLES, DEFAULT_SEED, DENOMINATOR_BOUND, NUMERATOR_BOUND


@dataclass
class SamplingConfig:
    """随机有理数采样配置"""

    numerator_bound: int = NUMERATOR_BOUND
    denominator_bound: int = DENOMINATOR_BOUND
    # 是否在 Q(i, √2) 中取非有理分量
    complex_components: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "numerator_bound": self.numerator_bound,
            "denominator_bound": self.denominator_bound,
            "complex_components": self.complex_components,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SamplingConfig":
        return cls(**{k: v for k, v in data.items() if k in cls.__dataclass_fields__})


@dataclass
class RunConfig:
    """一次命令行运行的参数"""

    command: str = "verify-classification"
    cases: List[str] = field(default_factory=list)
    seed: int = DEFAULT_SEED
    samples: Optional[int] = None
    out: Optional[str] = None
    fmt: str = "json"
    db: Optional[str] = None
    verbose: bool = False
    n_jobs: int = 1
    sampling: SamplingConfig = field(default_factory=SamplingConfig)

    def sample_count(self, suite: str) -> int:
        """命令行给出的样本数优先，否则取各套件默认值"""
        if self.samples is not None:
            return self.samples
        return DEFAULT_SAMPLES.get(suite, 20)

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典（不含输出路径，保证报告只依赖于计算参数）"""
        return {
            "command": self.command,
            "cases": list(self.cases),
            "seed": self.seed,
            "samples": self.samples,
            "sampling": self.sampling.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RunConfig":
        data = dict(data)
        sampling = data.pop("sampling", None)
        config = cls(**{k: v for k, v in data.items() if k in cls.__dataclass_fields__})
        if isinstance(sampling, dict):
            config.sampling = SamplingConfig.from_dict(sampling)
        return config
