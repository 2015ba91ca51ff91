"""
分类数据库的数据模型 (Pydantic Schemas)

JSON 格式说明见 doc/classification_schema.md。
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..config.constants import HSpec, LatticeKind, ModelFamily


class ThetaSpec(BaseModel):
    """权空间上对合 θ 的描述"""

    model_config = ConfigDict(extra="forbid")

    kind: str = Field(..., description="negation / swap_negate / signed_permutation / fix_span / matrix / product")
    images: Optional[List[int]] = Field(None, description="带符号置换：θ(e_k) = ±e_j")
    roots: Optional[List[int]] = Field(None, description="fix_span：保持不动的单根标号")
    rows: Optional[List[List[str]]] = Field(None, description="matrix：有理矩阵")
    factors: Optional[List["ThetaSpec"]] = Field(None, description="product：逐分量的对合")

    @model_validator(mode="after")
    def _required_fields(self) -> "ThetaSpec":
        needed = {"signed_permutation": "images", "fix_span": "roots", "matrix": "rows", "product": "factors"}
        key = needed.get(self.kind)
        if key and getattr(self, key) is None:
            raise ValueError(f"对合类型 {self.kind} 需要字段 {key}")
        return self

    def to_spec(self) -> Dict[str, Any]:
        """转为 build_theta 使用的字典"""
        spec: Dict[str, Any] = {"kind": self.kind}
        for key in ("images", "roots", "rows"):
            value = getattr(self, key)
            if value is not None:
                spec[key] = value
        if self.factors is not None:
            spec["factors"] = [f.to_spec() for f in self.factors]
        return spec


ThetaSpec.model_rebuild()


class LatticeSpec(BaseModel):
    """单参数子群格 χ*(S)"""

    model_config = ConfigDict(extra="forbid")

    kind: str
    basis: List[str] = Field(default_factory=list, description="显式基的向量记号")

    @field_validator("kind")
    @classmethod
    def _known_kind(cls, v: str) -> str:
        if v not in LatticeKind.ALL_KINDS:
            raise ValueError(f"未知的格类型: {v}")
        return v


class ConeSpec(BaseModel):
    """极大着色锥"""

    model_config = ConfigDict(extra="forbid")

    generators: List[str]
    colors: List[int] = Field(default_factory=list)
    slice_weight: Optional[str] = Field(None, description="闭轨道切片的最高权（权记号）")
    printed_slice_weight: Optional[str] = Field(None, description="原始数据中的切片权（勘误时给出）")


class ModelSpec(BaseModel):
    """齐性模型簇；codim > 0 表示模型中的（超平面）截面"""

    model_config = ConfigDict(extra="forbid")

    name: str
    family: str
    params: Dict[str, Any] = Field(default_factory=dict)
    codim: int = 0

    @field_validator("family")
    @classmethod
    def _known_family(cls, v: str) -> str:
        if v not in ModelFamily.ALL_FAMILIES:
            raise ValueError(f"未知的模型族: {v}")
        return v


class ClassificationEntry(BaseModel):
    """一个对称簇 X ⊇ G/H 的记录"""

    model_config = ConfigDict(extra="forbid")

    id: str
    title: str = ""
    group: str = Field(..., description="G 的根系类型，如 'B2xA1'")
    theta: ThetaSpec
    h: str = Field(..., description="G^theta / N(G^theta) / index_two")
    restricted_type: str
    rank: int
    colors: List[int] = Field(default_factory=list, description="G/H 的颜色（按单限制根标号）")
    exceptional: bool = False
    picard_number: int = 1
    embedding: bool = Field(True, description="是否存在光滑完备 Picard 数一的嵌入")
    lattice: Optional[LatticeSpec] = None
    fan: List[ConeSpec] = Field(default_factory=list)
    closed_orbits: Optional[int] = None
    homogeneous: Optional[bool] = None
    dimension: Optional[int] = None
    model: Optional[ModelSpec] = None
    printed_model: Optional[ModelSpec] = Field(None, description="原始数据中的模型（勘误时给出）")
    provenance: str = ""
    notes: str = ""

    @field_validator("h")
    @classmethod
    def _known_h(cls, v: str) -> str:
        if v not in HSpec.ALL_SPECS:
            raise ValueError(f"未知的 H 取法: {v}")
        return v

    @model_validator(mode="after")
    def _embedding_fields(self) -> "ClassificationEntry":
        required = (self.lattice, self.model, self.dimension, self.homogeneous)
        if self.embedding and (not self.fan or any(x is None for x in required)):
            raise ValueError(f"{self.id}: 存在嵌入的条目需要 lattice、fan、model、dimension 与 homogeneous")
        return self


class NestingSpec(BaseModel):
    """非齐性簇与 Legendre 簇的嵌套链（按合成代数维数 1, 2, 4, 8 排列）"""

    model_config = ConfigDict(extra="forbid")

    varieties: List[str] = Field(..., description="条目 id")
    ambients: List[ModelSpec]


class ExcludedCase(BaseModel):
    """秩一结论中排除的商空间：唯一的嵌入 Picard 数大于一"""

    model_config = ConfigDict(extra="forbid")

    name: str
    group: str
    theta: ThetaSpec
    h: str
    picard_number: int = 2
    model: ModelSpec
    entry: Optional[str] = Field(None, description="数据库中同一商空间的条目 id")

    @field_validator("h")
    @classmethod
    def _known_h(cls, v: str) -> str:
        if v not in HSpec.ALL_SPECS:
            raise ValueError(f"未知的 H 取法: {v}")
        return v


class RankOneStatement(BaseModel):
    """秩一的总括结论：除 excluded 外，每个秩一 G/H 恰有一个非平凡嵌入，简单、射影、光滑且 Picard 数为一"""

    model_config = ConfigDict(extra="forbid")

    id: str
    title: str = ""
    excluded: List[ExcludedCase] = Field(default_factory=list)
    provenance: str = ""


class ClassificationDatabase(BaseModel):
    """整个数据库"""

    model_config = ConfigDict(extra="forbid")

    version: int = 1
    entries: List[ClassificationEntry]
    nesting: Optional[NestingSpec] = None
    rank_one: Optional[RankOneStatement] = None

    @model_validator(mode="after")
    def _unique_ids(self) -> "ClassificationDatabase":
        seen = set()
        for entry in self.entries:
            if entry.id in seen:
                raise ValueError(f"重复的条目 id: {entry.id}")
            seen.add(entry.id)
        if self.rank_one is not None and self.rank_one.id in seen:
            raise ValueError(f"重复的条目 id: {self.rank_one.id}")
        return self
