"""
分类条目的逐项核验

每个条目依次检查：对合、限制根系类型、例外根、颜色数、着色锥、扇的完备性、
维数核对与齐性判定。检验名形如 "<条目 id>:<检验>"。
另有整库检验：非齐性条目集合、嵌套链与负对照。
"""

import json
import re
from typing import Dict, List, Optional, Sequence, Tuple

from joblib import Parallel, delayed
from loguru import logger

from ..algebra.jordan import herm3_dim, zorn_dim
from ..config.constants import COMPOSITION_DIMS, SLICE_TYPES, CheckStatus, HSpec, Suite
from ..core.exceptions import ConeError, RootSystemError
from ..core.types import CheckResult, SuiteReport
from ..lie.fans import (
    ColoredCone,
    ColoredFan,
    Verdict,
    homogeneity_verdict,
    is_complete,
    slice_highest_weight,
    validate_cone,
    weight_coordinates,
)
from ..lie.involutions import InvolutionData
from ..lie.roots import RootSystem
from ..lie.restricted import RestrictedRootSystem, Vector, is_unimodular, lattice_basis, restrict
from .database import ClassificationDB
from .models import ambient_dimension, model_dimension
from .schema import ClassificationEntry, RankOneStatement, ThetaSpec

# 分类列表中出现的限制根系类型（D 型另需秩 ≥ 4）
_ADMISSIBLE = re.compile(r"^(A1xA1|A\d+|B\d+|C\d+|BC\d+|D\d+|G2)$")

# (对照名, 基础条目, 预期失败的检验)
NEGATIVE_CONTROLS: List[Tuple[str, str, str]] = [
    ("color_removed", "thm1.x", "colors_equal_rank"),
    ("wrong_restricted_type", "thm1.x", "restricted_type"),
    ("wrong_dimension", "thm1.iv.a-sl4", "dimension_group"),
    ("wrong_model", "thm1.v-so9", "dimension_model"),
    ("cone_dropped", "thm1.i", "fan_complete"),
    ("foreign_color", "thm1.iv.b-sp8", "cone1_valid"),
    ("not_an_involution", "thm1.i", "involution"),
    ("dominant_slice_weight", "thm1.iii.b-sl3", "cone1_slice_weight"),
]


def admits_embedding(type_label: str) -> bool:
    if not _ADMISSIBLE.match(type_label):
        return False
    if type_label.startswith("D"):
        return int(type_label[1:]) >= 4
    return True


def _result(entry: ClassificationEntry, name: str, passed: bool, **kwargs) -> CheckResult:
    return CheckResult(name=f"{entry.id}:{name}", passed=bool(passed), provenance=entry.provenance, **kwargs)


def _fmt(vec: Sequence) -> List[str]:
    return [str(x) for x in vec]


# ============ 单个条目 ============


def verify_entry(entry: ClassificationEntry) -> List[CheckResult]:
    """
    核验一个条目

    Returns:
        检验结果列表（对合或限制根系无法构造时提前结束）

    Raises:
        DatabaseError: 模型参数不合法
    """
    logger.info(f"核验条目 {entry.id}（{entry.group}，H = {entry.h}）")
    try:
        involution = InvolutionData.from_spec(entry.group, entry.theta.to_spec())
    except (RootSystemError, KeyError) as e:
        return [_result(entry, "involution", False, detail={"error": str(e)})]
    checks = [
        _result(
            entry,
            "involution",
            True,
            detail={"fixed_roots": len(involution.fixed_roots()), "moved_roots": len(involution.moved_roots())},
        )
    ]

    try:
        rrs = restrict(involution)
    except RootSystemError as e:
        checks.append(_result(entry, "restricted_type", False, detail={"error": str(e)}))
        return checks
    checks.append(
        _result(
            entry,
            "restricted_type",
            rrs.type_label == entry.restricted_type and rrs.rank == entry.rank,
            detail={"computed": rrs.type_label, "stored": entry.restricted_type, "rank": rrs.rank},
            certificate={"basis": [_fmt(a) for a in rrs.basis], "b_factors": _fmt(rrs.b_factors)},
        )
    )
    admissible = admits_embedding(rrs.type_label)
    checks.append(
        _result(entry, "embedding_admissible", admissible == entry.embedding, detail={"computed": admissible, "stored": entry.embedding})
    )
    if not entry.embedding:
        return checks

    exceptional = rrs.exceptional_roots()
    checks.append(
        _result(entry, "exceptional_roots", bool(exceptional) == entry.exceptional, detail={"computed": exceptional, "stored": entry.exceptional})
    )
    checks.extend(_color_checks(entry, rrs, exceptional))

    try:
        lattice = lattice_basis(rrs, entry.lattice.kind, entry.lattice.basis)
        cones = [ColoredCone.from_tokens(rrs, c.generators, c.colors) for c in entry.fan]
    except ConeError as e:
        checks.append(_result(entry, "fan_data", False, detail={"error": str(e)}))
        return checks + dimension_audit(entry, rrs)

    fan = ColoredFan(cones)
    checks.extend(_cone_checks(entry, rrs, cones, lattice))
    checks.extend(_fan_checks(entry, rrs, fan))
    checks.extend(dimension_audit(entry, rrs))
    checks.extend(_homogeneity_checks(entry, rrs, fan, lattice))
    return checks


def _color_checks(entry: ClassificationEntry, rrs: RestrictedRootSystem, exceptional: List[int]) -> List[CheckResult]:
    # 每个单限制根一个颜色，例外根两个
    expected = sorted(list(range(1, rrs.rank + 1)) + exceptional)
    checks = [
        _result(entry, "colors_match", sorted(entry.colors) == expected, detail={"computed": expected, "stored": entry.colors}),
    ]
    if entry.picard_number == 1:
        checks.append(
            _result(entry, "colors_equal_rank", len(entry.colors) == rrs.rank, detail={"colors": len(entry.colors), "rank": rrs.rank})
        )
    used = sorted({c for cone in entry.fan for c in cone.colors})
    checks.append(_result(entry, "fan_colors_known", set(used) <= set(entry.colors), detail={"fan_colors": used}))
    return checks


def _cone_checks(
    entry: ClassificationEntry, rrs: RestrictedRootSystem, cones: List[ColoredCone], lattice: List[Vector]
) -> List[CheckResult]:
    checks = []
    for k, cone in enumerate(cones, start=1):
        valid, cert = validate_cone(cone, rrs)
        checks.append(_result(entry, f"cone{k}_valid", valid, certificate=cert))
        checks.append(_result(entry, f"cone{k}_regular", is_unimodular(lattice, cone.generators), detail={"lattice": entry.lattice.kind}))
    return checks


def _fan_checks(entry: ClassificationEntry, rrs: RestrictedRootSystem, fan: ColoredFan) -> List[CheckResult]:
    try:
        complete, cert = is_complete(fan, rrs)
    except ConeError as e:
        complete, cert = False, {"error": str(e)}
    return [
        _result(entry, "fan_complete", complete, certificate=cert),
        _result(
            entry,
            "closed_orbits",
            entry.closed_orbits is None or entry.closed_orbits == len(fan.cones),
            detail={"maximal_cones": len(fan.cones), "stored": entry.closed_orbits},
        ),
    ]


def dimension_audit(entry: ClassificationEntry, rrs: Optional[RestrictedRootSystem] = None) -> List[CheckResult]:
    """
    维数核对：dim G/H = s + |R¹|/2 = dim(模型) − codim

    Raises:
        DatabaseError: 模型族或参数不受支持
    """
    if rrs is None:
        rrs = restrict(InvolutionData.from_spec(entry.group, entry.theta.to_spec()))
    group_dim = rrs.dimension_of_quotient()
    model = entry.model
    checks = [
        _result(entry, "dimension_group", group_dim == entry.dimension, detail={"computed": group_dim, "stored": entry.dimension}),
        _result(
            entry,
            "dimension_model",
            model_dimension(model) == entry.dimension,
            detail={"model": model.name, "ambient": ambient_dimension(model), "codim": model.codim, "stored": entry.dimension},
        ),
        _result(
            entry,
            "model_kind",
            entry.homogeneous == (model.codim == 0),
            detail={"homogeneous": entry.homogeneous, "codim": model.codim},
        ),
    ]
    if entry.printed_model is not None:
        printed = entry.printed_model
        checks.append(
            _result(
                entry,
                "dimension_printed_model",
                model_dimension(printed) == entry.dimension,
                expected=CheckStatus.FAIL,
                detail={"printed": printed.name, "printed_dimension": model_dimension(printed), "corrected": model.name},
            )
        )
    return checks


def _homogeneity_checks(
    entry: ClassificationEntry, rrs: RestrictedRootSystem, fan: ColoredFan, lattice: List[Vector]
) -> List[CheckResult]:
    slice_applicable = entry.h == HSpec.FIXED and rrs.type_label in SLICE_TYPES
    expected = Verdict.TRANSITIVE if entry.homogeneous else Verdict.NON_TRANSITIVE
    try:
        verdict, cert = homogeneity_verdict(rrs, fan, lattice, slice_applicable, entry.homogeneous)
    except ConeError as e:
        return [_result(entry, "homogeneity", False, detail={"error": str(e)})]
    checks = [_result(entry, "homogeneity", verdict == expected, detail={"expected": expected.value}, certificate=dict(cert, verdict=verdict.value))]
    if not slice_applicable:
        return checks

    for k, (spec, cone) in enumerate(zip(entry.fan, fan.cones), start=1):
        if spec.slice_weight is None:
            continue
        try:
            omega, cert = slice_highest_weight(rrs, cone, lattice)
            stored = rrs.parse_vector(spec.slice_weight, weights=True)
        except ConeError as e:
            checks.append(_result(entry, f"cone{k}_slice_weight", False, detail={"error": str(e)}))
            continue
        computed = _fmt(weight_coordinates(rrs, omega))
        checks.append(
            _result(entry, f"cone{k}_slice_weight", tuple(omega) == tuple(stored), detail={"computed": computed, "stored": spec.slice_weight}, certificate=cert)
        )
        if spec.printed_slice_weight is not None:
            printed = rrs.parse_vector(spec.printed_slice_weight, weights=True)
            checks.append(
                _result(
                    entry,
                    f"cone{k}_slice_weight_printed",
                    tuple(omega) == tuple(printed),
                    expected=CheckStatus.FAIL,
                    detail={"computed": computed, "printed": spec.printed_slice_weight},
                )
            )
    return checks


# ============ 整库检验 ============


def non_transitive_check(entries: Sequence[ClassificationEntry], checks: Sequence[CheckResult]) -> CheckResult:
    """判定为不可迁的条目恰为 H = G^θ 且限制根系为 A2 或 G2 的条目"""
    found = sorted(
        c.name.split(":")[0]
        for c in checks
        if c.name.endswith(":homogeneity") and c.certificate.get("verdict") == Verdict.NON_TRANSITIVE
    )
    predicted = sorted(e.id for e in entries if e.embedding and e.h == HSpec.FIXED and e.restricted_type in SLICE_TYPES)
    return CheckResult(
        name="database:non_transitive_set",
        passed=found == predicted,
        detail={"non_transitive": found, "predicted": predicted, "count": len(found)},
        provenance="non-homogeneous varieties: restricted type A2 or G2 with H = G^theta",
    )


def nesting_checks(db: ClassificationDB) -> List[CheckResult]:
    """非齐性 A2 簇与 Legendre 簇的嵌套链"""
    spec = db.nesting
    varieties = [db.get(i).dimension for i in spec.varieties]
    ambients = [model_dimension(m) for m in spec.ambients]
    jordan = [herm3_dim(a) for a in COMPOSITION_DIMS]
    provenance = "nesting chain of the A2 varieties in the Legendrian varieties"

    def increasing(xs):
        return all(a < b for a, b in zip(xs, xs[1:]))

    return [
        CheckResult(
            "nesting:rows_increasing",
            increasing(varieties) and increasing(ambients),
            detail={"varieties": varieties, "ambients": ambients},
            provenance=provenance,
        ),
        CheckResult(
            "nesting:hyperplane_sections",
            all(b == a + 1 for a, b in zip(varieties, ambients)),
            detail={"varieties": varieties, "ambients": ambients},
            provenance=provenance,
        ),
        CheckResult(
            "nesting:jordan_dimensions",
            ambients == jordan,
            detail={"ambients": ambients, "herm3": jordan, "zorn": [zorn_dim(a) for a in COMPOSITION_DIMS]},
            provenance=provenance,
        ),
    ]


# ============ 秩一结论 ============


def _quotient_key(group: str, theta: ThetaSpec, h: str) -> str:
    return json.dumps([group, theta.to_spec(), h], sort_keys=True)


def rank_one_checks(db: ClassificationDB, statement: Optional[RankOneStatement] = None) -> List[CheckResult]:
    """
    秩一结论：排除的商空间确为秩一且嵌入的 Picard 数大于一；其余秩一条目各有唯一的非平凡嵌入，
    简单、光滑、Picard 数为一，且条目本身核验通过

    Raises:
        DatabaseError: 排除项引用的条目不存在
    """
    statement = statement or db.rank_one

    def result(name: str, passed: bool, **kwargs) -> CheckResult:
        return CheckResult(name=f"{statement.id}:{name}", passed=bool(passed), provenance=statement.provenance, **kwargs)

    checks = []
    for k, case in enumerate(statement.excluded, start=1):
        try:
            rrs = restrict(InvolutionData.from_spec(case.group, case.theta.to_spec()))
        except (RootSystemError, KeyError) as e:
            checks.append(result(f"excluded{k}_rank_one", False, detail={"case": case.name, "error": str(e)}))
            continue
        group_dim = rrs.dimension_of_quotient()
        checks.append(
            result(f"excluded{k}_rank_one", rrs.rank == 1, detail={"case": case.name, "restricted_type": rrs.type_label})
        )
        checks.append(
            result(
                f"excluded{k}_model",
                model_dimension(case.model) == group_dim and case.picard_number > 1,
                detail={"model": case.model.name, "dimension": group_dim, "picard_number": case.picard_number},
            )
        )
        if case.entry:
            entry = db.get(case.entry)
            same = _quotient_key(entry.group, entry.theta, entry.h) == _quotient_key(case.group, case.theta, case.h)
            checks.append(
                result(
                    f"excluded{k}_entry",
                    same and entry.picard_number == case.picard_number,
                    detail={"entry": entry.id, "picard_number": entry.picard_number},
                )
            )

    excluded_keys = {_quotient_key(c.group, c.theta, c.h) for c in statement.excluded}
    covered = [e for e in db.entries if e.rank == 1 and _quotient_key(e.group, e.theta, e.h) not in excluded_keys]
    problems: Dict[str, List[str]] = {}
    for entry in covered:
        found = []
        if not entry.embedding:
            found.append("embedding")
        if entry.picard_number != 1:
            found.append("picard_number")
        if len(entry.fan) != 1 or entry.closed_orbits not in (None, 1):
            found.append("simple")
        found += [c.name.split(":", 1)[1] for c in verify_entry(entry) if not c.ok]
        if found:
            problems[entry.id] = found
    checks.append(
        result(
            "covered_picard_one",
            bool(covered) and not problems,
            detail={"covered": [e.id for e in covered], "problems": problems},
        )
    )
    return checks


# ============ 负对照 ============


def corrupt(entry: ClassificationEntry, control: str) -> ClassificationEntry:
    """按对照名破坏条目的一个字段"""
    data = entry.model_dump()
    if control == "color_removed":
        data["colors"] = data["colors"][:-1]
    elif control == "wrong_restricted_type":
        data["restricted_type"] = "A2" if data["restricted_type"] != "A2" else "B2"
    elif control == "wrong_dimension":
        data["dimension"] += 1
    elif control == "wrong_model":
        data["model"]["params"]["m"] += 1
    elif control == "cone_dropped":
        data["fan"] = data["fan"][:1]
    elif control == "foreign_color":
        cone = data["fan"][0]
        cone["colors"] = sorted(cone["colors"] + [next(c for c in data["colors"] if c not in cone["colors"])])
    elif control == "not_an_involution":
        data["theta"] = {"kind": "matrix", "rows": _rotation_rows(entry)}
    elif control == "dominant_slice_weight":
        data["fan"][0]["slice_weight"] = "w1+w2"
    else:
        raise ValueError(f"未知的负对照: {control}")
    return ClassificationEntry.model_validate(data)


def _rotation_rows(entry: ClassificationEntry) -> List[List[str]]:
    """e1 ↦ e2 ↦ −e1，其余坐标不变（θ² ≠ id）"""
    n = RootSystem(entry.group).ambient_dim
    rows = [["1" if i == j else "0" for j in range(n)] for i in range(n)]
    rows[0][0], rows[1][1] = "0", "0"
    rows[1][0], rows[0][1] = "1", "-1"
    return rows


def run_negative_controls(db: ClassificationDB) -> List[CheckResult]:
    """每个负对照都应在预期的检验上失败"""
    checks = []
    for control, base_id, target in NEGATIVE_CONTROLS:
        if base_id not in db.ids():
            logger.warning(f"负对照 {control} 的基础条目 {base_id} 不在数据库中，跳过")
            continue
        corrupted = corrupt(db.get(base_id), control)
        results = verify_entry(corrupted)
        failing = [c.name.split(":", 1)[1] for c in results if not c.passed]
        hit = any(c.name == f"{base_id}:{target}" and not c.passed for c in results)
        checks.append(
            CheckResult(
                name=f"negative:{control}",
                passed=hit,
                detail={"base": base_id, "target": target, "failing": failing},
                provenance="negative control",
            )
        )
    if db.rank_one is not None:
        checks.append(_exclusion_dropped_control(db))
    return checks


def _exclusion_dropped_control(db: ClassificationDB) -> CheckResult:
    """去掉有条目对应的排除项后，秩一结论应在 covered_picard_one 上失败"""
    statement = db.rank_one
    kept = [case for case in statement.excluded if case.entry is None]
    results = rank_one_checks(db, statement.model_copy(update={"excluded": kept}))
    target = f"{statement.id}:covered_picard_one"
    return CheckResult(
        name="negative:exclusion_dropped",
        passed=any(c.name == target and not c.passed for c in results),
        detail={"base": statement.id, "target": "covered_picard_one", "dropped": [c.name for c in statement.excluded if c.entry]},
        provenance="negative control",
    )


def verify_database(db: ClassificationDB, cases: Optional[Sequence[str]] = None, n_jobs: int = 1) -> SuiteReport:
    """
    核验所选条目；未指定条目时另跑整库检验与负对照

    条目之间相互独立，用 joblib 并行；结果按数据库顺序汇总。
    """
    entries = db.select(cases)
    logger.info(f"核验 {len(entries)} 个条目（n_jobs={n_jobs}）")
    results = Parallel(n_jobs=n_jobs)(delayed(verify_entry)(entry) for entry in entries)

    selected = [e.id for e in entries] + [i for i in db.statement_ids() if not cases or i in cases]
    report = SuiteReport(suite=Suite.CLASSIFICATION, config={"cases": selected})
    for checks in results:
        report.extend(checks)

    report.add(non_transitive_check(entries, report.checks))
    if db.rank_one is not None and (not cases or db.rank_one.id in cases):
        report.extend(rank_one_checks(db))
    if not cases:
        if db.nesting is not None:
            report.extend(nesting_checks(db))
        report.extend(run_negative_controls(db))

    by_type: Dict[str, int] = {}
    for entry in entries:
        by_type[entry.restricted_type] = by_type.get(entry.restricted_type, 0) + 1
    report.add_finding("entries_by_restricted_type", dict(sorted(by_type.items())))
    logger.info(f"分类核验完成: {report.n_passed}/{len(report.checks)} 成立，{report.n_unexpected} 项与预期不符")
    return report
