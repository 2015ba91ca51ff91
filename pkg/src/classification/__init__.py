"""
分类数据库及其核验
"""

from .schema import ClassificationDatabase, ClassificationEntry, ConeSpec, LatticeSpec, ModelSpec, ThetaSpec
from .database import ClassificationDB
from .models import ambient_dimension, model_dimension
from .verifier import dimension_audit, run_negative_controls, verify_database, verify_entry

__all__ = [
    "ClassificationDatabase",
    "ClassificationEntry",
    "ConeSpec",
    "LatticeSpec",
    "ModelSpec",
    "ThetaSpec",
    "ClassificationDB",
    "ambient_dimension",
    "model_dimension",
    "dimension_audit",
    "run_negative_controls",
    "verify_database",
    "verify_entry",
]
