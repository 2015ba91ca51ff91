"""
自定义异常类
"""


class SymVarError(Exception):
    """基础异常类"""

    pass


class FieldError(SymVarError):
    """标量运算异常（除零、非法分量）"""

    pass


class DimensionMismatchError(SymVarError):
    """矩阵或向量维度不匹配异常"""

    pass


class NotSkewSymmetricError(SymVarError):
    """矩阵非反对称异常"""

    pass


class AlgebraMismatchError(SymVarError):
    """不同代数的元素混合运算异常"""

    pass


class CompositionIdentityError(SymVarError):
    """乘法不满足合成恒等式 N(xy) = N(x)N(y)"""

    pass


class RootSystemError(SymVarError):
    """根系或对合数据错误异常"""

    pass


class ConeError(SymVarError):
    """锥、扇或切片权重计算异常"""

    pass


class DegenerateSampleError(SymVarError):
    """随机样本退化异常（调用方重新采样）"""

    pass


class DatabaseError(SymVarError):
    """分类数据库格式错误异常"""

    pass


class ConfigurationError(SymVarError):
    """配置错误异常"""

    pass
