# 异常定义

class EulerianError(ValueError):
    """工具包异常基类"""


class InputError(EulerianError):
    """输入格式错误（窗口非法、缺少颜色、无法解析的多项式文本等）"""


class DomainError(EulerianError):
    """参数超出定义域（秩低于族的最小值、零多项式等）"""


class SymmetryError(EulerianError):
    """多项式关于给定中心不对称"""


class ClassificationError(EulerianError):
    """子图无法识别为有限型Coxeter图"""


class ConsistencyError(EulerianError):
    """内部精确性校验失败（非整系数、除法不整除等）"""


class UnsupportedError(EulerianError):
    """该族或方法不支持此操作"""
