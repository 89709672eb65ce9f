"""异常定义：每个异常携带命令行退出码"""

from .constants import EXIT_INPUT_ERROR, EXIT_RESOURCE_CAP


class SpectralSplitError(Exception):
    """所有库异常的基类"""
    exit_code = EXIT_INPUT_ERROR


# 图构造与序列化
class LoopEdge(SpectralSplitError):
    pass


class DuplicateEdge(SpectralSplitError):
    pass


class IndexOutOfRange(SpectralSplitError):
    pass


class ParameterOutOfRange(SpectralSplitError):
    pass


class MalformedGraph6(SpectralSplitError):
    pass


# 谱计算
class EmptyGraph(SpectralSplitError):
    pass


class NotConnected(SpectralSplitError):
    pass


class NoConvergence(SpectralSplitError):
    exit_code = EXIT_RESOURCE_CAP


class SizeCap(SpectralSplitError):
    exit_code = EXIT_RESOURCE_CAP


# 图变换
class NoSuchEdge(SpectralSplitError):
    pass


class NotInternalPathEdge(SpectralSplitError):
    pass


class DegreeTooSmall(SpectralSplitError):
    pass


class BadPartition(SpectralSplitError):
    pass


class PartitionTooSmall(SpectralSplitError):
    pass


# 随机抽样
class RejectionCap(SpectralSplitError):
    exit_code = EXIT_RESOURCE_CAP
