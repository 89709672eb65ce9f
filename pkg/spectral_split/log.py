"""全局日志对象：所有模块通过 `from .log import logger` 使用同一个 logger"""

import logging
import sys

LOGGER_NAME = "spectral_split"

logger = logging.getLogger(LOGGER_NAME)
logger.addHandler(logging.NullHandler())


def setup_logging(verbose: bool = False) -> None:
    """命令行入口调用：日志统一输出到 stderr，避免混入 stdout 摘要"""
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("[%(asctime)s] [%(levelname)s] %(message)s"))
    logger.handlers = [handler]
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)
    logger.propagate = False
