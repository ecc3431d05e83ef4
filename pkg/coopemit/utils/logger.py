# Copyright (c) coopemit contributors. All rights reserved.
import logging

from mmcv.utils import get_logger


def get_root_logger(log_file=None, log_level=logging.INFO, name='coopemit'):
    """Get root logger and add a keyword filter to it.

    The logger will be initialized if it has not been initialized. By default a
    StreamHandler will be added. If `log_file` is specified, a FileHandler will
    also be added. The name of the root logger is the top-level package name,
    e.g., "coopemit".

    Args:
        log_file (str, optional): File path of log. Defaults to None.
        log_level (int | str, optional): The level of logger.
            Defaults to logging.INFO.
        name (str, optional): The name of the root logger, also used as a
            filter keyword. Defaults to 'coopemit'.

    Returns:
        :obj:`logging.Logger`: The obtained logger
    """
    if isinstance(log_level, str):
        log_level = logging.getLevelName(log_level.upper())
    logger = get_logger(name=name, log_file=log_file, log_level=log_level)

    # add a logging filter once
    if not any(getattr(f, 'name', None) == name for f in logger.filters):
        logging_filter = logging.Filter(name)
        logging_filter.filter = lambda record: record.name.find(name) != -1
        logger.addFilter(logging_filter)

    return logger
