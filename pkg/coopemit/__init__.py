# Copyright (c) coopemit contributors. All rights reserved.
import mmcv
from mmcv.utils import digit_version

from .version import __version__, short_version, version_info

# mmcv-lite is enough, only Config, Registry, logging and progress are used
mmcv_minimum_version = '1.5.2'
mmcv_maximum_version = '1.7.2'
mmcv_version = digit_version(mmcv.__version__)

assert (digit_version(mmcv_minimum_version) <= mmcv_version <=
        digit_version(mmcv_maximum_version)), \
    f'MMCV=={mmcv.__version__} is used but incompatible. ' \
    f'Please install mmcv>={mmcv_minimum_version}, <={mmcv_maximum_version}.'

__all__ = ['__version__', 'short_version', 'version_info']
