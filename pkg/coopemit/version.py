# Copyright (c) coopemit contributors. All rights reserved.

__version__ = '0.3.0'
short_version = __version__
version_info = tuple(int(x) for x in __version__.split('.'))
