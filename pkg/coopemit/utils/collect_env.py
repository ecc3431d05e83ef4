# Copyright (c) coopemit contributors. All rights reserved.
import numba
import numpy as np
from mmcv.utils import collect_env as collect_base_env

import coopemit


def collect_env():
    """Collect the information of the running environments."""
    env_info = collect_base_env()
    env_info['NumPy'] = np.__version__
    env_info['Numba'] = numba.__version__
    env_info['coopemit'] = coopemit.__version__
    return env_info


if __name__ == '__main__':
    for name, val in collect_env().items():
        print(f'{name}: {val}')
