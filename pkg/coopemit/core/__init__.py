# Copyright (c) coopemit contributors. All rights reserved.
from .dynamics import *  # noqa: F401, F403
from .geometry import *  # noqa: F401, F403
from .kernels import *  # noqa: F401, F403
from .modes import *  # noqa: F401, F403
from .spectrum import *  # noqa: F401, F403
