from __future__ import annotations

from .nodes import *
from .partition import *
from .synthetic import *
from .tempgraph import *
