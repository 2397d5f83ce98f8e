from .forecasting import *
from .simulation import *
from .synthetic import *
from .reports import *
from .config import *
