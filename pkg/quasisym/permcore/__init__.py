from .words import *
from .compositions import *
from .weak_order import weak_le, weak_down_set, weak_interval, lower_covers
from .factorization import anticonnected_factors, is_anticonnected, left_shifted_product, split_points
