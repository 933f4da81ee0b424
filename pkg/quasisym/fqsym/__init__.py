from .elements import *
from .series import TruncatedSeries, unit_series, series_product, series_inverse, series_convert, residuals
from .realization import NCPolynomial, ncpoly_one, ncpoly_product, realize, DEFAULT_ALPHABET_SIZE
from .qsym import QSymImage, commutative_image
