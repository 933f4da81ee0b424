from . import errors
from . import utils
from . import permcore
from . import fqsym
from . import nsym
from . import identities
from . import config
