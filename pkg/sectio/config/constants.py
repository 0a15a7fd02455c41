from enum import Enum


class Environment(str, Enum):
    """Application environment types."""
    DEVELOPMENT = "development"
    PRODUCTION = "production"


class LogLevel(str, Enum):
    """Logging levels."""
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    CRITICAL = "CRITICAL"


class InfinityReason(str, Enum):
    """Certified causes of an infinite covering value."""
    NOT_SURJECTIVE = "NotSurjective"
    CODOMAIN_CYCLIC = "CodomainCyclic"
    DOMAIN_CYCLIC = "DomainCyclicAndValueForcedInfinite"
    NOT_LOCALLY_SECTIONABLE = "NotLocallySectionable"
    NO_PROPER_COVER = "NoProperCoverExists"


class Verdict(str, Enum):
    """Outcome of one theorem check."""
    PASS = "PASS"
    FAIL = "FAIL"
    BUDGET = "BUDGET"
    SKIP = "SKIP"


class GroupFamily(str, Enum):
    """Standard group families."""
    CYCLIC = "cyclic"
    DIHEDRAL = "dihedral"
    QUATERNION = "quaternion8"
    SYMMETRIC = "symmetric"
    ALTERNATING = "alternating"
    ELEMENTARY_ABELIAN = "elementary_abelian"


class ActionName(str, Enum):
    """Named actions usable in semidirect product expressions."""
    INVERSION = "inv"
    TRIVIAL = "trivial"


class HomKind(str, Enum):
    """Forms of homomorphism specifications."""
    IDENTITY = "id"
    QUOTIENT = "quot"
    PROJECTION = "proj"
    INCLUSION = "incl"
    MAP = "map"
    EVALUATION = "ev"
    TRIVIAL = "triv"
    PRODUCT = "prod"


# Output schema
SCHEMA_VERSION = "sectio/1"

# Exit codes
EXIT_OK = 0
EXIT_COMPUTATION_ERROR = 1
EXIT_USAGE_ERROR = 2

# Group families with a bounded parameter range
MAX_PERMUTATION_DEGREE = 5
