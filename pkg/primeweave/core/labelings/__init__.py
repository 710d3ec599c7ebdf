"""Prime labeling verifier and the constructive labelers."""

from .base import Labeling  # noqa
from .base import VerifyReport  # noqa
from .base import Violation  # noqa
from .base import verify  # noqa
from .known import label_cycle  # noqa
from .known import label_path  # noqa
from .known import label_star  # noqa
from .hairy import label_bertrand_weed  # noqa
from .hairy import label_hairy3  # noqa
from .hairy import label_hairy5  # noqa
from .hairy import label_hairy7  # noqa
from .hairy import label_hairy_blocks  # noqa
from .ternary import label_cps1  # noqa
from .ternary import label_cps2  # noqa
from .registry import LabelerRegistry  # noqa
from .registry import check_family  # noqa
from .registry import label_family  # noqa
