import os
import sys
import pathlib
import logging

PATH = pathlib.Path(__file__).parent.absolute()
ARTIFACTS_PATH = os.path.join(PATH, 'artifacts')

LOG = logging.Logger('testing')
LOG.addHandler(logging.StreamHandler(sys.stdout))

# The small window which most of the operator tests use. It keeps the tests fast while still leaving an
# interior for all the operators up to degree 2.
SMALL_WINDOW = dict(n_max=6, k_min=-8, k_max=8)
