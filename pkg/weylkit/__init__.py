"""
Cartan schemes, Weyl groupoids and their root systems (weylkit)

"""

__version__ = '0.3.0'
__author__ = 'The weylkit developers'
__credits__ = ['The weylkit developers']
__license__ = 'MIT'
__maintainer__ = 'The weylkit developers'
__email__ = 'weylkit@users.noreply.github.com'

import sys

from weylkit import utilities
from weylkit import core
from weylkit import roots
from weylkit import weylgroupoid
from weylkit import classify
from weylkit import cli

if sys.version_info < (3, 8):
    raise Exception('Must be using Python 3.8 or greater')
