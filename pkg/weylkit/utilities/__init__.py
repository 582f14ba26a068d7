from . import general
