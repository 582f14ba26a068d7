import itertools
import warnings
from math import gcd


class PassiveStore(object):
    """
    We ab(use) this class for nesting results within a class (reports, search summaries).

    """
    def __init__(self, **kwargs):
        """ Make an object whose attributes are the given keyword arguments. """
        for key in kwargs:
            setattr(self, key, kwargs[key])

    def __iter__(self):
        # Iterate over attributes inside this object which don't start with underscores.
        return (a for a in self.__dict__.keys() if not a.startswith('_'))

    def __eq__(self, other):
        # For easy comparison of reports.
        return self.__dict__ == other.__dict__

    def __repr__(self):
        fields = ', '.join(f'{key}={getattr(self, key)!r}' for key in self)
        return f'{self.__class__.__name__}({fields})'


def flatten_list(nested):
    """ Flatten a list of lists. """
    try:
        flattened = list(itertools.chain(*nested))
    except TypeError:
        # Maybe it's already flat and we've just tried iterating over non-iterables. If so, just return what we
        # got given.
        flattened = nested

    return flattened


def split_string(x, separator=','):
    """
    Split a string on `separator' and drop the empty fields.

    Parameters
    ----------
    x : str
        String to split.
    separator : str, optional
        Give a separator to split on. Defaults to comma.

    Returns
    -------
    y : list
        The split string.

    """

    return [i.strip() for i in x.split(separator) if i.strip()]


def parse_index_list(x):
    """
    Turn a string like '1,3' into the sorted tuple of integer indices (1, 3).

    Raises ValueError for anything that isn't a positive integer.

    """

    indices = []
    for field in split_string(x):
        value = int(field)
        if value < 1:
            raise ValueError(f'Indices start at 1, got {value}')
        indices.append(value)

    return tuple(sorted(set(indices)))


def lcm(*values):
    """ Least common multiple of some positive integers. """
    result = 1
    for value in values:
        result = result * value // gcd(result, value)
    return result


def euler_phi(n):
    """ Euler's totient of a positive integer. """
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def compose_permutations(p, q):
    """
    Compose two permutations given in one-line notation (tuples of images of 1..n).

    Returns p∘q, i.e. q is applied first.

    """
    return tuple(p[q[k] - 1] for k in range(len(q)))


def format_root(vector):
    """
    Write a root in the shorthand 1^m2^n..., where a coefficient of one is left off the exponent and zero
    coefficients are skipped. Negative roots get a leading minus sign.

    Parameters
    ----------
    vector : sequence of int
        Root coordinates in the simple root basis. Must be sign-pure.

    Returns
    -------
    label : str
        E.g. (1, 2) -> '12^2', (3, 5) -> '1^32^5'. Indices above 9 are wrapped in brackets.

    """

    sign = ''
    if any(v < 0 for v in vector):
        sign = '-'
        vector = [-v for v in vector]

    parts = []
    for index, coefficient in enumerate(vector, start=1):
        if coefficient == 0:
            continue
        name = str(index) if index < 10 else f'[{index}]'
        parts.append(name if coefficient == 1 else f'{name}^{coefficient}')

    return sign + ''.join(parts)


def _warn(*args, **kwargs):
    """ Custom warning function which doesn't print the code to screen. """
    msg = warnings.WarningMessage(*args, **kwargs)
    print(f'{msg.message} ({msg.filename}:{msg.lineno})')


# Update the warnings module with the custom warning function and then make warn an object in this module.
warnings.showwarning = _warn
warn = warnings.warn
