"""
The Weyl groupoid of a Cartan scheme as explicit integer matrices.

Morphisms act on Z^I with the column convention (column j is the image of alpha_j). Words are always written in
the order the simple reflections are applied, so the word (i1, i2) starting at a is sigma_i2^rho_i1(a) sigma_i1^a.

"""

from collections import deque, namedtuple
from functools import lru_cache

import numpy as np

from weylkit.core import is_connected
from weylkit.roots import FINITE as ROOTS_FINITE, m_value, root_closure
from weylkit.utilities.general import euler_phi, lcm

DEFAULT_HOM_CAP = 10**5
# Entries beyond this are treated as a runaway closure rather than risking int64 overflow.
ENTRY_LIMIT = 2**40

FINITE = 'finite'
CAP_EXCEEDED = 'cap_exceeded'
INFINITE = 'infinite'

InfiniteOrderWitness = namedtuple('InfiniteOrderWitness', ['object', 'word'])


class NotFinite(ValueError):
    pass


class NotConnected(ValueError):
    pass


class Morphism(object):
    """
    A morphism source -> target of the Weyl groupoid.

    Two morphisms are equal when their endpoints and matrices are; the word is only a record of how the morphism
    was reached and takes no part in comparisons.

    Attributes
    ----------
    source, target : str
        Object ids.
    matrix : np.ndarray
        Read-only theta x theta integer matrix.
    word : tuple
        Indices of the simple reflections in the order they are applied, or None if unknown.

    """

    def __init__(self, source, target, matrix, word=None):
        matrix = np.array(matrix, dtype=np.int64)
        matrix.flags.writeable = False
        self.source = source
        self.target = target
        self.matrix = matrix
        self.word = None if word is None else tuple(word)

    @property
    def length(self):
        """ Length of the stored word (which is reduced for anything found by breadth first search). """
        return None if self.word is None else len(self.word)

    def compose(self, other):
        """ self o other, i.e. `other' first. """
        if other.target != self.source:
            raise ValueError(f'Cannot compose: {other.target!r} is not {self.source!r}')
        word = None
        if self.word is not None and other.word is not None:
            word = other.word + self.word
        return Morphism(other.source, self.target, self.matrix.astype(object) @ other.matrix.astype(object), word)

    def inverse(self, scheme):
        """ The inverse morphism, walking the word backwards from the target. """
        if self.word is None:
            raise ValueError('The inverse needs the word of the morphism')
        return morphism_from_word(scheme, self.target, tuple(reversed(self.word)))

    def determinant(self):
        """ Exact determinant by fraction-free (Bareiss) elimination on Python integers. """
        m = self.matrix.tolist()
        rank = len(m)
        sign, previous = 1, 1
        for k in range(rank - 1):
            if m[k][k] == 0:
                pivot = next((r for r in range(k + 1, rank) if m[r][k] != 0), None)
                if pivot is None:
                    return 0
                m[k], m[pivot] = m[pivot], m[k]
                sign = -sign
            for i in range(k + 1, rank):
                for j in range(k + 1, rank):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // previous
            previous = m[k][k]
        return sign * m[-1][-1]

    def __eq__(self, other):
        return (isinstance(other, Morphism) and self.source == other.source and self.target == other.target
                and np.array_equal(self.matrix, other.matrix))

    def __hash__(self):
        return hash((self.source, self.target, self.matrix.tobytes()))

    def __repr__(self):
        return f'Morphism({self.source!r} -> {self.target!r}, word={self.word}, matrix={self.matrix.tolist()})'


def simple_reflection(s, i, a):
    """ sigma_i^a: a -> rho_i(a), alpha_j -> alpha_j - c^a_ij alpha_i. """
    return Morphism(a, s.rho(i, a), s.reflection_matrix(i, a), (i,))


def identity(s, a):
    return Morphism(a, a, np.eye(s.rank, dtype=np.int64), ())


def morphism_from_word(s, a, word):
    """ Apply the simple reflections of `word' in order, starting at object a. Exact; OverflowError past int64. """
    matrix = np.eye(s.rank, dtype=object)
    b = a
    for i in word:
        matrix = s.reflection_matrix(i, b).astype(object) @ matrix
        b = s.rho(i, b)
    return Morphism(a, b, matrix, word)


def _breadth_first(s, a):
    """
    Yield every morphism with source a, each once, in order of length and, within a length, by the word with
    indices ascending. Raises OverflowError if the entries run away.

    """

    # One step multiplies entries by at most rank (1 + max |c|); past int64 the products are taken exactly.
    exact = ENTRY_LIMIT * s.rank * (1 + int(np.abs(s.cartan).max())) >= 2**63
    start = identity(s, a)
    seen = {(a, start.matrix.tobytes())}
    yield start
    frontier = [start]
    while frontier:
        following = []
        for f in frontier:
            for i in range(1, s.rank + 1):
                if exact:
                    matrix = s.reflection_matrix(i, f.target).astype(object) @ f.matrix.astype(object)
                else:
                    matrix = s.reflection_matrix(i, f.target) @ f.matrix
                if np.abs(matrix).max() > ENTRY_LIMIT:
                    raise OverflowError(f'Matrix entries beyond {ENTRY_LIMIT} after the word {f.word + (i,)}')
                matrix = matrix.astype(np.int64)
                target = s.rho(i, f.target)
                key = (target, matrix.tobytes())
                if key in seen:
                    continue
                seen.add(key)
                g = Morphism(a, target, matrix, f.word + (i,))
                following.append(g)
                yield g
        frontier = following


@lru_cache(maxsize=None)
def finite_order_exponent(rank):
    """
    The least common multiple of every d with phi(d) <= rank. Any element of finite order in GL_rank(Z) has
    eigenvalues which are d-th roots of unity for such d, so its order divides this number.

    """

    # phi(d) >= sqrt(d / 2), so nothing beyond 2 rank^2 qualifies.
    return lcm(*[d for d in range(1, 2 * rank * rank + 3) if euler_phi(d) <= rank])


def has_finite_order(matrix):
    """ Decide whether an integer matrix of determinant +-1 has finite order. Exact. """
    matrix = np.asarray(matrix)
    rank = matrix.shape[0]
    if abs(int(np.trace(matrix))) > rank:
        return False
    power = np.linalg.matrix_power(matrix.astype(object), finite_order_exponent(rank))
    return bool(np.array_equal(power, np.eye(rank, dtype=np.int64)))


def find_infinite_order(s, cap=2000, noisy=False):
    """
    Search for an endomorphism of infinite order in the groupoid.

    Explores the morphisms starting at the first object breadth first. Finding an endomorphism of infinite order
    proves Hom(a) is infinite, and then the groupoid and every root system of a connected scheme are too.

    Parameters
    ----------
    s : CartanScheme
    cap : int, optional
        Give up after this many morphisms.
    noisy : bool, optional
        Print what was found.

    Returns
    -------
    witness : InfiniteOrderWitness, None
        The object and the word of the endomorphism, or None if nothing turned up (which proves nothing).

    """

    a = s.objects[0]
    try:
        for count, g in enumerate(_breadth_first(s, a)):
            if count > cap:
                break
            if g.target == a and g.word and not has_finite_order(g.matrix):
                if noisy:
                    print(f'Endomorphism of infinite order at {a}: {g.word}')
                return InfiniteOrderWitness(a, g.word)
    except OverflowError:
        pass

    return None


class WeylGroupoid(object):
    """
    The morphisms of a Weyl groupoid grouped by (source, target).

    Attributes
    ----------
    scheme : CartanScheme
    status : str
        FINITE, CAP_EXCEEDED or INFINITE. Only FINITE groupoids are complete.
    morphisms : dict
        (source, target) -> tuple of Morphism, in breadth first order, so the stored words are reduced and the
        lengths are the true lengths.
    witness : InfiniteOrderWitness, None
        Set when the status is INFINITE.

    """

    def __init__(self, scheme, status, morphisms, witness=None):
        self.scheme = scheme
        self.status = status
        self.morphisms = {pair: tuple(found) for pair, found in morphisms.items()}
        self.witness = witness
        self._lengths = {m: m.length for found in self.morphisms.values() for m in found}

    @property
    def finite(self):
        return self.status == FINITE

    def size(self):
        """ Total number of morphisms. """
        return sum(len(found) for found in self.morphisms.values())

    def hom(self, a, b):
        return self.morphisms.get((a, b), ())

    def length(self, morphism):
        """ The length of a morphism (the number of simple reflections in a shortest word). """
        return self._lengths[morphism]

    def from_object(self, a):
        return [m for b in self.scheme.objects for m in self.hom(a, b)]

    def __repr__(self):
        return f'WeylGroupoid(status={self.status}, size={self.size()})'


def generate_groupoid(s, cap=DEFAULT_HOM_CAP, detect_infinite=True, noisy=False):
    """
    Generate the Weyl groupoid breadth first.

    Parameters
    ----------
    s : CartanScheme
    cap : int, optional
        Stop once any hom-set holds more than this many morphisms. Defaults to DEFAULT_HOM_CAP.
    detect_infinite : bool, optional
        Test every endomorphism as it appears and stop with status INFINITE at the first one of infinite order.
    noisy : bool, optional
        Print progress per source object.

    Returns
    -------
    W : WeylGroupoid

    """

    morphisms = {(a, b): [] for a in s.objects for b in s.objects}
    for a in s.objects:
        try:
            for g in _breadth_first(s, a):
                found = morphisms[(a, g.target)]
                found.append(g)
                if len(found) > cap:
                    if noisy:
                        print(f'Hom({a}, {g.target}) exceeded the cap of {cap}')
                    return WeylGroupoid(s, CAP_EXCEEDED, morphisms)
                if detect_infinite and g.target == a and g.word and not has_finite_order(g.matrix):
                    return WeylGroupoid(s, INFINITE, morphisms, InfiniteOrderWitness(a, g.word))
        except OverflowError:
            return WeylGroupoid(s, CAP_EXCEEDED, morphisms)
        if noisy:
            print(f'{a}: {sum(len(morphisms[(a, b)]) for b in s.objects)} morphisms')

    return WeylGroupoid(s, FINITE, morphisms)


def _require_finite(W):
    if W.status != FINITE:
        raise NotFinite(f'The groupoid is not known to be finite (status {W.status})')


def hom_size(W, a, b):
    """ |Hom(a, b)|. """
    _require_finite(W)
    return len(W.hom(a, b))


def stabilizer(W, a):
    """ The matrices of Hom(a) = Hom(a, a), identity first. """
    _require_finite(W)
    return [m.matrix for m in W.hom(a, a)]


def max_length(W, a):
    """ The largest length of a morphism with source a. """
    _require_finite(W)
    return max(m.length for m in W.from_object(a))


def longest_morphism(W, a):
    """ The first morphism of maximal length with source a, in breadth first order. """
    _require_finite(W)
    longest = max(m.length for m in W.from_object(a))
    candidates = [m for m in W.from_object(a) if m.length == longest]
    return min(candidates, key=lambda m: m.word)


def longest_word(W, a):
    """ The breadth first word of `longest_morphism'. """
    return longest_morphism(W, a).word


def positive_roots_along(s, a, word):
    """
    The roots beta_1..beta_n read off a reduced word.

    With a_0 = a and a_k = rho_ik(a_k-1), let S_k be the reflection i_k computed with the matrix at a_k-1. Then
    beta_n = S_1 S_2 ... S_n-1 (alpha_in). For the word of a longest morphism starting at a these are exactly the
    positive roots at a, each once.

    Returns
    -------
    betas : list
        Tuples of ints.

    """

    betas = []
    product = np.eye(s.rank, dtype=np.int64)
    b = a
    for i in word:
        betas.append(tuple(int(v) for v in product[:, i - 1]))
        product = product @ s.reflection_matrix(i, b)
        b = s.rho(i, b)
    return betas


def _key(matrix):
    return tuple(np.asarray(matrix).ravel().tolist())


def matrix_group(generators, limit=10**4):
    """
    Close some invertible integer matrices under multiplication.

    Parameters
    ----------
    generators : list
        Square integer matrices of the same size, each of finite order.
    limit : int, optional
        Raise NotFinite once the group is larger than this.

    Returns
    -------
    group : list
        The elements as read-only arrays, identity first, in breadth first order.

    """

    generators = [np.asarray(g, dtype=np.int64) for g in generators]
    rank = generators[0].shape[0] if generators else 0
    start = np.eye(rank, dtype=np.int64)
    elements = {_key(start): start}
    queue = deque([start])
    while queue:
        g = queue.popleft()
        for h in generators:
            product = g @ h
            key = _key(product)
            if key not in elements:
                elements[key] = product
                if len(elements) > limit:
                    raise NotFinite(f'The group generated has more than {limit} elements')
                queue.append(product)

    group = list(elements.values())
    for g in group:
        g.flags.writeable = False
    return group


class StabilizerPresentation(object):
    """
    Generators and relations for Hom(a) obtained from the groupoid presentation.

    With spanning morphisms X_b in Hom(a, b), a morphism g in Hom(b, c) goes to X_c^-1 g X_b in Hom(a).

    Attributes
    ----------
    base : str
        The object a.
    spanning : dict
        b -> Morphism X_b.
    generators : dict
        (i, b) -> matrix of the image of sigma_i^b.
    relations : list
        Tuples (b, word, labels, value): a relation at b given by its word, the generator labels it turns into (in
        the order applied) and the matrix it evaluates to.

    """

    def __init__(self, base, spanning, generators, relations):
        self.base = base
        self.spanning = spanning
        self.generators = generators
        self.relations = relations

    def group(self, limit=10**4):
        """ The subgroup of Hom(a) generated by the images of the generators. """
        return matrix_group(list(self.generators.values()), limit=limit)

    def evaluate(self, labels):
        """ Multiply the generators named in `labels', first label applied first. """
        rank = next(iter(self.generators.values())).shape[0]
        value = np.eye(rank, dtype=np.int64)
        for label in labels:
            value = self.generators[label] @ value
        return value


def _shortest_object_words(s, a):
    """ For every object b, the lexicographically first shortest word leading from a to b. """
    words = {a: ()}
    queue = deque([a])
    while queue:
        b = queue.popleft()
        for i in range(1, s.rank + 1):
            c = s.rho(i, b)
            if c not in words:
                words[c] = words[b] + (i,)
                queue.append(c)
    return words


def stabilizer_presentation(W, a, spanning=None, root_system=None):
    """
    Present Hom(a) by the images of the simple reflections and of the Coxeter relations of the groupoid.

    Parameters
    ----------
    W : WeylGroupoid
        A finite groupoid of a connected scheme.
    a : str
        The base object.
    spanning : dict, optional
        b -> word from a to b. Defaults to the lexicographically first shortest word.
    root_system : RootSystem, optional
        Where to read the m-values from. Computed with `roots.root_closure' if not given.

    Returns
    -------
    presentation : StabilizerPresentation

    Raises
    ------
    NotFinite, NotConnected

    """

    _require_finite(W)
    s = W.scheme
    if not is_connected(s):
        raise NotConnected('Stabiliser presentations need a connected scheme')

    if root_system is None:
        verdict = root_closure(s)
        if verdict.status != ROOTS_FINITE:
            raise NotFinite('The scheme has no finite root system, so the m-values are unknown')
        root_system = verdict.root_system

    words = dict(_shortest_object_words(s, a))
    if spanning is not None:
        words.update({b: tuple(word) for b, word in spanning.items()})
    X = {b: morphism_from_word(s, a, words[b]) for b in s.objects}
    for b, x in X.items():
        if x.target != b:
            raise ValueError(f'The spanning word {x.word} leads to {x.target!r}, not {b!r}')
    X_inverse = {b: x.inverse(s) for b, x in X.items()}

    generators = {}
    for b in s.objects:
        for i in range(1, s.rank + 1):
            c = s.rho(i, b)
            generators[(i, b)] = X_inverse[c].matrix @ s.reflection_matrix(i, b) @ X[b].matrix

    presentation = StabilizerPresentation(a, X, generators, [])

    def relation(b, word):
        labels = []
        current = b
        for i in word:
            labels.append((i, current))
            current = s.rho(i, current)
        labels = tuple(labels)
        presentation.relations.append((b, tuple(word), labels, presentation.evaluate(labels)))

    for b in s.objects:
        for i in range(1, s.rank + 1):
            relation(b, (i, i))
        for j in range(1, s.rank + 1):
            for k in range(j + 1, s.rank + 1):
                m = m_value(root_system, b, j, k)
                relation(b, (k, j) * m)

    return presentation


CoxeterType = namedtuple('CoxeterType', ['label', 'order', 'coxeter_matrix'])

# Tried in this order, so a group which is both B3 and A1xA3 is reported as B3.
COXETER_CATALOG = (
    CoxeterType('A1', 2, ((1,),)),
    CoxeterType('A1×A1', 4, ((1, 2), (2, 1))),
    CoxeterType('A2', 6, ((1, 3), (3, 1))),
    CoxeterType('B2', 8, ((1, 4), (4, 1))),
    CoxeterType('G2', 12, ((1, 6), (6, 1))),
    CoxeterType('A3', 24, ((1, 3, 2), (3, 1, 3), (2, 3, 1))),
    CoxeterType('B3', 48, ((1, 3, 2), (3, 1, 4), (2, 4, 1))),
)

UNKNOWN = 'Unknown'


def _element_order(matrix, identity_key, limit):
    power = matrix
    for order in range(1, limit + 1):
        if _key(power) == identity_key:
            return order
        power = power @ matrix
    return None


def identify_coxeter_type(group):
    """
    Match a finite matrix group against the Coxeter catalogue.

    For each catalogue entry of the right order, look for involutions t_1..t_r in the group with
    order(t_i t_j) = m_ij which generate the whole group. The Coxeter group then maps onto the group and both have
    the same order, so they are isomorphic.

    Parameters
    ----------
    group : list
        Every element of the group as a square integer matrix.

    Returns
    -------
    label : str
        The catalogue label or 'Unknown'.

    """

    group = [np.asarray(g, dtype=np.int64) for g in group]
    order = len(group)
    if order < 2:
        return UNKNOWN
    rank = group[0].shape[0]
    identity_key = _key(np.eye(rank, dtype=np.int64))
    involutions = [g for g in group if _key(g) != identity_key and _key(g @ g) == identity_key]

    for entry in COXETER_CATALOG:
        if entry.order != order:
            continue
        r = len(entry.coxeter_matrix)

        def search(chosen):
            if len(chosen) == r:
                return len(matrix_group(chosen, limit=order)) == order
            k = len(chosen)
            for t in involutions:
                if all(_element_order(u @ t, identity_key, order) == entry.coxeter_matrix[index][k]
                       for index, u in enumerate(chosen)):
                    if search(chosen + [t]):
                        return True
            return False

        try:
            if search([]):
                return entry.label
        except NotFinite:
            continue

    return UNKNOWN
