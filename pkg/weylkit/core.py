"""
Cartan matrices and Cartan schemes.

A Cartan scheme is a finite set of objects A, an involution rho_i of A for each index i in I = {1..theta}, and a
generalised Cartan matrix C^a for each object. Everything here is exact integer arithmetic on numpy int64 arrays
which are marked read-only once a scheme is built, so schemes can be shared freely between worker processes.

Indices are 1-based everywhere in the public interface (as in the JSON scheme files) and 0-based inside the arrays.

"""

import itertools
import json
from collections import deque

import networkx as nx
import numpy as np

from weylkit.utilities.general import compose_permutations, warn


class CartanError(ValueError):
    """ Base class for anything which makes a matrix or scheme invalid. """
    pass


class DiagonalNotTwo(CartanError):
    def __init__(self, i, value=None):
        self.i = i
        self.value = value
        super().__init__(f'Diagonal entry ({i},{i}) is {value}, not 2')


class PositiveOffDiagonal(CartanError):
    def __init__(self, i, j, value=None):
        self.i, self.j = i, j
        self.value = value
        super().__init__(f'Off-diagonal entry ({i},{j}) is positive ({value})')


class AsymmetricZero(CartanError):
    def __init__(self, i, j):
        self.i, self.j = i, j
        super().__init__(f'Entry ({i},{j}) is zero but entry ({j},{i}) is not')


class ReflectionNotInvolutive(CartanError):
    def __init__(self, i, obj=None):
        self.i = i
        self.object = obj
        super().__init__(f'Reflection {i} applied twice does not fix object {obj!r}')


class C2Violation(CartanError):
    def __init__(self, a, i, j):
        self.a, self.i, self.j = a, i, j
        super().__init__(f'Entry ({i},{j}) of the matrix at {a!r} differs from the one at its reflection {i} image')


class EmptySubset(CartanError):
    def __init__(self):
        super().__init__('The index subset must not be empty')


class RankMismatch(CartanError):
    def __init__(self, rank1, rank2):
        self.ranks = (rank1, rank2)
        super().__init__(f'Ranks differ: {rank1} != {rank2}')


class ObjectCountMismatch(CartanError):
    def __init__(self, count1, count2):
        self.counts = (count1, count2)
        super().__init__(f'Object counts differ: {count1} != {count2}')


class InvalidPermutation(CartanError):
    def __init__(self, permutation, size):
        self.permutation = permutation
        super().__init__(f'{permutation!r} is not a permutation of 1..{size}')


class SchemeFormatError(CartanError):
    """ Malformed input: unknown or missing keys, unknown objects, ragged grids. """
    pass


class CartanMatrix(object):
    """
    A generalised Cartan matrix. The entry (i, j) is c_ij, so the simple reflection i uses row i.

    Attributes
    ----------
    rank : int
        The size theta of the index set.
    entries : np.ndarray
        Read-only theta x theta int64 array.

    """

    def __init__(self, entries):
        entries = np.array(entries, dtype=np.int64)
        entries.flags.writeable = False
        self.entries = entries
        self.rank = entries.shape[0]

    def entry(self, i, j):
        """ The entry c_ij with 1-based indices. """
        return int(self.entries[i - 1, j - 1])

    def tolist(self):
        return self.entries.tolist()

    def __eq__(self, other):
        return isinstance(other, CartanMatrix) and np.array_equal(self.entries, other.entries)

    def __hash__(self):
        return hash((self.rank, self.entries.tobytes()))

    def __repr__(self):
        return f'CartanMatrix({self.tolist()})'


def _is_integer(value):
    return isinstance(value, (int, np.integer)) and not isinstance(value, (bool, np.bool_))


def _as_grid(grid):
    """ Turn nested lists of integers into a square int64 array or complain. Floats and booleans are refused. """
    if isinstance(grid, np.ndarray):
        integral = grid.dtype.kind in 'iu'
    else:
        try:
            integral = all(_is_integer(x) for row in grid for x in row)
        except TypeError as error:
            raise SchemeFormatError(f'Not an integer grid: {grid!r} ({error})')
    if not integral:
        raise SchemeFormatError(f'Not an integer grid: {grid!r}')
    try:
        array = np.array(grid, dtype=np.int64)
    except (ValueError, TypeError, OverflowError) as error:
        raise SchemeFormatError(f'Not an integer grid: {grid!r} ({error})')
    if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] < 1:
        raise SchemeFormatError(f'Matrix must be square with at least one row, got shape {array.shape}')
    return array


def _check_matrix(entries, weak=False):
    """ Raise on the first entry (row-major) which breaks (M1) or (M2). With `weak', only the diagonal is checked. """
    rank = entries.shape[0]
    for i in range(rank):
        for j in range(rank):
            value = int(entries[i, j])
            if i == j:
                if value != 2:
                    raise DiagonalNotTwo(i + 1, value)
            elif weak:
                continue
            elif value > 0:
                raise PositiveOffDiagonal(i + 1, j + 1, value)
            elif value == 0 and entries[j, i] != 0:
                raise AsymmetricZero(i + 1, j + 1)


def validate_cartan_matrix(grid):
    """
    Check (M1) and (M2) on an integer grid.

    Parameters
    ----------
    grid : list, np.ndarray
        Square integer grid, row i holding c_i1..c_itheta.

    Returns
    -------
    matrix : CartanMatrix
        The validated matrix.

    Raises
    ------
    DiagonalNotTwo, PositiveOffDiagonal, AsymmetricZero, SchemeFormatError

    """

    entries = _as_grid(grid)
    _check_matrix(entries)
    return CartanMatrix(entries)


class CartanScheme(object):
    """
    A Cartan scheme with objects held in a fixed order.

    The constructor only checks shapes; use `validate_scheme' (or `scheme_from_dict', `build_scheme') for the
    axioms.

    Attributes
    ----------
    rank : int
        theta = |I|.
    objects : tuple
        The object ids (strings) in their canonical order.
    reflections : np.ndarray
        Read-only (rank, n_objects) array; reflections[i - 1, p] is the position of rho_i(objects[p]).
    cartan : np.ndarray
        Read-only (n_objects, rank, rank) array of the matrices C^a.

    Methods
    -------
    position, rho, matrix, c, reflection_matrix

    """

    def __init__(self, objects, reflections, cartan):
        self.objects = tuple(str(a) for a in objects)
        if len(set(self.objects)) != len(self.objects):
            raise SchemeFormatError(f'Duplicate object ids in {self.objects}')
        if not self.objects:
            raise SchemeFormatError('A scheme needs at least one object')
        self._position = {a: p for p, a in enumerate(self.objects)}

        reflections = np.array(reflections, dtype=np.int64)
        cartan = np.array(cartan, dtype=np.int64)
        n = len(self.objects)
        if cartan.ndim != 3 or cartan.shape[0] != n or cartan.shape[1] != cartan.shape[2]:
            raise SchemeFormatError(f'Expected {n} square matrices, got an array of shape {cartan.shape}')
        self.rank = cartan.shape[1]
        if reflections.shape != (self.rank, n):
            raise SchemeFormatError(f'Expected reflections of shape {(self.rank, n)}, got {reflections.shape}')
        if reflections.size and (reflections.min() < 0 or reflections.max() >= n):
            raise SchemeFormatError('Reflections point at objects which do not exist')

        # sigma[i, p] is the matrix of the simple reflection i at object p: identity with row i replaced by
        # e_i - (row i of C^a), so column j is alpha_j - c_ij alpha_i.
        sigma = np.tile(np.eye(self.rank, dtype=np.int64), (self.rank, n, 1, 1))
        for i in range(self.rank):
            sigma[i, :, i, :] -= cartan[:, i, :]

        for array in (reflections, cartan, sigma):
            array.flags.writeable = False
        self.reflections = reflections
        self.cartan = cartan
        self._sigma = sigma

    @property
    def n_objects(self):
        return len(self.objects)

    def position(self, a):
        """ Position of object `a' in the object order. """
        try:
            return self._position[a]
        except KeyError:
            raise SchemeFormatError(f'Unknown object {a!r}')

    def rho(self, i, a):
        """ rho_i(a) for 1-based index i and object id a. """
        return self.objects[self.reflections[i - 1, self.position(a)]]

    def matrix(self, a):
        return CartanMatrix(self.cartan[self.position(a)])

    def c(self, a, i, j):
        """ The entry c^a_ij. """
        return int(self.cartan[self.position(a), i - 1, j - 1])

    def reflection_matrix(self, i, a):
        """ The (read-only) matrix of sigma_i^a. """
        return self._sigma[i - 1, self.position(a)]

    def key(self):
        return (self.objects, self.reflections.tobytes(), self.cartan.tobytes(), self.rank)

    def __eq__(self, other):
        return isinstance(other, CartanScheme) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f'CartanScheme(rank={self.rank}, objects={list(self.objects)})'


def _check_scheme(s, weak=False):
    """ Check the matrices, then (C1), then (C2). """
    for p in range(s.n_objects):
        _check_matrix(s.cartan[p], weak=weak)

    n = s.n_objects
    for i in range(s.rank):
        image = s.reflections[i]
        for p in range(n):
            if image[image[p]] != p:
                raise ReflectionNotInvolutive(i + 1, s.objects[p])

    if weak:
        return

    for p in range(n):
        for i in range(s.rank):
            q = s.reflections[i, p]
            for j in range(s.rank):
                if s.cartan[p, i, j] != s.cartan[q, i, j]:
                    raise C2Violation(s.objects[p], i + 1, j + 1)


def validate_scheme(data, weak=False):
    """
    Check a scheme for (C1), (C2) and (M1), (M2) in every object.

    Parameters
    ----------
    data : dict, CartanScheme
        Either the JSON style dictionary (see `scheme_from_dict') or an already built scheme.
    weak : bool, optional
        Only check that the diagonals are 2 and that every rho_i is an involution. Used to check that the other
        conditions follow from the root system axioms.

    Returns
    -------
    s : CartanScheme

    """

    if isinstance(data, CartanScheme):
        s = data
    else:
        s = _parse_scheme(data)
    _check_scheme(s, weak=weak)
    return s


_SCHEME_KEYS = {'rank', 'objects', 'reflections', 'cartan'}


def _parse_scheme(data):
    if not isinstance(data, dict):
        raise SchemeFormatError('A scheme must be a JSON object')
    unknown = set(data) - _SCHEME_KEYS
    if unknown:
        raise SchemeFormatError(f'Unknown keys: {", ".join(sorted(unknown))}')
    missing = _SCHEME_KEYS - set(data)
    if missing:
        raise SchemeFormatError(f'Missing keys: {", ".join(sorted(missing))}')

    rank = data['rank']
    if not isinstance(rank, int) or isinstance(rank, bool) or rank < 1:
        raise SchemeFormatError(f'Rank must be a positive integer, got {rank!r}')
    objects = [str(a) for a in data['objects']]
    position = {a: p for p, a in enumerate(objects)}

    reflections = data['reflections']
    expected = {str(i) for i in range(1, rank + 1)}
    if set(reflections) != expected:
        raise SchemeFormatError(f'Reflection keys must be exactly {sorted(expected, key=int)}')
    table = np.zeros((rank, len(objects)), dtype=np.int64)
    for key, mapping in reflections.items():
        if set(mapping) != set(objects):
            raise SchemeFormatError(f'Reflection {key} must map every object exactly once')
        for a, b in mapping.items():
            if b not in position:
                raise SchemeFormatError(f'Reflection {key} sends {a!r} to the unknown object {b!r}')
            table[int(key) - 1, position[a]] = position[b]

    cartan = data['cartan']
    if set(cartan) != set(objects):
        raise SchemeFormatError('Every object needs exactly one Cartan matrix')
    matrices = []
    for a in objects:
        grid = _as_grid(cartan[a])
        if grid.shape[0] != rank:
            raise SchemeFormatError(f'Matrix at {a!r} has size {grid.shape[0]}, expected {rank}')
        matrices.append(grid)

    return CartanScheme(objects, table, np.array(matrices))


def scheme_from_dict(data, weak=False):
    """ Build and validate a scheme from the JSON layout. Unknown keys are rejected. """
    return validate_scheme(data, weak=weak)


def scheme_to_dict(s):
    """ The JSON layout of a scheme. """
    return {
        'rank': s.rank,
        'objects': list(s.objects),
        'reflections': {str(i + 1): {a: s.objects[s.reflections[i, p]] for p, a in enumerate(s.objects)}
                        for i in range(s.rank)},
        'cartan': {a: s.cartan[p].tolist() for p, a in enumerate(s.objects)},
    }


def read_scheme(path, weak=False):
    """ Read and validate a scheme JSON file. """
    with open(path, 'r', encoding='utf-8') as f:
        try:
            data = json.load(f)
        except (json.JSONDecodeError, UnicodeDecodeError) as error:
            raise SchemeFormatError(f'{path}: {error}')
    return scheme_from_dict(data, weak=weak)


def write_scheme(s, path):
    """ Write a scheme as sorted, indented JSON with a trailing newline. """
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(dumps_scheme(s))


def dumps_scheme(s):
    return json.dumps(scheme_to_dict(s), sort_keys=True, indent=2) + '\n'


def build_scheme(objects, swaps, cartan):
    """
    Convenience constructor.

    Parameters
    ----------
    objects : list
        Object ids in order.
    swaps : dict
        Maps an index i to the list of object pairs (a, b) swapped by rho_i. Indices not given act trivially.
    cartan : dict, list
        Either a dict of object id to grid, or a single grid used for every object.

    Returns
    -------
    s : CartanScheme
        The validated scheme.

    """

    objects = [str(a) for a in objects]
    if isinstance(cartan, dict):
        grids = [_as_grid(cartan[a]) for a in objects]
    else:
        grids = [_as_grid(cartan)] * len(objects)
    rank = grids[0].shape[0]
    position = {a: p for p, a in enumerate(objects)}
    table = np.tile(np.arange(len(objects), dtype=np.int64), (rank, 1))
    for i, pairs in swaps.items():
        for a, b in pairs:
            table[i - 1, position[a]] = position[b]
            table[i - 1, position[b]] = position[a]

    return validate_scheme(CartanScheme(objects, table, np.array(grids)))


def one_object_scheme(grid, name='x'):
    """ The scheme with a single object and the given matrix. """
    return build_scheme([name], {}, grid)


def default_object_names(n):
    """ x, y, z for small schemes, a1..an otherwise. """
    if n <= 3:
        return ['x', 'y', 'z'][:n]
    return [f'a{k}' for k in range(1, n + 1)]


def standard_cartan_matrix(series, rank):
    """
    The Cartan matrix of a finite type in our convention, c_ij = 2(alpha_i, alpha_j)/(alpha_i, alpha_i).

    For B_n the last simple root is short, so row n holds the -2; for C_n it is row n - 1. F4 has its double bond
    between nodes 2 and 3 with row 3 holding the -2 and G2 is [[2, -3], [-1, 2]]. D_n attaches node n to node
    n - 2; E_n uses the chain 1-3-4-...-n with node 2 on node 4.

    """

    series = series.upper()
    m = 2 * np.eye(rank, dtype=np.int64)

    def bond(i, j):
        m[i - 1, j - 1] = m[j - 1, i - 1] = -1

    if series == 'A':
        for k in range(1, rank):
            bond(k, k + 1)
    elif series in ('B', 'C') and rank >= 2:
        for k in range(1, rank):
            bond(k, k + 1)
        if series == 'B':
            m[rank - 1, rank - 2] = -2
        else:
            m[rank - 2, rank - 1] = -2
    elif series == 'D' and rank >= 4:
        for k in range(1, rank - 1):
            bond(k, k + 1)
        bond(rank - 2, rank)
    elif series == 'E' and rank in (6, 7, 8):
        bond(1, 3)
        bond(2, 4)
        for k in range(3, rank):
            bond(k, k + 1)
    elif series == 'F' and rank == 4:
        bond(1, 2)
        bond(2, 3)
        bond(3, 4)
        m[2, 1] = -2
    elif series == 'G' and rank == 2:
        m[0, 1] = -3
        m[1, 0] = -1
    else:
        raise ValueError(f'No finite type {series}{rank}')

    return m


def object_change_graph(s):
    """ The object change diagram as a networkx MultiGraph keyed by the reflection index. """
    return object_change_diagram(s).to_networkx()


def is_connected(s):
    """ True if the reflections act transitively on the objects. """
    graph = object_change_graph(s)
    return nx.is_connected(graph)


def restrict(s, J):
    """
    Restrict a scheme to the indices in J.

    The result is indexed 1..|J| with new index k standing for the k-th smallest element of J.

    """

    J = sorted(set(J))
    if not J:
        raise EmptySubset()
    if J[0] < 1 or J[-1] > s.rank:
        raise SchemeFormatError(f'Indices {J} are not all within 1..{s.rank}')
    keep = np.array(J) - 1

    return CartanScheme(s.objects, s.reflections[keep], s.cartan[:, keep][:, :, keep])


def decompose_scheme(s):
    """
    The finest partition of the indices such that c^a_ij = 0 for every object a whenever i and j are in
    different blocks.

    Returns
    -------
    blocks : list
        Sorted tuples of 1-based indices, ordered by their smallest element.

    """

    graph = nx.Graph()
    graph.add_nodes_from(range(1, s.rank + 1))
    nonzero = np.any(s.cartan != 0, axis=0)
    for i, j in zip(*np.nonzero(nonzero)):
        if i != j:
            graph.add_edge(int(i) + 1, int(j) + 1)

    blocks = [tuple(sorted(component)) for component in nx.connected_components(graph)]
    return sorted(blocks)


def is_standard(s):
    """ True if every object carries the same Cartan matrix. """
    return bool(np.all(s.cartan == s.cartan[0]))


def _propagate(s1, s2, perm, candidates, assignment, a, b):
    """ Assign a -> b and follow the reflections until the component is mapped or a conflict shows up. """
    mapped = dict(assignment)
    mapped[a] = b
    used = set(mapped.values())
    queue = deque([a])
    while queue:
        u = queue.popleft()
        for i in range(s1.rank):
            v = int(s1.reflections[i, u])
            w = int(s2.reflections[perm[i], mapped[u]])
            if v in mapped:
                if mapped[v] != w:
                    return None
            else:
                if w in used or w not in candidates[v]:
                    return None
                mapped[v] = w
                used.add(w)
                queue.append(v)
    return mapped


def _object_maps(s1, s2, perm, candidates, assignment):
    """ Depth first search over object bijections compatible with the index permutation `perm'. """
    pending = next((a for a in range(s1.n_objects) if a not in assignment), None)
    if pending is None:
        yield assignment
        return
    used = set(assignment.values())
    for b in sorted(candidates[pending]):
        if b in used:
            continue
        extended = _propagate(s1, s2, perm, candidates, assignment, pending, b)
        if extended is not None:
            yield from _object_maps(s1, s2, perm, candidates, extended)


def iter_equivalences(s1, s2):
    """
    Generate every equivalence (phi0, phi1) from s1 to s2, index permutations in lexicographic order first.

    Each witness is a pair of dicts: phi0 maps 1-based indices of s1 to those of s2, phi1 maps object ids of s1 to
    object ids of s2, with phi1(rho_i(a)) = rho'_phi0(i)(phi1(a)) and c'^phi1(a)_phi0(i)phi0(j) = c^a_ij.

    """

    if s1.rank != s2.rank:
        raise RankMismatch(s1.rank, s2.rank)
    if s1.n_objects != s2.n_objects:
        raise ObjectCountMismatch(s1.n_objects, s2.n_objects)

    for perm in itertools.permutations(range(s1.rank)):
        inverse = np.argsort(perm)
        transported = s1.cartan[:, inverse][:, :, inverse]
        candidates = [{b for b in range(s2.n_objects) if np.array_equal(transported[a], s2.cartan[b])}
                      for a in range(s1.n_objects)]
        if not all(candidates):
            continue

        for assignment in _object_maps(s1, s2, perm, candidates, {}):
            phi0 = {i + 1: perm[i] + 1 for i in range(s1.rank)}
            phi1 = {s1.objects[a]: s2.objects[b] for a, b in sorted(assignment.items())}
            yield phi0, phi1


def schemes_equivalent(s1, s2):
    """
    Look for an equivalence between two schemes.

    Returns
    -------
    witness : tuple, None
        (phi0, phi1) as in `iter_equivalences', or None if the schemes are not equivalent.

    Raises
    ------
    RankMismatch, ObjectCountMismatch

    """

    return next(iter_equivalences(s1, s2), None)


def transport(s, perm, object_perm, names=None):
    """
    The image of a scheme under an index permutation and an object permutation.

    Parameters
    ----------
    s : CartanScheme
    perm : sequence of int
        0-based, index i goes to perm[i].
    object_perm : sequence of int
        0-based, object position p goes to object_perm[p].
    names : list, optional
        Object ids for the image. Defaults to the ids of s placed at the image positions.

    """

    perm = np.asarray(perm)
    object_perm = np.asarray(object_perm)
    inverse = np.argsort(perm)
    object_inverse = np.argsort(object_perm)
    cartan = s.cartan[object_inverse][:, inverse][:, :, inverse]
    # rho'_perm(i)(object_perm(p)) = object_perm(rho_i(p))
    reflections = object_perm[s.reflections[inverse][:, object_inverse]]
    if names is None:
        names = [s.objects[q] for q in object_inverse]
    return CartanScheme(names, reflections, cartan)


def canonical_key(s):
    """ The lexicographically smallest serialisation of s over all index and object permutations. """
    return _canonical(s)[0]


def canonical_form(s):
    """
    The representative of the equivalence class of s with the smallest serialisation, objects renamed to
    x, y, z (or a1..an).

    """

    _, perm, object_perm = _canonical(s)
    return transport(s, perm, object_perm, names=default_object_names(s.n_objects))


def _canonical(s):
    if s.n_objects > 7:
        warn(f'Canonical form over {s.n_objects}! object orders will be slow')
    best = None
    for perm in itertools.permutations(range(s.rank)):
        inverse = np.argsort(perm)
        permuted = s.cartan[:, inverse][:, :, inverse]
        reflections = s.reflections[inverse]
        for object_perm in itertools.permutations(range(s.n_objects)):
            object_perm = np.array(object_perm)
            object_inverse = np.argsort(object_perm)
            key = (tuple(permuted[object_inverse].ravel().tolist()),
                   tuple(object_perm[reflections[:, object_inverse]].ravel().tolist()))
            if best is None or key < best[0]:
                best = (key, perm, tuple(object_perm))
    return best


class ObjectChangeDiagram(object):
    """
    The object change diagram: one vertex per object and an edge labelled i between a and b whenever
    rho_i(a) = b with a != b.

    Attributes
    ----------
    vertices : tuple
        Object ids in scheme order.
    edges : tuple
        Triples (a, b, i) with a before b in the object order, sorted by (a, b, i).

    """

    def __init__(self, vertices, edges):
        self.vertices = tuple(vertices)
        self.edges = tuple(edges)

    def to_networkx(self):
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        for a, b, i in self.edges:
            graph.add_edge(a, b, key=i, label=i)
        return graph

    def labels(self, a, b):
        """ The labels of the edges between a and b. """
        return tuple(i for u, v, i in self.edges if {u, v} == {a, b})

    def degree_sequence(self):
        graph = self.to_networkx()
        return tuple(sorted((d for _, d in graph.degree()), reverse=True))

    def signature(self):
        """ Compact text form, e.g. 'x-y:1,3 y-z:2'. An edgeless diagram gives 'none'. """
        grouped = {}
        for a, b, i in self.edges:
            grouped.setdefault((a, b), []).append(str(i))
        if not grouped:
            return 'none'
        return ' '.join(f'{a}-{b}:{",".join(labels)}' for (a, b), labels in grouped.items())

    def __eq__(self, other):
        return isinstance(other, ObjectChangeDiagram) and (self.vertices, self.edges) == (other.vertices,
                                                                                          other.edges)

    def __repr__(self):
        return f'ObjectChangeDiagram({self.signature()})'


def object_change_diagram(s):
    edges = []
    for p in range(s.n_objects):
        for q in range(p + 1, s.n_objects):
            for i in range(s.rank):
                if s.reflections[i, p] == q:
                    edges.append((s.objects[p], s.objects[q], i + 1))
    return ObjectChangeDiagram(s.objects, edges)


def _subgroup(generators, size):
    """ Close a set of permutations of 1..size under composition. """
    identity = tuple(range(1, size + 1))
    elements = {identity}
    queue = deque([identity])
    while queue:
        g = queue.popleft()
        for h in generators:
            product = compose_permutations(g, h)
            if product not in elements:
                elements.add(product)
                queue.append(product)
    return elements


def coset_scheme(n, H):
    """
    The standard A_n scheme on the left cosets gH of a subgroup H of the symmetric group on 1..n+1.

    rho_i(gH) = (i, i+1)gH. Objects are named by the smallest element of the coset in one-line notation, so the
    coset of the identity comes first.

    Parameters
    ----------
    n : int
        The rank.
    H : list
        Generators of the subgroup, each a permutation of 1..n+1 in one-line notation. An empty list gives the
        trivial subgroup.

    Returns
    -------
    s : CartanScheme

    """

    size = n + 1
    generators = []
    for h in H:
        h = tuple(int(k) for k in h)
        if sorted(h) != list(range(1, size + 1)):
            raise InvalidPermutation(h, size)
        generators.append(h)
    subgroup = _subgroup(generators, size)

    coset_of = {}
    representatives = []
    # Lexicographic order meets the smallest element of each coset first.
    for g in itertools.permutations(range(1, size + 1)):
        if g in coset_of:
            continue
        index = len(representatives)
        representatives.append(g)
        for h in subgroup:
            coset_of[compose_permutations(g, h)] = index

    def name(g):
        return ''.join(map(str, g)) if size < 10 else ','.join(map(str, g))

    table = np.zeros((n, len(representatives)), dtype=np.int64)
    for i in range(1, n + 1):
        swap = list(range(1, size + 1))
        swap[i - 1], swap[i] = swap[i], swap[i - 1]
        for index, g in enumerate(representatives):
            table[i - 1, index] = coset_of[compose_permutations(tuple(swap), g)]

    matrices = np.tile(standard_cartan_matrix('A', n), (len(representatives), 1, 1))
    return validate_scheme(CartanScheme([name(g) for g in representatives], table, matrices))
