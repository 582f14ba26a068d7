"""
Exhaustive searches for finite Weyl groupoids with few objects, and the fixed checks on the schemes with two and
three objects which the searches are expected to find.

A search fixes the reflections (a "pattern") and lets the off-diagonal entries range over 0, -1, .., -bound. The
entries split into independent blocks: the entries c_ij, c_ji for one pair of indices {i, j} on one orbit of objects
under rho_i and rho_j. Any finite root system restricts to a finite root system on every such block, so each block
is searched on its own (once per distinct block shape) and only the finite blocks are combined into candidates.

"""

import itertools
import multiprocessing
from functools import lru_cache

import networkx as nx
import numpy as np
import pandas as pd

from weylkit.core import (CartanScheme, build_scheme, canonical_form, canonical_key, decompose_scheme,
                          default_object_names, is_connected, is_standard, object_change_diagram,
                          one_object_scheme, standard_cartan_matrix, validate_cartan_matrix)
from weylkit.roots import (CAP_EXCEEDED as ROOTS_CAP_EXCEEDED, DEFAULT_ROOT_CAP, NO_FINITE_SYSTEM, R4Witness,
                           check_axioms, irreducible_components, root_closure)
from weylkit.utilities.general import PassiveStore, flatten_list, warn
from weylkit.weylgroupoid import (FINITE, find_infinite_order, generate_groupoid, identify_coxeter_type,
                                  morphism_from_word, stabilizer)

DEFAULT_BOUND = 8
# Morphisms explored when a closure hits its cap and we look for an endomorphism of infinite order instead.
DEFAULT_ORDER_CAP = 2000
# A first closure stops at this many roots per object; finite root systems up to rank four stay below it.
PROBE_CAP = 64

NOT_FINITE_TYPE = 'NotFiniteType'

CSV_COLUMNS = ['|A|', '|I|', '|W|', '|R+|', 'stabilizer', 'standard', 'diagram', 'source_cell']


class IdentityMismatch(RuntimeError):
    pass


class RowMismatch(RuntimeError):
    pass


class VerificationFailure(RuntimeError):
    pass


class ClassificationRecord(object):
    """
    A finite connected scheme in canonical form and its invariants.

    Attributes
    ----------
    scheme : CartanScheme
        The canonical form.
    key : tuple
        Its canonical serialisation, used for sorting.
    n_objects, rank, groupoid_size, n_positive, stabilizer_order : int
    stabilizer_type : str
    diagram : str
        Signature of the object change diagram of the canonical form.
    standard : bool
    provenance : str
        The search cell (pattern and entries) or the name of the construction.

    """

    def __init__(self, scheme, provenance=''):
        self.scheme = canonical_form(scheme)
        self.key = canonical_key(self.scheme)
        self.provenance = provenance

        verdict = root_closure(self.scheme)
        if not verdict.finite:
            raise VerificationFailure(f'{provenance}: the scheme has no finite root system ({verdict})')
        self.root_system = verdict.root_system

        groupoid = generate_groupoid(self.scheme)
        if groupoid.status != FINITE:
            raise VerificationFailure(f'{provenance}: the Weyl groupoid is not finite ({groupoid.status})')
        a = self.scheme.objects[0]
        group = stabilizer(groupoid, a)

        self.n_objects = self.scheme.n_objects
        self.rank = self.scheme.rank
        self.groupoid_size = groupoid.size()
        self.n_positive = self.root_system.n_positive(a)
        self.stabilizer_order = len(group)
        self.stabilizer_type = identify_coxeter_type(group)
        self.diagram = object_change_diagram(self.scheme).signature()
        self.standard = is_standard(self.scheme)

    def table_row(self):
        """ The appendix style tuple (|A|, |I|, |W|, |R+|, stabiliser type). """
        return self.n_objects, self.rank, self.groupoid_size, self.n_positive, self.stabilizer_type

    def row(self):
        return dict(zip(CSV_COLUMNS, [self.n_objects, self.rank, self.groupoid_size, self.n_positive,
                                      self.stabilizer_type, self.standard, self.diagram, self.provenance]))

    def __repr__(self):
        return f'ClassificationRecord({self.table_row()}, {self.provenance})'


class SearchSpace(object):
    """
    One reflection pattern and an entry bound.

    Attributes
    ----------
    rank, n_objects, bound : int
    reflections : np.ndarray
        (rank, n_objects) table of object positions, as in CartanScheme.
    kappa : int, None
        For two objects, the number of indices whose reflection swaps them (those come first).
    name : str

    """

    def __init__(self, rank, n_objects, reflections, bound=DEFAULT_BOUND, kappa=None, name=None):
        self.rank = rank
        self.n_objects = n_objects
        self.reflections = np.array(reflections, dtype=np.int64).reshape(rank, n_objects)
        self.bound = bound
        self.kappa = kappa
        self.objects = default_object_names(n_objects)
        if name is None:
            name = f'kappa={kappa}' if kappa is not None else object_change_diagram(self._skeleton()).signature()
        self.name = name

    def _skeleton(self):
        """ The pattern carrying the matrices 2I, for equivalence tests between patterns. """
        cartan = np.tile(2 * np.eye(self.rank, dtype=np.int64), (self.n_objects, 1, 1))
        return CartanScheme(self.objects, self.reflections, cartan)

    def __repr__(self):
        return f'SearchSpace(rank={self.rank}, objects={self.n_objects}, {self.name}, bound={self.bound})'


class SearchResult(PassiveStore):
    """
    What a search found.

    Attributes
    ----------
    records : list
        ClassificationRecord, sorted by canonical key.
    raw_count : int
        Finite candidates kept before removing equivalent ones.
    candidates, block_cells, pruned : int
        Full candidates assembled, block cells tried and block cells ruled out.
    inconclusive : list
        Labels of the cells whose closure hit the cap without an infinite order witness.

    """

    pass


_SWAPS_OF_THREE = ((0, 1, 2), (1, 0, 2), (0, 2, 1), (2, 1, 0))


def search_spaces(rank, n_objects, bound=DEFAULT_BOUND, kappa=None):
    """
    The connected reflection patterns for `n_objects' objects, one per equivalence class.

    Two objects: the first kappa reflections swap x and y and the rest fix both. Three objects: rho_1 = (x y),
    rho_2 = (y z) and the other reflections run over all involutions, keeping the first pattern of each class.

    """

    if n_objects == 1:
        return [SearchSpace(rank, 1, np.zeros((rank, 1)), bound, name='one object')]

    if n_objects == 2:
        kappas = range(1, rank + 1) if kappa is None else [kappa]
        spaces = []
        for k in kappas:
            table = [[1, 0] if i < k else [0, 1] for i in range(rank)]
            spaces.append(SearchSpace(rank, 2, table, bound, kappa=k))
        return spaces

    if n_objects == 3:
        if rank < 2:
            return []
        spaces = []
        seen = set()
        for rest in itertools.product(_SWAPS_OF_THREE, repeat=rank - 2):
            table = [_SWAPS_OF_THREE[1], _SWAPS_OF_THREE[2]] + list(rest)
            space = SearchSpace(rank, 3, table, bound)
            key = canonical_key(space._skeleton())
            if key not in seen:
                seen.add(key)
                spaces.append(space)
        return spaces

    raise ValueError('Searches cover at most three objects')


def _orbits(table, members):
    """ The orbits of an involution (given as a position table) on `members', ordered by smallest element. """
    orbits = []
    for p in members:
        orbit = tuple(sorted({p, table[p]}))
        if orbit not in orbits:
            orbits.append(orbit)
    return sorted(orbits)


def pattern_blocks(space):
    """
    The independent blocks of a pattern.

    Returns
    -------
    blocks : list
        Tuples (i, j, members) with 0-based indices i < j and the object positions of one orbit under rho_i, rho_j.

    """

    blocks = []
    for i, j in itertools.combinations(range(space.rank), 2):
        graph = nx.Graph()
        graph.add_nodes_from(range(space.n_objects))
        for p in range(space.n_objects):
            graph.add_edge(p, int(space.reflections[i, p]))
            graph.add_edge(p, int(space.reflections[j, p]))
        for component in sorted(nx.connected_components(graph), key=min):
            blocks.append((i, j, tuple(sorted(component))))
    return blocks


def _local_tables(space, block):
    """ rho_i and rho_j of a block renumbered to 0..len(members) - 1. """
    i, j, members = block
    local = {p: k for k, p in enumerate(members)}
    return (tuple(local[int(space.reflections[i, p])] for p in members),
            tuple(local[int(space.reflections[j, p])] for p in members))


def _block_entries(table_i, table_j, values):
    """
    Spread the unknowns of a block over its objects.

    The first unknowns are -c_ij on the orbits of rho_i, then -c_ji on the orbits of rho_j. Returns the list of
    (c_ij, c_ji) per local object or None if some object has exactly one of them zero.

    """

    members = range(len(table_i))
    orbits_i = _orbits(table_i, members)
    orbits_j = _orbits(table_j, members)
    entries = []
    for p in members:
        c_ij = -values[next(k for k, orbit in enumerate(orbits_i) if p in orbit)]
        c_ji = -values[len(orbits_i) + next(k for k, orbit in enumerate(orbits_j) if p in orbit)]
        if (c_ij == 0) != (c_ji == 0):
            return None
        entries.append((c_ij, c_ji))
    return entries


def _judge(arguments):
    """
    Decide one candidate. Runs in the worker processes.

    Returns (status, canonical key, irreducible) where status is 'finite', 'rejected' or 'inconclusive'; the key and
    the irreducibility flag are only filled in for finite candidates when asked for.

    """

    objects, reflections, cartan, cap, order_cap, want_key = arguments
    s = CartanScheme(objects, reflections, cartan)
    verdict = root_closure(s, cap=min(cap, PROBE_CAP))
    if verdict.status == ROOTS_CAP_EXCEEDED:
        if find_infinite_order(s, cap=order_cap) is not None:
            return 'rejected', None, None
        if cap > PROBE_CAP:
            verdict = root_closure(s, cap=cap)
    if verdict.status == NO_FINITE_SYSTEM:
        return 'rejected', None, None
    if verdict.status == ROOTS_CAP_EXCEEDED:
        return 'inconclusive', None, None
    if not want_key:
        return 'finite', None, None
    return 'finite', canonical_key(s), len(irreducible_components(verdict.root_system)) == 1


def _map(function, arguments, jobs):
    """ Map over a list serially for jobs == 1, else with a multiprocessing pool (all cores for None). """
    if jobs == 1 or len(arguments) < 2:
        return [function(argument) for argument in arguments]
    chunksize = max(1, len(arguments) // (8 * (jobs or multiprocessing.cpu_count())))
    with multiprocessing.Pool(jobs) as pool:
        return pool.map(function, arguments, chunksize=chunksize)


@lru_cache(maxsize=None)
def block_catalog(table_i, table_j, bound, cap=DEFAULT_ROOT_CAP, order_cap=DEFAULT_ORDER_CAP, jobs=1):
    """
    Every choice of entries on a block (a rank two scheme) which carries a finite root system.

    Parameters
    ----------
    table_i, table_j : tuple
        rho_i and rho_j as position tables on the block's objects.
    bound : int
        Entries range over 0..-bound.

    Returns
    -------
    catalog : PassiveStore
        `options' (tuples of the unknowns, negated entries, in enumeration order), `cells', `pruned' and
        `inconclusive' (the unknowns of the cells which could not be decided).

    """

    n = len(table_i)
    members = range(n)
    width = len(_orbits(table_i, members)) + len(_orbits(table_j, members))
    reflections = np.array([table_i, table_j])
    objects = default_object_names(n)

    cells = []
    arguments = []
    for values in itertools.product(range(bound + 1), repeat=width):
        entries = _block_entries(table_i, table_j, values)
        if entries is None:
            continue
        cartan = np.array([[[2, c_ij], [c_ji, 2]] for c_ij, c_ji in entries])
        cells.append(values)
        arguments.append((objects, reflections, cartan, cap, order_cap, False))

    verdicts = _map(_judge, arguments, jobs)
    options = tuple(values for values, (status, _, _) in zip(cells, verdicts) if status == 'finite')
    inconclusive = tuple(values for values, (status, _, _) in zip(cells, verdicts) if status == 'inconclusive')

    return PassiveStore(options=options, cells=len(cells), pruned=len(cells) - len(options) - len(inconclusive),
                        inconclusive=inconclusive)


def _assemble(space, blocks, choice):
    """ The Cartan matrices of the candidate made of one option per block. """
    cartan = np.tile(2 * np.eye(space.rank, dtype=np.int64), (space.n_objects, 1, 1))
    for (i, j, members), values in zip(blocks, choice):
        table_i, table_j = _local_tables(space, (i, j, members))
        for p, (c_ij, c_ji) in zip(members, _block_entries(table_i, table_j, values)):
            cartan[p, i, j] = c_ij
            cartan[p, j, i] = c_ji
    return cartan


def _cell_label(space, choice):
    return f'{space.name} {flatten_list(choice)}'


def classify(space, cap=DEFAULT_ROOT_CAP, order_cap=DEFAULT_ORDER_CAP, jobs=1, irreducible=True, reverse=False,
             noisy=False):
    """
    Search one pattern for finite connected (and by default irreducible) schemes.

    Parameters
    ----------
    space : SearchSpace
    cap : int, optional
        Root closure cap per object.
    order_cap : int, optional
        Morphisms explored for an endomorphism of infinite order when a closure hits its cap.
    jobs : int, None, optional
        Worker processes; 1 runs serially, None uses every core.
    irreducible : bool, optional
        Drop reducible schemes. Set to False to keep them.
    reverse : bool, optional
        Walk the candidates in reverse order. The result does not depend on it.
    noisy : bool, optional
        Print progress.

    Returns
    -------
    result : SearchResult

    """

    blocks = pattern_blocks(space)
    catalogs = []
    inconclusive = []
    block_cells = pruned = 0
    for block in blocks:
        catalog = block_catalog(*_local_tables(space, block), space.bound, cap, order_cap, jobs)
        catalogs.append(catalog)
        block_cells += catalog.cells
        pruned += catalog.pruned
        inconclusive.extend(f'{space.name} block {block}: {list(values)}' for values in catalog.inconclusive)
        if noisy:
            print(f'{space.name}: block {block} has {len(catalog.options)} finite options out of {catalog.cells}')

    choices = list(itertools.product(*[catalog.options for catalog in catalogs]))
    if reverse:
        choices.reverse()
    arguments = [(space.objects, space.reflections, _assemble(space, blocks, choice), cap, order_cap, True)
                 for choice in choices]
    if noisy:
        print(f'{space.name}: {len(choices)} candidates')
    verdicts = _map(_judge, arguments, jobs)

    found = {}
    raw_count = 0
    for choice, argument, (status, key, is_irreducible) in zip(choices, arguments, verdicts):
        if status == 'inconclusive':
            inconclusive.append(_cell_label(space, choice))
        if status != 'finite' or (irreducible and not is_irreducible):
            continue
        raw_count += 1
        cell = tuple(flatten_list(choice))
        if key not in found or cell < found[key][0]:
            found[key] = (cell, argument[2])

    records = []
    for key in sorted(found):
        cell, cartan = found[key]
        scheme = CartanScheme(space.objects, space.reflections, cartan)
        records.append(ClassificationRecord(scheme, provenance=f'{space.name} {list(cell)}'))

    if inconclusive:
        warn(f'{len(inconclusive)} undecided cells in {space.name}')
    if noisy:
        print(f'{space.name}: {len(records)} records ({raw_count} before removing equivalent ones)')

    return SearchResult(records=records, raw_count=raw_count, candidates=len(choices), block_cells=block_cells,
                        pruned=pruned, inconclusive=inconclusive)


def classify_all(rank, n_objects, bound=DEFAULT_BOUND, kappa=None, **kwargs):
    """
    Run `classify' on every pattern for the given rank and object count and merge the results.

    Keyword arguments go to `classify'.

    """

    results = [classify(space, **kwargs) for space in search_spaces(rank, n_objects, bound, kappa)]
    merged = {}
    for result in results:
        for record in result.records:
            merged.setdefault(record.key, record)

    return SearchResult(records=[merged[key] for key in sorted(merged)],
                        raw_count=sum(r.raw_count for r in results),
                        candidates=sum(r.candidates for r in results),
                        block_cells=sum(r.block_cells for r in results),
                        pruned=sum(r.pruned for r in results),
                        inconclusive=list(itertools.chain(*[r.inconclusive for r in results])),
                        patterns=len(results))


def records_frame(records):
    """ The records as a pandas DataFrame with the CSV columns. """
    return pd.DataFrame([record.row() for record in records], columns=CSV_COLUMNS)


def r2o3_scheme(a, b, c, d):
    """
    The rank two scheme on x, y, z with rho_1 = (x y), rho_2 = (y z) and

        C^x = [[2, -a], [-c, 2]], C^y = [[2, -a], [-d, 2]], C^z = [[2, -b], [-d, 2]].

    """

    return build_scheme(['x', 'y', 'z'], {1: [('x', 'y')], 2: [('y', 'z')]},
                        {'x': [[2, -a], [-c, 2]], 'y': [[2, -a], [-d, 2]], 'z': [[2, -b], [-d, 2]]})


def trace_polynomials(a, b, c, d):
    """
    The endomorphism t = sigma_2^x sigma_1^y sigma_2^z sigma_1^z sigma_2^y sigma_1^x of `r2o3_scheme' in closed
    form, checked against the matrix product and three factorisations of its trace.

    Returns
    -------
    t11, t12, t21, t22 : int
    checks : dict
        Name -> bool for 'product', 'trace-2', 'trace+2' and 't22'.

    Raises
    ------
    IdentityMismatch
        If any check fails.

    """

    if min(a, b, c, d) < 1:
        raise ValueError('The entries a, b, c, d must be positive')

    t11 = -a * b * d**2 + 2 * a * d + b * d - 1
    t12 = a**2 * b * d**2 - 2 * a**2 * d - 2 * a * b * d + 2 * a + b
    t21 = -a * b * c * d**2 + 2 * a * c * d + b * c * d + b * d**2 - c - 2 * d
    t22 = (a**2 * b * c * d**2 - 2 * a**2 * c * d - 2 * a * b * c * d - a * b * d**2 + 2 * a * c + 2 * a * d
           + b * c + b * d - 1)

    t = morphism_from_word(r2o3_scheme(a, b, c, d), 'x', (1, 2, 1, 2, 1, 2))
    trace = t11 + t22
    checks = {
        'product': t.target == 'x' and t.matrix.tolist() == [[t11, t12], [t21, t22]],
        'trace-2': trace - 2 == (a * d - 1) * (a * b * c * d - 2 * a * c - b * c - 2 * b * d + 4),
        'trace+2': trace + 2 == (a * b * d - 2 * a - b) * (a * c * d - c - 2 * d),
        't22': t22 == (1 - a * c) * t11 + c * (-a * b * d + a + b),
    }
    failed = [name for name, passed in checks.items() if not passed]
    if failed:
        raise IdentityMismatch(f'({a}, {b}, {c}, {d}): {", ".join(failed)} failed')

    return t11, t12, t21, t22, checks


def cartan3_trace(matrix, i, j, l):
    """
    The trace of sigma_l sigma_j sigma_i restricted to the span of alpha_i, alpha_j, alpha_l, for one matrix
    (1-based indices), in closed form and from the product.

    Returns
    -------
    closed, product : int

    """

    m = np.asarray(matrix)
    c = {(p, q): int(m[p - 1, q - 1]) for p in (i, j, l) for q in (i, j, l)}
    closed = (-c[(i, l)] * c[(j, i)] * c[(l, j)] + c[(i, j)] * c[(j, i)] + c[(i, l)] * c[(l, i)]
              + c[(j, l)] * c[(l, j)] - 3)

    sub = m[np.ix_([i - 1, j - 1, l - 1], [i - 1, j - 1, l - 1])]
    reflections = []
    for k in range(3):
        sigma = np.eye(3, dtype=np.int64)
        sigma[k, :] -= sub[k, :]
        reflections.append(sigma)
    product = reflections[2] @ reflections[1] @ reflections[0]

    return closed, int(np.trace(product))


def _series_of(matrix, n_positive):
    """ The label of an indecomposable finite type Cartan matrix. """
    rank = matrix.shape[0]
    if rank == 1:
        return 'A1'

    products = {}
    graph = nx.Graph()
    graph.add_nodes_from(range(rank))
    for p, q in itertools.combinations(range(rank), 2):
        if matrix[p, q] != 0:
            products[(p, q)] = int(matrix[p, q] * matrix[q, p])
            graph.add_edge(p, q)

    largest = max(products.values())
    if largest == 3:
        label = 'G2'
    elif largest == 2:
        p, q = next(edge for edge, product in products.items() if product == 2)
        if rank == 2:
            label = 'B2'
        elif graph.degree(p) == 2 and graph.degree(q) == 2:
            label = 'F4'
        else:
            end, other = (p, q) if graph.degree(p) == 1 else (q, p)
            label = f'B{rank}' if matrix[end, other] == -2 else f'C{rank}'
    elif max(d for _, d in graph.degree()) <= 2:
        label = f'A{rank}'
    elif n_positive == rank * (rank - 1):
        label = f'D{rank}'
    else:
        label = f'E{rank}'

    expected = {'A': rank * (rank + 1) // 2, 'B': rank**2, 'C': rank**2, 'D': rank * (rank - 1),
                'E': {6: 36, 7: 63, 8: 120}.get(rank), 'F': 24, 'G': 6}[label[0]]
    if expected != n_positive:
        raise VerificationFailure(f'{label} should have {expected} positive roots, found {n_positive}')
    return label


def finite_root_bound(rank):
    """
    An upper bound on the number of roots of a finite type of this rank. B_n and C_n have 2 n^2 and the exceptional
    blocks add at most the 112 by which E8 exceeds B8.

    """

    return 2 * rank**2 + 240


def dynkin_type(grid):
    """
    The finite type of a Cartan matrix, e.g. 'A2', 'G2' or 'A1×B2' for a decomposable one.

    Returns NOT_FINITE_TYPE if the matrix has no finite root system. The closure cap is sized from the rank, so a
    closure which runs past it also proves the type is not finite.

    """

    matrix = validate_cartan_matrix(grid).entries
    verdict = root_closure(one_object_scheme(matrix), cap=finite_root_bound(matrix.shape[0]))
    if not verdict.finite:
        return NOT_FINITE_TYPE

    positive = verdict.root_system.positive('x')
    labels = []
    for block in decompose_scheme(one_object_scheme(matrix)):
        keep = np.array(block) - 1
        outside = [k for k in range(matrix.shape[0]) if k + 1 not in block]
        count = int(np.sum(np.all(positive[:, outside] == 0, axis=1))) if outside else len(positive)
        labels.append(_series_of(matrix[np.ix_(keep, keep)], count))

    return '×'.join(labels)


def standard_two_object_condition(grid, kappa):
    """
    Whether the standard two object scheme whose first kappa reflections swap the objects has a finite root
    system: the matrix has finite type and c_ij c_ji != 1 whenever i <= kappa < j.

    """

    matrix = np.asarray(grid)
    if dynkin_type(matrix) == NOT_FINITE_TYPE:
        return False
    rank = matrix.shape[0]
    return all(matrix[i, j] * matrix[j, i] != 1 for i in range(kappa) for j in range(kappa, rank))


def two_object_scheme(cartan_x, cartan_y, kappa=1):
    """ Objects x, y with the first kappa reflections swapping them. """
    return build_scheme(['x', 'y'], {i: [('x', 'y')] for i in range(1, kappa + 1)}, {'x': cartan_x, 'y': cartan_y})


RANK3_EXCEPTIONALS = {
    'two objects, rank 3 (first)': ([[2, -1, 0], [-2, 2, -1], [0, -1, 2]], [[2, -1, 0], [-2, 2, -2], [0, -1, 2]]),
    'two objects, rank 3 (second)': ([[2, -2, 0], [-1, 2, -1], [0, -1, 2]], [[2, -2, 0], [-1, 2, -2], [0, -1, 2]]),
}


def verify_two_object_rank3_exceptionals():
    """
    Check the two non-standard rank three schemes on two objects: 13 positive roots, 192 morphisms and a
    stabiliser of order 48 of type B3.

    Returns
    -------
    report : list
        One ClassificationRecord per scheme.

    """

    report = []
    for name, (cartan_x, cartan_y) in RANK3_EXCEPTIONALS.items():
        record = ClassificationRecord(two_object_scheme(cartan_x, cartan_y), provenance=name)
        found = (record.n_positive, record.groupoid_size, record.stabilizer_order, record.stabilizer_type)
        if found != (13, 192, 48, 'B3'):
            raise VerificationFailure(f'{name}: expected (13, 192, 48, B3), found {found}')
        report.append(record)
    return report


def appendix_schemes():
    """ The nine non-standard finite schemes with at most three objects, by name. """
    schemes = {
        'two objects, c^y_21 = -4': two_object_scheme([[2, -1], [-3, 2]], [[2, -1], [-4, 2]]),
        'two objects, c^y_21 = -5': two_object_scheme([[2, -1], [-3, 2]], [[2, -1], [-5, 2]]),
    }
    for name, (cartan_x, cartan_y) in RANK3_EXCEPTIONALS.items():
        schemes[name] = two_object_scheme(cartan_x, cartan_y)
    for cell in [(1, 2, 4, 2), (1, 3, 6, 2), (1, 4, 5, 2), (1, 3, 7, 2), (1, 5, 5, 2)]:
        schemes[f'three objects, (a, b, c, d) = {cell}'] = r2o3_scheme(*cell)
    return schemes


APPENDIX_ROWS = [
    (2, 2, 32, 8, 'B2'),
    (2, 2, 48, 12, 'G2'),
    (2, 3, 192, 13, 'B3'),
    (2, 3, 192, 13, 'B3'),
    (3, 2, 36, 6, 'A1×A1'),
    (3, 2, 72, 12, 'B2'),
    (3, 2, 72, 12, 'B2'),
    (3, 2, 108, 18, 'G2'),
    (3, 2, 108, 18, 'G2'),
]


def appendix_table():
    """
    Rebuild the table of the nine non-standard finite Weyl groupoids with at most three objects.

    Returns
    -------
    records : list
        ClassificationRecord per row, in table order.

    Raises
    ------
    RowMismatch

    """

    records = []
    for (name, scheme), expected in zip(appendix_schemes().items(), APPENDIX_ROWS):
        record = ClassificationRecord(scheme, provenance=name)
        if record.table_row() != expected:
            raise RowMismatch(f'{name}: expected {expected}, found {record.table_row()}')
        records.append(record)
    return records


def appendix_frame(records):
    """ The appendix table as a DataFrame. """
    columns = ['scheme', '|A|', '|I|', '|W|', '|R+|', 'stabilizer']
    return pd.DataFrame([(record.provenance,) + record.table_row() for record in records], columns=columns)


# Reflections of the three object standard schemes of rank four, by the type they carry.
RANK4_DIAGRAMS = {
    'B4': {1: [('x', 'y')], 2: [('y', 'z')], 3: [('x', 'y')]},
    'C4': {1: [('x', 'y')], 2: [('y', 'z')], 3: [('x', 'y')]},
    'D4': {1: [('x', 'y')], 2: [('y', 'z')], 3: [('x', 'y')], 4: [('x', 'y')]},
    'F4': {1: [('x', 'y')], 2: [('y', 'z')]},
}

RANK4_POSITIVE_ROOTS = {'B4': 16, 'C4': 16, 'D4': 12, 'F4': 24}


def verify_standard_rank4():
    """
    Check the standard rank four schemes on three objects: B4, C4, D4 and F4 with their diagrams carry finite root
    systems, and A4 fails (R4) with every one of those diagrams.

    Returns
    -------
    report : list
        PassiveStore per check with `name', `diagram', `status', `n_positive' (or None) and `witness'.

    """

    report = []
    objects = ['x', 'y', 'z']
    for label, swaps in RANK4_DIAGRAMS.items():
        scheme = build_scheme(objects, swaps, standard_cartan_matrix(label[0], 4))
        verdict = root_closure(scheme)
        if not verdict.finite:
            raise VerificationFailure(f'{label}: expected a finite root system, got {verdict}')
        axioms = check_axioms(scheme, verdict.root_system.roots)
        n_positive = verdict.root_system.n_positive('x')
        if not axioms.passed or n_positive != RANK4_POSITIVE_ROOTS[label] or not is_connected(scheme):
            raise VerificationFailure(f'{label}: {n_positive} positive roots, axioms {axioms}')
        report.append(PassiveStore(name=label, diagram=object_change_diagram(scheme).signature(),
                                   status=verdict.status, n_positive=n_positive, witness=None))

    for label in ('B4', 'D4', 'F4'):
        scheme = build_scheme(objects, RANK4_DIAGRAMS[label], standard_cartan_matrix('A', 4))
        verdict = root_closure(scheme)
        if verdict.status != NO_FINITE_SYSTEM or not isinstance(verdict.witness, R4Witness):
            raise VerificationFailure(f'A4 with the {label} diagram: expected an R4 failure, got {verdict}')
        report.append(PassiveStore(name='A4', diagram=object_change_diagram(scheme).signature(),
                                   status=verdict.status, n_positive=None, witness=verdict.witness))

    return report
