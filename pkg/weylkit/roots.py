"""
Root systems of Cartan schemes.

The real roots at an object a are the images of the simple roots under the morphisms ending at a. When a finite root
system exists at all, it is exactly this set, so `root_closure' computes the real roots by a worklist and checks
the axioms on the way: a root with coefficients of both signs, a multiple of a simple root other than +-alpha_i, or
a broken (rho_i rho_j)^m relation each rule out a finite root system.

"""

from collections import deque, namedtuple

import numpy as np

from weylkit.core import (EmptySubset, ObjectCountMismatch, RankMismatch, SchemeFormatError, decompose_scheme,
                          iter_equivalences, restrict)
from weylkit.utilities.general import PassiveStore, format_root

DEFAULT_ROOT_CAP = 512

FINITE = 'finite'
NO_FINITE_SYSTEM = 'no_finite_system'
CAP_EXCEEDED = 'cap_exceeded'

# `start' is (object, index, sign): the root sign * alpha_index at that object, which `word' then moves to `object'.
MixedSignWitness = namedtuple('MixedSignWitness', ['object', 'vector', 'start', 'word'])
R2Witness = namedtuple('R2Witness', ['object', 'vector', 'start', 'word'])
R4Witness = namedtuple('R4Witness', ['object', 'i', 'j', 'm'])


class IndexEqual(ValueError):
    pass


class InconsistentDecomposition(RuntimeError):
    pass


class RootSystem(object):
    """
    A finite root system of a Cartan scheme.

    Attributes
    ----------
    scheme : CartanScheme
    roots : dict
        Object id -> read-only (n, theta) integer array of the roots, rows sorted lexicographically.

    """

    def __init__(self, scheme, roots):
        self.scheme = scheme
        self.roots = {}
        for a in scheme.objects:
            vectors = sorted(tuple(int(x) for x in v) for v in roots[a])
            array = np.array(vectors, dtype=np.int64).reshape(len(vectors), scheme.rank)
            array.flags.writeable = False
            self.roots[a] = array

    def root_set(self, a):
        return frozenset(tuple(v) for v in self.roots[a].tolist())

    def positive(self, a):
        """ R^a_+ as an array, rows sorted. """
        roots = self.roots[a]
        return roots[np.all(roots >= 0, axis=1)]

    def n_positive(self, a):
        return len(self.positive(a))

    def __eq__(self, other):
        return (isinstance(other, RootSystem) and self.scheme == other.scheme
                and all(np.array_equal(self.roots[a], other.roots[a]) for a in self.scheme.objects))

    def __repr__(self):
        sizes = ', '.join(f'{a}: {self.n_positive(a)}' for a in self.scheme.objects)
        return f'RootSystem(positive roots {{{sizes}}})'


class RootVerdict(object):
    """
    The outcome of a root closure.

    Attributes
    ----------
    status : str
        FINITE, NO_FINITE_SYSTEM or CAP_EXCEEDED.
    root_system : RootSystem, None
        Set for FINITE.
    witness : MixedSignWitness, R2Witness, R4Witness, None
        Set for NO_FINITE_SYSTEM.

    """

    def __init__(self, status, root_system=None, witness=None):
        self.status = status
        self.root_system = root_system
        self.witness = witness

    @property
    def finite(self):
        return self.status == FINITE

    def __repr__(self):
        return f'RootVerdict({self.status}, witness={self.witness})'


def _sign_pure(vector):
    return all(x >= 0 for x in vector) or all(x <= 0 for x in vector)


def _m_values(s, positive):
    """ m^a_ij for every object position and 0-based pair i < j. """
    values = {}
    for p in range(s.n_objects):
        for i in range(s.rank):
            for j in range(i + 1, s.rank):
                values[(p, i, j)] = sum(1 for v in positive[p]
                                        if all(x == 0 for k, x in enumerate(v) if k not in (i, j)))
    return values


def _r4_violation(s, m_values):
    """ The first (object position, i, j, m) with (rho_i rho_j)^m(a) != a, 0-based indices. """
    for (p, i, j), m in sorted(m_values.items()):
        q = p
        for _ in range(m):
            q = s.reflections[i, s.reflections[j, q]]
        if q != p:
            return p, i, j, m
    return None


def root_closure(s, cap=DEFAULT_ROOT_CAP, noisy=False):
    """
    Close the simple roots under the simple reflections, transporting vectors between objects.

    A vector v at object a yields sigma_i^a(v) at rho_i(a). Every new vector is checked straight away for mixed
    signs and for being a multiple of a simple root.

    Parameters
    ----------
    s : CartanScheme
    cap : int, optional
        Give up once an object holds more than this many roots. Defaults to DEFAULT_ROOT_CAP.
    noisy : bool, optional
        Print the verdict.

    Returns
    -------
    verdict : RootVerdict

    """

    theta, n = s.rank, s.n_objects
    rows = [[tuple(int(c) for c in s.cartan[p, i]) for i in range(theta)] for p in range(n)]
    reflections = s.reflections.tolist()

    found = [dict() for _ in range(n)]
    queue = deque()
    for p in range(n):
        for i in range(theta):
            for sign in (1, -1):
                v = tuple(sign if k == i else 0 for k in range(theta))
                found[p][v] = ((s.objects[p], i + 1, sign), ())
                queue.append((p, v))

    while queue:
        p, v = queue.popleft()
        start, word = found[p][v]
        for i in range(theta):
            q = reflections[i][p]
            w = list(v)
            w[i] -= sum(c * x for c, x in zip(rows[p][i], v))
            w = tuple(w)
            if w in found[q]:
                continue
            path = word + (i + 1,)
            if not _sign_pure(w):
                verdict = RootVerdict(NO_FINITE_SYSTEM, witness=MixedSignWitness(s.objects[q], w, start, path))
                if noisy:
                    print(f'Mixed signs: {w} at {s.objects[q]}')
                return verdict
            support = [x for x in w if x != 0]
            if len(support) == 1 and abs(support[0]) != 1:
                return RootVerdict(NO_FINITE_SYSTEM, witness=R2Witness(s.objects[q], w, start, path))
            found[q][w] = (start, path)
            if len(found[q]) > cap:
                if noisy:
                    print(f'More than {cap} roots at {s.objects[q]}')
                return RootVerdict(CAP_EXCEEDED)
            queue.append((q, w))

    positive = [[v for v in found[p] if all(x >= 0 for x in v)] for p in range(n)]
    violation = _r4_violation(s, _m_values(s, positive))
    if violation is not None:
        p, i, j, m = violation
        return RootVerdict(NO_FINITE_SYSTEM, witness=R4Witness(s.objects[p], i + 1, j + 1, m))

    root_system = RootSystem(s, {s.objects[p]: list(found[p]) for p in range(n)})
    if noisy:
        print(f'Finite: {root_system}')
    return RootVerdict(FINITE, root_system=root_system)


def replay(s, witness):
    """
    Recompute the vector of a mixed-sign or R2 witness from its start and word.

    Returns
    -------
    obj, vector : str, tuple
        Where the word ends and the vector it produces.

    """

    a, i, sign = witness.start
    vector = np.zeros(s.rank, dtype=np.int64)
    vector[i - 1] = sign
    for index in witness.word:
        vector = s.reflection_matrix(index, a) @ vector
        a = s.rho(index, a)
    return a, tuple(int(x) for x in vector)


def m_value(R, a, i, j):
    """ m^a_ij = |R^a intersected with N_0 alpha_i + N_0 alpha_j|. """
    if i == j:
        raise IndexEqual(f'm-values need two different indices, got {i} twice')
    others = [k for k in range(R.scheme.rank) if k not in (i - 1, j - 1)]
    positive = R.positive(a)
    if not others:
        return len(positive)
    return int(np.sum(np.all(positive[:, others] == 0, axis=1)))


AxiomResult = namedtuple('AxiomResult', ['passed', 'counterexample'])


class AxiomReport(PassiveStore):
    """
    Pass/fail per axiom with the first counterexample.

    The root system axioms are `nonzero', `R1'..`R4'; `M1', `M2' and `C2' are the scheme conditions which follow
    from them.

    """

    ROOT_AXIOMS = ('nonzero', 'R1', 'R2', 'R3', 'R4')
    DERIVED = ('M1', 'M2', 'C2')

    @property
    def passed(self):
        return all(getattr(self, name).passed for name in self.ROOT_AXIOMS)

    @property
    def derived_passed(self):
        return all(getattr(self, name).passed for name in self.DERIVED)


def check_axioms(s, candidate):
    """
    Check candidate root sets against the root system axioms.

    Parameters
    ----------
    s : CartanScheme
        May have been built with `validate_scheme(..., weak=True)'.
    candidate : dict
        Object id -> iterable of integer vectors.

    Returns
    -------
    report : AxiomReport

    """

    sets = {a: {tuple(int(x) for x in v) for v in candidate[a]} for a in s.objects}
    report = AxiomReport()

    def first(generator):
        example = next(generator, None)
        return AxiomResult(example is None, example)

    report.nonzero = first((a, v) for a in s.objects for v in sorted(sets[a]) if not any(v))
    report.R1 = first((a, v) for a in s.objects for v in sorted(sets[a])
                      if not _sign_pure(v) or tuple(-x for x in v) not in sets[a])

    def r2_failures():
        for a in s.objects:
            for i in range(s.rank):
                multiples = {v for v in sets[a] if all(x == 0 for k, x in enumerate(v) if k != i)}
                unit = tuple(1 if k == i else 0 for k in range(s.rank))
                if multiples != {unit, tuple(-x for x in unit)}:
                    yield a, i + 1
    report.R2 = first(r2_failures())

    def r3_failures():
        for a in s.objects:
            for i in range(1, s.rank + 1):
                b = s.rho(i, a)
                sigma = s.reflection_matrix(i, a)
                for v in sorted(sets[a]):
                    image = tuple(int(x) for x in sigma @ np.array(v, dtype=np.int64))
                    if image not in sets[b]:
                        yield a, i, v
                if len(sets[a]) != len(sets[b]):
                    yield a, i, None
    report.R3 = first(r3_failures())

    positive = [[v for v in sets[a] if all(x >= 0 for x in v)] for a in s.objects]
    violation = _r4_violation(s, _m_values(s, positive))
    if violation is None:
        report.R4 = AxiomResult(True, None)
    else:
        p, i, j, m = violation
        report.R4 = AxiomResult(False, (s.objects[p], i + 1, j + 1, m))

    off_diagonal = ~np.eye(s.rank, dtype=bool)
    report.M1 = first((a, i + 1, j + 1) for p, a in enumerate(s.objects) for i, j in zip(*np.nonzero(
        off_diagonal & (s.cartan[p] > 0))))
    report.M2 = first((a, i + 1, j + 1) for p, a in enumerate(s.objects) for i, j in zip(*np.nonzero(
        (s.cartan[p] == 0) & (s.cartan[p].T != 0))))
    report.C2 = first((a, i + 1, j + 1) for p, a in enumerate(s.objects) for i in range(s.rank)
                      for j in range(s.rank) if s.cartan[p, i, j] != s.cartan[s.reflections[i, p], i, j])

    return report


def irreducible_components(R):
    """
    The finest partition of the indices for a finite root system, from the matrices, checked against the roots.

    Raises
    ------
    InconsistentDecomposition
        If some root is supported on more than one block.

    """

    blocks = decompose_scheme(R.scheme)
    block_of = {i: number for number, block in enumerate(blocks) for i in block}
    for a in R.scheme.objects:
        for v in R.roots[a].tolist():
            touched = {block_of[k + 1] for k, x in enumerate(v) if x != 0}
            if len(touched) > 1:
                raise InconsistentDecomposition(f'The root {v} at {a!r} spans the blocks {sorted(touched)}')
    return blocks


def is_irreducible(R):
    return len(irreducible_components(R)) == 1


def restrict_roots(R, J):
    """
    The roots of R lying in the span of the alpha_j, j in J, as a root system of the restricted scheme.

    Coordinates are re-indexed to 1..|J|. The restriction need not be connected.

    """

    J = sorted(set(J))
    if not J:
        raise EmptySubset()
    scheme = restrict(R.scheme, J)
    keep = np.array(J) - 1
    outside = [k for k in range(R.scheme.rank) if k + 1 not in J]
    roots = {}
    for a in R.scheme.objects:
        vectors = R.roots[a]
        if outside:
            vectors = vectors[np.all(vectors[:, outside] == 0, axis=1)]
        roots[a] = vectors[:, keep].tolist()

    report = check_axioms(scheme, roots)
    if not report.passed:
        raise RuntimeError(f'The restriction to {J} is not a root system: {report}')
    return RootSystem(scheme, roots)


def root_systems_equivalent(R1, R2):
    """
    Find an equivalence of the schemes which also carries the roots of R1 onto those of R2.

    Returns
    -------
    witness : tuple, None
        (phi0, phi1) as in `core.iter_equivalences' or None.

    """

    try:
        witnesses = iter_equivalences(R1.scheme, R2.scheme)
        for phi0, phi1 in witnesses:
            order = [phi0[i] - 1 for i in range(1, R1.scheme.rank + 1)]
            inverse = np.argsort(order)
            if all(R2.root_set(phi1[a]) == frozenset(tuple(v) for v in R1.roots[a][:, inverse].tolist())
                   for a in R1.scheme.objects):
                return phi0, phi1
    except (RankMismatch, ObjectCountMismatch, SchemeFormatError):
        return None

    return None


def positive_root_labels(R, a):
    """ The positive roots at a in the 1^m2^n shorthand, in sorted order. """
    return [format_root(v) for v in R.positive(a).tolist()]


def positive_roots(R, a):
    """ R^a_+ as a list of tuples, sorted. """
    return [tuple(v) for v in R.positive(a).tolist()]
