import itertools
import os
import unittest
from unittest import TestCase

import numpy as np
import numpy.testing as test
from hypothesis import given, strategies as st

from weylkit.classify import *
from weylkit.classify import _map
from weylkit.core import (build_scheme, canonical_key, is_connected, is_standard, object_change_diagram,
                          one_object_scheme, standard_cartan_matrix)
from weylkit.roots import R4Witness, check_axioms, is_irreducible, m_value, root_closure
from weylkit.weylgroupoid import (generate_groupoid, has_finite_order, longest_word, max_length, morphism_from_word,
                                  positive_roots_along, stabilizer)

SLOW = bool(os.environ.get('WEYLKIT_SLOW'))

FINITE_RANK2 = ([[2, 0], [0, 2]], [[2, -1], [-1, 2]], [[2, -1], [-2, 2]], [[2, -2], [-1, 2]], [[2, -1], [-3, 2]],
                [[2, -3], [-1, 2]])


@st.composite
def cartan_blocks(draw, size=3, lowest=-4):
    """ Integer matrices with 2 on the diagonal and non-positive entries elsewhere. """
    m = np.full((size, size), 2, dtype=np.int64)
    for i, j in itertools.permutations(range(size), 2):
        m[i, j] = draw(st.integers(min_value=lowest, max_value=0))
    return m


def r2o3_space(bound=DEFAULT_BOUND):
    return search_spaces(2, 3, bound=bound)[0]


class TraceTest(TestCase):

    def test_identities(self):
        for cell in itertools.product(range(1, 10), repeat=4):
            *entries, checks = trace_polynomials(*cell)
            self.assertTrue(all(checks.values()), msg=str(cell))

    def test_example(self):
        t11, t12, t21, t22, _ = trace_polynomials(1, 1, 1, 1)
        t = morphism_from_word(r2o3_scheme(1, 1, 1, 1), 'x', (1, 2, 1, 2, 1, 2))
        test.assert_equal(t.matrix.tolist(), [[t11, t12], [t21, t22]])
        test.assert_equal(t.matrix, np.eye(2, dtype=np.int64))

    def test_minus_identity(self):
        t11, t12, t21, t22, _ = trace_polynomials(1, 2, 4, 2)
        test.assert_equal([[t11, t12], [t21, t22]], [[-1, 0], [0, -1]])
        t11, _, _, t22, _ = trace_polynomials(1, 3, 6, 2)
        self.assertIn(t11 + t22, (-1, 0, 1))

    def test_finite_cells(self):
        for cell in [(1, 2, 4, 2), (1, 3, 6, 2), (1, 4, 5, 2), (1, 3, 7, 2), (1, 5, 5, 2)]:
            t11, t12, t21, t22, _ = trace_polynomials(*cell)
            self.assertTrue(has_finite_order([[t11, t12], [t21, t22]]))
        t11, t12, t21, t22, _ = trace_polynomials(2, 2, 2, 2)
        self.assertFalse(has_finite_order([[t11, t12], [t21, t22]]))

    def test_bad_entries(self):
        with self.assertRaises(ValueError):
            trace_polynomials(0, 1, 1, 1)

    @given(cartan_blocks())
    def test_cartan3_trace(self, m):
        closed, product = cartan3_trace(m, 1, 2, 3)
        test.assert_equal(closed, product)

    def test_cartan3_trace_finite(self):
        # Coxeter elements: eigenvalues i, -1, -i for A3 and the primitive sixth roots and -1 for B3, C3.
        for series, trace in (('A', -1), ('B', 0), ('C', 0)):
            closed, product = cartan3_trace(standard_cartan_matrix(series, 3), 1, 2, 3)
            test.assert_equal(closed, product)
            test.assert_equal(closed, trace)


class DynkinTest(TestCase):

    def test_rank_two(self):
        test.assert_equal(dynkin_type([[2, -1], [-1, 2]]), 'A2')
        test.assert_equal(dynkin_type([[2, -1], [-2, 2]]), 'B2')
        test.assert_equal(dynkin_type([[2, -3], [-1, 2]]), 'G2')
        test.assert_equal(dynkin_type([[2, 0], [0, 2]]), 'A1×A1')
        test.assert_equal(dynkin_type([[2, -2], [-2, 2]]), NOT_FINITE_TYPE)
        test.assert_equal(dynkin_type([[2, -1], [-4, 2]]), NOT_FINITE_TYPE)

    def test_standard(self):
        for series, rank in (('A', 3), ('B', 3), ('C', 3), ('D', 4), ('F', 4), ('B', 4), ('C', 4), ('A', 1)):
            test.assert_equal(dynkin_type(standard_cartan_matrix(series, rank)), f'{series}{rank}')

    def test_large_rank(self):
        # Each has more roots than the default closure cap.
        for series, rank in (('A', 23), ('A', 26), ('B', 17), ('C', 17)):
            test.assert_equal(dynkin_type(standard_cartan_matrix(series, rank)), f'{series}{rank}')
        m = standard_cartan_matrix('A', 23).copy()
        m[0, 22] = m[22, 0] = -1
        test.assert_equal(dynkin_type(m), NOT_FINITE_TYPE)
        self.assertGreater(finite_root_bound(8), 240)
        self.assertGreater(finite_root_bound(9), 240 + 2)

    def test_decomposable(self):
        m = np.zeros((3, 3), dtype=np.int64)
        m[:2, :2] = [[2, -1], [-1, 2]]
        m[2, 2] = 2
        test.assert_equal(dynkin_type(m), 'A2×A1')

    def test_standard_two_objects(self):
        for grid in FINITE_RANK2 + ([[2, -2], [-2, 2]],):
            for kappa in (1, 2):
                s = two_object_scheme(grid, grid, kappa=kappa)
                test.assert_equal(standard_two_object_condition(grid, kappa), root_closure(s).finite)

    def test_standard_two_objects_rank3(self):
        for series in 'ABC':
            grid = standard_cartan_matrix(series, 3)
            for kappa in (1, 2, 3):
                s = two_object_scheme(grid, grid, kappa=kappa)
                test.assert_equal(standard_two_object_condition(grid, kappa), root_closure(s).finite)
        test.assert_equal(standard_two_object_condition(standard_cartan_matrix('A', 3), 3), True)
        test.assert_equal(standard_two_object_condition(standard_cartan_matrix('A', 3), 1), False)


class SearchSpaceTest(TestCase):

    def test_counts(self):
        test.assert_equal(len(search_spaces(2, 1)), 1)
        test.assert_equal(len(search_spaces(3, 2)), 3)
        test.assert_equal(len(search_spaces(3, 2, kappa=2)), 1)
        test.assert_equal(len(search_spaces(2, 3)), 1)
        test.assert_equal(len(search_spaces(3, 3)), 3)
        test.assert_equal(search_spaces(1, 3), [])

    def test_too_many_objects(self):
        with self.assertRaises(ValueError):
            search_spaces(2, 4)

    def test_three_object_patterns(self):
        third = sorted(tuple(space.reflections[2].tolist()) for space in search_spaces(3, 3))
        test.assert_equal(third, [(0, 1, 2), (1, 0, 2), (2, 1, 0)])
        for space in search_spaces(3, 3):
            test.assert_equal(space.reflections[0].tolist(), [1, 0, 2])
            test.assert_equal(space.reflections[1].tolist(), [0, 2, 1])

    def test_blocks(self):
        test.assert_equal(pattern_blocks(r2o3_space()), [(0, 1, (0, 1, 2))])
        case1 = next(space for space in search_spaces(3, 3) if space.reflections[2].tolist() == [0, 1, 2])
        test.assert_equal(pattern_blocks(case1), [(0, 1, (0, 1, 2)), (0, 2, (0, 1)), (0, 2, (2,)), (1, 2, (0,)),
                                                  (1, 2, (1, 2))])

    def test_names(self):
        test.assert_equal(search_spaces(2, 2, kappa=1)[0].name, 'kappa=1')
        test.assert_equal(search_spaces(2, 1)[0].name, 'one object')


class BlockCatalogTest(TestCase):

    def test_one_object(self):
        catalog = block_catalog((0,), (0,), 3)
        test.assert_equal(catalog.options, ((0, 0), (1, 1), (1, 2), (1, 3), (2, 1), (3, 1)))
        test.assert_equal(catalog.cells, 10)
        test.assert_equal(catalog.pruned, 4)
        test.assert_equal(catalog.inconclusive, ())

    def test_two_objects(self):
        # rho_1 swaps, rho_2 fixes: the unknowns are -c_12 and -c_21 at x and y.
        catalog = block_catalog((1, 0), (0, 1), 5)
        test.assert_equal(set(catalog.options), {(0, 0, 0), (1, 2, 2), (2, 1, 1), (1, 3, 3), (3, 1, 1), (1, 3, 4),
                                                 (1, 4, 3), (1, 3, 5), (1, 5, 3)})
        test.assert_equal(catalog.inconclusive, ())


class SearchTest(TestCase):

    @classmethod
    def setUpClass(cls):
        cls.r2o3 = classify(r2o3_space())

    def test_r2o3(self):
        result = self.r2o3
        test.assert_equal(len(result.records), 7)
        test.assert_equal(result.raw_count, 13)
        test.assert_equal(result.inconclusive, [])
        test.assert_equal(sorted(record.n_positive for record in result.records), [3, 6, 6, 12, 12, 18, 18])

    def test_r2o3_matches_table(self):
        found = {record.key for record in self.r2o3.records if not record.standard}
        expected = {canonical_key(s) for name, s in appendix_schemes().items() if name.startswith('three objects')}
        test.assert_equal(found, expected)

    def test_r2o3_cells(self):
        cells = [(1, 1, 1, 1), (1, 1, 3, 3), (1, 2, 4, 2), (1, 3, 6, 2), (1, 4, 5, 2), (1, 3, 7, 2), (1, 5, 5, 2)]
        name = r2o3_space().name
        test.assert_equal({record.provenance for record in self.r2o3.records},
                          {f'{name} {list(cell)}' for cell in cells})

    def test_record_invariants(self):
        for record in self.r2o3.records:
            test.assert_equal(record.groupoid_size, record.n_objects**2 * record.stabilizer_order)
            test.assert_equal(record.rank, 2)
            test.assert_equal(record.standard, is_standard(record.scheme))
            self.assertTrue(is_connected(record.scheme))
            self.assertTrue(is_irreducible(record.root_system))
            self.assertTrue(check_axioms(record.scheme, record.root_system.roots).passed)

    def test_reverse(self):
        result = classify(r2o3_space(), reverse=True)
        test.assert_equal([record.key for record in result.records], [record.key for record in self.r2o3.records])
        test.assert_equal([record.provenance for record in result.records],
                          [record.provenance for record in self.r2o3.records])

    def test_jobs(self):
        space = search_spaces(2, 2, kappa=1)[0]
        serial = classify(space, irreducible=False)
        parallel = classify(space, irreducible=False, jobs=2)
        test.assert_equal([record.key for record in parallel.records], [record.key for record in serial.records])
        test.assert_equal(parallel.raw_count, serial.raw_count)

    def test_pool_errors(self):
        test.assert_equal(_map(int, ['1', '2', '3'], 2), [1, 2, 3])
        with self.assertRaises(ValueError):
            _map(int, ['1', 'two', '3'], 2)
        test.assert_equal(_map(int, ['4', '5'], None), [4, 5])

    def test_kappa(self):
        for kappa, count in ((1, 7), (2, 4)):
            result = classify_all(2, 2, kappa=kappa, irreducible=False)
            test.assert_equal(len(result.records), count)
            test.assert_equal(result.inconclusive, [])
            standard = {record.key for record in result.records if record.standard}
            expected = {canonical_key(two_object_scheme(grid, grid, kappa=kappa)) for grid in FINITE_RANK2
                        if standard_two_object_condition(grid, kappa)}
            test.assert_equal(standard, expected)

    def test_kappa_irreducible(self):
        result = classify_all(2, 2, kappa=1)
        test.assert_equal(len(result.records), 6)
        nonstandard = {record.key for record in result.records if not record.standard}
        expected = {canonical_key(s) for name, s in appendix_schemes().items() if name.startswith('two objects, c')}
        test.assert_equal(nonstandard, expected)

    def test_one_object(self):
        result = classify_all(2, 1)
        test.assert_equal(sorted(record.stabilizer_type for record in result.records), ['A2', 'B2', 'G2'])
        test.assert_equal(result.patterns, 1)

    def test_frame(self):
        frame = records_frame(self.r2o3.records)
        test.assert_equal(list(frame.columns), CSV_COLUMNS)
        test.assert_equal(len(frame), 7)
        test.assert_equal(sorted(frame['|R+|'].tolist()), [3, 6, 6, 12, 12, 18, 18])

    @unittest.skipUnless(SLOW, 'set WEYLKIT_SLOW to run the long searches')
    def test_r2o3_larger_bound(self):
        result = classify(r2o3_space(bound=12))
        test.assert_equal([record.key for record in result.records], [record.key for record in self.r2o3.records])
        test.assert_equal(result.inconclusive, [])

    @unittest.skipUnless(SLOW, 'set WEYLKIT_SLOW to run the long searches')
    def test_rank3_three_objects(self):
        result = classify_all(3, 3, bound=7)
        test.assert_equal(result.inconclusive, [])
        test.assert_equal(sorted({record.stabilizer_type for record in result.records}), ['A3', 'B3', 'C3'])
        self.assertTrue(all(record.standard for record in result.records))
        for record in result.records:
            s = record.scheme
            # A3 needs a doubled edge; B3 and C3 live on a path of two single edges.
            edges = len(object_change_diagram(s).edges)
            test.assert_equal(edges, 3 if dynkin_type(s.cartan[0]) == 'A3' else 2)
            for a in s.objects:
                for i, j, l in itertools.permutations(range(1, 4)):
                    b = s.rho(i, a)
                    if b != a and s.rho(j, a) == b and s.rho(l, a) == a:
                        test.assert_equal(s.c(a, i, j) * s.c(a, i, l) * s.c(a, j, l), 0)

        swapping_xz = next(space for space in search_spaces(3, 3, bound=7)
                           if space.reflections[2].tolist() == [2, 1, 0])
        test.assert_equal(classify(swapping_xz).records, [])

    @unittest.skipUnless(SLOW, 'set WEYLKIT_SLOW to run the long searches')
    def test_rank3_two_objects(self):
        result = classify_all(3, 2)
        test.assert_equal(result.inconclusive, [])
        nonstandard = {record.key for record in result.records if not record.standard}
        expected = {canonical_key(two_object_scheme(x, y)) for x, y in RANK3_EXCEPTIONALS.values()}
        test.assert_equal(nonstandard, expected)


class RecordPropertyTest(TestCase):
    """ Facts which hold in every finite scheme the searches turn up. """

    @classmethod
    def setUpClass(cls):
        records = list(classify_all(2, 3).records)
        for kappa in (1, 2):
            records += classify_all(2, 2, kappa=kappa).records
        b3 = build_scheme(['x', 'y', 'z'], {1: [('x', 'y')], 2: [('y', 'z')]}, standard_cartan_matrix('B', 3))
        a3 = build_scheme(['x', 'y', 'z'], {1: [('x', 'y')], 2: [('y', 'z')], 3: [('x', 'y')]},
                          standard_cartan_matrix('A', 3))
        records += [ClassificationRecord(b3), ClassificationRecord(a3)]
        cls.records = records

    def pairs(self):
        for record in self.records:
            s = record.scheme
            for a in s.objects:
                for i, j in itertools.permutations(range(1, s.rank + 1), 2):
                    yield s, record.root_system, a, i, j

    def test_record_count(self):
        # kappa = 2 keeps A2, B2 and G2; the A1xA1 scheme is reducible.
        test.assert_equal(len(self.records), 7 + 6 + 3 + 2)

    def test_m_two_and_three(self):
        for s, R, a, i, j in self.pairs():
            m = m_value(R, a, i, j)
            zero = s.c(a, i, j) == 0 and s.c(a, j, i) == 0
            test.assert_equal(zero, m == 2)
            test.assert_equal(s.c(a, i, j) == -1 and s.c(a, j, i) == -1, m == 3)
            on_pair = [v for v in map(tuple, R.positive(a).tolist())
                       if all(x == 0 for k, x in enumerate(v) if k not in (i - 1, j - 1))]
            test.assert_equal(zero, len(on_pair) == 2)

    def test_same_row_for_zero(self):
        for s, R, a, i, j in self.pairs():
            if s.c(a, i, j) == 0:
                test.assert_equal(s.matrix(a).entries[j - 1], s.matrix(s.rho(i, a)).entries[j - 1])

    def test_m_three(self):
        for s, R, a, i, j in self.pairs():
            if m_value(R, a, i, j) != 3:
                continue
            b = s.rho(i, a)
            c = s.rho(i, s.rho(j, a))
            for l in range(1, s.rank + 1):
                test.assert_equal(s.c(b, i, l) + s.c(b, j, l), s.c(c, i, l) + s.c(c, j, l))

    def test_shared_reflection_product(self):
        checked = 0
        for s, R, a, i, j in self.pairs():
            b = s.rho(i, a)
            if b == a or s.rho(j, a) != b:
                continue
            for l in range(1, s.rank + 1):
                if l not in (i, j) and s.rho(l, a) == a:
                    test.assert_equal(s.c(a, i, j) * s.c(a, i, l) * s.c(a, j, l), 0)
                    checked += 1
        self.assertGreater(checked, 0)

    def test_groupoid(self):
        for record in self.records:
            s, R = record.scheme, record.root_system
            W = generate_groupoid(s)
            self.assertTrue(W.finite)
            for a in s.objects:
                test.assert_equal(max_length(W, a), R.n_positive(a))
                betas = positive_roots_along(s, a, longest_word(W, a))
                test.assert_equal(len(set(betas)), len(betas))
                test.assert_equal(set(betas), set(map(tuple, R.positive(a).tolist())))
                test.assert_equal(W.size(), s.n_objects**2 * len(stabilizer(W, a)))

    def test_closure_is_idempotent(self):
        for record in self.records:
            s, R = record.scheme, record.root_system
            self.assertEqual(root_closure(s).root_system, R)
            for a in s.objects:
                for i in range(1, s.rank + 1):
                    images = {tuple(s.reflection_matrix(i, a) @ v) for v in R.roots[a]}
                    test.assert_equal(images, R.root_set(s.rho(i, a)))


class TableTest(TestCase):

    def test_appendix(self):
        records = appendix_table()
        test.assert_equal([record.table_row() for record in records], APPENDIX_ROWS)
        self.assertFalse(any(record.standard for record in records))

    def test_appendix_frame(self):
        frame = appendix_frame(appendix_table())
        test.assert_equal(list(frame.columns), ['scheme', '|A|', '|I|', '|W|', '|R+|', 'stabilizer'])
        test.assert_equal(len(frame), 9)
        test.assert_equal(frame['|W|'].tolist(), [32, 48, 192, 192, 36, 72, 72, 108, 108])

    def test_no_single_object_connection(self):
        # Two objects, first reflection swapping: c^x_1i c^x_1j = 0 for 1 < i < j.
        for name, s in appendix_schemes().items():
            if not name.startswith('two objects') or s.rank < 3:
                continue
            for i, j in itertools.combinations(range(2, s.rank + 1), 2):
                test.assert_equal(s.c('x', 1, i) * s.c('x', 1, j), 0)

    def test_rank3_exceptionals(self):
        records = verify_two_object_rank3_exceptionals()
        test.assert_equal(len(records), 2)
        for record in records:
            test.assert_equal(record.table_row(), (2, 3, 192, 13, 'B3'))

    def test_rank4(self):
        report = verify_standard_rank4()
        test.assert_equal([row.name for row in report], ['B4', 'C4', 'D4', 'F4', 'A4', 'A4', 'A4'])
        test.assert_equal([row.n_positive for row in report[:4]], [16, 16, 12, 24])
        for row in report[4:]:
            self.assertIsInstance(row.witness, R4Witness)

    def test_record_requires_finite(self):
        with self.assertRaises(VerificationFailure):
            ClassificationRecord(one_object_scheme([[2, -2], [-2, 2]]))

    def test_record(self):
        record = ClassificationRecord(one_object_scheme([[2, -1], [-1, 2]]), provenance='A2')
        test.assert_equal(record.table_row(), (1, 2, 6, 3, 'A2'))
        self.assertTrue(record.standard)
        test.assert_equal(record.row()['source_cell'], 'A2')

    def test_case1(self):
        s = build_scheme(['x', 'y', 'z'], {1: [('x', 'y')], 2: [('y', 'z')]}, standard_cartan_matrix('B', 3))
        record = ClassificationRecord(s)
        test.assert_equal(record.table_row(), (3, 3, 432, 9, 'B3'))
