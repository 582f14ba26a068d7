from unittest import TestCase

import numpy as np
import numpy.testing as test

from weylkit.weylgroupoid import *
from weylkit.classify import r2o3_scheme, two_object_scheme
from weylkit.core import build_scheme, coset_scheme, one_object_scheme, standard_cartan_matrix
from weylkit.roots import root_closure


def a2():
    return one_object_scheme([[2, -1], [-1, 2]])


def b3_case1():
    return build_scheme(['x', 'y', 'z'], {1: [('x', 'y')], 2: [('y', 'z')]}, standard_cartan_matrix('B', 3))


class ReflectionTest(TestCase):

    def test_a2(self):
        sigma = simple_reflection(a2(), 1, 'x')
        test.assert_equal(sigma.matrix.tolist(), [[-1, 1], [0, 1]])
        test.assert_equal(sigma.target, 'x')
        test.assert_equal(sigma.word, (1,))

    def test_rank_one(self):
        test.assert_equal(simple_reflection(one_object_scheme([[2]]), 1, 'x').matrix.tolist(), [[-1]])

    def test_two_object_rank3(self):
        s = two_object_scheme([[2, -1, 0], [-2, 2, -1], [0, -1, 2]], [[2, -1, 0], [-2, 2, -2], [0, -1, 2]])
        sigma = simple_reflection(s, 2, 'x').matrix
        test.assert_equal(sigma[:, 0], [1, 2, 0])
        test.assert_equal(sigma[:, 1], [0, -1, 0])
        test.assert_equal(sigma[:, 2], [0, 1, 1])

    def test_involution(self):
        s = r2o3_scheme(1, 3, 6, 2)
        for a in s.objects:
            for i in (1, 2):
                sigma = simple_reflection(s, i, a)
                back = simple_reflection(s, i, sigma.target)
                self.assertEqual(back.compose(sigma), identity(s, a))

    def test_word(self):
        s = r2o3_scheme(1, 2, 4, 2)
        g = morphism_from_word(s, 'x', (1, 2))
        test.assert_equal(g.target, 'z')
        expected = s.reflection_matrix(2, 'y') @ s.reflection_matrix(1, 'x')
        test.assert_equal(g.matrix, expected)
        self.assertEqual(g.inverse(s).compose(g), identity(s, 'x'))


class GroupoidTest(TestCase):

    def test_rank_one_two_objects(self):
        W = generate_groupoid(coset_scheme(1, []))
        test.assert_equal(W.status, FINITE)
        test.assert_equal(W.size(), 4)
        for a in ('12', '21'):
            for b in ('12', '21'):
                test.assert_equal(hom_size(W, a, b), 1)

    def test_a2(self):
        W = generate_groupoid(a2())
        test.assert_equal(W.size(), 6)
        test.assert_equal(max_length(W, 'x'), 3)
        test.assert_equal(len(longest_word(W, 'x')), 3)

    def test_r2o3(self):
        W = generate_groupoid(r2o3_scheme(1, 2, 4, 2))
        test.assert_equal(W.size(), 36)
        W = generate_groupoid(r2o3_scheme(1, 3, 6, 2))
        test.assert_equal(len(stabilizer(W, 'x')), 8)

    def test_coset_stabilizer(self):
        W = generate_groupoid(r2o3_scheme(1, 1, 1, 1))
        test.assert_equal(len(stabilizer(W, 'x')), 2)
        W = generate_groupoid(coset_scheme(3, [(2, 1, 4, 3)]))
        test.assert_equal(len(stabilizer(W, '1234')), 2)

    def test_two_object_exceptional(self):
        W = generate_groupoid(two_object_scheme([[2, -1], [-3, 2]], [[2, -1], [-4, 2]]))
        test.assert_equal(len(stabilizer(W, 'x')), 8)
        test.assert_equal(W.size(), 32)

    def test_identity_first(self):
        W = generate_groupoid(r2o3_scheme(1, 2, 4, 2))
        first = W.hom('x', 'x')[0]
        test.assert_equal(first.matrix, np.eye(2, dtype=np.int64))
        test.assert_equal(W.length(first), 0)

    def test_closed_under_composition(self):
        s = r2o3_scheme(1, 3, 6, 2)
        W = generate_groupoid(s)
        for a in s.objects:
            for b in s.objects:
                for f in W.hom(a, b):
                    for i in (1, 2):
                        g = simple_reflection(s, i, b).compose(f)
                        self.assertIn(g, W.hom(a, g.target))

    def test_transformation_groupoid(self):
        for s in (r2o3_scheme(1, 5, 5, 2), b3_case1(), coset_scheme(2, [])):
            W = generate_groupoid(s)
            for a in s.objects:
                test.assert_equal(W.size(), s.n_objects**2 * len(stabilizer(W, a)))
                test.assert_equal({hom_size(W, a, b) for b in s.objects}, {len(stabilizer(W, a))})

    def test_determinants(self):
        W = generate_groupoid(r2o3_scheme(1, 3, 7, 2))
        for found in W.morphisms.values():
            for m in found:
                self.assertIn(m.determinant(), (-1, 1))

    def test_exact_determinant(self):
        big = 2**40
        test.assert_equal(Morphism('x', 'x', [[big + 1, big], [big, big - 1]]).determinant(), -1)
        test.assert_equal(Morphism('x', 'x', [[0, 1, 0], [1, 0, 0], [0, 0, 1]]).determinant(), -1)
        test.assert_equal(Morphism('x', 'x', [[1, 2], [2, 4]]).determinant(), 0)
        test.assert_equal(Morphism('x', 'x', [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]).determinant(), 4)

    def test_huge_entries(self):
        s = one_object_scheme([[2, -2**35], [-1, 2]])
        W = generate_groupoid(s, detect_infinite=False)
        test.assert_equal(W.status, CAP_EXCEEDED)
        for m in W.hom('x', 'x'):
            self.assertLessEqual(np.abs(m.matrix).max(), ENTRY_LIMIT)
            self.assertEqual(morphism_from_word(s, 'x', m.word), m)
            self.assertIn(m.determinant(), (-1, 1))
        with self.assertRaises(OverflowError):
            morphism_from_word(s, 'x', (1, 2, 1))

    def test_lengths(self):
        s = r2o3_scheme(1, 4, 5, 2)
        W = generate_groupoid(s)
        for a in s.objects:
            for f in W.from_object(a):
                test.assert_equal(W.length(f), len(f.word))
                inverse = f.inverse(s)
                self.assertIn(inverse, W.hom(f.target, a))
                twin = next(m for m in W.hom(f.target, a) if m == inverse)
                test.assert_equal(W.length(twin), W.length(f))

    def test_longest_is_number_of_positive_roots(self):
        for s in (r2o3_scheme(1, 3, 6, 2), b3_case1(), two_object_scheme([[2, -2, 0], [-1, 2, -1], [0, -1, 2]],
                                                                          [[2, -2, 0], [-1, 2, -2], [0, -1, 2]])):
            W = generate_groupoid(s)
            R = root_closure(s).root_system
            for a in s.objects:
                test.assert_equal(max_length(W, a), R.n_positive(a))
                betas = positive_roots_along(s, a, longest_word(W, a))
                test.assert_equal(len(set(betas)), len(betas))
                test.assert_equal(set(betas), set(tuple(v) for v in R.positive(a).tolist()))


class InfiniteTest(TestCase):

    def setUp(self):
        self.affine = one_object_scheme([[2, -2], [-2, 2]])

    def test_exponent(self):
        test.assert_equal(finite_order_exponent(2), 12)
        test.assert_equal(finite_order_exponent(3), 12)
        test.assert_equal(finite_order_exponent(4), 120)

    def test_has_finite_order(self):
        self.assertTrue(has_finite_order([[0, -1], [1, 0]]))
        self.assertTrue(has_finite_order([[-1, 1], [-1, 0]]))
        self.assertFalse(has_finite_order([[1, 1], [0, 1]]))
        self.assertFalse(has_finite_order([[2, 1], [1, 1]]))

    def test_affine(self):
        witness = find_infinite_order(self.affine)
        self.assertIsNotNone(witness)
        g = morphism_from_word(self.affine, witness.object, witness.word)
        test.assert_equal(g.target, witness.object)
        self.assertFalse(has_finite_order(g.matrix))

    def test_generation_statuses(self):
        W = generate_groupoid(self.affine)
        test.assert_equal(W.status, INFINITE)
        self.assertIsNotNone(W.witness)
        W = generate_groupoid(self.affine, cap=50, detect_infinite=False)
        test.assert_equal(W.status, CAP_EXCEEDED)
        with self.assertRaises(NotFinite):
            hom_size(W, 'x', 'x')

    def test_finite_has_no_witness(self):
        self.assertIsNone(find_infinite_order(r2o3_scheme(1, 3, 7, 2)))


class GroupTest(TestCase):

    def test_matrix_group(self):
        group = matrix_group([simple_reflection(a2(), i, 'x').matrix for i in (1, 2)])
        test.assert_equal(len(group), 6)
        test.assert_equal(group[0], np.eye(2, dtype=np.int64))

    def test_matrix_group_limit(self):
        with self.assertRaises(NotFinite):
            matrix_group([[[1, 1], [0, 1]]], limit=100)

    def test_identify(self):
        test.assert_equal(identify_coxeter_type(stabilizer(generate_groupoid(r2o3_scheme(1, 3, 6, 2)), 'x')), 'B2')
        test.assert_equal(identify_coxeter_type(stabilizer(generate_groupoid(r2o3_scheme(1, 3, 7, 2)), 'x')), 'G2')
        test.assert_equal(identify_coxeter_type(stabilizer(generate_groupoid(r2o3_scheme(1, 2, 4, 2)), 'x')),
                          'A1×A1')
        test.assert_equal(identify_coxeter_type(stabilizer(generate_groupoid(a2()), 'x')), 'A2')
        test.assert_equal(identify_coxeter_type([np.eye(2, dtype=np.int64)]), UNKNOWN)

    def test_identify_b3(self):
        W = generate_groupoid(b3_case1())
        group = stabilizer(W, 'x')
        test.assert_equal(len(group), 48)
        test.assert_equal(identify_coxeter_type(group), 'B3')

    def test_cyclic_is_unknown(self):
        rotation = np.array([[0, -1], [1, 0]])
        group = matrix_group([rotation])
        test.assert_equal(len(group), 4)
        test.assert_equal(identify_coxeter_type(group), UNKNOWN)


class PresentationTest(TestCase):

    def check_relations(self, presentation):
        rank = next(iter(presentation.generators.values())).shape[0]
        for b, word, labels, value in presentation.relations:
            test.assert_equal(value, np.eye(rank, dtype=np.int64))

    def test_a2(self):
        W = generate_groupoid(a2())
        presentation = stabilizer_presentation(W, 'x')
        test.assert_equal(len(presentation.generators), 2)
        words = [word for _, word, _, _ in presentation.relations]
        self.assertIn((2, 1, 2, 1, 2, 1), words)
        self.check_relations(presentation)
        test.assert_equal(len(presentation.group()), 6)

    def test_case1(self):
        W = generate_groupoid(b3_case1())
        presentation = stabilizer_presentation(W, 'x')
        self.check_relations(presentation)
        test.assert_equal(len(presentation.group()), 48)

    def test_rank_one(self):
        W = generate_groupoid(coset_scheme(1, []))
        presentation = stabilizer_presentation(W, '12')
        self.check_relations(presentation)
        test.assert_equal(len(presentation.group()), 1)

    def test_generators_are_endomorphisms(self):
        s = r2o3_scheme(1, 3, 6, 2)
        W = generate_groupoid(s)
        presentation = stabilizer_presentation(W, 'y')
        self.check_relations(presentation)
        endomorphisms = {m.matrix.tobytes() for m in W.hom('y', 'y')}
        for matrix in presentation.generators.values():
            self.assertIn(np.ascontiguousarray(matrix, dtype=np.int64).tobytes(), endomorphisms)
        test.assert_equal(len(presentation.group()), 8)

    def test_disconnected(self):
        W = generate_groupoid(build_scheme(['x', 'y'], {}, [[2]]))
        with self.assertRaises(NotConnected):
            stabilizer_presentation(W, 'x')
