import pytest

from shared.errors import InvalidParams, NotAssociative, NotClosed, NotIdempotent, NotSquare
from shared.semigroup_core import (
    adjoin_identity,
    all_monogenic_data,
    construct,
    cyclic_group,
    direct_product,
    elementary_abelian_2,
    exponent,
    identity_element,
    idempotents,
    is_band,
    is_commutative,
    is_group,
    is_monogenic,
    left_zero,
    maximal_monogenic,
    monogenic,
    monogenic_data,
    monogenic_partition,
    pi_set,
    relabel,
    s_f,
    subsemigroup_generated,
    transpose,
    validate,
    zero_semigroup,
)


class TestValidate:
    def test_accepts_trivial(self):
        s = validate([[0]])
        assert s.n == 1
        assert s.table == ((0,),)

    def test_not_square(self):
        with pytest.raises(NotSquare):
            validate([[0, 1], [1]])

    def test_not_closed(self):
        with pytest.raises(NotClosed) as exc:
            validate([[0, 2], [1, 0]])
        assert exc.value.position == (0, 1)

    def test_not_associative_reports_first_failing_triple(self):
        rows = [[1, 0], [0, 0]]
        with pytest.raises(NotAssociative) as exc:
            validate(rows)
        i, j, k = exc.value.triple
        assert (i, j, k) == (0, 0, 1)
        assert rows[rows[i][j]][k] != rows[i][rows[j][k]]
        assert str((i, j, k)) in str(exc.value)

    def test_labels_do_not_affect_equality(self):
        assert validate([[0]], ['e']) == validate([[0]])


class TestConstructors:
    def test_monogenic_index_one_is_a_group(self):
        assert is_group(monogenic(1, 4))

    def test_monogenic_labels(self):
        assert monogenic(2, 3).element_labels() == ['a', 'a^2', 'a^3', 'a^4']

    def test_elementary_abelian(self):
        s = elementary_abelian_2(3)
        assert s.n == 8
        assert is_group(s)
        assert pi_set(s) == {1, 2}

    def test_zero_semigroup(self):
        s = zero_semigroup(3)
        assert all(v == 0 for row in s.table for v in row)

    def test_direct_product_indexing(self):
        s, t = left_zero(2), cyclic_group(3)
        p = direct_product(s, t)
        assert p.n == 6
        for (i1, j1) in [(0, 1), (1, 2)]:
            for (i2, j2) in [(1, 1), (0, 2)]:
                assert p.mul(i1 * 3 + j1, i2 * 3 + j2) == s.mul(i1, i2) * 3 + t.mul(j1, j2)

    def test_adjoin_identity(self):
        s = adjoin_identity(zero_semigroup(2))
        assert s.n == 3
        assert identity_element(s) == 2
        assert s.label(2) == '1'

    def test_construct_registry(self):
        assert construct('monogenic', 2, 3) == monogenic(2, 3)

    @pytest.mark.parametrize('kind, params', [
        ('direct_product', (2, 2)),
        ('adjoin_identity', (3,)),
        ('direct_product', (left_zero(2), 2)),
    ])
    def test_table_constructors_need_tables(self, kind, params):
        with pytest.raises(InvalidParams, match=r'\^1'):
            construct(kind, *params)

    def test_validate_rejects_a_scalar(self):
        with pytest.raises(InvalidParams):
            validate(5)

    @pytest.mark.parametrize('kind, params', [
        ('no_such_kind', (1,)),
        ('monogenic', (0, 1)),
        ('cyclic_group', (1, 2)),
        ('left_zero', ('x',)),
    ])
    def test_construct_rejects_bad_input(self, kind, params):
        with pytest.raises(InvalidParams):
            construct(kind, *params)


class TestMonogenicArithmetic:
    @pytest.mark.parametrize('m', range(1, 9))
    @pytest.mark.parametrize('r', range(1, 9))
    def test_monogenic_data_recovers_index_and_period(self, m, r):
        s = monogenic(m, r)
        d = monogenic_data(s, 0)
        assert (d.index_m, d.period_r) == (m, r)
        assert d.order == m + r - 1 == s.n

        kernel = d.kernel
        assert len(kernel) == r
        assert all(s.mul(x, y) in kernel for x in kernel for y in kernel)
        e = d.idempotent
        assert e in kernel
        assert all(s.mul(e, x) == x == s.mul(x, e) for x in kernel)
        assert all(any(s.mul(x, y) == e for y in kernel) for x in kernel)

        assert len(idempotents(s)) == 1

    def test_kernel_of_a_power_is_its_meet_with_the_kernel(self, corpus4):
        for s in corpus4:
            data = all_monogenic_data(s)
            for d in data:
                for i in range(1, d.order + 1):
                    sub = data[d.power(i)]
                    assert sub.kernel == sub.elements & d.kernel, (s.rows(), d.generator, i)

    def test_cyclic_group_generator(self):
        d = monogenic_data(cyclic_group(6), 1)
        assert (d.index_m, d.period_r, d.order) == (1, 6, 6)

    def test_power_reduces_past_the_period(self):
        d = monogenic_data(monogenic(2, 3), 0)
        assert d.power(5) == d.power(2)
        assert d.power(7) == d.power(4)
        with pytest.raises(InvalidParams):
            d.power(0)

    def test_idempotents(self):
        assert idempotents(cyclic_group(4)) == {0}
        assert idempotents(left_zero(3)) == {0, 1, 2}

    def test_s_f(self):
        assert s_f(cyclic_group(4), 0).elements == (0, 1, 2, 3)
        with pytest.raises(NotIdempotent):
            s_f(cyclic_group(4), 1)

    def test_pi_set(self):
        assert pi_set(cyclic_group(6)) == {1, 2, 3, 6}
        # a has order 4, a^2 and a^4 order 3, a^3 is the idempotent
        assert pi_set(monogenic(2, 3)) == {1, 3, 4}

    def test_maximal_monogenic_of_cyclic_group(self):
        subs = maximal_monogenic(cyclic_group(4))
        assert len(subs) == 1
        assert subs[0].elements == (0, 1, 2, 3)
        assert subs[0].generators == (1, 3)

    def test_maximal_monogenic_of_klein_group(self):
        subs = maximal_monogenic(elementary_abelian_2(2))
        assert [sub.elements for sub in subs] == [(0, 1), (0, 2), (0, 3)]

    def test_is_monogenic(self):
        assert is_monogenic(cyclic_group(5)) is not None
        assert is_monogenic(elementary_abelian_2(2)) is None

    def test_is_band(self):
        assert is_band(left_zero(4))
        assert not is_band(cyclic_group(2))
        assert not is_band(monogenic(2, 3))

    @pytest.mark.parametrize('s, expected', [
        (left_zero(3), 1),
        (cyclic_group(4), 4),
        (monogenic(2, 3), 3),
        (monogenic(4, 2), 4),
        (direct_product(cyclic_group(2), cyclic_group(3)), 6),
        (zero_semigroup(3), 2),
    ])
    def test_exponent(self, s, expected):
        k = exponent(s)
        assert k == expected
        idem = idempotents(s)
        assert all(d.power(k) in idem for d in all_monogenic_data(s))

    def test_subsemigroup_generated(self):
        s = elementary_abelian_2(2)
        assert subsemigroup_generated(s, [1, 2]).elements == (0, 1, 2, 3)
        assert subsemigroup_generated(s, [1]).elements == (0, 1)


class TestStructure:
    def test_relabel_is_an_isomorphism(self):
        s = monogenic(2, 3)
        perm = [2, 0, 3, 1]
        t = relabel(s, perm)
        for i in range(s.n):
            for j in range(s.n):
                assert t.mul(perm[i], perm[j]) == perm[s.mul(i, j)]
        assert t.label(2) == 'a'

    def test_relabel_rejects_non_permutation(self):
        with pytest.raises(InvalidParams):
            relabel(left_zero(2), [0, 0])

    def test_transpose_swaps_left_and_right_zero(self):
        assert transpose(left_zero(3)).table == construct('right_zero', 3).table

    def test_commutative(self):
        assert is_commutative(cyclic_group(5))
        assert not is_commutative(left_zero(2))

    def test_monogenic_partition(self):
        assert [sub.elements for sub in monogenic_partition(left_zero(3))] == [(0,), (1,), (2,)]
        assert [sub.elements for sub in monogenic_partition(monogenic(2, 3))] == [(0, 1, 2, 3)]
        assert monogenic_partition(zero_semigroup(3)) is None
        assert monogenic_partition(direct_product(left_zero(2), cyclic_group(2)), size=2) is not None
        assert monogenic_partition(direct_product(left_zero(2), cyclic_group(2)), size=1) is None
