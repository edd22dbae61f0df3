import json
from collections import Counter

import numpy as np
import pytest

from ranknet import (
    Builder,
    Comparator,
    DimensionError,
    ascending_factorization,
    binary_network,
    build_network,
    divisor_network,
    index_vector_v,
    index_vector_w,
    network_from_json,
    network_to_dot,
    network_to_json,
    prime_network,
    smallest_prime_factor,
    validate_network,
)


def pair_counter(net):
    pairs = Counter()
    for comp in net.comparators():
        idx = comp.indices
        for a in range(len(idx)):
            for b in range(a + 1, len(idx)):
                pairs[(idx[a], idx[b])] += 1
    return pairs


class TestNumberTheory:
    def test_smallest_prime_factor(self):
        assert smallest_prime_factor(6) == 2
        assert smallest_prime_factor(9) == 3
        assert smallest_prime_factor(13) == 13
        assert smallest_prime_factor(49) == 7
        with pytest.raises(DimensionError):
            smallest_prime_factor(1)

    def test_ascending_factorization(self):
        assert ascending_factorization(12) == [2, 2, 3]
        assert ascending_factorization(16) == [2, 2, 2, 2]
        assert ascending_factorization(15) == [3, 5]
        with pytest.raises(DimensionError):
            ascending_factorization(0)


class TestIndexVectors:
    def test_v_examples(self):
        assert index_vector_v(0, 0, 2, 3) == [0, 3]
        assert index_vector_v(1, 2, 2, 3) == [1, 3]
        assert index_vector_v(2, 1, 2, 3) == [2, 3]

    def test_v_out_of_range(self):
        with pytest.raises(IndexError):
            index_vector_v(3, 0, 2, 3)
        with pytest.raises(IndexError):
            index_vector_v(0, -1, 2, 3)

    def test_v_strictly_increasing(self):
        for d, D in [(2, 3), (3, 5), (5, 7), (2, 8)]:
            for j in range(D):
                for k in range(D):
                    v = index_vector_v(j, k, d, D)
                    assert all(a < b for a, b in zip(v, v[1:]))

    def test_w_examples(self):
        assert index_vector_w(0, 4) == [0, 1, 2, 3]
        assert index_vector_w(1, 4) == [4, 5, 6, 7]
        assert index_vector_w(1, 3) == [3, 4, 5]
        with pytest.raises(IndexError):
            index_vector_w(2, 3, d=2)


class TestDivisorNetwork:
    def test_n6_shape(self):
        net = divisor_network(6)
        arities = [[c.arity for c in lev.comparators] for lev in net.levels]
        assert arities == [[3, 3], [2, 2, 2], [2, 2, 2], [2, 2, 2]]

    def test_n8_shape(self):
        net = divisor_network(8)
        arities = [[c.arity for c in lev.comparators] for lev in net.levels]
        assert arities == [[4, 4]] + [[2, 2, 2, 2]] * 4

    def test_prime_degenerates(self):
        net = divisor_network(7)
        assert len(net.levels) == 1
        assert net.levels[0].comparators[0].indices == tuple(range(7))

    def test_rejects_small(self):
        with pytest.raises(DimensionError):
            divisor_network(1)


class TestPrimeNetwork:
    def test_n4(self):
        net = prime_network(4)
        assert len(net.levels) == 3
        assert all(len(lev.comparators) == 2 for lev in net.levels)
        assert all(c.arity == 2 for c in net.comparators())

    def test_n8(self):
        net = prime_network(8)
        assert len(net.levels) == 7
        assert all(len(lev.comparators) == 4 for lev in net.levels)

    def test_n12(self):
        net = prime_network(12)
        assert len(net.levels) == 10
        by_arity = Counter(c.arity for c in net.comparators())
        assert by_arity == {2: 54, 3: 4}
        ternary_levels = sum(
            1 for lev in net.levels if lev.comparators[0].arity == 3
        )
        assert ternary_levels == 1

    def test_all_arities_prime_factors(self):
        for n in [6, 12, 18, 30, 60]:
            factors = set(ascending_factorization(n))
            assert {c.arity for c in prime_network(n).comparators()} <= factors


class TestInvariants:
    @pytest.mark.parametrize("builder", list(Builder))
    def test_pair_coverage_and_conservation(self, builder):
        for n in range(2, 65):
            net = build_network(n, builder)
            pairs = pair_counter(net)
            assert len(pairs) == n * (n - 1) // 2
            assert all(v == 1 for v in pairs.values())
            assert (
                sum(c.arity * (c.arity - 1) // 2 for c in net.comparators())
                == n * (n - 1) // 2
            )

    @pytest.mark.parametrize("builder", [Builder.DIVISOR, Builder.PRIME])
    def test_level_maximality(self, builder):
        for n in range(2, 49):
            net = build_network(n, builder)
            for lev in net.levels:
                covered = [i for c in lev.comparators for i in c.indices]
                assert sorted(covered) == list(range(n))
                k = lev.comparators[0].arity
                assert all(c.arity == k for c in lev.comparators)
                assert len(lev.comparators) == n // k

    def test_divisor_level_counts(self):
        for n in [4, 6, 8, 9, 10, 12, 15, 16, 30]:
            net = divisor_network(n)
            d = smallest_prime_factor(n)
            D = n // d
            assert len(net.levels) == 1 + D
            assert len(net.levels[0].comparators) == d
            for lev in net.levels[1:]:
                assert len(lev.comparators) == D


class TestValidation:
    def test_valid_networks(self):
        for n in [5, 6, 8, 12]:
            for builder in Builder:
                assert validate_network(build_network(n, builder)).ok

    def test_binary_n5_pair_count(self):
        net = binary_network(5)
        assert sum(1 for _ in net.comparators()) == 10
        assert validate_network(net).ok

    def test_fault_injection(self):
        net = divisor_network(6)
        net.levels[1].comparators[0] = Comparator((0, 4))  # was (0, 3)
        report = validate_network(net)
        assert not report.ok
        assert any("pair" in v or "covered" in v for v in report.violations)


class TestSerialization:
    def test_json_schema(self):
        doc = json.loads(network_to_json(divisor_network(6)))
        assert list(doc) == ["n", "builder", "levels"]
        assert doc["n"] == 6
        assert doc["builder"] == "divisor"
        assert doc["levels"][0] == [{"indices": [0, 1, 2]}, {"indices": [3, 4, 5]}]

    def test_round_trip(self):
        for n in [2, 6, 8, 12]:
            for builder in Builder:
                net = build_network(n, builder)
                loaded = network_from_json(network_to_json(net))
                assert loaded.n == net.n
                assert loaded.builder == net.builder
                assert [
                    [c.indices for c in lev.comparators] for lev in loaded.levels
                ] == [[c.indices for c in lev.comparators] for lev in net.levels]

    def test_dot_export(self):
        dot = network_to_dot(divisor_network(6))
        assert dot.count('label="C_3"') == 2
        assert dot.count('label="C_2"') == 9
        assert dot.count("subgraph cluster_") == 4
        assert "adder" in dot
