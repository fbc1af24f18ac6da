import random

import pytest

from quandles import (
    MCQ,
    InvalidTable,
    Partition,
    associated_mcq,
    check_mcq_axioms,
    conjugation_mcq,
    connected_components,
    cyclic_group,
    dihedral,
    generated_sub_mcq,
    is_sub_mcq,
    lambda_orbits,
    maximal_decomposition,
    maximal_mcq_decomposition,
    symmetric_group,
    trivial_quandle,
    type_of,
)


def mcq_isomorphic_by(x, y, carrier_map):
    """Verify an explicit bijection transports * and the group products."""
    if sorted(carrier_map) != list(range(x.size)):
        return False
    image = sorted(carrier_map[i] for i in range(x.size))
    if image != list(range(y.size)):
        return False
    for a in range(x.size):
        for b in range(x.size):
            if carrier_map[x.op[a][b]] != y.op[carrier_map[a]][carrier_map[b]]:
                return False
            if x.group_of[a] == x.group_of[b]:
                if y.group_of[carrier_map[a]] != y.group_of[carrier_map[b]]:
                    return False
                if carrier_map[x.gmul(a, b)] != y.gmul(carrier_map[a], carrier_map[b]):
                    return False
    return True


class TestAssociatedMcq:
    def test_dihedral_three(self):
        q = dihedral(3).quandle
        x = associated_mcq(q)
        assert x.group_count == 3
        assert all(g.size == 2 for g in x.groups)
        assert x.size == 6

    def test_trivial_singleton(self):
        x = associated_mcq(trivial_quandle(1))
        assert x.group_count == 1
        assert x.size == 1

    def test_tetrahedral(self, tetrahedral):
        assert type_of(tetrahedral.quandle) == 3
        x = associated_mcq(tetrahedral.quandle)
        assert x.group_count == 4
        assert x.size == 12

    def test_operation_formula(self):
        q = dihedral(4).quandle
        x = associated_mcq(q)
        m = 2
        for xx in range(4):
            for g in range(m):
                for y in range(4):
                    for h in range(m):
                        out = x.op[xx * m + g][y * m + h]
                        elem = xx
                        for _ in range(h):
                            elem = q.table[elem][y]
                        assert out == elem * m + g  # Z_m is abelian: h^-1 g h == g


class TestAxioms:
    def test_associated_structures_pass(self, conj_s3, tetrahedral):
        for q in (dihedral(3).quandle, dihedral(6).quandle,
                  tetrahedral.quandle, conj_s3):
            assert check_mcq_axioms(associated_mcq(q)) is None

    def test_single_group_conjugation(self):
        for g in (symmetric_group(3), cyclic_group(5)):
            assert check_mcq_axioms(conjugation_mcq(g)) is None

    def test_tampered_identity_action(self):
        x = associated_mcq(dihedral(3).quandle)
        table = [list(row) for row in x.op]
        e0 = x.identity_of(0)
        # tamper a cross-group entry so the conjugation axiom stays intact
        victim = next(i for i in range(x.size) if x.group_of[i] != 0)
        assert table[victim][e0] == victim
        table[victim][e0] = (victim + 1) % x.size
        bad = check_mcq_axioms(MCQ(x.groups, table, x.labels))
        assert bad is not None
        assert bad.axiom == "group-action"
        assert bad.witness == (victim, e0)

    def test_loader_round_trip_and_refusal(self):
        x = associated_mcq(dihedral(3).quandle)
        data = x.to_json()
        back = MCQ.from_json(data)
        assert back.op == x.op
        assert back.labels == x.labels
        data_bad = x.to_json()
        data_bad["op"][0][x.identity_of(0)] = 1 if data_bad["op"][0][x.identity_of(0)] != 1 else 2
        with pytest.raises(InvalidTable):
            MCQ.from_json(data_bad)
        assert MCQ.from_json(data_bad, check=False).size == x.size


class TestLambdaOrbits:
    def test_connected_for_odd_dihedral(self):
        x = associated_mcq(dihedral(3).quandle)
        assert lambda_orbits(x).blocks == ((0, 1, 2),)

    def test_even_dihedral_splits(self):
        x = associated_mcq(dihedral(6).quandle)
        assert lambda_orbits(x).blocks == ((0, 2, 4), (1, 3, 5))

    def test_single_group(self):
        x = conjugation_mcq(symmetric_group(3))
        assert lambda_orbits(x).blocks == ((0,),)

    def test_matches_quandle_components(self, conj_s3, tetrahedral):
        for q in [dihedral(m).quandle for m in range(3, 13)] + [
                tetrahedral.quandle, conj_s3]:
            assert lambda_orbits(associated_mcq(q)) == connected_components(q)


class TestSubMcq:
    def test_identity_singleton(self):
        x = associated_mcq(dihedral(3).quandle)
        report = is_sub_mcq(x, [x.identity_of(0)])
        assert report.ok

    def test_full_carrier(self):
        x = associated_mcq(dihedral(3).quandle)
        assert is_sub_mcq(x, range(x.size)).ok

    def test_non_idempotent_singleton(self):
        x = associated_mcq(dihedral(3).quandle)
        non_identity = next(i for i in range(x.size) if x.gmul(i, i) != i or
                            i != x.identity_of(x.group_of[i]))
        report = is_sub_mcq(x, [non_identity])
        assert not report.ok
        assert not report.by_intersections

    def test_criteria_agree_on_random_subsets(self, conj_s3):
        rng = random.Random(31)
        for q in (dihedral(4).quandle, dihedral(9).quandle, conj_s3):
            x = associated_mcq(q)
            for _ in range(300):
                if rng.randrange(4) == 0:
                    subset = generated_sub_mcq(
                        x, rng.sample(range(x.size), rng.randint(1, 3)))
                else:
                    subset = rng.sample(range(x.size), rng.randint(1, x.size))
                report = is_sub_mcq(x, subset)
                assert (report.by_restriction == report.by_intersections
                        == report.by_factorization == report.ok)


class TestGeneratedSubMcq:
    def test_identity_is_closed(self):
        x = associated_mcq(dihedral(3).quandle)
        e = x.identity_of(1)
        assert generated_sub_mcq(x, [e]) == {e}

    def test_generator_fills_its_group(self):
        x = associated_mcq(dihedral(3).quandle)
        # (x0, 1) generates {x0} x Z_2
        a = 0 * 2 + 1
        assert generated_sub_mcq(x, [a]) == set(x.group_range(0))

    def test_two_generators_fill_the_carrier(self):
        x = associated_mcq(dihedral(3).quandle)
        a, b = 0 * 2 + 1, 1 * 2 + 1
        assert generated_sub_mcq(x, [a, b]) == set(range(6))

    def test_closure_is_sub_mcq_and_reachable(self, conj_s3):
        rng = random.Random(32)
        for q in (dihedral(6).quandle, conj_s3):
            x = associated_mcq(q)
            for _ in range(40):
                seeds = rng.sample(range(x.size), rng.randint(1, 3))
                closure = generated_sub_mcq(x, seeds)
                assert is_sub_mcq(x, closure).ok
                # identity of every touched group is reachable from a seed
                # identity by moves with operands in the seed set
                reach = {x.identity_of(x.group_of[a]) for a in seeds}
                frontier = list(reach)
                while frontier:
                    e = frontier.pop()
                    for a in seeds:
                        for nxt in (x.star(e, a), x.star_inv(e, a)):
                            if nxt not in reach:
                                reach.add(nxt)
                                frontier.append(nxt)
                for member in closure:
                    assert x.identity_of(x.group_of[member]) in reach


class TestMaximalMcqDecomposition:
    def test_connected_case(self):
        x = associated_mcq(dihedral(3).quandle)
        dec = maximal_mcq_decomposition(x)
        assert dec.index_tree.depth == 0
        assert len(dec.carrier_partition) == 1

    def test_dihedral_six(self):
        x = associated_mcq(dihedral(6).quandle)
        dec = maximal_mcq_decomposition(x)
        assert dec.index_tree.depth == 1
        assert dec.index_tree.final.blocks == ((0, 2, 4), (1, 3, 5))
        ref = associated_mcq(dihedral(3).quandle)
        for block in dec.index_tree.final.blocks:
            # order-preserving reindex x -> x // 2 transports the structure
            lams = sorted(block)
            carrier = [i for lam in lams for i in x.group_range(lam)]
            mapping = {c: idx for idx, c in enumerate(carrier)}
            sub_op = [[mapping[x.op[a][b]] for b in carrier] for a in carrier]
            sub = MCQ((cyclic_group(2),) * 3, sub_op)
            identity_map = list(range(6))
            assert mcq_isomorphic_by(sub, ref, identity_map)

    def test_dihedral_twelve(self):
        x = associated_mcq(dihedral(12).quandle)
        dec = maximal_mcq_decomposition(x)
        assert dec.index_tree.depth == 2
        assert len(dec.index_tree.final) == 4
        assert all(len(b) == 3 for b in dec.index_tree.final.blocks)

    def test_carrier_partition_is_quandle_partition_times_zm(self, conj_s3, tetrahedral):
        for q in [dihedral(m).quandle for m in range(3, 13)] + [
                tetrahedral.quandle, conj_s3]:
            m = type_of(q)
            x = associated_mcq(q)
            expected = Partition(
                [i * m + g for i in block for g in range(m)]
                for block in maximal_decomposition(q).final.blocks
            )
            assert maximal_mcq_decomposition(x).carrier_partition == expected

    def test_json_round_trip(self):
        x = associated_mcq(dihedral(6).quandle)
        dec = maximal_mcq_decomposition(x)
        from quandles.mcq import McqDecomposition

        back = McqDecomposition.from_json(dec.to_json())
        assert back == dec
