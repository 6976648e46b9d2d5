from fractions import Fraction
from math import factorial

import pytest

from charcol.chain import SymmetricChain, WreathChain, get_chain
from charcol.engine import FallingFactorialPoly
from charcol.hgroup import builtin_table
from charcol.partitions import enumerate_partitions


def fresh_sym():
    return SymmetricChain()


def fresh_z2():
    return WreathChain(builtin_table("Z2"))


def test_get_chain_is_memoized():
    assert get_chain("sym") is get_chain("sym")
    assert isinstance(get_chain("z2wreath"), WreathChain)


def test_sym_basis_sizes():
    sym = fresh_sym()
    assert len(sym.basis(6)) == 11
    assert sym.basis(0) == ((),)


def test_wreath_basis_examples():
    z2c = fresh_z2()
    assert z2c.basis(1) == (((0, (1,)),), ((1, (1,)),))
    assert len(z2c.basis(2)) == 5


def test_res_single_corner():
    sym = fresh_sym()
    op = sym.res_operator(6)
    col = op.domain.index((3, 3))
    entries = {op.codomain[r]: v for r, c, v in op.matrix.triplets() if c == col}
    assert entries == {(3, 2): 1}


def test_res_column_sums_count_corners():
    sym = fresh_sym()
    for n in (3, 5, 7):
        op = sym.res_operator(n)
        for c, parent in enumerate(op.domain):
            total = sum(v for (_, cc), v in op.matrix.data.items() if cc == c)
            corners = sum(
                1
                for i in range(len(parent))
                if parent[i] > (parent[i + 1] if i + 1 < len(parent) else 0)
            )
            assert total == corners


def test_res_trivial_is_trivial():
    sym = fresh_sym()
    for n in (1, 4, 8):
        vec = sym.apply_res(sym.unit_vector(n, (n,)))
        assert vec.coeffs == {(n - 1,) if n > 1 else (): 1}


def test_wreath_res_example():
    # Res(1^{n-1},-1; t,t) = (1^{n-2},-1; t,t) + (1^{n-1}; t), multiplicity 1 each
    z2c = fresh_z2()
    for n in (3, 4, 5):
        label = ((0, (n - 1,)), (1, (1,)))
        vec = z2c.apply_res(z2c.unit_vector(n, label))
        assert vec.coeffs == {
            ((0, (n - 2,)), (1, (1,))): 1,
            ((0, (n - 1,)),): 1,
        }


def test_wreath_res_multiplicity_is_h_dim():
    # for one-dimensional H-irreps every removal has multiplicity 1
    z2c = fresh_z2()
    op = z2c.res_operator(3)
    assert all(v == 1 for _, _, v in op.matrix.triplets())


def test_ind_res_level_two():
    sym = fresh_sym()
    assert sym.ind_res(2).to_dense() == [[1, 1], [1, 1]]


def test_ind_res_t_is_t_plus_v():
    sym = fresh_sym()
    for n in (3, 5, 7):
        out = sym.apply_ind(sym.apply_res(sym.unit_vector(n, (n,))))
        assert out.coeffs == {(n,): 1, (n - 1, 1): 1}


def test_ind_res_symmetry():
    for chain, top in ((fresh_sym(), 10), (fresh_z2(), 5)):
        for n in range(1, top + 1):
            x = chain.ind_res(n)
            assert x == x.transpose(), (chain.id, n)


def test_res_full_row_rank():
    for chain, top in ((fresh_sym(), 10), (fresh_z2(), 5)):
        for n in range(1, top + 1):
            op = chain.res_operator(n)
            assert op.matrix.row_rank() == len(op.codomain), (chain.id, n)


def test_heisenberg_identity():
    for chain, top in ((fresh_sym(), 8), (fresh_z2(), 4)):
        m = chain.heisenberg_scaling
        for n in range(0, top + 1):
            up = chain.res_operator(n + 1).matrix
            comm = up @ up.transpose()
            if n >= 1:
                down = chain.res_operator(n).matrix
                comm = comm - down.transpose() @ down
            assert comm.equals_scaled_identity(m), (chain.id, n)


def test_brute_indl_resl_l1_equals_ind_res():
    for chain in (fresh_sym(), fresh_z2()):
        for n in (1, 2, 3, 4):
            assert chain.brute_indl_resl(n, 1) == chain.ind_res(n)


def test_falling_factorial_identity_sym():
    sym = fresh_sym()
    for n in range(1, 9):
        x = sym.ind_res(n)
        for l in range(1, n + 1):
            assert sym.brute_indl_resl(n, l) == FallingFactorialPoly(l, 1).matrix(x)


def test_falling_factorial_identity_z2():
    z2c = fresh_z2()
    for n in range(1, 5):
        x = z2c.ind_res(n)
        for l in range(1, n + 1):
            assert z2c.brute_indl_resl(n, l) == FallingFactorialPoly(l, 2).matrix(x)


def test_brute_indl_resl_rejects_bad_l():
    sym = fresh_sym()
    with pytest.raises(ValueError):
        sym.brute_indl_resl(3, 4)
    with pytest.raises(ValueError):
        sym.brute_indl_resl(3, 0)


def test_vector_checks_labels():
    sym = fresh_sym()
    with pytest.raises(ValueError):
        sym.vector(3, {(4,): 1})
    vec = sym.vector(3, {(3,): Fraction(1, 2)})
    assert vec.coefficient((3,)) == Fraction(1, 2)
    assert not vec.is_integral()


def test_group_orders():
    assert fresh_sym().group_order(5) == factorial(5)
    assert fresh_z2().group_order(3) == 8 * 6


def test_class_strip_embed_round_trip():
    sym = fresh_sym()
    core, k = sym.strip_class((3, 1, 1, 1))
    assert (core, k) == ((3,), 3)
    assert sym.embed_class(core, 6) == (3, 1, 1, 1)
    z2c = fresh_z2()
    core, k = z2c.strip_class(((0, (2, 1, 1)), (1, (1,))))
    assert core == ((0, (2,)), (1, (1,)))
    assert k == 3
    assert z2c.embed_class(core, 5) == ((0, (2, 1, 1)), (1, (1,)))


def test_wreath_basis_size_formula():
    z2c = fresh_z2()
    for n in range(6):
        expect = sum(
            len(enumerate_partitions(a)) * len(enumerate_partitions(n - a))
            for a in range(n + 1)
        )
        assert len(z2c.basis(n)) == expect
