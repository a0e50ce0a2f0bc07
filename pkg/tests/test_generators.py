import pytest

from streampart import (
    GeneratorSpec,
    gen_constant,
    gen_index_hard,
    gen_spike,
    gen_uniform,
    gen_yz_hard,
    opt_bottleneck_binsearch,
)


def test_uniform_shape_and_determinism():
    a = gen_uniform(200, 9, seed=7)
    b = gen_uniform(200, 9, seed=7)
    c = gen_uniform(200, 9, seed=8)
    assert a == b
    assert a != c
    assert len(a) == 200
    assert all(0 <= w <= 9 for w in a)
    assert gen_uniform(0, 5) == []
    with pytest.raises(ValueError):
        gen_uniform(-1, 5)


def test_constant():
    assert gen_constant(4, 4) == [4, 4, 4, 4]
    assert gen_constant(0, 3) == []
    with pytest.raises(ValueError):
        gen_constant(3, -1)


def test_spike_structure():
    stream = gen_spike(100, 50, seed=3)
    assert len(stream) == 100
    assert stream.count(50) == 5  # one spike per 20 elements
    assert all(w in (1, 50) for w in stream)
    assert gen_spike(100, 50, seed=3) == stream
    assert gen_spike(10, 0) == [0] * 10
    assert gen_spike(3, 9).count(9) == 1


def test_index_hard_frozen():
    assert gen_index_hard("10", 2) == [1, 3, 3, 1, 4, 2]
    assert gen_index_hard((0, 1), 2) == [3, 1, 1, 3, 4, 2]
    # at the lowest valid index for an even bit count the filler run
    # is clamped to zero fours
    assert gen_index_hard("00", 1) == [3, 1, 3, 1, 2]


def test_index_hard_optimum_reveals_bit():
    assert opt_bottleneck_binsearch(gen_index_hard("10", 2), 2).optimum == 7
    assert opt_bottleneck_binsearch(gen_index_hard("01", 2), 2).optimum == 8
    # four bits, query the last: 4*4 - 1 = 15 iff bit is 0
    assert opt_bottleneck_binsearch(gen_index_hard("1110", 4), 2).optimum == 15
    assert opt_bottleneck_binsearch(gen_index_hard("1111", 4), 2).optimum == 16


def test_index_hard_shape():
    for bits, index in (("1011", 3), ("010", 2), ("1", 1), ("110101", 6)):
        stream = gen_index_hard(bits, index)
        count = len(bits)
        assert len(stream) == 2 * count + max(0, 2 * index - count - 1) + 1
        assert stream[-1] == 2
        for k in range(count):
            assert stream[2 * k] + stream[2 * k + 1] == 4


def test_index_hard_validation():
    with pytest.raises(ValueError):
        gen_index_hard("", 1)
    with pytest.raises(ValueError):
        gen_index_hard("012", 1)
    with pytest.raises(ValueError):
        gen_index_hard("1010", 0)  # below ceil(4/2)
    with pytest.raises(ValueError):
        gen_index_hard("1010", 5)  # above the bit count
    with pytest.raises(ValueError):
        gen_index_hard([0, 2], 1)


def test_yz_hard_structure():
    stream = gen_yz_hard(10, 2, 1, seed=0)
    assert len(stream) == 20
    assert stream[:2] == [1, 1]  # 2*(pairs-1) leading ones
    assert set(stream) <= {0, 1}
    first, second = stream[:10], stream[10:]
    assert sum(first) == 6  # 4*pairs - 2
    assert sum(second) == 0
    deeper = gen_yz_hard(10, 2, 2, seed=0)
    assert sum(deeper[10:]) == 4
    assert deeper[10:14] == [1, 1, 1, 1]
    assert gen_yz_hard(10, 2, 1, seed=5) == gen_yz_hard(10, 2, 1, seed=5)


def test_yz_hard_optimum_closed_form():
    assert opt_bottleneck_binsearch(gen_yz_hard(10, 2, 1, seed=0), 2).optimum == 3
    assert opt_bottleneck_binsearch(gen_yz_hard(10, 2, 2, seed=0), 2).optimum == 5
    for seed in range(10):
        for pairs in (1, 2, 3, 4):
            for bob in range(1, pairs + 1):
                stream = gen_yz_hard(4 * pairs, pairs, bob, seed=seed)
                expected = 2 * pairs - 1 + 2 * (bob - 1)
                assert opt_bottleneck_binsearch(stream, 2).optimum == expected


def test_yz_hard_validation():
    with pytest.raises(ValueError):
        gen_yz_hard(10, 0, 1)
    with pytest.raises(ValueError):
        gen_yz_hard(5, 2, 1)  # below 4*pairs - 2
    with pytest.raises(ValueError):
        gen_yz_hard(10, 2, 3)
    with pytest.raises(ValueError):
        gen_yz_hard(10, 2, 0)


def test_generator_spec_dispatch():
    assert GeneratorSpec("uniform", n=5, m=3, seed=1).make() == gen_uniform(5, 3, 1)
    assert GeneratorSpec("constant", n=2, m=4).make() == [4, 4]
    assert GeneratorSpec("spike", n=40, m=9, seed=2).make() == gen_spike(40, 9, 2)
    assert GeneratorSpec("yz", n=10, t=2, i=1, seed=3).make() == gen_yz_hard(10, 2, 1, 3)
    assert GeneratorSpec("index", bits="10", i=2).make() == gen_index_hard("10", 2)


def test_generator_spec_missing_fields():
    with pytest.raises(ValueError, match="requires m"):
        GeneratorSpec("uniform", n=5).make()
    with pytest.raises(ValueError, match="requires n, t, i"):
        GeneratorSpec("yz").make()
    with pytest.raises(ValueError, match="unknown generator kind"):
        GeneratorSpec("waves", n=5, m=3).make()
