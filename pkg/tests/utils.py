import sys
from contextlib import contextmanager
from io import StringIO
from typing import List

from satvec.graph import Graph, GraphBuilder, term
from satvec.random_stream import RandomStream
from satvec.symbols import Symbol

F = Symbol("f", 2)
G = Symbol("g", 1)
A = Symbol("a")
B = Symbol("b")


@contextmanager
def captured_output():
    new_out, new_err = StringIO(), StringIO()
    old_out, old_err = sys.stdout, sys.stderr
    try:
        sys.stdout, sys.stderr = new_out, new_err
        yield sys.stdout, sys.stderr
    finally:
        sys.stdout, sys.stderr = old_out, old_err


def tiny_trees(max_depth: int) -> List[Graph]:
    """Every tree of the tree signature whose root arguments are at most `max_depth` levels deep"""

    def inner(depth: int) -> List[tuple]:
        trees: List[tuple] = [(A,), (B,)]
        if depth > 1:
            trees += [(G, child) for child in inner(depth - 1)]
        return trees

    def build(builder: GraphBuilder, tree: tuple) -> int:
        return builder.add(tree[0], *(build(builder, child) for child in tree[1:]))

    roots = [(G, x) for x in inner(max_depth)] + [(F, x, y) for x in inner(max_depth) for y in inner(max_depth)]
    graphs = []
    for root in roots:
        builder = GraphBuilder()
        build(builder, root)
        graphs.append(builder.build())
    return graphs


def random_tree(rng: RandomStream, max_nodes: int) -> Graph:
    """A random tree of the tree signature with between 2 and `max_nodes` nodes"""
    assert max_nodes >= 2
    generator = rng.generator
    size = int(generator.integers(2, max_nodes + 1))
    builder = GraphBuilder()

    def chain(length: int) -> int:
        node = builder.add(A if generator.random() < 0.5 else B)
        for _ in range(length - 1):
            node = builder.add(G, node)
        return node

    if size >= 3 and generator.random() < 0.6:
        left = int(generator.integers(1, size - 1))
        builder.add(F, chain(left), chain(size - 1 - left))
    else:
        builder.add(G, chain(size - 1))
    return builder.build()


def f_of(left: Symbol = A, right: Symbol = B) -> Graph:
    """f(left, right)"""
    return Graph.from_terms(term(F, term(left), term(right)))
