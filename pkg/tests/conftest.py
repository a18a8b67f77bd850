import pytest

from clasplab import (FrontDiagram, generate_negative_braid_closure,
                      generate_torus4, generate_trefoil, generate_unknot,
                      random_script, run_script)


def small_corpus():
    """Named diagrams used across the suite."""
    return {
        "empty": FrontDiagram(),
        "unknot": generate_unknot(),
        "unlink2": FrontDiagram(generate_unknot().events * 2),
        "trefoil": generate_trefoil(),
        "nested_trefoil": generate_negative_braid_closure(2, [1, 1, 1]),
        "braid3": generate_negative_braid_closure(3, [1, 2, 1]),
        "braid4": generate_negative_braid_closure(4, [1, 2, 3]),
        "torus4_0": generate_torus4(0),
    }


def random_fillable(count, length, seed_base=0):
    """Diagrams built by seeded random move scripts (hence fillable)."""
    out = []
    for k in range(count):
        cert = run_script(random_script(length, seed_base + k))
        out.append(cert.diagram)
    return out


@pytest.fixture(scope="session")
def corpus():
    return small_corpus()


@pytest.fixture(scope="session")
def fillable_small():
    return random_fillable(30, 8, seed_base=500)
