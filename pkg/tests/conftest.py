import numpy as np
import pytest

from gcobordism.groups import FiniteGroup, group, save_cayley_file

SMALL_SPECS = ["Z1", "Z2", "Z4", "Z2^2", "S3", "Q8", "D8"]

# builtin groups of order <= 16 that appear in the reference table
TABLE16 = ["Z4", "Z2^2", "Z6", "S3", "Z8", "D8", "Q8", "Z4 x Z2", "Z2^3", "Z9", "Z3^2",
           "Z10", "D10", "Z12", "A4", "D12", "Dic3", "Z2^2 x Z3", "Z14", "D14", "Z15",
           "Z16", "Dic4", "D16", "Q8 x Z2", "Z8 x Z2", "Z4^2", "Z4 x Z2^2", "Z2^4"]


def metacyclic(m, n, r, name=None):
    """<a, b | a^m = b^n = 1, b a b^-1 = a^r>; a^i b^j has index i + m*j."""
    N = m * n
    x = np.arange(N)
    i, j = x % m, x // m
    k, l = i[None, :], j[None, :]
    twist = np.array([pow(r, int(e), m) for e in range(n)])
    table = (i[:, None] + k * twist[j][:, None]) % m + m * ((j[:, None] + l) % n)
    return FiniteGroup(table, name=name or f"M({m},{n},{r})")


@pytest.fixture(scope="session")
def modular16_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("cayley") / "M16.txt"
    save_cayley_file(metacyclic(8, 2, 5, "M16"), path)
    return path


@pytest.fixture(scope="session")
def groups():
    cache = {}

    def get(spec):
        if spec not in cache:
            cache[spec] = group(spec)
        return cache[spec]
    return get


ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda l: int(l.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
