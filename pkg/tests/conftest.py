import pytest

from twocheck import fixtures as fx
from twocheck import monad as md


@pytest.fixture(scope="session")
def k_term():
    return fx.k_term()


@pytest.fixture(scope="session")
def k_cell():
    return fx.k_cell()


@pytest.fixture(scope="session")
def k_iso():
    return fx.k_iso()


@pytest.fixture(scope="session")
def k_pair():
    return fx.k_pair()


@pytest.fixture(scope="session")
def k_disc2():
    return fx.k_disc2()


@pytest.fixture(scope="session")
def k_arrow():
    return fx.k_arrow()


@pytest.fixture(scope="session")
def k_2cellpair():
    return fx.k_2cellpair()


@pytest.fixture(scope="session")
def k_idem():
    return fx.k_idem()


@pytest.fixture(scope="session")
def k_z2():
    return fx.k_z2()


@pytest.fixture(scope="session")
def k_le():
    return fx.k_le()


@pytest.fixture(scope="session")
def k_conj():
    return fx.k_conj()


@pytest.fixture(scope="session")
def k_nc():
    return fx.k_nc()


@pytest.fixture(scope="session")
def k_proj():
    return fx.k_proj()


@pytest.fixture(scope="session")
def k_comp():
    return fx.k_comp()


@pytest.fixture(scope="session")
def k_cat12():
    return fx.cat_two_category("K_CAT12", {"c1": fx.cat_one(), "c2": fx.cat_two()})


@pytest.fixture(scope="session")
def k_1v():
    return fx.cat_two_category("K_1V", {"c1": fx.cat_one(), "cv": fx.cat_par()})


@pytest.fixture(scope="session")
def twist_monad(k_conj):
    return fx.conj_twist_monad(k_conj)


@pytest.fixture(scope="session")
def proj_monad(k_proj):
    return fx.proj_monad(k_proj)


@pytest.fixture(scope="session")
def sigma_conj_monad():
    return fx.sigma_conj_monad()


def identity_monad_on(K):
    monad = md.identity_monad(K)
    return md.validate_monad(K, monad.endo, monad.mult, monad.unit)


@pytest.fixture(scope="session")
def sweep_bases(k_term, k_cell, k_z2, k_le, k_idem):
    return [k_term, k_cell, k_z2, k_le, k_idem]


@pytest.fixture(scope="session")
def all_bases(sweep_bases, k_iso, k_conj, k_nc, k_proj):
    return sweep_bases + [k_iso, k_conj, k_nc, k_proj]
