from enum import Enum
from specfac.graph import construct_family


""" Named graph families K_s ∨ (K_{n1} ∪ i·K1) """


class FamilyOptions(Enum):
    G2 = "g2"
    G3 = "g3"
    K2_JOIN_4K1 = "k2_join_4k1"
    K3_JOIN_5K1 = "k3_join_5k1"
    STAR_K13 = "star_k13"

    @staticmethod
    def values():
        return [fam.value for fam in FamilyOptions]


class FamilyParam:
    NAME = "name"
    S = "s"
    I = "i"
    # clique order as a function of the total order n, None for a fixed order
    N1 = "n1"
    # smallest order the family is defined for
    MIN_N = "min_n"
    HAS_FACTOR = "has_factor"
    # derived
    FIXED_N = "fixed_n"
    # edge count for fixed-order families
    EDGES = "edges"
    DESCRIPTION = "description"


family_dict = {
    # extremal graph of the spectral bound, attains rho = tau(n)
    FamilyOptions.G2.value: {
        FamilyParam.NAME: FamilyOptions.G2,
        FamilyParam.S: 1,
        FamilyParam.I: 2,
        FamilyParam.N1: lambda n: n - 3,
        FamilyParam.MIN_N: 5,
        FamilyParam.HAS_FACTOR: False,
    },
    # s = 2 shape of Case 1, attains rho = theta(n)
    FamilyOptions.G3.value: {
        FamilyParam.NAME: FamilyOptions.G3,
        FamilyParam.S: 2,
        FamilyParam.I: 4,
        FamilyParam.N1: lambda n: n - 6,
        FamilyParam.MIN_N: 8,
        FamilyParam.HAS_FACTOR: False,
    },
    # size-extremal at n = 6
    FamilyOptions.K2_JOIN_4K1.value: {
        FamilyParam.NAME: FamilyOptions.K2_JOIN_4K1,
        FamilyParam.S: 2,
        FamilyParam.I: 4,
        FamilyParam.N1: None,
        FamilyParam.HAS_FACTOR: False,
    },
    # size-extremal at n = 8
    FamilyOptions.K3_JOIN_5K1.value: {
        FamilyParam.NAME: FamilyOptions.K3_JOIN_5K1,
        FamilyParam.S: 3,
        FamilyParam.I: 5,
        FamilyParam.N1: None,
        FamilyParam.HAS_FACTOR: False,
    },
    FamilyOptions.STAR_K13.value: {
        FamilyParam.NAME: FamilyOptions.STAR_K13,
        FamilyParam.S: 1,
        FamilyParam.I: 3,
        FamilyParam.N1: None,
        FamilyParam.HAS_FACTOR: False,
    },
}

# derived parameters
for _key in family_dict:
    _config = family_dict[_key]
    if _config[FamilyParam.N1] is None:
        _config[FamilyParam.FIXED_N] = _config[FamilyParam.S] + _config[FamilyParam.I]
        _config[FamilyParam.MIN_N] = _config[FamilyParam.FIXED_N]
        _s, _i = _config[FamilyParam.S], _config[FamilyParam.I]
        _config[FamilyParam.EDGES] = _s * (_s - 1) // 2 + _s * _i
    else:
        _config[FamilyParam.FIXED_N] = None
        _config[FamilyParam.EDGES] = None
    _config[FamilyParam.DESCRIPTION] = "K{} v ({}{}K1)".format(
        _config[FamilyParam.S],
        "" if _config[FamilyParam.N1] is None else "K_n1 u ",
        _config[FamilyParam.I],
    )


def family_parameters(name, n=None):
    """
    (s, n1, i) of a named family at order `n`.

    Parameters
    ----------
    name : str or :py:class:`FamilyOptions`
    n : int, optional
        Total order, required for families with a clique part.
    """
    if isinstance(name, FamilyOptions):
        name = name.value
    if name not in family_dict:
        raise ValueError("Unknown family {}, options: {}".format(name, FamilyOptions.values()))
    config = family_dict[name]
    if config[FamilyParam.N1] is None:
        if n is not None and n != config[FamilyParam.FIXED_N]:
            raise ValueError(
                "Family {} has fixed order {}".format(name, config[FamilyParam.FIXED_N])
            )
        return config[FamilyParam.S], 0, config[FamilyParam.I]
    if n is None:
        raise ValueError("Family {} needs the order n".format(name))
    if n < config[FamilyParam.MIN_N]:
        raise ValueError("Family {} needs n >= {}".format(name, config[FamilyParam.MIN_N]))
    return config[FamilyParam.S], config[FamilyParam.N1](n), config[FamilyParam.I]


def build_family(name, n=None):
    s, n1, i = family_parameters(name, n)
    return construct_family(s, n1, i)
