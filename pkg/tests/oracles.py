"""Ground-truth values for the built-in examples, as sparse maps."""

from fractions import Fraction


def antisym_closure(listed):
    """Extend R_ijkl entries by R_ijkl = -R_jikl = -R_ijlk."""
    out = {}
    for (i, j, k, l), v in listed.items():
        for key, s in (((i, j, k, l), 1), ((j, i, k, l), -1), ((i, j, l, k), -1), ((j, i, l, k), 1)):
            if isinstance(v, str):
                out[key] = v if s == 1 else (v[1:] if v.startswith("-") else "-" + v)
            else:
                out[key] = s * v
    return out


# gamma[i, j, k]: e_k component of nabla_{e_i} e_j; values are strings in p, q
SASAKI5_CONNECTION = {
    (0, 1, 2): "p", (0, 1, 4): "q",
    (0, 2, 1): "-p", (0, 2, 3): "-q",
    (0, 3, 2): "-q", (0, 3, 4): "p",
    (0, 4, 1): "q", (0, 4, 3): "-p",
    (1, 0, 3): "-1", (2, 0, 4): "-1", (3, 0, 1): "1", (4, 0, 2): "1",
    (1, 3, 0): "-1", (2, 4, 0): "-1", (3, 1, 0): "-1", (4, 2, 0): "-1",
}

SASAKI5_RIEMANN = antisym_closure({
    (0, 1, 1, 0): 1, (0, 2, 2, 0): 1, (0, 3, 3, 0): -1, (0, 4, 4, 0): -1,
    (1, 2, 3, 4): 1, (1, 4, 3, 2): 1, (2, 3, 4, 1): 1, (3, 4, 1, 2): 1,
    (1, 3, 3, 1): 1, (2, 4, 4, 2): 1,
})

SASAKI5_RICCI = {(0, 0): 4}
SASAKI5_LIE_XI_G = {(1, 3): 2, (2, 4): 2, (3, 1): 2, (4, 2): 2}
SASAKI5_EINSTEIN = (0, 0, 4)
SASAKI5_SOLITON = (0, 1, -5)

F5DIM3_CONNECTION = {(1, 1, 0): "p", (2, 2, 0): "-p", (1, 0, 1): "-p", (2, 0, 2): "-p"}
F5DIM3_F = {(1, 0, 2): "-p", (1, 2, 0): "-p", (2, 0, 1): "-p", (2, 1, 0): "-p"}
F5DIM3_THETA_STAR_0 = "-2*p"
F5DIM3_RIEMANN = antisym_closure({(0, 1, 0, 1): "p^2", (0, 2, 0, 2): "-p^2", (1, 2, 1, 2): "-p^2"})
F5DIM3_RICCI = {(0, 0): "-2*p^2", (1, 1): "-2*p^2", (2, 2): "2*p^2"}
F5DIM3_TAU = "-6*p^2"
F5DIM3_SECTIONAL = {(0, 1): "-p^2", (0, 2): "-p^2", (1, 2): "-p^2"}
F5DIM3_LIE_XI_G = {(1, 1): "-2*p", (2, 2): "2*p"}
F5DIM3_F_VALUE = "-p"
F5DIM3_EINSTEIN = ("-2*p^2", "0", "0")
F5DIM3_SOLITON = ("p + 2*p^2", "0", "-p")

ETA_RICCI_CASE2 = {(Fraction(1), Fraction(-1, 2)), (Fraction(0), Fraction(1, 2))}
