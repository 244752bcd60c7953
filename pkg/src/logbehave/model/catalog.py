"""Built-in catalog of sequences with exact initial conditions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Optional, Tuple

from ..exact import MPoly, PolyQ, Quad, X, scalar
from .recurrences import (
    BenderCanfieldDefinition,
    ConvolutionRecurrence,
    LinearRecurrence,
    ModelError,
    TwoIndexRecurrence,
)

n = X
ZERO = PolyQ()
HALF = Fraction(1, 2)


def binom2(p: PolyQ) -> PolyQ:
    """C(p, 2) as a polynomial."""
    return p * (p - 1) * HALF


def falling(p: PolyQ, j: int) -> PolyQ:
    out = PolyQ([1])
    for i in range(j):
        out = out * (p - i)
    return out


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    definitions: tuple
    description: str
    known_limit: Optional[object] = None
    parameters: Tuple[Tuple[str, Fraction], ...] = ()

    @property
    def primary(self):
        return self.definitions[0]

    @property
    def offset(self) -> int:
        return getattr(self.primary, "offset", 0)

    @property
    def is_triangle(self) -> bool:
        return isinstance(self.primary, TwoIndexRecurrence)

    def param(self, key: str):
        return dict(self.parameters).get(key)


# -- constants ---------------------------------------------------------------

PHI2 = Quad(Fraction(3, 2), HALF, 5)          # (3+sqrt5)/2
PHI = Quad(HALF, HALF, 5)
ALPHA2 = Quad(1, 1, 2)                         # 1+sqrt2
SILVER2 = Quad(3, 2, 2)                        # 3+2 sqrt2


def sqrt_rat(r: Fraction):
    """Exact sqrt of a nonnegative rational inside Q(sqrt d)."""
    r = Fraction(r)
    if r < 0:
        raise ValueError("negative radicand")
    s = Quad.sqrt(r.numerator * r.denominator)
    return scalar(s * Fraction(1, r.denominator))


def chebyshev_limit(t: Fraction):
    """lim C_n(t)/C_{n-1}(t) = t + sqrt(t^2-1) for t > 1."""
    if t > 1:
        return scalar(t + sqrt_rat(t * t - 1))
    return None


# -- builders ----------------------------------------------------------------

def _lin(name, lhs, rhs, valid_from, init, offset=0) -> LinearRecurrence:
    return LinearRecurrence(name, PolyQ._lift(lhs), tuple(PolyQ._lift(p) for p in rhs),
                            valid_from, tuple(init), offset)


def motzkin_short() -> LinearRecurrence:
    return _lin("motzkin", n + 2, [2 * n + 1, 3 * (n - 1)], 2, [1, 1])


def a_table(l: int, k: int) -> PolyQ:
    """Coefficient of S(n-k) in the order-(2l+2) short recurrence."""
    if 1 <= k <= l + 1:
        return -HALF * (k - 3) * (2 * n + 4 - 3 * k)
    if k == l + 2:
        return -HALF * (l - 3) * (2 * n - 3 * l - 2)
    if l + 3 <= k <= 2 * l + 2:
        return -HALF * (2 * l + 3 - k) * (2 * n + 4 - 3 * k)
    raise ModelError(f"k = {k} outside 1..{2 * l + 2}")


def sec_struct_short(l: int) -> LinearRecurrence:
    if l < 0:
        raise ModelError("the short recurrence needs l >= 0")
    rhs = [a_table(l, k) for k in range(1, 2 * l + 3)]
    # valid from n = l+2 with zero extension below index 0
    return _lin(f"sec_struct_short(l={l})", n + 2, rhs, l + 2, [1] * (l + 2))


def sec_struct_conv(l: int) -> ConvolutionRecurrence:
    return ConvolutionRecurrence(f"sec_struct_conv(l={l})", l, (1,) * (l + 2))


def sec_struct_explicit(l: int) -> LinearRecurrence:
    """The expanded short recurrences with their printed initial blocks."""
    if l == 0:
        return motzkin_short()
    if l == 1:
        rhs = [2 * n + 1, n - 1, 2 * n - 5, -(n - 4)]
        return _lin("sec_struct(l=1)", n + 2, rhs, 4, [1, 1, 1, 2])
    if l == 2:
        rhs = [2 * n + 1, n - 1, ZERO, n - 4, -(2 * n - 11), -(n - 7)]
        return _lin("sec_struct(l=2)", n + 2, rhs, 6, [1, 1, 1, 1, 2, 4])
    if l == 3:
        rhs = [2 * n + 1, n - 1, ZERO, -(n - 4), ZERO, -(3 * n - 21), -(2 * n - 17), -(n - 10)]
        return _lin("sec_struct(l=3)", n + 2, rhs, 8, [1, 1, 1, 1, 1, 2, 4, 8])
    raise ModelError("explicit recurrences exist for l = 0..3")


SEC_LIMITS = {-1: Fraction(4), 0: Fraction(3), 1: PHI2, 2: ALPHA2}


def gegenbauer_rec(nu: Fraction, t: Fraction, name: str | None = None) -> LinearRecurrence:
    nu, t = Fraction(nu), Fraction(t)
    if nu <= -HALF:
        raise ModelError("gegenbauer requires nu > -1/2")
    return _lin(name or f"gegenbauer(nu={nu},t={t})", n,
                [2 * t * (n + nu - 1), -(n + 2 * nu - 2)], 2, [1, 2 * nu * t])


def gegenbauer_deriv_rec(nu: Fraction, t: Fraction) -> LinearRecurrence:
    nu, t = Fraction(nu), Fraction(t)
    if nu <= -HALF:
        raise ModelError("gegenbauer requires nu > -1/2")
    return _lin(f"gegenbauer_deriv(nu={nu},t={t})", n - 1,
                [2 * t * (n + nu - 1), -(n + 2 * nu - 1)], 2, [0, 2 * nu])


def e_k_rec(k: int) -> LinearRecurrence:
    if k < 1:
        raise ModelError("e_k requires k >= 1")
    rhs = [falling(n - 1, j - 1) if k % j == 0 else ZERO for j in range(1, k + 1)]
    return _lin(f"e_k(k={k})", 1, rhs, 1, [1])


def c_k_rec(k: int) -> LinearRecurrence:
    if k < 1:
        raise ModelError("c_k requires k >= 1")
    rhs = [falling(n - 1, j - 1) for j in range(1, k + 1)]
    return _lin(f"c_k(k={k})", 1, rhs, 1, [1])


def _two(name, R, S) -> TwoIndexRecurrence:
    return TwoIndexRecurrence(name, R, S)


_N2 = MPoly.var(2, 0)
_K2 = MPoly.var(2, 1)
_ONE2 = MPoly.const(2, 1)


# -- the table -----------------------------------------------------------------

def _need(params, key, name):
    if params.get(key) is None:
        raise ModelError(f"{name} requires parameter {key}")
    return params[key]


def _int_param(params, key, name) -> int:
    v = Fraction(_need(params, key, name))
    if v.denominator != 1:
        raise ModelError(f"{name}: {key} must be an integer")
    return int(v)


def _entry_motzkin(p):
    return CatalogEntry("motzkin", (motzkin_short(), sec_struct_conv(0)),
                        "Motzkin numbers; (n+2)M(n) = (2n+1)M(n-1) + 3(n-1)M(n-2)",
                        Fraction(3))


def _entry_motzkin_conv(p):
    return CatalogEntry("motzkin_conv", (sec_struct_conv(0), motzkin_short()),
                        "Motzkin numbers by first-return convolution", Fraction(3))


def _schroder_short():
    return _lin("schroder_big", n + 1, [3 * (2 * n - 1), -(n - 2)], 2, [1, 2])


def _schroder_conv():
    return ConvolutionRecurrence("schroder_conv", 0, (1, 2), span_shift=1)


def _entry_schroder(p):
    return CatalogEntry("schroder_big", (_schroder_short(), _schroder_conv()),
                        "big Schroeder numbers; (n+1)r(n) = 3(2n-1)r(n-1) - (n-2)r(n-2)", SILVER2)


def _entry_schroder_conv(p):
    return CatalogEntry("schroder_conv", (_schroder_conv(), _schroder_short()),
                        "big Schroeder numbers by convolution r(n+1) = r(n) + sum r(j)r(n-j)",
                        SILVER2)


def _entry_delannoy(p):
    return CatalogEntry("delannoy", (gegenbauer_rec(HALF, 3, "delannoy"),),
                        "central Delannoy numbers, Legendre values at t = 3", SILVER2)


def _entry_franel3(p):
    rec = _lin("franel3", n * n, [7 * n * n - 7 * n + 2, 8 * (n - 1) ** 2], 2, [1, 2])
    return CatalogEntry("franel3", (rec,), "Franel numbers sum_k C(n,k)^3", Fraction(8))


def _entry_franel4(p):
    rec = _lin("franel4", n ** 3,
               [2 * (6 * n ** 3 - 9 * n ** 2 + 5 * n - 1), (4 * n - 3) * (4 * n - 4) * (4 * n - 5)],
               2, [1, 2])
    return CatalogEntry("franel4", (rec,), "Franel numbers sum_k C(n,k)^4", Fraction(16))


def _entry_derangements(p):
    rec = _lin("derangements", 1, [n - 1, n - 1], 2, [1, 0])
    return CatalogEntry("derangements", (rec,), "fixed-point-free permutations; D(n) = (n-1)[D(n-1)+D(n-2)]")


def _entry_t2(p):
    rec = _lin("t2_matrices", 1, [n - 1, n - 1, -binom2(n - 1)], 3, [1, 0, 1, 1])
    return CatalogEntry("t2_matrices", (rec,),
                        "symmetric N-matrices with zero trace and row sums 2")


def _entry_sec_struct(p):
    l = _int_param(p, "l", "sec_struct")
    if not 0 <= l <= 3:
        raise ModelError("sec_struct has explicit recurrences for l = 0..3; use sec_struct_short")
    return CatalogEntry(f"sec_struct(l={l})",
                        (sec_struct_explicit(l), sec_struct_short(l), sec_struct_conv(l)),
                        f"secondary structures of rank {l}", SEC_LIMITS.get(l), (("l", Fraction(l)),))


def _entry_sec_struct_conv(p):
    l = _int_param(p, "l", "sec_struct_conv")
    if l < -1:
        raise ModelError("sec_struct_conv requires l >= -1")
    defs = (sec_struct_conv(l),) + ((sec_struct_short(l),) if l >= 0 else ())
    return CatalogEntry(f"sec_struct_conv(l={l})", defs,
                        f"secondary structures of rank {l} by convolution",
                        SEC_LIMITS.get(l), (("l", Fraction(l)),))


def _entry_sec_struct_short(p):
    l = _int_param(p, "l", "sec_struct_short")
    if l < 0:
        raise ModelError("sec_struct_short requires l >= 0")
    return CatalogEntry(f"sec_struct_short(l={l})", (sec_struct_short(l), sec_struct_conv(l)),
                        f"secondary structures of rank {l}, general short recurrence",
                        SEC_LIMITS.get(l), (("l", Fraction(l)),))


def _entry_directed_animals(p):
    rec = _lin("directed_animals", n, [2 * n, 3 * (n - 2)], 3, [1, 2], offset=1)
    return CatalogEntry("directed_animals", (rec,), "directed animals of size n (from n = 1)",
                        Fraction(3))


def _entry_cycle_graphs(p):
    rec = _lin("cycle_graphs", 1, [n, ZERO, -binom2(n - 1)], 3, [1, 1, 2])
    return CatalogEntry("cycle_graphs", (rec,), "graphs on [n] whose components are cycles")


def _entry_baxter(p):
    rec = _lin("baxter", (n + 1) * (n + 2) * (n + 3) * (3 * n - 2),
               [2 * (n + 1) * (9 * n ** 3 + 3 * n ** 2 - 4 * n + 4),
                (3 * n - 1) * (n - 2) * (15 * n ** 2 - 5 * n - 14),
                8 * (3 * n + 1) * (n - 2) ** 2 * (n - 3)],
               4, [1, 1, 2, 6])
    return CatalogEntry("baxter", (rec,), "Baxter permutations", Fraction(8))


def _entry_sym012(p):
    c = (n - 1) * (n - 2)
    rec = _lin("sym012_matrices", 1, [2 * n - 1, -c, -c, c * (n - 3) * HALF], 4, [1, 1, 3, 11])
    return CatalogEntry("sym012_matrices", (rec,),
                        "symmetric (0,1,2)-matrices with row sums 2")


def _entry_gegenbauer(p):
    nu = Fraction(_need(p, "nu", "gegenbauer"))
    t = Fraction(_need(p, "t", "gegenbauer"))
    return CatalogEntry(f"gegenbauer(nu={nu},t={t})", (gegenbauer_rec(nu, t),),
                        "Gegenbauer polynomial values C_n^(nu)(t)", chebyshev_limit(t),
                        (("nu", nu), ("t", t)))


def _entry_gegenbauer_deriv(p):
    nu = Fraction(_need(p, "nu", "gegenbauer_deriv"))
    t = Fraction(_need(p, "t", "gegenbauer_deriv"))
    return CatalogEntry(f"gegenbauer_deriv(nu={nu},t={t})", (gegenbauer_deriv_rec(nu, t),),
                        "t-derivatives of Gegenbauer polynomials", chebyshev_limit(t),
                        (("nu", nu), ("t", t)))


def _entry_chebyshev_u(p):
    t = Fraction(_need(p, "t", "chebyshev_u"))
    return CatalogEntry(f"chebyshev_u(t={t})", (gegenbauer_rec(1, t, f"chebyshev_u(t={t})"),),
                        "Chebyshev polynomials of the second kind", chebyshev_limit(t), (("t", t),))


def _entry_legendre(p):
    t = Fraction(_need(p, "t", "legendre"))
    return CatalogEntry(f"legendre(t={t})", (gegenbauer_rec(HALF, t, f"legendre(t={t})"),),
                        "Legendre polynomials", chebyshev_limit(t), (("t", t),))


def _entry_laguerre(p):
    t = Fraction(_need(p, "t", "laguerre"))
    rec = _lin(f"laguerre(t={t})", n, [2 * n - 1 - t, -(n - 1)], 2, [1, 1 - t])
    return CatalogEntry(f"laguerre(t={t})", (rec,), "Laguerre polynomials",
                        Fraction(1) if t < 0 else None, (("t", t),))


def _entry_fib_odd(p):
    rec = _lin("fib_odd", 1, [3, -1], 2, [1, 2])
    return CatalogEntry("fib_odd", (rec,), "odd-indexed Fibonacci numbers F(2n+1)", PHI2)


def _entry_fib_even(p):
    rec = _lin("fib_even", 1, [3, -1], 3, [1, 3], offset=1)
    return CatalogEntry("fib_even", (rec,), "even-indexed Fibonacci numbers F(2n), n >= 1", PHI2)


def _entry_fibonacci(p):
    rec = _lin("fibonacci", 1, [1, 1], 2, [0, 1])
    return CatalogEntry("fibonacci", (rec,), "Fibonacci numbers", PHI)


def _entry_catalan(p):
    rec = _lin("catalan", n + 1, [2 * (2 * n - 1)], 1, [1])
    return CatalogEntry("catalan", (rec,), "Catalan numbers", Fraction(4))


def _entry_e_k(p):
    k = _int_param(p, "k", "e_k")
    rec = e_k_rec(k)
    bc = BenderCanfieldDefinition(f"e_k(k={k})",
                                  tuple(1 if k % j == 0 else 0 for j in range(1, k + 1)), form="bc")
    return CatalogEntry(f"e_k(k={k})", (rec, bc), f"permutations with pi^{k} = id",
                        None, (("k", Fraction(k)),))


def _entry_c_k(p):
    k = _int_param(p, "k", "c_k")
    if k < 1:
        raise ModelError("c_k requires k >= 1")
    bc = BenderCanfieldDefinition(f"c_k(k={k})", (1,) * k, form="bc")
    return CatalogEntry(f"c_k(k={k})", (bc, c_k_rec(k)),
                        f"permutations with all cycles of length <= {k}", None, (("k", Fraction(k)),))


def _entry_bell(p):
    bc = BenderCanfieldDefinition("bell", (), form="factorial", tail=Fraction(1))
    return CatalogEntry("bell", (bc,), "Bell numbers exp(e^x - 1)")


def _entry_involutions(p):
    bc = BenderCanfieldDefinition("involutions", (1, 1), form="factorial")
    return CatalogEntry("involutions", (bc, e_k_rec(2)), "involutions exp(x + x^2/2)")


def _entry_eulerian(p):
    return CatalogEntry("eulerian", (_two("eulerian", _N2 - _K2, _K2 + 1),),
                        "Eulerian numbers E(n,k), permutations with k ascents")


def _entry_binomial(p):
    return CatalogEntry("binomial", (_two("binomial", _ONE2, _ONE2),), "binomial coefficients")


def _entry_stirling1(p):
    return CatalogEntry("stirling1", (_two("stirling1", _ONE2, _N2 - 1),),
                        "unsigned Stirling numbers of the first kind")


def _entry_stirling2(p):
    return CatalogEntry("stirling2", (_two("stirling2", _ONE2, _K2),),
                        "Stirling numbers of the second kind")


_TABLE: Dict[str, Tuple[Callable, Tuple[str, ...]]] = {
    "motzkin": (_entry_motzkin, ()),
    "motzkin_conv": (_entry_motzkin_conv, ()),
    "schroder_big": (_entry_schroder, ()),
    "schroder_conv": (_entry_schroder_conv, ()),
    "delannoy": (_entry_delannoy, ()),
    "franel3": (_entry_franel3, ()),
    "franel4": (_entry_franel4, ()),
    "derangements": (_entry_derangements, ()),
    "t2_matrices": (_entry_t2, ()),
    "sec_struct": (_entry_sec_struct, ("l",)),
    "sec_struct_conv": (_entry_sec_struct_conv, ("l",)),
    "sec_struct_short": (_entry_sec_struct_short, ("l",)),
    "directed_animals": (_entry_directed_animals, ()),
    "cycle_graphs": (_entry_cycle_graphs, ()),
    "baxter": (_entry_baxter, ()),
    "sym012_matrices": (_entry_sym012, ()),
    "gegenbauer": (_entry_gegenbauer, ("nu", "t")),
    "gegenbauer_deriv": (_entry_gegenbauer_deriv, ("nu", "t")),
    "chebyshev_u": (_entry_chebyshev_u, ("t",)),
    "legendre": (_entry_legendre, ("t",)),
    "laguerre": (_entry_laguerre, ("t",)),
    "fib_odd": (_entry_fib_odd, ()),
    "fib_even": (_entry_fib_even, ()),
    "fibonacci": (_entry_fibonacci, ()),
    "catalan": (_entry_catalan, ()),
    "e_k": (_entry_e_k, ("k",)),
    "c_k": (_entry_c_k, ("k",)),
    "bell": (_entry_bell, ()),
    "involutions": (_entry_involutions, ()),
    "eulerian": (_entry_eulerian, ()),
    "binomial": (_entry_binomial, ()),
    "stirling1": (_entry_stirling1, ()),
    "stirling2": (_entry_stirling2, ()),
}

ALIASES = {"schroder": "schroder_big", "t2": "t2_matrices", "sym012": "sym012_matrices"}


def catalog_names() -> list:
    return sorted(_TABLE)


def catalog_parameters(name: str) -> tuple:
    name = ALIASES.get(name, name)
    if name not in _TABLE:
        raise ModelError(f"unknown catalog entry {name!r}")
    return _TABLE[name][1]


def catalog_get(name: str, **params) -> CatalogEntry:
    """Look up an entry; parameterized families take k, l, nu or t keywords."""
    key = ALIASES.get(name, name)
    if key not in _TABLE:
        raise ModelError(f"unknown catalog entry {name!r}")
    builder, wanted = _TABLE[key]
    extra = {k for k, v in params.items() if v is not None} - set(wanted)
    if extra:
        raise ModelError(f"{key} does not take parameter(s) {', '.join(sorted(extra))}")
    return builder(params)
