"""Double-precision evaluation of e_k, P, Pz, E1 and of Forms on H x C, the
Jacobi group action with its cocycles, and residuals that tie the symbolic
layer to analysis.

P, Pz and E1 have two representations. The Laurent series around z = 0 uses
the Eisenstein values as coefficients and converges in the disc bounded by
the shortest lattice vector. The q,w expansion (w = e(z)) converges in the
strip |Im z| < Im tau and is admitted only after its Laurent coefficients,
extracted by FFT, match the Laurent data.
"""
from __future__ import annotations

import cmath
import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
import sympy

from .algebra import depth_expand, weight_of
from .calculus import dtau, dz
from .exceptions import (
    InhomogeneousFormError,
    InvalidArgumentError,
    InvalidWeightError,
    NumericDomainError,
    PoleError,
)
from .models.form import GENERATORS, Form, Generator
from .models.group import JacobiGroupElement
from .models.numeric import NumericContext, Representation, SamplePoint
from .models.scalar import TWO_PI_I
from .utils.rational import to_fraction

logger = logging.getLogger(__name__)

ELLIPTIC_GENERATORS = (Generator.P, Generator.PZ, Generator.E1)

# Laurent is preferred once its tail estimate is below double precision.
_LAURENT_PREFERRED_TAIL = 1e-17
_FFT_SAMPLES = 128
_ADMISSION_COEFFICIENTS = 12


def _context(ctx: Optional[NumericContext]) -> NumericContext:
    return NumericContext() if ctx is None else ctx


def _scaled(left: complex, right: complex) -> float:
    return abs(left - right) / max(1.0, abs(left), abs(right))


# ---------------------------------------------------------------------------
# Lattice geometry and guards
# ---------------------------------------------------------------------------


def lattice_radius(tau: complex) -> float:
    """Length of the shortest nonzero vector of Z + tau Z (Gauss-Lagrange reduction)."""
    u, v = complex(1), complex(tau)
    if abs(v) < abs(u):
        u, v = v, u
    while True:
        m = round((v * u.conjugate()).real / abs(u) ** 2)
        v -= m * u
        if abs(v) >= abs(u):
            return abs(u)
        u, v = v, u


def lattice_distance(tau: complex, z: complex) -> float:
    """Distance from z to the nearest point of Z + tau Z."""
    y = z.imag / tau.imag
    x = z.real - y * tau.real
    m0, n0 = math.floor(x), math.floor(y)
    return min(
        abs(z - (m + n * tau))
        for m in range(m0 - 1, m0 + 3)
        for n in range(n0 - 1, n0 + 3)
    )


def nome(tau: complex, ctx: Optional[NumericContext] = None) -> complex:
    """q = e(tau), refusing points with |q| above the guard."""
    ctx = _context(ctx)
    if tau.imag <= 0:
        raise NumericDomainError(f"tau = {tau} is not in the upper half-plane")
    q = cmath.exp(TWO_PI_I * tau)
    if abs(q) > ctx.q_guard:
        raise NumericDomainError(
            f"|e(tau)| = {abs(q):.3g} exceeds the guard {ctx.q_guard} at tau = {tau}"
        )
    return q


def _check_pole(tau: complex, z: complex, ctx: NumericContext) -> None:
    if lattice_distance(tau, z) < ctx.pole_distance:
        raise PoleError(f"z = {z} lies within {ctx.pole_distance} of a lattice point")


def _check_laurent(tau: complex, z: complex, ctx: NumericContext) -> None:
    nome(tau, ctx)
    if abs(z) < ctx.pole_distance:
        raise PoleError(f"z = {z} lies within {ctx.pole_distance} of the pole at 0")
    bound = ctx.z_guard * lattice_radius(tau)
    if abs(z) > bound:
        raise NumericDomainError(f"|z| = {abs(z):.3g} exceeds the Laurent guard {bound:.3g}")


def _check_fourier(tau: complex, z: complex, ctx: NumericContext) -> None:
    nome(tau, ctx)
    if abs(z.imag) >= tau.imag:
        raise NumericDomainError(
            f"|Im z| = {abs(z.imag):.3g} is outside the strip |Im z| < {tau.imag:.3g}"
        )
    _check_pole(tau, z, ctx)


# ---------------------------------------------------------------------------
# Eisenstein values
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def eisenstein_q_coefficients(k: int, n_q: int) -> Tuple[Fraction, Tuple[Fraction, ...]]:
    """Exact (m, a) with e_k = m * pi^k * sum_{n <= n_q} a_n q^n.

    m = 2^k |B_k| / k!, a_0 = 1 and a_n = -(2k / B_k) sigma_{k-1}(n).
    """
    if k < 2 or k % 2:
        raise InvalidWeightError(f"Eisenstein weight must be even and >= 2, got {k}")
    bernoulli = to_fraction(sympy.bernoulli(k))
    multiplier = Fraction(2**k) * abs(bernoulli) / math.factorial(k)
    factor = -Fraction(2 * k) / bernoulli
    coefficients = [Fraction(1)]
    coefficients.extend(
        factor * int(sympy.divisor_sigma(n, k - 1)) for n in range(1, n_q + 1)
    )
    return multiplier, tuple(coefficients)


@lru_cache(maxsize=None)
def _eisenstein_array(k: int, n_q: int) -> Tuple[float, np.ndarray]:
    multiplier, coefficients = eisenstein_q_coefficients(k, n_q)
    return float(multiplier) * math.pi**k, np.array([float(a) for a in coefficients])


def _eisenstein_value(k: int, powers: np.ndarray) -> complex:
    scale, coefficients = _eisenstein_array(k, len(powers) - 1)
    return complex(scale * np.dot(coefficients, powers))


def eval_eisenstein(k: int, tau: complex, ctx: Optional[NumericContext] = None) -> complex:
    ctx = _context(ctx)
    q = nome(tau, ctx)
    return _eisenstein_value(k, q ** np.arange(ctx.n_q + 1))


@lru_cache(maxsize=256)
def _laurent_coefficients(tau: complex, n_z: int, n_q: int) -> np.ndarray:
    """e_2, e_4, ..., e_{2 n_z + 2} at tau; the caller has applied the guards."""
    powers = cmath.exp(TWO_PI_I * tau) ** np.arange(n_q + 1)
    return np.array([_eisenstein_value(2 * n + 2, powers) for n in range(n_z + 1)])


def laurent_coefficients(what: Generator, terms: int) -> List[Tuple[int, int, int]]:
    """(power of z, Eisenstein weight, integer factor) for the first ``terms``
    non-principal Laurent terms of P or E1."""
    if what is Generator.P:
        return [(2 * n, 2 * n + 2, 2 * n + 1) for n in range(1, terms + 1)]
    if what is Generator.E1:
        return [(2 * n + 1, 2 * n + 2, -1) for n in range(terms)]
    raise InvalidArgumentError(f"no Laurent table for {what.value}; use P or E1")


# ---------------------------------------------------------------------------
# Laurent representation
# ---------------------------------------------------------------------------


def _laurent_data(tau: complex, ctx: NumericContext) -> np.ndarray:
    return _laurent_coefficients(complex(tau), ctx.n_z, ctx.n_q)


def eval_wp(tau: complex, z: complex, ctx: Optional[NumericContext] = None) -> complex:
    """P(tau, z) = 1/z^2 + sum_{n >= 1} (2n + 1) e_{2n+2} z^(2n)."""
    ctx = _context(ctx)
    _check_laurent(tau, z, ctx)
    e = _laurent_data(tau, ctx)
    n = np.arange(1, ctx.n_z + 1)
    return complex(1 / z**2 + np.sum((2 * n + 1) * e[n] * z ** (2 * n)))


def eval_wp_z(tau: complex, z: complex, ctx: Optional[NumericContext] = None) -> complex:
    ctx = _context(ctx)
    _check_laurent(tau, z, ctx)
    e = _laurent_data(tau, ctx)
    n = np.arange(1, ctx.n_z + 1)
    return complex(-2 / z**3 + np.sum(2 * n * (2 * n + 1) * e[n] * z ** (2 * n - 1)))


def eval_E1(tau: complex, z: complex, ctx: Optional[NumericContext] = None) -> complex:
    """E1(tau, z) = 1/z - sum_{n >= 0} e_{2n+2} z^(2n+1)."""
    ctx = _context(ctx)
    _check_laurent(tau, z, ctx)
    e = _laurent_data(tau, ctx)
    n = np.arange(ctx.n_z + 1)
    return complex(1 / z - np.sum(e[n] * z ** (2 * n + 1)))


# ---------------------------------------------------------------------------
# q,w representation
# ---------------------------------------------------------------------------


def _fourier_terms(
    tau: complex, z: complex, ctx: NumericContext
) -> Tuple[complex, np.ndarray, np.ndarray, np.ndarray]:
    _check_fourier(tau, z, ctx)
    q = nome(tau, ctx)
    w = cmath.exp(TWO_PI_I * z)
    qm = q ** np.arange(1, ctx.n_q + 1)
    return w, qm, qm * w, qm / w


def eval_wp_fourier(tau: complex, z: complex, ctx: Optional[NumericContext] = None) -> complex:
    ctx = _context(ctx)
    w, qm, x, y = _fourier_terms(tau, z, ctx)
    tail = np.sum(x / (1 - x) ** 2 + y / (1 - y) ** 2 - 2 * qm / (1 - qm) ** 2)
    return complex(TWO_PI_I**2 * (1 / 12 + w / (1 - w) ** 2 + tail))


def eval_wp_z_fourier(
    tau: complex, z: complex, ctx: Optional[NumericContext] = None
) -> complex:
    ctx = _context(ctx)
    w, _, x, y = _fourier_terms(tau, z, ctx)
    tail = np.sum(x * (1 + x) / (1 - x) ** 3 - y * (1 + y) / (1 - y) ** 3)
    return complex(TWO_PI_I**3 * (w * (1 + w) / (1 - w) ** 3 + tail))


def eval_E1_fourier(tau: complex, z: complex, ctx: Optional[NumericContext] = None) -> complex:
    ctx = _context(ctx)
    w, _, x, y = _fourier_terms(tau, z, ctx)
    tail = np.sum(x / (1 - x) - y / (1 - y))
    return complex(-TWO_PI_I / 2 * (1 + w) / (1 - w) - TWO_PI_I * tail)


_LAURENT = {Generator.P: eval_wp, Generator.PZ: eval_wp_z, Generator.E1: eval_E1}
_FOURIER = {
    Generator.P: eval_wp_fourier,
    Generator.PZ: eval_wp_z_fourier,
    Generator.E1: eval_E1_fourier,
}


def _elliptic(which: Generator) -> Generator:
    if which not in ELLIPTIC_GENERATORS:
        raise InvalidArgumentError(f"{which.value} does not depend on z; use P, Pz or E1")
    return which


# ---------------------------------------------------------------------------
# Forms
# ---------------------------------------------------------------------------


def choose_representation(
    tau: complex, z: complex, ctx: Optional[NumericContext] = None
) -> Representation:
    """Pick the admissible series with the smaller truncation tail estimate."""
    ctx = _context(ctx)
    nome(tau, ctx)
    _check_pole(tau, z, ctx)
    radius = lattice_radius(tau)
    laurent_tail = fourier_tail = math.inf
    if abs(z) <= ctx.z_guard * radius:
        laurent_tail = (abs(z) / radius) ** (2 * ctx.n_z)
    if abs(z.imag) < tau.imag:
        fourier_tail = math.exp(-2 * math.pi * (ctx.n_q * tau.imag - abs(z.imag)))
    if laurent_tail <= _LAURENT_PREFERRED_TAIL:
        return Representation.LAURENT
    if math.isinf(laurent_tail) and math.isinf(fourier_tail):
        raise NumericDomainError(
            f"z = {z} is outside both the Laurent disc and the q,w strip at tau = {tau}"
        )
    if laurent_tail <= fourier_tail:
        return Representation.LAURENT
    return Representation.FOURIER


def generator_values(
    tau: complex,
    z: complex,
    ctx: Optional[NumericContext] = None,
    representation: Representation = Representation.AUTO,
    generators: Optional[Iterable[Generator]] = None,
) -> Dict[Generator, complex]:
    """Numeric values of the requested generators (all five by default)."""
    ctx = _context(ctx)
    wanted = set(GENERATORS if generators is None else generators)
    values: Dict[Generator, complex] = {}
    if Generator.E2 in wanted:
        values[Generator.E2] = eval_eisenstein(2, tau, ctx)
    if Generator.E4 in wanted:
        values[Generator.E4] = eval_eisenstein(4, tau, ctx)
    elliptic = [g for g in ELLIPTIC_GENERATORS if g in wanted]
    if elliptic:
        if representation is Representation.AUTO:
            representation = choose_representation(tau, z, ctx)
            logger.debug(f"{representation.value} series chosen at tau={tau}, z={z}")
        table = _LAURENT if representation is Representation.LAURENT else _FOURIER
        for g in elliptic:
            values[g] = table[g](tau, z, ctx)
    return values


def eval_form(
    f: Form,
    tau: complex,
    z: complex = 0j,
    ctx: Optional[NumericContext] = None,
    representation: Representation = Representation.AUTO,
) -> complex:
    """Evaluate f with its generators replaced by analytic values and c by 2 pi i."""
    used = {g for monomial in f.monomials() for g, e in zip(GENERATORS, monomial) if e}
    values = generator_values(tau, z, ctx, representation, used)
    total = 0j
    for monomial, scalar in f:
        term = scalar.evaluate(TWO_PI_I)
        for g, exponent in zip(GENERATORS, monomial):
            if exponent:
                term *= values[g] ** exponent
        total += term
    return total


# ---------------------------------------------------------------------------
# Group action and cocycles
# ---------------------------------------------------------------------------


def compose(a: JacobiGroupElement, b: JacobiGroupElement) -> JacobiGroupElement:
    return a.compose(b)


def cocycle_J(a: JacobiGroupElement, tau: complex, z: complex = 0j) -> complex:
    return a.c * tau + a.d


def cocycle_X(a: JacobiGroupElement, tau: complex, z: complex = 0j) -> complex:
    return a.c / (a.c * tau + a.d)


def cocycle_Y(a: JacobiGroupElement, tau: complex, z: complex = 0j) -> complex:
    return (a.c * z + a.c * a.mu - a.d * a.lam) / (a.c * tau + a.d)


def group_action(
    a: JacobiGroupElement, tau: complex, z: complex = 0j
) -> Tuple[complex, complex]:
    j = cocycle_J(a, tau, z)
    return (a.a * tau + a.b) / j, (z + a.lam * tau + a.mu) / j


def cocycle_relation_residual(
    a: JacobiGroupElement, b: JacobiGroupElement, points: Sequence[SamplePoint]
) -> float:
    """Largest defect of the three cocycle relations for the product ab."""
    ab = compose(a, b)
    worst = 0.0
    for point in points:
        tau, z = point.tau, point.z
        moved = group_action(b, tau, z)
        jb = cocycle_J(b, tau, z)
        pairs = [
            (cocycle_J(ab, tau, z), cocycle_J(a, *moved) * jb),
            (cocycle_Y(ab, tau, z), cocycle_Y(a, *moved) / jb + cocycle_Y(b, tau, z)),
            (cocycle_X(ab, tau, z), cocycle_X(a, *moved) / jb**2 + cocycle_X(b, tau, z)),
        ]
        worst = max([worst, *(_scaled(left, right) for left, right in pairs)])
    return worst


def action_composition_residual(
    a: JacobiGroupElement, b: JacobiGroupElement, points: Sequence[SamplePoint]
) -> float:
    """max |a.(b.x) - (ab).x| over the points, in both coordinates."""
    ab = compose(a, b)
    worst = 0.0
    for point in points:
        nested = group_action(a, *group_action(b, point.tau, point.z))
        direct = group_action(ab, point.tau, point.z)
        worst = max(worst, _scaled(nested[0], direct[0]), _scaled(nested[1], direct[1]))
    return worst


# ---------------------------------------------------------------------------
# Residuals
# ---------------------------------------------------------------------------


def transformation_residual(
    f: Form,
    a: JacobiGroupElement,
    points: Sequence[SamplePoint],
    ctx: Optional[NumericContext] = None,
) -> float:
    """max over points of the scaled gap between J^-k f(a.x) and
    sum Q_{j1,j2}(f)(x) X^j1 Y^j2.

    Raises:
        InhomogeneousFormError: If f mixes weights.
    """
    ctx = _context(ctx)
    if f.is_zero:
        return 0.0
    k = weight_of(f)
    if k is None:
        raise InhomogeneousFormError("transformation law needs a homogeneous form")
    expansion = depth_expand(f)
    worst = 0.0
    for point in points:
        tau, z = point.tau, point.z
        moved_tau, moved_z = group_action(a, tau, z)
        left = cocycle_J(a, tau, z) ** (-k) * eval_form(f, moved_tau, moved_z, ctx)
        x, y = cocycle_X(a, tau, z), cocycle_Y(a, tau, z)
        right = sum(
            (
                eval_form(q, tau, z, ctx) * x**j1 * y**j2
                for (j1, j2), q in expansion.items()
            ),
            0j,
        )
        worst = max(worst, _scaled(left, right))
    logger.debug(f"transformation residual {worst:.3g} for weight {k} under {a.to_dict()}")
    return worst


def dual_representation_residual(
    which: Generator, points: Sequence[SamplePoint], ctx: Optional[NumericContext] = None
) -> float:
    which = _elliptic(which)
    ctx = _context(ctx)
    return max(
        (
            _scaled(_LAURENT[which](p.tau, p.z, ctx), _FOURIER[which](p.tau, p.z, ctx))
            for p in points
        ),
        default=0.0,
    )


def fourier_admission_residual(
    which: Generator,
    tau: complex,
    ctx: Optional[NumericContext] = None,
    count: int = _ADMISSION_COEFFICIENTS,
) -> float:
    """Compare the Laurent coefficients of the q,w expansion with the Laurent data.

    The q,w expansion is sampled on a circle inside both the Laurent disc and
    the strip, its coefficients are read off with an FFT and compared, scaled
    by the radius power, with the principal part and the first ``count``
    Eisenstein-built coefficients.
    """
    if which not in (Generator.P, Generator.E1):
        raise InvalidArgumentError(f"admission test covers P and E1, not {which.value}")
    ctx = _context(ctx)
    if 2 * count + 4 > _FFT_SAMPLES:
        raise InvalidArgumentError(f"at most {(_FFT_SAMPLES - 4) // 2} coefficients")
    radius = 0.5 * min(lattice_radius(tau), tau.imag)
    angles = 2 * np.pi * np.arange(_FFT_SAMPLES) / _FFT_SAMPLES
    circle = radius * np.exp(1j * angles)
    samples = np.array([_FOURIER[which](tau, complex(z), ctx) for z in circle])
    scaled = np.fft.fft(samples) / _FFT_SAMPLES
    e = _laurent_data(tau, ctx)
    expected: Dict[int, complex] = {}
    if which is Generator.P:
        expected[-2] = 1.0
        expected[0] = 0.0
        for power, weight, factor in laurent_coefficients(which, count - 2):
            expected[power] = factor * e[weight // 2 - 1]
    else:
        expected[-1] = 1.0
        for power, weight, factor in laurent_coefficients(which, count - 1):
            expected[power] = factor * e[weight // 2 - 1]
    worst = 0.0
    for power, value in expected.items():
        measured = scaled[power % _FFT_SAMPLES]
        worst = max(worst, abs(measured - value * radius**power))
    logger.debug(f"q,w admission residual for {which.value} at tau={tau}: {worst:.3g}")
    return float(worst)


def translation_residual(
    which: Generator,
    shift: Tuple[int, int],
    points: Sequence[SamplePoint],
    ctx: Optional[NumericContext] = None,
) -> float:
    """P and Pz are lattice periodic; E1(z + lam tau + mu) = E1(z) - 2 pi i lam."""
    which = _elliptic(which)
    ctx = _context(ctx)
    lam, mu = shift
    evaluate = _FOURIER[which]
    offset = -TWO_PI_I * lam if which is Generator.E1 else 0j
    return max(
        (
            _scaled(
                evaluate(p.tau, p.z + lam * p.tau + mu, ctx),
                evaluate(p.tau, p.z, ctx) + offset,
            )
            for p in points
        ),
        default=0.0,
    )


def finite_difference_residual(
    f: Form,
    points: Sequence[SamplePoint],
    ctx: Optional[NumericContext] = None,
    variable: str = "z",
    step: float = 1e-5,
) -> float:
    """Central differences of eval_form(f) against eval_form(dz f) or eval_form(dtau f).

    For tau the difference quotient is multiplied by pi / 2i to match dtau.
    """
    ctx = _context(ctx)
    if variable == "z":
        derivative = dz(f)
    elif variable == "tau":
        derivative = dtau(f)
    else:
        raise InvalidArgumentError(f"variable must be 'z' or 'tau', got {variable!r}")
    worst = 0.0
    for p in points:
        if variable == "z":
            forward = eval_form(f, p.tau, p.z + step, ctx)
            backward = eval_form(f, p.tau, p.z - step, ctx)
            numeric = (forward - backward) / (2 * step)
        else:
            forward = eval_form(f, p.tau + step, p.z, ctx)
            backward = eval_form(f, p.tau - step, p.z, ctx)
            numeric = math.pi / 2j * (forward - backward) / (2 * step)
        worst = max(worst, _scaled(numeric, eval_form(derivative, p.tau, p.z, ctx)))
    return worst


def sample_points(
    seed: int, count: int = 5, ctx: Optional[NumericContext] = None
) -> List[SamplePoint]:
    """Seeded points with tau near 2i and z in the lower right quarter of a small disc.

    |z| stays within 0.1..0.3 of the lattice radius and Re z > 0 > Im z, so the
    images under S, ST, T and the unit translations fall inside the Laurent disc
    or the q,w strip.
    """
    rng = np.random.default_rng([abs(seed), 11])
    points: List[SamplePoint] = []
    for _ in range(count):
        tau = complex(rng.uniform(-0.1, 0.1), 2 + rng.uniform(-0.1, 0.1))
        rho = rng.uniform(0.1, 0.3) * lattice_radius(tau)
        phi = rng.uniform(-1.2, -0.3)
        points.append(SamplePoint(tau=tau, z=complex(cmath.rect(rho, phi))))
    return points
