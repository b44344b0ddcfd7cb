"""Seeded property suites behind ``relspin verify``.

Random draws use numpy's PCG64 bit generator (``numpy.random.default_rng``);
suite ``k`` gets its own stream seeded with ``[seed, k]`` so adding draws to
one suite never shifts another.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import gates
from .entanglement import (
    bd_boosted_lambdas,
    bd_rest_concurrence,
    chain_inequality,
    concurrence_numeric,
    difference_identities,
    pure_reduced_spin_eigs_closed_form,
    von_neumann_entropy,
)
from .kinematics import BoostParameters, ParticleKinematics, wigner_rotation
from .linalg import hermitian_eig, make_density, partial_trace_first, psd_sqrt
from .states import (
    BellMixture,
    SpinOrientation,
    TwoMomentumGeometry,
    bd_density,
    bell_states,
    boost_density,
    boost_state,
    relative_wigner_angle,
    schmidt_pure_state,
    signed_wigner_angles,
    spin_momentum_angle,
)

BETA_GRID = np.linspace(0.0, 0.999, 200)


@dataclass
class SuiteResult:
    name: str
    tol: float
    passed: int = 0
    total: int = 0
    worst: float = 0.0
    first_failure: str = None
    notes: list = field(default_factory=list)

    @property
    def ok(self):
        return self.total > 0 and self.passed == self.total

    def check(self, residual, params):
        residual = float(residual)
        self.total += 1
        if residual > self.worst or math.isnan(residual):
            self.worst = residual
        if residual <= self.tol:
            self.passed += 1
        elif self.first_failure is None:
            self.first_failure = params


def _fmt(**kw):
    return ", ".join(f"{k}={v!r}" for k, v in kw.items())


def _loguniform(rng, lo, hi):
    return float(math.exp(rng.uniform(math.log(lo), math.log(hi))))


def _mixture(rng, sort=False):
    p = rng.dirichlet(np.ones(4))
    if sort:
        p = np.sort(p)[::-1]
    p = p / p.sum()
    p[-1] = 1.0 - p[:-1].sum()
    return BellMixture(tuple(float(x) for x in np.clip(p, 0.0, None)))


def _collinear_draw(rng):
    """x-boost, collinear yz-plane momenta (antiparallel or parallel), tau = pi/2."""
    beta = float(rng.uniform(0.0, 0.999))
    theta = float(rng.uniform(0.0, 2 * math.pi))
    xi = float(rng.uniform(0.0, math.pi))
    r1 = _loguniform(rng, 1.0, 100.0)
    if rng.integers(2):
        geom = TwoMomentumGeometry.in_yz_plane(r1, theta)
    else:
        geom = TwoMomentumGeometry.in_yz_plane(r1, theta, _loguniform(rng, 1.0, 100.0), theta)
    return BoostParameters.from_beta(beta), geom, SpinOrientation(xi)


def _random_unit(rng):
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


# -- suites -----------------------------------------------------------------

def wigner_normalization(rng, trials):
    res = SuiteResult("wigner-normalization", 1e-10)
    for beta in np.linspace(0.0, 0.999, 50):
        boost = BoostParameters.from_beta(beta)
        for r in np.linspace(1.0, 100.0, 50):
            for c in (-1.0, -0.5, 0.0, 0.5, 1.0):
                p = ParticleKinematics.along(r, (c, math.sqrt(1.0 - c * c), 0.0))
                w = wigner_rotation(boost, p)
                res.check(abs(w.cos_half ** 2 + w.sin_half ** 2 - 1.0), _fmt(beta=beta, r=r, e_dot_p=c))
    return res


def perpendicular_tan_identity(rng, trials):
    res = SuiteResult("perpendicular-tan-identity", 1e-10)
    for beta in np.linspace(0.0, 0.999, 50):
        boost = BoostParameters.from_beta(beta)
        for r in np.linspace(1.0, 100.0, 50):
            p = ParticleKinematics.along(r, (0.0, 1.0, 0.0))
            w = wigner_rotation(boost, p)
            expected = math.tanh(boost.alpha / 2) * math.tanh(p.delta / 2)
            res.check(abs(w.sin_half / w.cos_half - expected), _fmt(beta=beta, r=r))
    return res


def boost_orthogonality(rng, trials):
    res = SuiteResult("boost-orthogonality", 1e-12)
    for _ in range(trials):
        beta = float(rng.uniform(0.0, 0.999))
        e_hat = _random_unit(rng)
        k1 = ParticleKinematics.along(_loguniform(rng, 1.0, 100.0), _random_unit(rng))
        k2 = ParticleKinematics.along(_loguniform(rng, 1.0, 100.0), _random_unit(rng))
        s = SpinOrientation(float(rng.uniform(0, math.pi)), float(rng.uniform(0, 2 * math.pi)))
        boost = BoostParameters.from_beta(beta, e_hat)
        geom = TwoMomentumGeometry(k1, k2)
        boosted = np.array([boost_state(psi, boost, geom) for psi in bell_states(s)])
        gram = boosted.conj() @ boosted.T
        res.check(np.abs(gram - np.eye(4)).max(),
                  _fmt(beta=beta, e_hat=tuple(e_hat), k1=k1, k2=k2, spin=s))
    return res


def pure_closed_form(rng, trials):
    res = SuiteResult("pure-closed-form", 1e-10)
    for _ in range(trials):
        boost, geom, s = _collinear_draw(rng)
        l1 = float(rng.uniform())
        psi = boost_state(schmidt_pure_state(l1, 1.0 - l1, s), boost, geom)
        w, _ = hermitian_eig(partial_trace_first(make_density(psi)))
        o1, o2 = signed_wigner_angles(boost, geom)
        eta = pure_reduced_spin_eigs_closed_form(l1, 1.0 - l1, spin_momentum_angle(s, geom), o1, o2)
        res.check(max(abs(w[1] - eta[0]), abs(w[0] - eta[1])),
                  _fmt(l1=l1, boost=boost, geom=geom, spin=s))
    return res


def pure_perpendicular(rng, trials):
    res = SuiteResult("pure-perpendicular", 1e-12)
    for _ in range(trials):
        l1 = float(rng.uniform())
        o1, o2 = (float(x) for x in rng.uniform(-math.pi, math.pi, size=2))
        eta = pure_reduced_spin_eigs_closed_form(l1, 1.0 - l1, math.pi / 2, o1, o2)
        res.check(max(abs(eta[0] - min(l1, 1 - l1)), abs(eta[1] - max(l1, 1 - l1))),
                  _fmt(l1=l1, omega1=o1, omega2=o2))
    return res


def mixed_closed_form(rng, trials):
    res = SuiteResult("mixed-closed-form", 1e-8)
    for _ in range(trials):
        boost, geom, s = _collinear_draw(rng)
        mix = _mixture(rng)
        numeric = concurrence_numeric(boost_density(bd_density(mix, s), boost, geom))
        lam = sorted(bd_boosted_lambdas(mix, spin_momentum_angle(s, geom),
                                        relative_wigner_angle(boost, geom)), reverse=True)
        res.check(np.abs(np.array(numeric.lambdas) - lam).max(),
                  _fmt(mix=mix, boost=boost, geom=geom, spin=s))
    return res


def sum_difference_identities(rng, trials):
    res = SuiteResult("sum-difference-identities", 1e-9)
    for _ in range(trials):
        boost, geom, s = _collinear_draw(rng)
        mix = _mixture(rng)
        phi, omega = spin_momentum_angle(s, geom), relative_wigner_angle(boost, geom)
        res.check(difference_identities(mix, phi, omega, strict=False).residual,
                  _fmt(mix=mix, phi=phi, omega=omega))
    return res


def rest_bd_concurrence(rng, trials):
    res = SuiteResult("rest-bd-concurrence", 1e-10)
    fixed = BellMixture((0.7, 0.1, 0.1, 0.1))
    c = concurrence_numeric(bd_density(fixed, SpinOrientation(0.0))).concurrence
    res.check(abs(c - 0.4), _fmt(mix=fixed))
    for _ in range(trials):
        mix = _mixture(rng)
        s = SpinOrientation(float(rng.uniform(0, math.pi)), float(rng.uniform(0, 2 * math.pi)))
        c = concurrence_numeric(bd_density(mix, s)).concurrence
        res.check(abs(c - bd_rest_concurrence(mix)), _fmt(mix=mix, spin=s))
    return res


def _beta_sweep(mix, s, l1, energy_ratio, theta):
    geom = TwoMomentumGeometry.in_yz_plane(energy_ratio, theta)
    rho = bd_density(mix, s)
    psi = schmidt_pure_state(l1, 1.0 - l1, s)
    cs, es = [], []
    for beta in BETA_GRID:
        boost = BoostParameters.from_beta(beta)
        cs.append(concurrence_numeric(boost_density(rho, boost, geom)).concurrence)
        spin = partial_trace_first(make_density(boost_state(psi, boost, geom)))
        es.append(von_neumann_entropy(spin))
    return np.array(cs), np.array(es)


def _sweep_configs(rng, trials):
    for _ in range(min(trials, 10)):
        mix = _mixture(rng, sort=True)
        l1 = float(rng.uniform(0.5, 1.0))
        theta = float(rng.uniform(0, 2 * math.pi))
        yield mix, l1, _loguniform(rng, 1.0, 100.0), theta


def monotonicity(rng, trials):
    res = SuiteResult("monotonicity", 1e-12)
    for mix, l1, r, theta in _sweep_configs(rng, trials):
        s = SpinOrientation(theta)  # phi = 0
        cs, es = _beta_sweep(mix, s, l1, r, theta)
        params = _fmt(mix=mix, l1=l1, energy_ratio=r, theta=theta)
        res.check(max(0.0, float(np.diff(cs).max())), "C " + params)
        res.check(max(0.0, float((es - es[0]).max())), "E " + params)
    return res


def perpendicular_invariance(rng, trials):
    res = SuiteResult("perpendicular-invariance", 1e-10)
    for mix, l1, r, theta in _sweep_configs(rng, trials):
        s = SpinOrientation(theta + math.pi / 2)  # phi = pi/2
        cs, es = _beta_sweep(mix, s, l1, r, theta)
        params = _fmt(mix=mix, l1=l1, energy_ratio=r, theta=theta)
        res.check(float(np.abs(cs - cs[0]).max()), "C " + params)
        res.check(float(np.abs(es - es[0]).max()), "E " + params)
    return res


def full_state_entropy(rng, trials):
    res = SuiteResult("full-state-entropy", 1e-12)
    for _ in range(trials):
        boost, geom, s = _collinear_draw(rng)
        mix = _mixture(rng)
        rho = bd_density(mix, s)
        d = abs(von_neumann_entropy(boost_density(rho, boost, geom)) - von_neumann_entropy(rho))
        res.check(d, _fmt(mix=mix, boost=boost, geom=geom, spin=s))
    return res


def chain_inequality_suite(rng, trials):
    res = SuiteResult("chain-inequality", 1e-10)
    outside = 0
    for _ in range(trials):
        boost, geom, s = _collinear_draw(rng)
        mix = _mixture(rng, sort=bool(rng.integers(2)))
        phi, omega = spin_momentum_angle(s, geom), relative_wigner_angle(boost, geom)
        lhs, rhs, guaranteed = chain_inequality(mix, phi, omega)
        if guaranteed:
            res.check(max(0.0, lhs - rhs), _fmt(mix=mix, phi=phi, omega=omega))
        elif lhs > rhs + res.tol:
            outside += 1
    res.notes.append(f"violations outside the guaranteed region: {outside}")
    return res


def gate_limit(rng, trials):
    res = SuiteResult("gate-limit", 1e-8)
    g = gates.lorentz_gate(1e-9, math.pi - 1e-9)
    res.check(np.abs(g.matrix - gates.CNOT_LIMIT).max(), "lorentz_gate(1e-9, pi-1e-9)")
    ent, dis = gates.demo_entangle(), gates.demo_disentangle()
    exact = max(abs(ent.concurrence_before), abs(ent.concurrence_after - 1.0),
                abs(dis.concurrence_before - 1.0), abs(dis.concurrence_after))
    # demos are held to the tighter 1e-10
    res.check(exact if exact <= 1e-10 else math.inf, "demo concurrences")
    return res


def linalg_suite(rng, trials):
    res = SuiteResult("linalg", 1e-9)
    for _ in range(min(trials, 100)):
        a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        m = a @ a.conj().T
        s = psd_sqrt(m)
        w, v = hermitian_eig(m)
        res.check(max(np.abs(s @ s - m).max(), np.abs((v * w) @ v.conj().T - m).max()), "random PSD")
    return res


SUITES = [
    wigner_normalization,
    perpendicular_tan_identity,
    boost_orthogonality,
    pure_closed_form,
    pure_perpendicular,
    mixed_closed_form,
    sum_difference_identities,
    rest_bd_concurrence,
    monotonicity,
    perpendicular_invariance,
    full_state_entropy,
    chain_inequality_suite,
    gate_limit,
    linalg_suite,
]


def run_suites(seed, trials, suites=None):
    if trials < 1:
        raise ValueError("trials must be >= 1")
    out = []
    for k, suite in enumerate(SUITES):
        if suites is not None and suite.__name__ not in suites:
            continue
        out.append(suite(np.random.default_rng([seed, k]), trials))
    return out


def format_report(results, seed, trials):
    lines = [f"relspin verify: seed={seed} trials={trials} generator=PCG64"]
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        lines.append(f"{status} {r.name:<28} {r.passed:>6}/{r.total:<6} worst={r.worst:.3e} tol={r.tol:.0e}")
        for note in r.notes:
            lines.append(f"     {note}")
        if not r.ok and r.first_failure is not None:
            lines.append(f"     first failure: {r.first_failure}")
    n_ok = sum(r.ok for r in results)
    lines.append(f"{n_ok}/{len(results)} suites passed")
    return "\n".join(lines) + "\n"
