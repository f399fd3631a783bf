"""Self-check suite behind `visibility validate`.

Every check is deterministic (fixed seeds) and reports a measured value
against its tolerance.  The default profile runs the documented grid
sizes; strict multiplies the sampling density, keeping tolerances fixed.

One check (oracle-jc-signed-detuning) has status "info": it measures the
known deviation of the T=0 closed form from exact diagonalization at
negative detuning (see the jaynes_cummings module docstring) and never
affects the exit status.  The sign-restricted check oracle-jc-nonneg-
detuning is the pass/fail version on the domain where the closed form
tracks the exact spectrum.
"""

import math
from dataclasses import asdict, dataclass

import numpy as np

from .channels import (ChannelKind, ad_overlap_analytic, build_channel_hamiltonian,
                       finite_time_unitary, pd_overlap_analytic, pd_visibility_analytic,
                       two_arm_visibility)
from .interferometer import (ArmConfig, ClockSpec, VisibilityResult,
                             extended_initial_state, noiseless_overlap,
                             noiseless_visibility, scan_probabilities,
                             visibility_from_scan)
from .jaynes_cummings import (JcParams, ThermalParams, build_jc_hamiltonian,
                              jc_initial_state, jc_thermal_visibility,
                              jc_overlap_analytic, jc_visibility_analytic,
                              sector_overlap)
from .oracle import OracleJob, oracle_visibility
from .sweep import figure_preset, run_sweep, serialize_records


@dataclass
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "info"
    measured: float
    tolerance: float
    detail: str


def _result(name, ok, measured, tolerance, detail) -> CheckResult:
    return CheckResult(name=name, status="pass" if ok else "fail",
                       measured=float(measured), tolerance=tolerance, detail=detail)


def _jc_oracle_kappa(params: JcParams, tau1: float, tau2: float) -> complex:
    h = build_jc_hamiltonian(params)
    job = OracleJob(hamiltonian_arm1=h, hamiltonian_arm2=h,
                    initial_state=jc_initial_state(params), tau1=tau1, tau2=tau2)
    return oracle_visibility(job).kappa


def _sector_oracle_kappa(params: JcParams, n: int, delta_tau: float) -> complex:
    dim_f = params.n_cutoff + 1
    state = np.zeros(2 * dim_f, dtype=np.complex128)
    state[n] = state[dim_f + n] = 1.0 / math.sqrt(2.0)
    h = build_jc_hamiltonian(params)
    job = OracleJob(hamiltonian_arm1=h, hamiltonian_arm2=h, initial_state=state,
                    tau1=0.0, tau2=delta_tau)
    return oracle_visibility(job).kappa


def _channel_oracle_kappa(kind: ChannelKind, clock: ClockSpec, lam: float,
                          tau1: float, tau2: float) -> complex:
    h = build_channel_hamiltonian(kind, lam, clock)
    job = OracleJob(hamiltonian_arm1=h, hamiltonian_arm2=h,
                    initial_state=extended_initial_state(clock, kind.env_dim),
                    tau1=tau1, tau2=tau2)
    return oracle_visibility(job).kappa


def _check_goldens():
    checks = []
    v1 = jc_visibility_analytic(JcParams(1.0, 1.1, 0.0), 1.0)
    checks.append(_result("golden-jc-no-coupling", abs(v1 - 0.8525) <= 1e-3,
                          v1, 1e-3,
                          "jc(delta_e=1, omega=1.1, lambda=0, delta_tau=1) vs 0.8525"))
    v2 = jc_visibility_analytic(JcParams(1.0, 1.1, 1.0), 1.0)
    checks.append(_result("golden-jc-with-coupling", abs(v2 - 0.7999) <= 1.5e-3,
                          v2, 1.5e-3,
                          "jc(delta_e=1, omega=1.1, lambda=1, delta_tau=1) vs 0.7999"))
    drop = v1 - v2
    checks.append(_result("golden-coupling-drop", abs(drop - 0.0526) <= 2e-3,
                          drop, 2e-3, "visibility drop vs 0.0526"))
    v3 = noiseless_visibility(ClockSpec.balanced(1.0), 1.0)
    checks.append(_result("golden-noiseless-baseline", abs(v3 - 0.8776) <= 1e-3,
                          v3, 1e-3, "bare clock |cos(1/2)| vs 0.8776"))
    vt = jc_thermal_visibility(JcParams(1.0, 1.1, 1.0), ThermalParams(0.1), 1.0)
    checks.append(_result("thermal-low-t-limit", abs(vt - v2) <= 1e-4,
                          abs(vt - v2), 1e-4,
                          "|V(T=0.1) - V(T->0)| for jc(1, 1.1, 1), delta_tau=1"))
    return checks


def _check_oracle_ad(n_points):
    rng = np.random.default_rng(1001)
    worst = 0.0
    for _ in range(n_points):
        de, lam = rng.uniform(0.0, 3.0, size=2)
        tau1 = rng.uniform(0.0, 2 * math.pi)
        dtau = rng.uniform(0.0, 2 * math.pi)
        clock = ClockSpec.balanced(de)
        analytic = ad_overlap_analytic(clock, lam, tau1, tau1 + dtau)
        reference = _channel_oracle_kappa(ChannelKind.AD, clock, lam, tau1, tau1 + dtau)
        worst = max(worst, abs(analytic - reference))
    return _result("oracle-ad", worst < 1e-10, worst, 1e-10,
                   f"amplitude-damping closed form vs brute force, {n_points} random points")


def _check_oracle_pd(n_points):
    rng = np.random.default_rng(1002)
    worst = 0.0
    for _ in range(n_points):
        de, lam = rng.uniform(0.0, 3.0, size=2)
        tau1 = rng.uniform(0.0, 2 * math.pi)
        dtau = rng.uniform(0.0, 2 * math.pi)
        clock = ClockSpec.balanced(de)
        analytic = pd_overlap_analytic(clock, lam, tau1, tau1 + dtau)
        reference = _channel_oracle_kappa(ChannelKind.PD, clock, lam, tau1, tau1 + dtau)
        worst = max(worst, abs(analytic - reference))
    return _result("oracle-pd", worst < 1e-10, worst, 1e-10,
                   f"phase-damping closed form vs brute force, {n_points} random points")


def _check_oracle_jc_nonneg(n_points):
    rng = np.random.default_rng(1003)
    worst = 0.0
    for _ in range(n_points):
        de = rng.uniform(0.0, 3.0)
        omega = rng.uniform(0.0, de) if de > 0 else 0.0  # delta >= 0
        lam = rng.uniform(0.0, 3.0)
        dtau = rng.uniform(0.0, 2 * math.pi)
        params = JcParams(de, omega, lam, n_cutoff=2)
        analytic = jc_overlap_analytic(params, dtau)
        reference = _jc_oracle_kappa(params, 0.0, dtau)
        worst = max(worst, abs(analytic - reference))
    return _result("oracle-jc-nonneg-detuning", worst < 1e-10, worst, 1e-10,
                   f"T=0 closed form vs brute force for delta_e >= omega, {n_points} points")


def _check_oracle_jc_signed(n_points):
    rng = np.random.default_rng(1004)
    worst = 0.0
    for _ in range(n_points):
        de, omega, lam = rng.uniform(0.0, 3.0, size=3)
        dtau = rng.uniform(0.0, 2 * math.pi)
        params = JcParams(de, omega, lam, n_cutoff=2)
        worst = max(worst, abs(jc_overlap_analytic(params, dtau)
                               - _jc_oracle_kappa(params, 0.0, dtau)))
    return CheckResult(
        name="oracle-jc-signed-detuning", status="info", measured=float(worst),
        tolerance=None,
        detail="T=0 closed form vs brute force over the full detuning range; "
               "the principal-branch mixing angle deviates from exact "
               "diagonalization when omega > delta_e (documented convention, "
               "required by the reference values). Informational only.")


def _check_oracle_thermal_sectors(n_draws):
    rng = np.random.default_rng(1005)
    worst = 0.0
    for _ in range(n_draws):
        de = rng.uniform(0.0, 3.0)
        omega = rng.uniform(0.0, de) if de > 0 else 0.0
        lam = rng.uniform(0.0, 3.0)
        dtau = rng.uniform(0.0, 2 * math.pi)
        for n in range(6):
            params = JcParams(de, omega, lam, n_cutoff=n + 3)
            analytic = sector_overlap(params, n, dtau)
            reference = _sector_oracle_kappa(params, n, dtau)
            worst = max(worst, abs(analytic - reference))
    # negative detuning exercises the branch-safe n >= 1 sectors
    for _ in range(n_draws):
        omega = rng.uniform(0.0, 3.0)
        de = rng.uniform(0.0, omega) if omega > 0 else 0.0
        lam = rng.uniform(0.0, 3.0)
        dtau = rng.uniform(0.0, 2 * math.pi)
        for n in range(1, 6):
            params = JcParams(de, omega, lam, n_cutoff=n + 3)
            analytic = sector_overlap(params, n, dtau)
            reference = _sector_oracle_kappa(params, n, dtau)
            worst = max(worst, abs(analytic - reference))
    return _result("oracle-thermal-sectors", worst < 1e-10, worst, 1e-10,
                   "per-sector thermal overlaps (n <= 5) vs brute force; "
                   "n = 0 restricted to delta_e >= omega (see oracle-jc-signed-detuning)")


def _check_chi_scan(n_models):
    rng = np.random.default_rng(1006)
    worst = 0.0
    for i in range(n_models):
        de = rng.uniform(0.2, 3.0)
        lam = rng.uniform(0.0, 1.5)
        dtau = rng.uniform(0.1, 2 * math.pi)
        clock = ClockSpec.balanced(de)
        pick = i % 4
        if pick == 0:
            kappa = jc_overlap_analytic(JcParams(de, rng.uniform(0.0, 3.0), lam), dtau)
        elif pick == 1:
            kappa = ad_overlap_analytic(clock, lam, 0.0, dtau)
        elif pick == 2:
            kappa = pd_overlap_analytic(clock, lam, 0.0, dtau)
        else:
            kappa = noiseless_overlap(clock, dtau)
        result = VisibilityResult.from_kappa(kappa)
        scanned = visibility_from_scan(
            scan_probabilities(result, delta_phi=rng.uniform(0.0, 2 * math.pi)))
        worst = max(worst, abs(scanned - result.v))
    return _result("chi-scan", worst < 1e-6, worst, 1e-6,
                   f"fringe-scan visibility vs |kappa| for {n_models} random models")


def _equal_coupling_visibility(kind: ChannelKind, de: float, lam: float, dtau: float) -> float:
    clock = ClockSpec.balanced(de)
    return two_arm_visibility(clock, kind, ArmConfig(tau=0.0, lambda_arm=lam),
                              ArmConfig(tau=dtau, lambda_arm=lam)).v


def _check_monotonicity(n_samples):
    v0 = noiseless_visibility(ClockSpec.balanced(1.0), 1.0)
    worst_margin = -math.inf
    for kind in ChannelKind:
        for lam in np.linspace(0.1 / n_samples, 0.1, n_samples):
            v = _equal_coupling_visibility(kind, 1.0, float(lam), 1.0)
            worst_margin = max(worst_margin, v - v0)
    return _result("low-noise-monotonicity", worst_margin < 0, worst_margin, 0.0,
                   "V(lambda) - V(0) < 0 for lambda in (0, 0.1], all channel kinds")


def _factorization_error(kind: ChannelKind, lam: float, dtau: float = 1.0) -> float:
    clock = ClockSpec.balanced(1.0)
    flat = ClockSpec(e0=0.0, e1=0.0)
    arms = (ArmConfig(tau=0.0, lambda_arm=lam), ArmConfig(tau=dtau, lambda_arm=lam))
    full = two_arm_visibility(clock, kind, *arms).kappa
    noise_only = two_arm_visibility(flat, kind, *arms).kappa
    bare = noiseless_overlap(clock, dtau)
    return abs(full - bare * noise_only)


def _check_factorization():
    details = []
    ok = True
    worst = 0.0
    for kind in ChannelKind:
        e1 = _factorization_error(kind, 1e-3)
        e2 = _factorization_error(kind, 2e-3)
        if e1 < 1e-13:
            # factorization is exact for this kind; O(lambda^2) holds trivially
            good = e2 < 1e-13
            details.append(f"{kind.value}: exact (err {e1:.2e})")
            worst = max(worst, e1, e2)
        else:
            ratio = e2 / e1
            good = 3.5 <= ratio <= 4.5
            details.append(f"{kind.value}: ratio {ratio:.4f}")
            worst = max(worst, abs(ratio - 4.0))
        ok = ok and good
    return _result("low-noise-factorization", ok, worst, 0.5,
                   "err(2 lambda)/err(lambda) in [3.5, 4.5] at lambda=1e-3 "
                   "(or exact factorization): " + "; ".join(details))


def _check_structure(n_random):
    rng = np.random.default_rng(1007)
    worst_h = 0.0
    worst_u = 0.0
    identity_exact = True
    for _ in range(n_random):
        de, omega, lam = rng.uniform(0.0, 3.0, size=3)
        h = build_jc_hamiltonian(JcParams(de, omega, lam, n_cutoff=4))
        worst_h = max(worst_h, float(np.max(np.abs(h - h.conj().T))))
        clock = ClockSpec.balanced(de)
        for kind in ChannelKind:
            h = build_channel_hamiltonian(kind, lam, clock)
            worst_h = max(worst_h, float(np.max(np.abs(h - h.conj().T))))
    for kind in ChannelKind:
        eye = np.eye(kind.dim, dtype=np.complex128)
        if not np.array_equal(finite_time_unitary(kind, 0.0), eye):
            identity_exact = False
        for p in np.linspace(0.0, 1.0, 11):
            u = finite_time_unitary(kind, float(p))
            worst_u = max(worst_u, float(np.max(np.abs(u.conj().T @ u - eye))))
    ok = worst_h < 1e-12 and worst_u < 1e-10 and identity_exact
    return _result("structure", ok, max(worst_h, worst_u), 1e-10,
                   "Hamiltonians Hermitian to 1e-12, unitaries to 1e-10, "
                   "p=0 dilations exactly identity")


def _check_two_arm_symmetry():
    clock = ClockSpec.balanced(1.0)
    grid = np.linspace(0.0, 1.0, 6)
    worst = 0.0
    for p1 in grid:
        for p2 in grid:
            lam1 = math.asin(math.sqrt(float(p1)))
            lam2 = math.asin(math.sqrt(float(p2)))
            va = two_arm_visibility(clock, ChannelKind.AD,
                                    ArmConfig(tau=1.0, lambda_arm=lam1),
                                    ArmConfig(tau=1.0, lambda_arm=lam2)).v
            vb = two_arm_visibility(clock, ChannelKind.AD,
                                    ArmConfig(tau=1.0, lambda_arm=lam2),
                                    ArmConfig(tau=1.0, lambda_arm=lam1)).v
            worst = max(worst, abs(va - vb))
    return _result("two-arm-symmetry", worst < 1e-10, worst, 1e-10,
                   "AD equal arm times: V(p1,p2) = V(p2,p1) over a 6x6 grid")


def _check_two_arm_asymmetry():
    clock = ClockSpec.balanced(1.0)
    grid = np.linspace(0.0, 1.0, 6)
    best = 0.0
    for p1 in grid:
        for p2 in grid:
            lam1 = math.asin(math.sqrt(float(p1))) / 1.0
            lam2 = math.asin(math.sqrt(float(p2))) / 2.0
            lam1s = math.asin(math.sqrt(float(p2))) / 1.0
            lam2s = math.asin(math.sqrt(float(p1))) / 2.0
            va = two_arm_visibility(clock, ChannelKind.AD,
                                    ArmConfig(tau=1.0, lambda_arm=lam1),
                                    ArmConfig(tau=2.0, lambda_arm=lam2)).v
            vb = two_arm_visibility(clock, ChannelKind.AD,
                                    ArmConfig(tau=1.0, lambda_arm=lam1s),
                                    ArmConfig(tau=2.0, lambda_arm=lam2s)).v
            best = max(best, abs(va - vb))
    return _result("two-arm-asymmetry", best > 1e-3, best, 1e-3,
                   "AD with tau1=1, tau2=2: max |V(p1,p2) - V(p2,p1)| exceeds 1e-3")


def _check_thermal_ordering():
    params = JcParams(1.0, 1.1, 0.2)
    v_cold = jc_visibility_analytic(params, 1.0)
    v1 = jc_thermal_visibility(params, ThermalParams(1.0), 1.0)
    v10 = jc_thermal_visibility(params, ThermalParams(10.0), 1.0)
    gap1 = v_cold - v1
    gap2 = v1 - v10
    ok = gap1 > 1e-4 and gap2 > 1e-4
    return _result("thermal-ordering", ok, min(gap1, gap2), 1e-4,
                   f"V(T->0)={v_cold:.6f} > V(T=1)={v1:.6f} > V(T=10)={v10:.6f}")


def _check_pd_periodicity():
    clock = ClockSpec.balanced(1.0)
    worst = 0.0
    for k in range(10):
        dtau = 0.3 + 0.9 * k
        va = pd_visibility_analytic(clock, 0.25, 0.0, dtau)
        vb = pd_visibility_analytic(clock, 0.25, 0.0, dtau + 4.0 * math.pi)
        worst = max(worst, abs(va - vb))
    return _result("pd-periodicity", worst < 1e-10, worst, 1e-10,
                   "phase damping: V(delta_tau) = V(delta_tau + 4 pi), 10 samples")


def _check_pd_factorized():
    clock = ClockSpec.balanced(1.3)
    worst = 0.0
    for lam in np.linspace(0.0, 1.5, 7):
        for dtau in np.linspace(0.0, 2 * math.pi, 9):
            direct = pd_visibility_analytic(clock, float(lam), 0.0, float(dtau))
            split = abs(math.cos(0.5 * clock.delta_e * dtau) * math.cos(2.0 * lam * dtau))
            worst = max(worst, abs(direct - split))
    return _result("pd-factorization", worst < 1e-12, worst, 1e-12,
                   "pd closed form equals |cos(delta_e dt/2)| * |cos(2 lambda dt)|")


def _check_determinism():
    preset = figure_preset("compare-lambda")
    blobs = []
    for _ in range(2):
        records = []
        for spec in preset.files[0].specs:
            records.extend(run_sweep(spec))
        blobs.append(serialize_records(records, "csv"))
    vis_ok = True
    for line in blobs[0].splitlines()[1:]:
        v = float(line.rsplit(",", 1)[1])
        if not 0.0 <= v <= 1.0 + 1e-12:
            vis_ok = False
    ok = blobs[0] == blobs[1] and vis_ok
    return _result("sweep-determinism", ok, 0.0 if ok else 1.0, 0.0,
                   "compare-lambda serialized twice is byte-identical; "
                   "all visibilities in [0, 1]")


def run_validation(profile: str = "default") -> dict:
    """Run every check; returns a report dict (see CheckResult fields)."""
    if profile not in ("default", "strict"):
        raise ValueError(f"profile must be 'default' or 'strict', got {profile!r}")
    dense = 1 if profile == "default" else 3
    checks = []
    checks.extend(_check_goldens())
    checks.append(_check_oracle_ad(100 * dense))
    checks.append(_check_oracle_pd(100 * dense))
    checks.append(_check_oracle_jc_nonneg(100 * dense))
    checks.append(_check_oracle_thermal_sectors(20 * dense))
    checks.append(_check_oracle_jc_signed(100 * dense))
    checks.append(_check_chi_scan(20 * dense))
    checks.append(_check_monotonicity(20))
    checks.append(_check_factorization())
    checks.append(_check_structure(20 * dense))
    checks.append(_check_two_arm_symmetry())
    checks.append(_check_two_arm_asymmetry())
    checks.append(_check_thermal_ordering())
    checks.append(_check_pd_periodicity())
    checks.append(_check_pd_factorized())
    checks.append(_check_determinism())
    failures = [c.name for c in checks if c.status == "fail"]
    return {
        "profile": profile,
        "checks": [asdict(c) for c in checks],
        "passed": sum(1 for c in checks if c.status == "pass"),
        "failed": failures,
        "ok": not failures,
    }
