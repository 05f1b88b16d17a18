#include "relwave/algebra.hpp"
#include "relwave/evolve.hpp"
#include "relwave/modes.hpp"
#include "relwave/report.hpp"
#include "relwave/rng.hpp"
#include "relwave/solutions.hpp"
#include "relwave/transforms.hpp"

#include <Eigen/Eigenvalues>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace relwave {

namespace {

constexpr double kTiny = 1e-300;

struct SuiteBuilder {
  SuiteReport rep;
  double override_tol;  // <= 0 means none

  SuiteBuilder(std::string suite, const Config& c, double default_tol) {
    rep.suite = std::move(suite);
    rep.seed = c.seed();
    override_tol = c.get_double("tol." + rep.suite, c.get_double("tol.all", -1.0));
    rep.tolerance = override_tol > 0.0 ? override_tol : default_tol;
    rep.overall_pass = true;
  }

  Rng rng(const std::string& check_name) const { return sub_rng(rep.seed, check_name); }

  void add(const std::string& name, double residual, double tol, bool overridable = true,
           const std::string& direction = "le") {
    Check c;
    c.name = name;
    c.max_residual = residual;
    c.tolerance = (overridable && override_tol > 0.0 && direction == "le") ? override_tol : tol;
    c.direction = direction;
    c.pass = (direction == "le") ? (residual <= c.tolerance) : (residual >= c.tolerance);
    rep.overall_pass = rep.overall_pass && c.pass;
    rep.checks.push_back(std::move(c));
  }

  void skip(const std::string& name, double tol, const std::string& note) {
    Check c;
    c.name = name;
    c.tolerance = tol;
    c.pass = true;
    c.skipped = true;
    c.note = note;
    rep.checks.push_back(std::move(c));
  }
};

std::array<double, 4> random_four_momentum(Rng& rng) {
  return {rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0),
          rng.uniform(-3.0, 3.0)};
}

// ---------------------------------------------------------------------------
// algebra

SuiteReport suite_algebra(const Config& cfg) {
  SuiteBuilder b("algebra", cfg, 1e-14);
  const int trials = cfg.get_int("modes.count", 5);

  {
    const auto s = pauli_matrices();
    const cmat id = cmat::Identity(2, 2);
    double r = (s[0] * s[1] - iu * s[2]).norm();
    for (int j = 0; j < 3; ++j) r = std::max(r, (s[j] * s[j] - id).norm());
    r = std::max(r, (s[0] * s[1] + s[1] * s[0]).norm());
    r = std::max(r, (s[0] * s[2] + s[2] * s[0]).norm());
    r = std::max(r, (s[1] * s[2] + s[2] * s[1]).norm());
    b.add("pauli_identities", r, 1e-14);
  }
  b.add("clifford_standard", verify_gamma_set(gamma_standard()).max_residual(), 1e-14);
  b.add("clifford_tilde", verify_gamma_set(gamma_tilde()).max_residual(), 1e-14);
  {
    const auto tilde = gamma_tilde();
    const auto gs = gamma_standard();
    const auto u = build_U();
    const auto uinv = build_U_inv();
    double r = 0.0;
    for (int mu = 0; mu < 4; ++mu) {
      const auto conj = rl_compose(rl_compose(u, RealLinearOperator::linear(gs.gamma[mu])), uinv);
      r = std::max(r, rl_distance(conj, tilde[mu]));
    }
    b.add("tilde_conjugation", r, 1e-13);
  }
  {
    const auto gs = gamma_standard();
    const cmat g4 = gamma4(gs);
    const cmat id = cmat::Identity(4, 4);
    double r = (g4 * g4 - id).norm();
    for (int mu = 0; mu < 4; ++mu) r = std::max(r, (g4 * gs.gamma[mu] + gs.gamma[mu] * g4).norm());
    r = std::max(r, (g4.adjoint() - g4).norm());
    b.add("gamma4_chirality", r, 1e-14);
  }
  {
    Rng rng = b.rng("kg_factorization");
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const auto p = random_four_momentum(rng);
      const double m = rng.uniform(0.0, 3.0);
      const double scale = p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3] + m * m;
      worst = std::max(worst, kg_factorization_residual(p, m) / std::max(scale, kTiny));
    }
    b.add("kg_factorization", worst, 1e-12);
  }
  {
    const auto s = spin1_generators();
    const cmat id = cmat::Identity(3, 3);
    double r = (s[0] * s[0] + s[1] * s[1] + s[2] * s[2] - 2.0 * id).norm();
    r = std::max(r, (s[0] * s[1] - s[1] * s[0] - iu * s[2]).norm());
    r = std::max(r, (s[1] * s[2] - s[2] * s[1] - iu * s[0]).norm());
    r = std::max(r, (s[2] * s[0] - s[0] * s[2] - iu * s[1]).norm());
    b.add("spin1_su2", r, 1e-14);
  }
  {
    Eigen::ComplexEigenSolver<cmat> es(spin1_generators()[2]);
    Eigen::Vector3d ev = es.eigenvalues().real();
    std::sort(ev.data(), ev.data() + 3);
    double r = es.eigenvalues().imag().cwiseAbs().maxCoeff();
    r = std::max(r, std::abs(ev(0) + 1.0));
    r = std::max(r, std::abs(ev(1)));
    r = std::max(r, std::abs(ev(2) - 1.0));
    b.add("spin1_eigenvalues", r, 1e-13);
  }
  {
    const DoubletSpinSet ds = doublet_spin_set();
    const double e = cfg.get_double("charge_e", 1.0);
    const auto orts = cartesian_orts();
    const double half[4] = {0.5, -0.5, -0.5, 0.5};
    const double charge[4] = {-e, -e, e, e};
    double r = 0.0;
    for (int a = 0; a < 4; ++a) {
      const cvec d = orts.v[a];
      r = std::max(r, (rl_apply(ds.s[2], d) - half[a] * d).norm());
      r = std::max(r, (e * (ds.g * d) - charge[a] * d).norm());
    }
    b.add("doublet_eigen_relations", r, 1e-14);
    b.add("doublet_v_involution",
          rl_distance(rl_compose(ds.v, ds.v), RealLinearOperator::identity(4)), 1e-14);
    b.add("doublet_v_link", doublet_v_link_residual(ds), 1e-14);
  }
  {
    Rng rng = b.rng("pgi_invariance");
    const auto rep = pgi_invariance_check(pgi_operators(gamma_standard()), 20, trials, rng);
    b.add("pgi_invariance", rep.worst(), 1e-10);
  }
  {
    Rng rng = b.rng("pgi_gamma0_control");
    const auto gs = gamma_standard();
    const auto rep = pgi_invariance_check(pgi_operators(gs, gs.gamma[0]), 5, trials, rng);
    b.add("pgi_gamma0_control", rep.worst(), 1e-4, false, "ge");
  }
  return b.rep;
}

// ---------------------------------------------------------------------------
// modes

SuiteReport suite_modes(const Config& cfg) {
  SuiteBuilder b("modes", cfg, 1e-13);
  const auto spin = spin1_generators();

  {
    Rng rng = b.rng("helicity_eigen");
    double r = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Eigen::Vector3d k = rng.wavevector(0.2, 3.0);
      const BasisQuad q = helicity_basis(make_wave_vector(k, 0.0));
      cmat sk = cmat::Zero(3, 3);
      for (int j = 0; j < 3; ++j) sk += (k(j) / k.norm()) * spin[j];
      const Eigen::Vector3cd e1 = q.v[0].head<3>(), e2 = q.v[1].head<3>(), e3 = q.v[2].head<3>();
      r = std::max(r, (sk * e1 + e1).norm());
      r = std::max(r, (sk * e2 - e2).norm());
      r = std::max(r, (sk * e3).norm());
    }
    b.add("helicity_eigen", r, 1e-13);
  }
  {
    Rng rng = b.rng("helicity_orthonormal");
    double r = 0.0;
    for (int i = 0; i < 100; ++i) {
      const BasisQuad q = helicity_basis(make_wave_vector(rng.wavevector(0.2, 3.0), 0.0));
      for (int a = 0; a < 4; ++a)
        for (int c = 0; c < 4; ++c) {
          const cplx g = q.v[a].dot(q.v[c]);  // conjugates the first argument
          r = std::max(r, std::abs(g - (a == c ? 1.0 : 0.0)));
        }
    }
    b.add("helicity_orthonormal", r, 1e-13);
  }
  {
    Rng rng = b.rng("helicity_completeness");
    double r = 0.0;
    for (int i = 0; i < 100; ++i) {
      const BasisQuad q = helicity_basis(make_wave_vector(rng.wavevector(0.2, 3.0), 0.0));
      Eigen::Matrix4cd sum = Eigen::Matrix4cd::Zero();
      for (int a = 0; a < 4; ++a) sum += q.v[a] * q.v[a].adjoint();
      r = std::max(r, (sum - Eigen::Matrix4cd::Identity()).norm());
    }
    b.add("helicity_completeness", r, 1e-13);
  }
  {
    Rng rng = b.rng("helicity_axis_continuity");
    double r = 0.0;
    for (int i = 0; i < 10; ++i) {
      const double kz = rng.uniform(0.5, 2.0) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
      const Eigen::Vector3cd near = helicity_e1({1e-6, 0.0, kz});
      const Eigen::Vector3cd limit = helicity_e1({0.0, 0.0, kz});
      r = std::max(r, (near - limit).norm());
    }
    b.add("helicity_axis_continuity", r, 1e-5, false);
  }
  {
    Rng rng = b.rng("omega_massless_exact");
    double r = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Eigen::Vector3d k = rng.wavevector(1e-3, 10.0);
      r = std::max(r, std::abs(make_wave_vector(k, 0.0).omega - k.norm()));
    }
    b.add("omega_massless_exact", r, 0.0, false);
  }
  {
    Rng rng = b.rng("dirac_spinor_orthonormal");
    double r = 0.0;
    for (int i = 0; i < 100; ++i) {
      const BasisQuad q = dirac_spinors(make_wave_vector(rng.wavevector(0.2, 3.0), rng.uniform(0.0, 2.0) + 0.01));
      for (int a = 0; a < 4; ++a)
        for (int c = 0; c < 4; ++c) {
          r = std::max(r, std::abs(q.v[a].dot(q.v[c]) - (a == c ? 1.0 : 0.0)));
        }
    }
    b.add("dirac_spinor_orthonormal", r, 1e-13);
  }
  {
    Rng rng = b.rng("dirac_spinor_completeness");
    double r = 0.0;
    for (int i = 0; i < 100; ++i) {
      const BasisQuad q = dirac_spinors(make_wave_vector(rng.wavevector(0.2, 3.0), rng.uniform(0.0, 2.0) + 0.01));
      Eigen::Matrix4cd sum = Eigen::Matrix4cd::Zero();
      for (int a = 0; a < 4; ++a) sum += q.v[a] * q.v[a].adjoint();
      r = std::max(r, (sum - Eigen::Matrix4cd::Identity()).norm());
    }
    b.add("dirac_spinor_completeness", r, 1e-13);
  }
  {
    Rng rng = b.rng("dirac_spinor_eigen");
    double r = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Eigen::Vector3d k = rng.wavevector(0.2, 3.0);
      const double m = rng.uniform(0.0, 2.0) + 0.01;
      const WaveVector wv = make_wave_vector(k, m);
      const BasisQuad q = dirac_spinors(wv);
      const cmat h = dirac_hamiltonian(k, m);
      const double sign[4] = {1.0, 1.0, -1.0, -1.0};
      for (int a = 0; a < 4; ++a) {
        r = std::max(r, (h * q.v[a] - sign[a] * wv.omega * q.v[a]).norm());
      }
    }
    b.add("dirac_spinor_eigen", r, 1e-12);
  }
  {
    // momentum operator eigen-relation on single-ort modes, exact per mode
    Rng rng = b.rng("ort_momentum_eigen");
    const auto samples = halton_samples(5);
    double r = 0.0;
    for (int i = 0; i < 20; ++i) {
      const Eigen::Vector3d k = rng.wavevector(0.2, 3.0);
      const int a = rng.index(4);
      PlaneWaveField f;
      Eigen::Vector4cd w = Eigen::Vector4cd::Zero();
      w(a) = 1.0;
      f.modes.push_back({make_wave_vector(k, 1.0).omega, k, w});
      for (const auto& p : samples) {
        for (int j = 0; j < 3; ++j) {
          const Eigen::Vector4cd lhs = -iu * f.derivative(j + 1, p.t, p.x);
          r = std::max(r, (lhs - k(j) * f(p.t, p.x)).norm());
        }
      }
    }
    b.add("ort_momentum_eigen", r, 1e-14);
  }
  {
    const BasisQuad q = cartesian_orts();
    double r = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int c = 0; c < 4; ++c) r = std::max(r, std::abs(q.v[a].dot(q.v[c]) - (a == c ? 1.0 : 0.0)));
    b.add("ort_gram", r, 0.0, false);
  }
  return b.rep;
}

// ---------------------------------------------------------------------------
// solutions

SuiteReport suite_solutions(const Config& cfg) {
  SuiteBuilder b("solutions", cfg, 1e-11);
  const double mass = cfg.get_double("mass", 1.0);
  const int n_modes = cfg.get_int("modes.count", 10);
  const auto samples = halton_samples(cfg.get_int("samples.count", 20));

  {
    Rng rng = b.rng("sf_residual");
    double r = 0.0;
    for (int i = 0; i < 10; ++i) {
      const SolutionSpec spec = random_spec(SpecKind::SF, mass, n_modes, rng);
      const double scale = std::max(field_from_spec(spec).activity_scale(), kTiny);
      r = std::max(r, residual_sf(spec, samples) / scale);
    }
    b.add("sf_residual", r, 1e-12);
  }
  {
    // perturbing one mode's frequency by delta must grow the residual by
    // exactly |delta| |amplitude| (2 pi)^{-3/2}
    Rng rng = b.rng("sf_frequency_perturbation");
    const double delta = 1e-3;
    const Eigen::Vector3d k = rng.wavevector(0.5, 1.5);
    const cplx a = rng.complex_in_disk(1.0) + cplx(0.5, 0.0);
    PlaneWaveField f;
    Eigen::Vector4cd w = Eigen::Vector4cd::Zero();
    w(0) = std::pow(2.0 * M_PI, -1.5) * a;
    f.modes.push_back({make_wave_vector(k, mass).omega + delta, k, w});
    const double measured = max_field_norm(sf_residual(f, mass), samples);
    const double expected = delta * std::abs(a) * std::pow(2.0 * M_PI, -1.5);
    b.add("sf_frequency_perturbation", std::abs(measured - expected), 1e-15, false);
  }
  {
    Rng rng = b.rng("dirac_residual");
    double r = 0.0;
    for (int i = 0; i < 10; ++i) {
      const SolutionSpec spec = random_spec(SpecKind::Dirac, mass, n_modes, rng);
      const double scale = std::max(field_from_spec(spec).activity_scale(), kTiny);
      r = std::max(r, residual_dirac(spec, samples) / scale);
    }
    b.add("dirac_residual", r, 1e-12);
  }
  {
    Rng rng = b.rng("dirac_residual_massless");
    double r = 0.0;
    for (int i = 0; i < 10; ++i) {
      const SolutionSpec spec = random_spec(SpecKind::Dirac, 0.0, n_modes, rng);
      const double scale = std::max(field_from_spec(spec).activity_scale(), kTiny);
      r = std::max(r, residual_dirac(spec, samples) / scale);
    }
    b.add("dirac_residual_massless", r, 1e-13);
  }
  {
    // wrong spinor on the e^{-ikx} branch must be detected
    Rng rng = b.rng("dirac_branch_swap_control");
    const Eigen::Vector3d k = rng.wavevector(0.5, 1.5);
    PlaneWaveField f;
    f.modes.push_back({make_wave_vector(k, mass).omega, k,
                       std::pow(2.0 * M_PI, -1.5) * dirac_v_plus(k, mass, 3)});
    const double scale = std::max(f.activity_scale(), kTiny);
    b.add("dirac_branch_swap_control", max_field_norm(dirac_residual(f, mass), samples) / scale,
          1e-3, false, "ge");
  }
  {
    Rng rng = b.rng("genmaxwell_forms");
    double r = 0.0;
    for (int i = 0; i < 10; ++i) {
      const SolutionSpec spec = random_spec(SpecKind::GenMaxwell, 0.0, n_modes, rng);
      const double scale = std::max(field_from_spec(spec).activity_scale(), kTiny);
      r = std::max(r, residual_gen_maxwell(spec, samples).max_residual() / scale);
    }
    b.add("genmaxwell_forms", r, 1e-11);
  }
  {
    // breaking one mode's dispersion must light up all four forms at once
    Rng rng = b.rng("genmaxwell_dispersion_control");
    const SolutionSpec spec = random_spec(SpecKind::GenMaxwell, 0.0, 3, rng);
    PlaneWaveField f = field_from_spec(spec);
    f.modes[0].freq *= 1.1;
    const double scale = std::max(f.activity_scale(), kTiny);
    const auto rep = gen_maxwell_residual_field(f, samples);
    const double weakest =
        std::min({rep.curl_div_form, rep.covariant_form, rep.tensor_form, rep.spin_form});
    b.add("genmaxwell_dispersion_control", weakest / scale, 1e-3, false, "ge");
  }
  {
    Rng rng = b.rng("genmaxwell_source_free");
    std::vector<Mode> modes;
    for (int i = 0; i < 6; ++i) {
      modes.push_back({rng.wavevector(0.3, 2.0), 1 + rng.index(2), rng.complex_in_disk(1.0)});
    }
    const SolutionSpec spec = make_spec(SpecKind::GenMaxwell, 0.0, modes);
    double r = 0.0;
    for (const auto& p : samples) {
      const EMField f = eval_gen_maxwell(spec, p.t, p.x);
      r = std::max(r, std::max(std::abs(f.E0), std::abs(f.H0)));
    }
    b.add("genmaxwell_source_free", r, 1e-15, false);
  }
  {
    Rng rng = b.rng("genmaxwell_transverse");
    const Eigen::Vector3d k = rng.wavevector(0.5, 2.0);
    const SolutionSpec spec = make_spec(SpecKind::GenMaxwell, 0.0, {{k, 1, cplx(0.8, -0.3)}});
    const Eigen::Vector3d khat = k.normalized();
    double r = 0.0;
    for (const auto& p : samples) {
      const EMField f = eval_gen_maxwell(spec, p.t, p.x);
      r = std::max(r, std::abs(f.E.dot(khat)) + std::abs(f.H.dot(khat)));
    }
    const double scale = std::max(field_from_spec(spec).activity_scale(), kTiny);
    b.add("genmaxwell_transverse", r / scale, 1e-13);
  }
  {
    // the charge density carried by the scalar pair equals div E on solutions
    Rng rng = b.rng("genmaxwell_sources_match");
    const SolutionSpec spec = random_spec(SpecKind::GenMaxwell, 0.0, n_modes, rng);
    const PlaneWaveField f = field_from_spec(spec);
    const double scale = std::max(f.activity_scale(), kTiny);
    double r = 0.0;
    for (const auto& p : samples) {
      const GradientSources s = gradient_sources(f, p.t, p.x);
      double div_e = 0.0, div_h = 0.0;
      for (int j = 0; j < 3; ++j) {
        div_e += f.derivative(j + 1, p.t, p.x)(j).real();
        div_h += -f.derivative(j + 1, p.t, p.x)(j).imag();
      }
      r = std::max(r, std::abs(div_e - s.rho_e));
      r = std::max(r, std::abs(div_h - s.rho_mag));
    }
    b.add("genmaxwell_sources_match", r / scale, 1e-12);
  }
  {
    Eigen::Vector4cd e = Eigen::Vector4cd::Zero();
    e(0) = 1.0;
    const Eigen::Matrix4cd t = tensor_E(e);
    double r = std::abs(t(0, 1) - 1.0) + std::abs(t(1, 0) + 1.0) + std::abs(t(2, 3) - iu) +
               std::abs(t(3, 2) + iu);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const bool fixed = (i == 0 && j == 1) || (i == 1 && j == 0) || (i == 2 && j == 3) ||
                           (i == 3 && j == 2);
        if (!fixed) r += std::abs(t(i, j));
      }
    Rng rng = b.rng("tensor_structure");
    for (int i = 0; i < 4; ++i) e(i) = rng.complex_in_disk(1.0);
    const Eigen::Matrix4cd t2 = tensor_E(e);
    r = std::max(r, (t2 + t2.transpose()).norm());
    b.add("tensor_structure", r, 1e-15, false);
  }
  {
    const auto& eps = LeviCivita4::instance();
    int nonzero = 0;
    double r = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d)
          for (int e = 0; e < 4; ++e) {
            if (eps(a, c, d, e) != 0) ++nonzero;
            r = std::max(r, std::abs(static_cast<double>(eps(a, c, d, e) + eps(c, a, d, e))));
            r = std::max(r, std::abs(static_cast<double>(eps(a, c, d, e) + eps(a, c, e, d))));
          }
    r = std::max(r, std::abs(static_cast<double>(nonzero - 24)));
    r = std::max(r, std::abs(static_cast<double>(eps(0, 1, 2, 3) - 1)));
    b.add("levi_civita", r, 0.0, false);
  }
  {
    Rng rng = b.rng("lagrangian_onshell");
    double r = 0.0;
    for (int i = 0; i < 20; ++i) {
      const SolutionSpec spec = random_spec(SpecKind::Dirac, mass, 5, rng);
      const PlaneWaveField f = field_from_spec(spec);
      for (const auto& p : samples) {
        const Eigen::Vector4cd psi = f(p.t, p.x);
        std::array<Eigen::Vector4cd, 4> dpsi;
        for (int mu = 0; mu < 4; ++mu) dpsi[mu] = f.derivative(mu, p.t, p.x);
        const cplx density = lagrangian_density(psi, dpsi, mass);
        double scale = mass * psi.squaredNorm();
        for (int mu = 0; mu < 4; ++mu) scale += psi.norm() * dpsi[mu].norm();
        r = std::max(r, std::abs(density) / std::max(scale, kTiny));
      }
    }
    b.add("lagrangian_onshell", r, 1e-12);
  }
  {
    Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
    psi(0) = 1.0;
    const std::array<Eigen::Vector4cd, 4> dpsi = {Eigen::Vector4cd::Zero(), Eigen::Vector4cd::Zero(),
                                                  Eigen::Vector4cd::Zero(), Eigen::Vector4cd::Zero()};
    const cplx density = lagrangian_density(psi, dpsi, 1.0);
    double r = std::abs(density - cplx(-1.0, 0.0));
    r = std::max(r, std::abs(lagrangian_density(Eigen::Vector4cd::Zero(), dpsi, 1.0)));
    b.add("lagrangian_constant", r, 1e-15, false);
  }
  {
    Rng rng = b.rng("spec_roundtrip");
    const SolutionSpec spec = random_spec(SpecKind::GenMaxwell, 0.0, 7, rng);
    const SolutionSpec back = spec_from_text(spec_to_text(spec));
    double r = (back.kind == spec.kind && back.modes.size() == spec.modes.size())
                   ? std::abs(back.mass - spec.mass)
                   : 1.0;
    if (r == 0.0) {
      for (size_t i = 0; i < spec.modes.size(); ++i) {
        r = std::max(r, (back.modes[i].k - spec.modes[i].k).norm());
        r = std::max(r, std::abs(back.modes[i].amplitude - spec.modes[i].amplitude));
        r = std::max(r, static_cast<double>(std::abs(back.modes[i].branch - spec.modes[i].branch)));
      }
    }
    b.add("spec_roundtrip", r, 0.0, false);
  }
  {
    // frozen rest-frame phase and periodicity
    const SolutionSpec spec = make_spec(SpecKind::SF, 1.0, {{Eigen::Vector3d::Zero(), 1, 1.0}});
    const Eigen::Vector4cd v = eval_sf(spec, M_PI, Eigen::Vector3d::Zero());
    Eigen::Vector4cd expected = Eigen::Vector4cd::Zero();
    expected(0) = std::pow(2.0 * M_PI, -1.5) * std::polar(1.0, -M_PI);
    double r = (v - expected).norm();
    const Eigen::Vector4cd v2 = eval_sf(spec, M_PI + 2.0 * M_PI, Eigen::Vector3d::Zero());
    r = std::max(r, (v2 - v).norm());
    const SolutionSpec empty = make_spec(SpecKind::SF, 1.0, {});
    r = std::max(r, eval_sf(empty, 0.3, {0.1, 0.2, 0.3}).norm());
    b.add("eval_frozen", r, 1e-14, false);
  }
  return b.rep;
}

// ---------------------------------------------------------------------------
// transforms

SuiteReport suite_transforms(const Config& cfg) {
  SuiteBuilder b("transforms", cfg, 1e-10);
  const double mass = cfg.get_double("mass", 1.0);
  const int n_modes = cfg.get_int("modes.count", 5);
  const auto samples = halton_samples(cfg.get_int("samples.count", 20));

  b.add("u_unitarity", rl_unitarity_residual(build_U()), 1e-13);
  {
    const auto u = build_U(), uinv = build_U_inv();
    const auto id = RealLinearOperator::identity(4);
    const double r = std::max(rl_distance(rl_compose(u, uinv), id),
                              rl_distance(rl_compose(uinv, u), id));
    b.add("u_inverse", r, 1e-14);
    b.add("u_adjoint_matches_inverse", rl_distance(rl_adjoint(u), uinv), 1e-15, false);
    cvec e3 = cvec::Zero(4);
    e3(2) = 1.0;  // E3 = 1, everything else 0
    cvec d1 = cvec::Zero(4);
    d1(0) = 1.0;
    b.add("u_frozen_column", (rl_apply(u, e3) - d1).norm(), 1e-15, false);
  }
  {
    Rng rng = b.rng("u_maps_to_dirac");
    double r = 0.0;
    for (int i = 0; i < 20; ++i) {
      const SolutionSpec spec = random_spec(SpecKind::GenMaxwell, 0.0, n_modes, rng);
      const auto res = map_maxwell_to_dirac(spec, samples);
      r = std::max(r, res.dirac_residual / std::max(res.psi.activity_scale(), kTiny));
    }
    b.add("u_maps_to_dirac", r, 1e-10);
  }
  {
    Rng rng = b.rng("u_inv_maps_to_maxwell");
    double r = 0.0;
    for (int i = 0; i < 20; ++i) {
      const SolutionSpec spec = random_spec(SpecKind::Dirac, 0.0, n_modes, rng);
      const PlaneWaveField cal_e = apply_pointwise(build_U_inv(), field_from_spec(spec));
      const auto rep = gen_maxwell_residual_field(cal_e, samples);
      r = std::max(r, rep.max_residual() / std::max(cal_e.activity_scale(), kTiny));
    }
    b.add("u_inv_maps_to_maxwell", r, 1e-10);
  }
  {
    Rng rng = b.rng("u_roundtrip_pointwise");
    const SolutionSpec spec = random_spec(SpecKind::GenMaxwell, 0.0, n_modes, rng);
    const PlaneWaveField f = field_from_spec(spec);
    const PlaneWaveField back = apply_pointwise(build_U_inv(), apply_pointwise(build_U(), f));
    b.add("u_roundtrip_pointwise",
          max_field_distance(f, back, samples) / std::max(f.activity_scale(), kTiny), 1e-13);
  }
  {
    Rng rng = b.rng("map_linearity");
    const SolutionSpec s1 = random_spec(SpecKind::GenMaxwell, 0.0, 4, rng);
    const SolutionSpec s2 = random_spec(SpecKind::GenMaxwell, 0.0, 4, rng);
    const PlaneWaveField f1 = field_from_spec(s1), f2 = field_from_spec(s2);
    const PlaneWaveField lhs = apply_pointwise(build_U(), f1 + f2);
    const PlaneWaveField rhs = apply_pointwise(build_U(), f1) + apply_pointwise(build_U(), f2);
    b.add("map_linearity",
          max_field_distance(lhs, rhs, samples) /
              std::max(lhs.activity_scale(), kTiny),
          1e-13);
  }
  {
    // Eq. (40)-style check: the conjugation-valued gamma set annihilates the
    // electromagnetic packing of every solution
    Rng rng = b.rng("tilde_gamma_equation");
    const auto tilde = gamma_tilde();
    double r = 0.0;
    for (int i = 0; i < 5; ++i) {
      const SolutionSpec spec = random_spec(SpecKind::GenMaxwell, 0.0, n_modes, rng);
      const PlaneWaveField cal_e = field_from_spec(spec);
      PlaneWaveField sum;
      for (int mu = 0; mu < 4; ++mu) {
        sum = sum + apply_pointwise(tilde[mu], derivative_field(cal_e, mu));
      }
      r = std::max(r, max_field_norm(sum, samples) / std::max(cal_e.activity_scale(), kTiny));
    }
    b.add("tilde_gamma_equation", r, 1e-10);
  }
  {
    Rng rng = b.rng("spinorization_pgi_bijection");
    const auto rep = spinorization_pgi_match(6, rng);
    b.add("spinorization_pgi_bijection", rep.is_bijection ? rep.worst_match : 1.0, 1e-13, false);
  }
  {
    Rng rng = b.rng("sallhofer_pgi_bijection");
    const auto rep = sallhofer_pgi_match(6, rng);
    b.add("sallhofer_pgi_bijection", rep.is_bijection ? rep.worst_match : 1.0, 1e-13, false);
  }
  {
    Rng rng = b.rng("sallhofer_columns_solve");
    std::vector<EMPlaneWave> waves;
    for (int i = 0; i < 3; ++i) {
      Eigen::Vector3cd pol;
      for (int j = 0; j < 3; ++j) pol(j) = rng.complex_in_disk(1.0);
      waves.push_back(medium_plane_wave(rng.wavevector(0.4, 1.6), pol, 1.0, 1.0));
    }
    const double scale = std::max(em_activity_scale(waves), kTiny);
    double r = 0.0;
    for (int col = 1; col <= 8; ++col) {
      r = std::max(r, sallhofer_residual(waves, 1.0, 1.0, col, false, samples) / scale);
    }
    b.add("sallhofer_columns_solve", r, 1e-10);
  }
  {
    Rng rng = b.rng("sallhofer_swap");
    const double eps = 1.3, mu = 0.7;
    std::vector<EMPlaneWave> waves;
    for (int i = 0; i < 2; ++i) {
      Eigen::Vector3cd pol;
      for (int j = 0; j < 3; ++j) pol(j) = rng.complex_in_disk(1.0);
      waves.push_back(medium_plane_wave(rng.wavevector(0.4, 1.6), pol, eps, mu));
    }
    const double scale = std::max(em_activity_scale(waves), kTiny);
    b.add("sallhofer_swap_ok", sallhofer_residual(waves, eps, mu, 3, true, samples) / scale, 1e-10);
    b.add("sallhofer_swap_control",
          sallhofer_residual(waves, eps, mu, 3, false, samples) / scale, 1e-3, false, "ge");
    b.add("sallhofer_column1_medium", sallhofer_residual(waves, eps, mu, 1, false, samples) / scale,
          1e-10);
  }
  {
    // the medium-equation residual of column 1 carries the eight Maxwell
    // residual components in its real/imaginary parts
    Rng rng = b.rng("sallhofer_maxwell_split");
    std::vector<EMPlaneWave> junk(2);
    for (EMPlaneWave& w : junk) {
      w.omega = rng.uniform(0.5, 1.5);
      w.k = rng.wavevector(0.4, 1.6);
      for (int j = 0; j < 3; ++j) {
        w.E0(j) = rng.complex_in_disk(1.0);
        w.H0(j) = rng.complex_in_disk(1.0);
      }
    }
    const double eps = 1.2, mu = 0.9;
    double r = 0.0;
    for (const auto& p : samples) {
      const auto direct = maxwell_residuals(eval_em(junk, p.t, p.x), eps, mu);
      const auto from_col = maxwell_residuals_from_column1(junk, eps, mu, p.t, p.x);
      for (int i = 0; i < 8; ++i) r = std::max(r, std::abs(direct[i] - from_col[i]));
    }
    b.add("sallhofer_maxwell_split", r / std::max(em_activity_scale(junk), kTiny), 1e-13);
  }
  {
    Rng rng = b.rng("medium_equivalence");
    MediumProfile medium;
    medium.Z = cfg.get_double("coulomb.Z", 1.0);
    medium.e2 = cfg.get_double("charge_e", 1.0);
    medium.mass = mass;
    medium.omega_tilde = cfg.get_double("omega_tilde", 1.0);
    std::vector<Eigen::Vector3d> pts;
    while (pts.size() < 100) {
      const Eigen::Vector3d x = rng.vec3(-2.0, 2.0);
      if (x.norm() >= 1e-3) pts.push_back(x);
    }
    b.add("medium_equivalence", medium_amplitude_equivalence(medium, pts), 1e-14);
  }
  {
    MediumProfile free_medium;
    free_medium.coulomb = false;
    free_medium.phi0 = 0.0;
    free_medium.mass = mass;
    free_medium.omega_tilde = 2.0;
    const Eigen::Vector3d x(0.3, -0.2, 0.9);
    double r = std::abs(free_medium.eps(x) - (1.0 + mass / 2.0));
    r = std::max(r, std::abs(free_medium.mu(x) - (1.0 - mass / 2.0)));
    MediumProfile massless = free_medium;
    massless.mass = 0.0;
    massless.coulomb = true;
    r = std::max(r, std::abs(massless.eps(x) - massless.mu(x)));
    b.add("medium_limits", r, 1e-15, false);
  }

  if (mass <= 0.0) {
    const char* note = "mass = 0 configured: the extended FW operator symbol degenerates";
    b.skip("v_maps_solutions", 1e-11, note);
    b.skip("v_roundtrip", 1e-13, note);
    b.skip("v_unitary_modewise", 1e-13, note);
    b.skip("v_restframe", 1e-15, note);
    b.skip("fw_intertwining", 1e-11, note);
    b.skip("fw_intertwining_mass_sensitivity", 0.4, note);
  } else {
    {
      Rng rng = b.rng("v_maps_solutions");
      double r = 0.0;
      for (int i = 0; i < 20; ++i) {
        const SolutionSpec sf = random_spec(SpecKind::SF, mass, n_modes, rng);
        const PlaneWaveField lhs = apply_V_field(field_from_spec(sf), mass);
        const PlaneWaveField rhs = field_from_spec(apply_V(sf));
        r = std::max(r,
                     max_field_distance(lhs, rhs, samples) / std::max(rhs.activity_scale(), kTiny));
      }
      b.add("v_maps_solutions", r, 1e-11);
    }
    {
      Rng rng = b.rng("v_roundtrip");
      const SolutionSpec sf = random_spec(SpecKind::SF, mass, n_modes, rng);
      const PlaneWaveField f = field_from_spec(sf);
      const PlaneWaveField back = apply_V_inv_field(apply_V_field(f, mass), mass);
      b.add("v_roundtrip",
            max_field_distance(f, back, samples) / std::max(f.activity_scale(), kTiny), 1e-13);
    }
    {
      Rng rng = b.rng("v_unitary_modewise");
      const SolutionSpec sf = random_spec(SpecKind::SF, mass, n_modes, rng);
      const PlaneWaveField f = field_from_spec(sf);
      const PlaneWaveField mapped = apply_V_field(f, mass);
      auto norm2 = [](const PlaneWaveField& g) {
        double s = 0.0;
        for (const PwMode& m : g.modes) s += m.w.squaredNorm();
        return s;
      };
      const double before = norm2(f);
      b.add("v_unitary_modewise", std::abs(norm2(mapped) - before) / std::max(before, kTiny),
            1e-13);
    }
    {
      const SolutionSpec sf = make_spec(SpecKind::SF, mass, {{Eigen::Vector3d::Zero(), 1, 1.0}});
      const PlaneWaveField mapped = apply_V_field(field_from_spec(sf), mass);
      double r = 0.0;
      for (const auto& p : samples) {
        Eigen::Vector4cd expected = Eigen::Vector4cd::Zero();
        expected(0) = std::pow(2.0 * M_PI, -1.5) * std::polar(1.0, -mass * p.t);
        r = std::max(r, (mapped(p.t, p.x) - expected).norm());
      }
      b.add("v_restframe", r, 1e-15, false);
    }
    {
      Rng rng = b.rng("fw_intertwining");
      b.add("fw_intertwining", check_fw_intertwining(50, mass, rng), 1e-11);
    }
    {
      // perturbing the mass on one side only must scale the defect linearly
      Rng rng = b.rng("fw_intertwining_mass_sensitivity");
      PlaneWaveField f;
      Eigen::Vector4cd w;
      for (int i = 0; i < 4; ++i) w(i) = rng.complex_in_disk(1.0);
      f.modes.push_back({rng.uniform(-2.0, 2.0), rng.wavevector(0.4, 1.5), w});
      const double delta = 1e-4;
      auto defect = [&](double d) {
        return max_field_distance(fw_intertwining_lhs(f, mass + d), fw_intertwining_rhs(f, mass), samples);
      };
      const double ratio = defect(2.0 * delta) / std::max(defect(delta), kTiny);
      b.add("fw_intertwining_mass_sensitivity", std::abs(ratio - 2.0), 0.4, false);
    }
  }
  return b.rep;
}

// ---------------------------------------------------------------------------
// evolve

FieldGrid random_grid(int dims, int n, double box, int components, Rng& rng) {
  FieldGrid g = make_grid(dims, n, box, components);
  for (cplx& v : g.values) v = rng.complex_in_disk(1.0);
  return g;
}

SuiteReport suite_evolve(const Config& cfg) {
  SuiteBuilder b("evolve", cfg, 1e-10);
  const double mass = cfg.get_double("mass", 1.0);
  const double t_final = cfg.get_double("time.t", 1.0);
  const int dims = cfg.get_int("grid.dims", 3);
  const int n = cfg.get_int("grid.n", dims == 3 ? 32 : 1024);
  const double box = cfg.get_double("grid.box", 2.0 * M_PI);
  const int n_modes = cfg.get_int("modes.count", 5);

  {
    Rng rng = b.rng("grid_roundtrip");
    const FieldGrid g = random_grid(dims, n, box, 2, rng);
    FieldGrid h = g;
    fft_forward(h);
    fft_inverse(h);
    b.add("grid_roundtrip", grid_max_diff(g, h) / std::max(grid_max_abs(g), kTiny), 1e-12);
  }
  {
    Rng rng = b.rng("sf_norm_conservation");
    const FieldGrid g = random_grid(dims, n, box, 3, rng);
    const double before = grid_norm2(g);
    const double after = grid_norm2(evolve_sf_grid(g, mass, t_final));
    b.add("sf_norm_conservation", std::abs(after - before) / std::max(before, kTiny), 1e-11);
  }
  {
    Rng rng = b.rng("sf_semigroup");
    const FieldGrid g = random_grid(dims, n, box, 2, rng);
    const FieldGrid two_step = evolve_sf_grid(evolve_sf_grid(g, mass, 0.4), mass, 0.6);
    const FieldGrid one_step = evolve_sf_grid(g, mass, 1.0);
    b.add("sf_semigroup", grid_max_diff(two_step, one_step) / std::max(grid_max_abs(g), kTiny),
          1e-11);
  }
  {
    // components of the N-component equation evolve independently
    Rng rng = b.rng("sf_component_independence");
    const FieldGrid g = random_grid(dims, n, box, 3, rng);
    const FieldGrid whole = evolve_sf_grid(g, mass, t_final);
    double r = 0.0;
    for (int c = 0; c < 3; ++c) {
      FieldGrid single = make_grid(dims, n, box, 1);
      const std::size_t npts = g.points();
      for (std::size_t p = 0; p < npts; ++p) {
        single.values[p] = g.values[static_cast<std::size_t>(c) * npts + p];
      }
      const FieldGrid evolved = evolve_sf_grid(single, mass, t_final);
      for (std::size_t p = 0; p < npts; ++p) {
        r = std::max(r,
                     std::abs(evolved.values[p] - whole.values[static_cast<std::size_t>(c) * npts + p]));
      }
    }
    b.add("sf_component_independence", r, 1e-13);
  }
  {
    Rng rng = b.rng("dirac_norm_conservation");
    const FieldGrid g = random_grid(dims, n, box, 4, rng);
    const double before = grid_norm2(g);
    b.add("dirac_norm_conservation",
          std::abs(grid_norm2(evolve_dirac_grid(g, mass, t_final)) - before) /
              std::max(before, kTiny),
          1e-11);
  }
  {
    Rng rng = b.rng("gm_norm_conservation");
    const FieldGrid g = random_grid(dims, n, box, 4, rng);
    const double before = grid_norm2(g);
    b.add("gm_norm_conservation",
          std::abs(grid_norm2(evolve_gen_maxwell_grid(g, t_final)) - before) /
              std::max(before, kTiny),
          1e-11);
  }
  {
    Rng rng = b.rng("sf_grid_vs_analytic");
    const SolutionSpec spec = random_lattice_spec(SpecKind::SF, mass, dims, n, box, n_modes, rng);
    const PlaneWaveField f = field_from_spec(spec);
    const FieldGrid start = grid_from_field(f, dims, n, box, 0.0);
    const FieldGrid evolved = evolve_sf_grid(start, mass, t_final);
    const FieldGrid expected = grid_from_field(f, dims, n, box, t_final);
    b.add("sf_grid_vs_analytic",
          grid_max_diff(evolved, expected) / std::max(grid_max_abs(expected), kTiny), 1e-10);
  }
  {
    Rng rng = b.rng("dirac_grid_vs_analytic");
    const SolutionSpec spec = random_lattice_spec(SpecKind::Dirac, mass, dims, n, box, n_modes, rng);
    const PlaneWaveField f = field_from_spec(spec);
    const FieldGrid start = grid_from_field(f, dims, n, box, 0.0);
    const FieldGrid evolved = evolve_dirac_grid(start, mass, t_final);
    const FieldGrid expected = grid_from_field(f, dims, n, box, t_final);
    b.add("dirac_grid_vs_analytic",
          grid_max_diff(evolved, expected) / std::max(grid_max_abs(expected), kTiny), 1e-10);
  }
  {
    Rng rng = b.rng("gm_grid_vs_analytic");
    const SolutionSpec spec =
        random_lattice_spec(SpecKind::GenMaxwell, 0.0, dims, n, box, n_modes, rng);
    const PlaneWaveField f = field_from_spec(spec);
    const FieldGrid start = grid_from_field(f, dims, n, box, 0.0);
    const FieldGrid evolved = evolve_gen_maxwell_grid(start, t_final);
    const FieldGrid expected = grid_from_field(f, dims, n, box, t_final);
    b.add("gm_grid_vs_analytic",
          grid_max_diff(evolved, expected) / std::max(grid_max_abs(expected), kTiny), 1e-10);
  }
  {
    // the conjugation route aliases the Nyquist bin, so the comparison runs
    // on Nyquist-free data, where the two realizations must agree
    Rng rng = b.rng("gm_u_route_vs_direct");
    const FieldGrid g = zero_nyquist(random_grid(dims, n, box, 4, rng));
    const FieldGrid via_u = evolve_gen_maxwell_via_u(g, t_final);
    const FieldGrid direct = evolve_gen_maxwell_grid(g, t_final);
    b.add("gm_u_route_vs_direct", grid_max_diff(via_u, direct) / std::max(grid_max_abs(g), kTiny),
          1e-11);
  }
  {
    // divergence-free data with no scalar pair stays source-free
    Rng rng = b.rng("gm_source_free_invariant");
    FieldGrid g = random_grid(dims, n, box, 4, rng);
    fft_forward(g);
    const std::size_t npts = g.points();
    const int nz = (dims == 1) ? 1 : n;
    for (int iz = 0; iz < nz; ++iz)
      for (int iy = 0; iy < nz; ++iy)
        for (int ix = 0; ix < n; ++ix) {
          Eigen::Vector3d k(lattice_wavenumber(ix, n, box), 0.0, 0.0);
          if (dims == 3) {
            k.y() = lattice_wavenumber(iy, n, box);
            k.z() = lattice_wavenumber(iz, n, box);
          }
          Eigen::Vector3cd v(g.at(0, ix, iy, iz), g.at(1, ix, iy, iz), g.at(2, ix, iy, iz));
          if (k.squaredNorm() > 0.0) {
            const Eigen::Vector3d khat = k.normalized();
            v -= khat.cast<cplx>() * khat.cast<cplx>().dot(v);
          } else {
            v.setZero();
          }
          for (int c = 0; c < 3; ++c) g.at(c, ix, iy, iz) = v(c);
          g.at(3, ix, iy, iz) = 0.0;
        }
    fft_inverse(g);
    const FieldGrid evolved = evolve_gen_maxwell_grid(g, t_final);
    double r = 0.0;
    for (std::size_t p = 0; p < npts; ++p) r = std::max(r, std::abs(evolved.values[3 * npts + p]));
    b.add("gm_source_free_invariant", r / std::max(grid_max_abs(g), kTiny), 1e-11);
  }
  // probe step resolving the fastest lattice mode, so the second-order
  // window holds for any configured grid
  const double omega_max = std::sqrt(static_cast<double>(dims) * std::pow(M_PI * n / box, 2.0) +
                                     mass * mass);
  const double fd_h = 0.05 / omega_max;
  {
    Rng rng = b.rng("fd_ratio_sf");
    const FieldGrid g = evolve_sf_grid(random_grid(dims, n, box, 1, rng), mass, 0.7);
    const FieldGrid gen = apply_sf_generator(g, mass);
    auto err = [&](double h) {
      const FieldGrid fp = evolve_sf_grid(g, mass, h);
      const FieldGrid fm = evolve_sf_grid(g, mass, -h);
      double worst = 0.0;
      for (std::size_t i = 0; i < g.values.size(); ++i) {
        worst = std::max(worst,
                         std::abs((fp.values[i] - fm.values[i]) / (2.0 * h) - gen.values[i]));
      }
      return worst;
    };
    const double ratio = err(fd_h) / std::max(err(0.5 * fd_h), kTiny);
    b.add("fd_ratio_sf", std::abs(ratio - 4.0), 0.5, false);
  }
  {
    Rng rng = b.rng("fd_ratio_dirac");
    const FieldGrid g = evolve_dirac_grid(random_grid(dims, n, box, 4, rng), mass, 0.7);
    const FieldGrid gen = apply_dirac_generator(g, mass);
    auto err = [&](double h) {
      const FieldGrid fp = evolve_dirac_grid(g, mass, h);
      const FieldGrid fm = evolve_dirac_grid(g, mass, -h);
      double worst = 0.0;
      for (std::size_t i = 0; i < g.values.size(); ++i) {
        worst = std::max(worst,
                         std::abs((fp.values[i] - fm.values[i]) / (2.0 * h) - gen.values[i]));
      }
      return worst;
    };
    const double ratio = err(fd_h) / std::max(err(0.5 * fd_h), kTiny);
    b.add("fd_ratio_dirac", std::abs(ratio - 4.0), 0.5, false);
  }
  {
    Rng rng = b.rng("diagram_u");
    const FieldGrid g = zero_nyquist(random_grid(dims, n, box, 4, rng));
    b.add("diagram_u", commuting_diagram_u(g, t_final) / std::max(grid_max_abs(g), kTiny), 1e-10);
  }
  {
    Rng rng = b.rng("diagram_v");
    const FieldGrid g = random_grid(dims, n, box, 4, rng);
    b.add("diagram_v", commuting_diagram_v(g, mass, t_final) / std::max(grid_max_abs(g), kTiny),
          1e-10);
  }
  {
    Rng rng = b.rng("dump_roundtrip");
    const FieldGrid g = random_grid(1, 64, box, 3, rng);
    const auto path = std::filesystem::temp_directory_path() / "relwave_dump_check.bin";
    write_dump(g, 0.75, path.string());
    double t_back = 0.0;
    const FieldGrid h = read_dump(path.string(), &t_back);
    std::filesystem::remove(path);
    double r = grid_max_diff(g, h);
    r = std::max(r, std::abs(t_back - 0.75));
    r = std::max(r, static_cast<double>(std::abs(h.components - g.components)));
    b.add("dump_roundtrip", r, 0.0, false);
  }
  return b.rep;
}

}  // namespace

SuiteReport run_suite(const std::string& name, const Config& cfg) {
  if (name == "algebra") return suite_algebra(cfg);
  if (name == "modes") return suite_modes(cfg);
  if (name == "solutions") return suite_solutions(cfg);
  if (name == "transforms") return suite_transforms(cfg);
  if (name == "evolve") return suite_evolve(cfg);
  if (name == "all") {
    SuiteReport all;
    all.suite = "all";
    all.seed = cfg.seed();
    all.tolerance = cfg.get_double("tol.all", 0.0);
    all.overall_pass = true;
    for (const std::string& sub : suite_names()) {
      if (sub == "all") continue;
      SuiteReport rep = run_suite(sub, cfg);
      for (Check& c : rep.checks) {
        c.name = sub + "." + c.name;
        all.checks.push_back(std::move(c));
      }
      all.overall_pass = all.overall_pass && rep.overall_pass;
    }
    return all;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

namespace {

bool spec_on_lattice(const SolutionSpec& spec, int dims, int n, double box) {
  for (const Mode& m : spec.modes) {
    for (int j = 0; j < 3; ++j) {
      const double steps = m.k(j) * box / (2.0 * M_PI);
      if (std::abs(steps - std::round(steps)) > 1e-9) return false;
      if (std::abs(steps) > n / 2.0) return false;
      if (dims == 1 && j > 0 && m.k(j) != 0.0) return false;
    }
  }
  return true;
}

}  // namespace

int run_evolution(const Config& cfg, const std::string& out_path, SuiteReport* report_out) {
  const int dims = cfg.get_int("grid.dims", 1);
  const int n = cfg.get_int("grid.n", dims == 3 ? 32 : 1024);
  const double box = cfg.get_double("grid.box", 2.0 * M_PI);
  const double t_final = cfg.get_double("time.t", 1.0);
  const int n_modes = cfg.get_int("modes.count", 5);

  // initial data: a spec file when given, a seeded lattice spec otherwise
  SolutionSpec spec;
  if (cfg.has("spec.file")) {
    std::ifstream in(cfg.get("spec.file", ""));
    if (!in) throw std::runtime_error("run_evolution: cannot open spec file");
    std::ostringstream text;
    text << in.rdbuf();
    spec = spec_from_text(text.str());
  } else {
    const std::string kind_name = cfg.get("kind", "sf");
    SpecKind kind;
    if (kind_name == "sf") kind = SpecKind::SF;
    else if (kind_name == "dirac") kind = SpecKind::Dirac;
    else if (kind_name == "genmaxwell") kind = SpecKind::GenMaxwell;
    else throw std::invalid_argument("run_evolution: unknown kind " + kind_name);
    const double mass = (kind == SpecKind::GenMaxwell) ? 0.0 : cfg.get_double("mass", 1.0);
    Rng rng = sub_rng(cfg.seed(), "evolution." + kind_name);
    spec = random_lattice_spec(kind, mass, dims, n, box, n_modes, rng);
  }
  const double mass = spec.mass;

  SuiteReport rep;
  rep.suite = "evolution";
  rep.seed = cfg.seed();
  rep.tolerance = 1e-10;
  rep.overall_pass = true;

  const PlaneWaveField f = field_from_spec(spec);
  const FieldGrid start = grid_from_field(f, dims, n, box, 0.0);

  FieldGrid evolved = start;
  switch (spec.kind) {
    case SpecKind::SF: evolved = evolve_sf_grid(start, mass, t_final); break;
    case SpecKind::Dirac: evolved = evolve_dirac_grid(start, mass, t_final); break;
    case SpecKind::GenMaxwell: evolved = evolve_gen_maxwell_grid(start, t_final); break;
  }

  auto add = [&](const std::string& name, double residual, double tol) {
    Check c;
    c.name = name;
    c.max_residual = residual;
    c.tolerance = tol;
    c.pass = residual <= tol;
    rep.overall_pass = rep.overall_pass && c.pass;
    rep.checks.push_back(std::move(c));
  };

  const double before = grid_norm2(start);
  add("evolution_norm", std::abs(grid_norm2(evolved) - before) / std::max(before, kTiny), 1e-11);
  if (spec_on_lattice(spec, dims, n, box)) {
    add("evolution_vs_analytic",
        grid_max_diff(evolved, grid_from_field(f, dims, n, box, t_final)) /
            std::max(grid_max_abs(evolved), kTiny),
        1e-10);
  } else {
    Check c;
    c.name = "evolution_vs_analytic";
    c.tolerance = 1e-10;
    c.pass = true;
    c.skipped = true;
    c.note = "spec modes are not lattice-aligned; periodic evolution differs from the free field";
    rep.checks.push_back(std::move(c));
  }
  if (cfg.get_int("check.diagrams", 0) != 0) {
    add("u_diagram", commuting_diagram_u(start, t_final) / std::max(grid_max_abs(start), kTiny),
        1e-10);
    if (mass > 0.0) {
      add("v_diagram", commuting_diagram_v(start, mass, t_final) / std::max(grid_max_abs(start), kTiny),
          1e-10);
    }
  }

  try {
    write_dump(evolved, t_final, out_path);
  } catch (const std::exception&) {
    if (report_out) *report_out = rep;
    return 3;
  }
  if (report_out) *report_out = rep;
  return rep.overall_pass ? 0 : 1;
}

}  // namespace relwave
