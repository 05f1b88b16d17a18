#include "relwave/solutions.hpp"

#include "relwave/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace relwave {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double sf_prefactor() { return std::pow(kTwoPi, -1.5); }

double gm_prefactor(double omega) { return std::sqrt(2.0 * omega / std::pow(kTwoPi, 3.0)); }

}  // namespace

const char* to_string(SpecKind k) {
  switch (k) {
    case SpecKind::SF: return "SF";
    case SpecKind::Dirac: return "DIRAC";
    case SpecKind::GenMaxwell: return "GENMAXWELL";
  }
  return "?";
}

SolutionSpec make_spec(SpecKind kind, double mass, std::vector<Mode> modes) {
  if (!std::isfinite(mass) || mass < 0.0) {
    throw std::invalid_argument("SolutionSpec: mass must be finite and >= 0");
  }
  if (kind == SpecKind::GenMaxwell && mass != 0.0) {
    throw std::invalid_argument("SolutionSpec: the generalized Maxwell system is massless");
  }
  for (const Mode& m : modes) {
    if (m.branch < 1 || m.branch > 4) {
      throw std::invalid_argument("SolutionSpec: branch label out of range");
    }
    if (!m.k.allFinite() || !std::isfinite(m.amplitude.real()) || !std::isfinite(m.amplitude.imag())) {
      throw std::invalid_argument("SolutionSpec: non-finite mode");
    }
    make_wave_vector(m.k, mass);  // rejects the massless zero mode
  }
  return {kind, mass, std::move(modes)};
}

SolutionSpec random_spec(SpecKind kind, double mass, int n_modes, Rng& rng) {
  std::vector<Mode> modes;
  modes.reserve(static_cast<size_t>(n_modes));
  for (int i = 0; i < n_modes; ++i) {
    Mode m;
    m.k = rng.wavevector(0.3, 2.0);
    m.branch = 1 + rng.index(4);
    m.amplitude = rng.complex_in_disk(1.0) + cplx(0.25, 0.25);
    modes.push_back(m);
  }
  return make_spec(kind, mass, std::move(modes));
}

std::vector<SpacetimePoint> halton_samples(int count, double scale) {
  const int bases[4] = {2, 3, 5, 7};
  auto radical_inverse = [](int base, int index) {
    double f = 1.0, r = 0.0;
    while (index > 0) {
      f /= base;
      r += f * (index % base);
      index /= base;
    }
    return r;
  };
  std::vector<SpacetimePoint> pts;
  pts.reserve(static_cast<size_t>(count));
  for (int i = 1; i <= count; ++i) {
    SpacetimePoint p;
    p.t = scale * radical_inverse(bases[0], i);
    p.x = {scale * radical_inverse(bases[1], i), scale * radical_inverse(bases[2], i),
           scale * radical_inverse(bases[3], i)};
    pts.push_back(p);
  }
  return pts;
}

Eigen::Vector4cd PlaneWaveField::operator()(double t, const Eigen::Vector3d& x) const {
  Eigen::Vector4cd out = Eigen::Vector4cd::Zero();
  for (const PwMode& m : modes) {
    const double theta = m.freq * t - m.k.dot(x);
    out += m.w * cplx(std::cos(theta), -std::sin(theta));
  }
  return out;
}

Eigen::Vector4cd PlaneWaveField::derivative(int mu, double t, const Eigen::Vector3d& x) const {
  Eigen::Vector4cd out = Eigen::Vector4cd::Zero();
  for (const PwMode& m : modes) {
    const double theta = m.freq * t - m.k.dot(x);
    const cplx phase(std::cos(theta), -std::sin(theta));
    const cplx factor = (mu == 0) ? -iu * m.freq : iu * m.k(mu - 1);
    out += m.w * (factor * phase);
  }
  return out;
}

double PlaneWaveField::activity_scale() const {
  double s = 0.0;
  for (const PwMode& m : modes) {
    s += m.w.norm() * (1.0 + std::abs(m.freq) + m.k.norm());
  }
  return s;
}

PlaneWaveField operator+(const PlaneWaveField& a, const PlaneWaveField& b) {
  PlaneWaveField out = a;
  out.modes.insert(out.modes.end(), b.modes.begin(), b.modes.end());
  return out;
}

double max_field_norm(const PlaneWaveField& f, std::span<const SpacetimePoint> samples) {
  double worst = 0.0;
  for (const SpacetimePoint& p : samples) {
    worst = std::max(worst, f(p.t, p.x).norm());
  }
  return worst;
}

double max_field_distance(const PlaneWaveField& a, const PlaneWaveField& b,
                          std::span<const SpacetimePoint> samples) {
  double worst = 0.0;
  for (const SpacetimePoint& p : samples) {
    worst = std::max(worst, (a(p.t, p.x) - b(p.t, p.x)).norm());
  }
  return worst;
}

PlaneWaveField apply_pointwise(const RealLinearOperator& op, const PlaneWaveField& f) {
  if (op.dim() != 4) {
    throw std::invalid_argument("apply_pointwise: operator must be 4x4");
  }
  const bool has_linear = !op.A.isZero(0.0);
  const bool has_antilinear = !op.B.isZero(0.0);
  PlaneWaveField out;
  out.modes.reserve(f.modes.size() * ((has_linear ? 1 : 0) + (has_antilinear ? 1 : 0)));
  for (const PwMode& m : f.modes) {
    if (has_linear) {
      out.modes.push_back({m.freq, m.k, op.A * m.w});
    }
    if (has_antilinear) {
      out.modes.push_back({-m.freq, -m.k, op.B * m.w.conjugate()});
    }
  }
  return out;
}

PlaneWaveField derivative_field(const PlaneWaveField& f, int mu) {
  PlaneWaveField out;
  out.modes.reserve(f.modes.size());
  for (const PwMode& m : f.modes) {
    const cplx factor = (mu == 0) ? -iu * m.freq : iu * m.k(mu - 1);
    out.modes.push_back({m.freq, m.k, factor * m.w});
  }
  return out;
}

PlaneWaveField field_from_spec(const SolutionSpec& spec) {
  PlaneWaveField f;
  f.modes.reserve(spec.modes.size());
  for (const Mode& m : spec.modes) {
    const WaveVector wv = make_wave_vector(m.k, spec.mass);
    switch (spec.kind) {
      case SpecKind::SF: {
        Eigen::Vector4cd w = Eigen::Vector4cd::Zero();
        w(m.branch - 1) = sf_prefactor() * m.amplitude;
        f.modes.push_back({wv.omega, m.k, w});
        break;
      }
      case SpecKind::Dirac: {
        if (m.branch <= 2) {
          const Eigen::Vector4cd v = dirac_v_minus(m.k, spec.mass, m.branch);
          f.modes.push_back({wv.omega, m.k, sf_prefactor() * m.amplitude * v});
        } else {
          const Eigen::Vector4cd v = dirac_v_plus(m.k, spec.mass, m.branch);
          f.modes.push_back({-wv.omega, -m.k, sf_prefactor() * std::conj(m.amplitude) * v});
        }
        break;
      }
      case SpecKind::GenMaxwell: {
        const BasisQuad q = helicity_basis(wv);
        const Eigen::Vector4cd e1 = q.v[0];
        const Eigen::Vector4cd e34 = q.v[2] + q.v[3];
        const double pref = gm_prefactor(wv.omega);
        switch (m.branch) {
          case 1: f.modes.push_back({wv.omega, m.k, pref * m.amplitude * e1}); break;
          case 2: f.modes.push_back({-wv.omega, -m.k, pref * std::conj(m.amplitude) * e1}); break;
          case 3: f.modes.push_back({wv.omega, m.k, pref * m.amplitude * e34}); break;
          case 4: f.modes.push_back({-wv.omega, -m.k, pref * std::conj(m.amplitude) * e34}); break;
        }
        break;
      }
    }
  }
  return f;
}

Eigen::Vector4cd eval_sf(const SolutionSpec& spec, double t, const Eigen::Vector3d& x) {
  return field_from_spec(spec)(t, x);
}

Eigen::Vector4cd eval_dirac(const SolutionSpec& spec, double t, const Eigen::Vector3d& x) {
  return field_from_spec(spec)(t, x);
}

Eigen::Vector4cd eval_cal_e(const SolutionSpec& spec, double t, const Eigen::Vector3d& x) {
  return field_from_spec(spec)(t, x);
}

Eigen::Vector4cd pack_em(const EMField& f) {
  Eigen::Vector4cd c;
  c << cplx(f.E.x(), -f.H.x()), cplx(f.E.y(), -f.H.y()), cplx(f.E.z(), -f.H.z()),
      cplx(f.E0, -f.H0);
  return c;
}

EMField unpack_em(const Eigen::Vector4cd& cal_e) {
  EMField f;
  f.E = {cal_e(0).real(), cal_e(1).real(), cal_e(2).real()};
  f.H = {-cal_e(0).imag(), -cal_e(1).imag(), -cal_e(2).imag()};
  f.E0 = cal_e(3).real();
  f.H0 = -cal_e(3).imag();
  return f;
}

EMField eval_gen_maxwell(const SolutionSpec& spec, double t, const Eigen::Vector3d& x) {
  if (spec.kind != SpecKind::GenMaxwell) {
    throw std::invalid_argument("eval_gen_maxwell: wrong spec kind");
  }
  return unpack_em(eval_cal_e(spec, t, x));
}

PlaneWaveField sf_residual(const PlaneWaveField& f, double mass) {
  PlaneWaveField out;
  out.modes.reserve(f.modes.size());
  for (const PwMode& m : f.modes) {
    const double omega = std::sqrt(m.k.squaredNorm() + mass * mass);
    out.modes.push_back({m.freq, m.k, (m.freq - omega) * m.w});
  }
  return out;
}

PlaneWaveField dirac_residual(const PlaneWaveField& f, double mass) {
  PlaneWaveField out;
  out.modes.reserve(f.modes.size());
  for (const PwMode& m : f.modes) {
    const cmat h = dirac_hamiltonian(m.k, mass);
    out.modes.push_back({m.freq, m.k, m.freq * m.w - h * m.w});
  }
  return out;
}

double residual_sf(const SolutionSpec& spec, std::span<const SpacetimePoint> samples) {
  return max_field_norm(sf_residual(field_from_spec(spec), spec.mass), samples);
}

double residual_dirac(const SolutionSpec& spec, std::span<const SpacetimePoint> samples) {
  return max_field_norm(dirac_residual(field_from_spec(spec), spec.mass), samples);
}

double GenMaxwellResidualReport::max_residual() const {
  return std::max({curl_div_form, covariant_form, tensor_form, spin_form});
}

namespace {

// component index of cal_e carrying the 4-vector slot mu (scalar sits last)
int slot(int mu) { return mu == 0 ? 3 : mu - 1; }

double curl_div_residual_at(const Eigen::Vector4cd& /*val*/,
                            const std::array<Eigen::Vector4cd, 4>& d) {
  // real fields: E = Re(cal_e), H = -Im(cal_e)
  auto dE = [&](int mu, int j) { return d[mu](j).real(); };
  auto dH = [&](int mu, int j) { return -d[mu](j).imag(); };
  auto dE0 = [&](int mu) { return d[mu](3).real(); };
  auto dH0 = [&](int mu) { return -d[mu](3).imag(); };

  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, l = (i + 2) % 3;
    const double curl_h = dH(j + 1, l) - dH(l + 1, j);
    const double curl_e = dE(j + 1, l) - dE(l + 1, j);
    worst = std::max(worst, std::abs(dE(0, i) - curl_h + dE0(i + 1)));
    worst = std::max(worst, std::abs(dH(0, i) + curl_e + dH0(i + 1)));
  }
  const double div_e = dE(1, 0) + dE(2, 1) + dE(3, 2);
  const double div_h = dH(1, 0) + dH(2, 1) + dH(3, 2);
  worst = std::max(worst, std::abs(div_e + dE0(0)));
  worst = std::max(worst, std::abs(div_h + dH0(0)));
  return worst;
}

double covariant_residual_at(const Eigen::Vector4cd& /*val*/,
                             const std::array<Eigen::Vector4cd, 4>& d) {
  const auto& eps = LeviCivita4::instance();
  const double sign[4] = {1.0, -1.0, -1.0, -1.0};  // metric diag
  // lowered field derivative: d_mu cal_e_nu
  auto d_lo = [&](int mu, int nu) { return sign[nu] * d[mu](slot(nu)); };
  // raised derivative of raised field: d^rho cal_e^sigma
  auto d_hi = [&](int rho, int s) { return sign[rho] * d[rho](slot(s)); };

  double worst = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = mu + 1; nu < 4; ++nu) {
      cplx r = d_lo(mu, nu) - d_lo(nu, mu);
      for (int rho = 0; rho < 4; ++rho) {
        for (int s = 0; s < 4; ++s) {
          const int e = eps(mu, nu, rho, s);
          if (e != 0) r -= iu * static_cast<double>(e) * d_hi(rho, s);
        }
      }
      worst = std::max(worst, std::abs(r));
    }
  }
  const cplx div = d[0](3) + d[1](0) + d[2](1) + d[3](2);
  return std::max(worst, std::abs(div));
}

double tensor_residual_at(const Eigen::Vector4cd& /*val*/,
                          const std::array<Eigen::Vector4cd, 4>& d) {
  const double sign[4] = {1.0, -1.0, -1.0, -1.0};
  std::array<Eigen::Matrix4cd, 4> dT;
  for (int mu = 0; mu < 4; ++mu) dT[mu] = tensor_E(d[mu]);
  double worst = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    cplx r = sign[mu] * d[mu](3);  // d^mu cal_e^0
    for (int nu = 0; nu < 4; ++nu) r += dT[nu](mu, nu);
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

double spin_residual_at(const Eigen::Vector4cd& /*val*/, const std::array<Eigen::Vector4cd, 4>& d,
                        const std::array<cmat, 3>& spin) {
  Eigen::Vector3cd vec_part;
  for (int i = 0; i < 3; ++i) vec_part(i) = iu * d[0](i) + iu * d[i + 1](3);
  for (int j = 0; j < 3; ++j) {
    Eigen::Vector3cd dj;
    dj << d[j + 1](0), d[j + 1](1), d[j + 1](2);
    vec_part += spin[j] * (-iu * dj);  // S_j p_j, p_j = -i d_j
  }
  const cplx div = d[0](3) + d[1](0) + d[2](1) + d[3](2);
  return std::max(vec_part.cwiseAbs().maxCoeff(), std::abs(div));
}

}  // namespace

GenMaxwellResidualReport gen_maxwell_residual_field(const PlaneWaveField& cal_e,
                                                    std::span<const SpacetimePoint> samples) {
  const auto spin = spin1_generators();
  GenMaxwellResidualReport rep;
  for (const SpacetimePoint& p : samples) {
    const Eigen::Vector4cd val = cal_e(p.t, p.x);
    std::array<Eigen::Vector4cd, 4> d;
    for (int mu = 0; mu < 4; ++mu) d[mu] = cal_e.derivative(mu, p.t, p.x);
    rep.curl_div_form = std::max(rep.curl_div_form, curl_div_residual_at(val, d));
    rep.covariant_form = std::max(rep.covariant_form, covariant_residual_at(val, d));
    rep.tensor_form = std::max(rep.tensor_form, tensor_residual_at(val, d));
    rep.spin_form = std::max(rep.spin_form, spin_residual_at(val, d, spin));
  }
  return rep;
}

GenMaxwellResidualReport residual_gen_maxwell(const SolutionSpec& spec,
                                              std::span<const SpacetimePoint> samples) {
  if (spec.kind != SpecKind::GenMaxwell) {
    throw std::invalid_argument("residual_gen_maxwell: wrong spec kind");
  }
  return gen_maxwell_residual_field(field_from_spec(spec), samples);
}

GradientSources gradient_sources(const PlaneWaveField& cal_e, double t, const Eigen::Vector3d& x) {
  GradientSources s;
  std::array<Eigen::Vector4cd, 4> d;
  for (int mu = 0; mu < 4; ++mu) d[mu] = cal_e.derivative(mu, t, x);
  for (int j = 0; j < 3; ++j) {
    s.j_e(j) = -d[j + 1](3).real();
    s.j_mag(j) = d[j + 1](3).imag();
  }
  s.rho_e = -d[0](3).real();
  s.rho_mag = d[0](3).imag();
  return s;
}

const LeviCivita4& LeviCivita4::instance() {
  static const LeviCivita4 eps;
  return eps;
}

LeviCivita4::LeviCivita4() {
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          const int idx[4] = {a, b, c, d};
          int sign = 1;
          bool repeat = false;
          int perm[4] = {idx[0], idx[1], idx[2], idx[3]};
          for (int i = 0; i < 4 && !repeat; ++i)
            for (int j = i + 1; j < 4; ++j) {
              if (perm[i] == perm[j]) repeat = true;
              if (perm[i] > perm[j]) {
                std::swap(perm[i], perm[j]);
                sign = -sign;
              }
            }
          eps_[((a * 4 + b) * 4 + c) * 4 + d] = repeat ? 0 : sign;
        }
}

Eigen::Matrix4cd tensor_E(const Eigen::Vector4cd& cal_e) {
  Eigen::Matrix4cd t = Eigen::Matrix4cd::Zero();
  for (int j = 0; j < 3; ++j) {
    t(0, j + 1) = cal_e(j);
    t(j + 1, 0) = -cal_e(j);
  }
  t(1, 2) = iu * cal_e(2);
  t(2, 1) = -iu * cal_e(2);
  t(1, 3) = -iu * cal_e(1);
  t(3, 1) = iu * cal_e(1);
  t(2, 3) = iu * cal_e(0);
  t(3, 2) = -iu * cal_e(0);
  return t;
}

cplx lagrangian_density(const Eigen::Vector4cd& psi, const std::array<Eigen::Vector4cd, 4>& dpsi,
                        double mass, const std::optional<std::array<double, 4>>& A,
                        double charge_e) {
  static const GammaSet gs = gamma_standard();
  const Eigen::RowVector4cd bar = psi.adjoint() * gs.gamma[0];
  cplx kinetic = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    const Eigen::RowVector4cd dbar = dpsi[mu].adjoint() * gs.gamma[0];
    kinetic += (bar * (gs.gamma[mu] * dpsi[mu]))(0);
    kinetic -= (dbar * (gs.gamma[mu] * psi))(0);
  }
  cplx density = 0.5 * iu * kinetic - mass * (bar * psi)(0);
  if (A) {
    for (int mu = 0; mu < 4; ++mu) {
      density += charge_e * (bar * (gs.gamma[mu] * psi))(0) * (*A)[mu];
    }
  }
  return density;
}

std::string spec_to_text(const SolutionSpec& spec) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof(line), "mass %.17g\n", spec.mass);
  out += line;
  std::snprintf(line, sizeof(line), "kind %s\n", to_string(spec.kind));
  out += line;
  for (const Mode& m : spec.modes) {
    std::snprintf(line, sizeof(line), "%d %.17g %.17g %.17g %.17g %.17g\n", m.branch, m.k.x(),
                  m.k.y(), m.k.z(), m.amplitude.real(), m.amplitude.imag());
    out += line;
  }
  return out;
}

SolutionSpec spec_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool have_kind = false, have_mass = false;
  SpecKind kind = SpecKind::SF;
  double mass = 0.0;
  std::vector<Mode> modes;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "mass") {
      if (!(ls >> mass)) throw std::runtime_error("spec_from_text: bad mass line");
      have_mass = true;
    } else if (head == "kind") {
      std::string name;
      if (!(ls >> name)) throw std::runtime_error("spec_from_text: bad kind line");
      if (name == "SF") kind = SpecKind::SF;
      else if (name == "DIRAC") kind = SpecKind::Dirac;
      else if (name == "GENMAXWELL") kind = SpecKind::GenMaxwell;
      else throw std::runtime_error("spec_from_text: unknown kind " + name);
      have_kind = true;
    } else {
      Mode m;
      double re = 0.0, im = 0.0;
      std::istringstream ms(line);
      if (!(ms >> m.branch >> m.k.x() >> m.k.y() >> m.k.z() >> re >> im)) {
        throw std::runtime_error("spec_from_text: bad mode line: " + line);
      }
      m.amplitude = {re, im};
      modes.push_back(m);
    }
  }
  if (!have_kind || !have_mass) {
    throw std::runtime_error("spec_from_text: missing kind or mass header");
  }
  return make_spec(kind, mass, std::move(modes));
}

}  // namespace relwave
