#include "orthobound/envelope.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include <boost/math/special_functions/erf.hpp>

#include "orthobound/error.hpp"
#include "orthobound/numerics.hpp"

namespace orthobound {

using std::numbers::pi;

Envelope Envelope::power_law(double p, double C) {
  if (!(p > 0.5) || !std::isfinite(p)) throw DomainError("power-law envelope needs p > 1/2");
  if (!(C > 0.0) || !std::isfinite(C)) throw DomainError("power-law envelope needs C > 0");
  Envelope e;
  e.kind_ = Kind::power_law;
  e.p_ = p;
  e.C_ = C;
  e.l2_norm_ = C * std::sqrt(2.0 / (2.0 * p - 1.0));
  return e;
}

Envelope Envelope::gaussian(double a, double C) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("gaussian envelope needs a > 0");
  if (!(C > 0.0) || !std::isfinite(C)) throw DomainError("gaussian envelope needs C > 0");
  Envelope e;
  e.kind_ = Kind::gaussian;
  e.a_ = a;
  e.C_ = C;
  e.l2_norm_ = C / std::pow(2.0 * a, 0.25);
  return e;
}

Envelope Envelope::tabulated(SampledFunction f) {
  for (auto& v : f.values()) v = std::abs(v);
  const double n = norm(f);
  if (!(n > 0.0)) throw DomainError("tabulated envelope vanishes identically");
  Envelope e;
  e.kind_ = Kind::tabulated;
  e.samples_ = std::move(f);
  e.l2_norm_ = n;
  return e;
}

double Envelope::value(double x) const {
  switch (kind_) {
    case Kind::power_law: return C_ * std::pow(1.0 + std::abs(x), -p_);
    case Kind::gaussian: return C_ * std::exp(-pi * a_ * x * x);
    case Kind::tabulated: {
      const Grid& g = samples_->grid();
      const double pos = (x + g.half_width()) / g.spacing();
      if (pos < 0.0 || pos > static_cast<double>(g.size() - 1)) return 0.0;
      const auto j = std::min(static_cast<std::size_t>(pos), g.size() - 2);
      const double frac = pos - static_cast<double>(j);
      return (1.0 - frac) * (*samples_)[j].real() + frac * (*samples_)[j + 1].real();
    }
  }
  return 0.0;
}

double Envelope::tail(double s, double T) const {
  if (!(s > 0.0)) throw DomainError("tail: exponent must be positive");
  if (T < 0.0) throw DomainError("tail: T must be nonnegative");
  switch (kind_) {
    case Kind::power_law: {
      const double q = p_ * s;
      if (!(q > 1.0)) throw DomainError("power-law envelope is not in L^s for s = " + std::to_string(s));
      return 2.0 * std::pow(C_, s) * std::pow(1.0 + T, 1.0 - q) / (q - 1.0);
    }
    case Kind::gaussian: {
      const double as = a_ * s;
      return std::pow(C_, s) * std::erfc(T * std::sqrt(pi * as)) / std::sqrt(as);
    }
    case Kind::tabulated: {
      SampledFunction g = *samples_;
      for (auto& v : g.values()) v = std::pow(v.real(), 0.5 * s);
      return tail_energy(g, T).energy;
    }
  }
  return 0.0;
}

double Envelope::tail_crossing(double s, double level) const {
  if (!(level > 0.0)) throw DomainError("tail_crossing: level must be positive");
  switch (kind_) {
    case Kind::power_law: {
      const double q = p_ * s;
      if (!(q > 1.0)) throw DomainError("power-law envelope is not in L^s for s = " + std::to_string(s));
      const double base = 2.0 * std::pow(C_, s) / ((q - 1.0) * level);
      return std::max(0.0, std::pow(base, 1.0 / (q - 1.0)) - 1.0);
    }
    case Kind::gaussian: {
      const double as = a_ * s;
      const double target = level * std::sqrt(as) / std::pow(C_, s);
      if (target >= 1.0) return 0.0;
      return boost::math::erfc_inv(target) / std::sqrt(pi * as);
    }
    case Kind::tabulated: {
      if (tail(s, 0.0) <= level) return 0.0;
      const Grid& g = samples_->grid();
      double lo = 0.0;
      double hi = g.half_width() - g.spacing();
      if (tail(s, hi) > level) {
        throw NumericalError("tabulated envelope: grid too short to reach the requested tail level");
      }
      for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(1.0, hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        (tail(s, mid) <= level ? hi : lo) = mid;
      }
      return hi;
    }
  }
  return 0.0;
}

std::string Envelope::describe() const {
  char buf[128];
  switch (kind_) {
    case Kind::power_law: std::snprintf(buf, sizeof buf, "power:p=%.17g,C=%.17g", p_, C_); break;
    case Kind::gaussian: std::snprintf(buf, sizeof buf, "gauss:a=%.17g,C=%.17g", a_, C_); break;
    case Kind::tabulated:
      std::snprintf(buf, sizeof buf, "tabulated:n=%zu,L=%.17g", samples_->grid().size(),
                    samples_->grid().half_width());
      break;
  }
  return buf;
}

CfValue c_f_epsilon(const Envelope& env, double eps) {
  if (!(eps > 0.0)) throw DomainError("C_f: eps must be positive");
  if (eps >= 1.0) return {0.0, true};
  const double M = env.l2_norm();
  return {env.tail_crossing(2.0, eps * eps * M * M), false};
}

Envelope parse_envelope(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw DomainError("envelope '" + spec + "': expected kind:x,C");
  const std::string kind = spec.substr(0, colon);
  std::istringstream in(spec.substr(colon + 1));
  double x = 0.0, C = 0.0;
  char comma = 0;
  if (!(in >> x >> comma >> C) || comma != ',' || !(in >> std::ws).eof()) {
    throw DomainError("envelope '" + spec + "': expected two comma-separated numbers");
  }
  if (kind == "power") return Envelope::power_law(x, C);
  if (kind == "gauss" || kind == "gaussian") return Envelope::gaussian(x, C);
  throw DomainError("envelope '" + spec + "': unknown kind '" + kind + "'");
}

}  // namespace orthobound
