#include "charsum/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace charsum {

namespace {

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void require_hyperbola_parameter(double T) {
  if (!(T > 1.0) || !std::isfinite(T)) {
    throw std::invalid_argument("hyperbola parameter T must be finite and > 1");
  }
}

}  // namespace

Rect::Rect(double x0, double x1, double y0, double y1, bool left_open)
    : x0_(x0), x1_(x1), y0_(y0), y1_(y1), left_open_(left_open) {}

Rect Rect::on_hyperbola(double x0, double x1, double y0, double T, bool left_open) {
  Rect r(x0, x1, y0, T / x1, left_open);
  r.T_ = T;
  return r;
}

Rect Rect::tagged(double T) const {
  const double prod = x1_ * y1_;
  if (!(std::abs(prod - T) <= kOnHyperbolaTol * std::abs(T))) {
    throw std::invalid_argument("Rect::tagged: upper-right vertex not on xy = T");
  }
  return on_hyperbola(x0_, x1_, y0_, T, left_open_);
}

bool Rect::contains(std::int64_t x, std::int64_t y) const {
  const auto fx = static_cast<double>(x);
  const auto fy = static_cast<double>(y);
  const bool left = left_open_ ? fx > x0_ : fx >= x0_;
  return left && fx < x1_ && fy >= y0_ && fy < y1_;
}

double sigma_k(int k) {
  if (k < 0) throw std::invalid_argument("sigma_k: k must be >= 0");
  return 1.0 - std::ldexp(1.0, -k);
}

Rect u_k_rect(double T, int k) {
  require_hyperbola_parameter(T);
  if (k < 0) throw std::invalid_argument("u_k_rect: k must be >= 0");
  const double s = std::sqrt(T);
  if (k == 0) return Rect::on_hyperbola(0.0, s, 0.0, T, /*left_open=*/true);
  return Rect::on_hyperbola(0.0, std::ldexp(s, -k), std::ldexp(s, k - 1), T, true);
}

namespace {

void require_on_gamma(const Rect& rect, const char* who) {
  if (!rect.valid()) throw std::invalid_argument(std::string(who) + ": degenerate rectangle");
  if (!rect.on_gamma()) {
    throw std::invalid_argument(std::string(who) + ": upper-right vertex not on the hyperbola");
  }
}

}  // namespace

Rect r_op(const Rect& rect) {
  require_on_gamma(rect, "r_op");
  const double nx1 = (3.0 * rect.x1() - rect.x0()) / 2.0;
  return Rect::on_hyperbola(rect.x1(), nx1, rect.y0(), *rect.hyperbola());
}

Rect u_op(const Rect& rect) {
  require_on_gamma(rect, "u_op");
  const double nx1 = (rect.x0() + rect.x1()) / 2.0;
  return Rect::on_hyperbola(rect.x0(), nx1, rect.y1(), *rect.hyperbola(), rect.left_open());
}

Rect pi_k_rect(double T, int k) {
  require_hyperbola_parameter(T);
  if (k < 1) throw std::invalid_argument("pi_k_rect: k must be >= 1");
  const double s = std::sqrt(T);
  return Rect::on_hyperbola(std::ldexp(s, -k), std::ldexp(3.0 * s, -(k + 1)), std::ldexp(s, k - 1),
                            T);
}

std::vector<FamilyMember> generate_family(double T, int k, int max_order, double min_width) {
  if (max_order < 0) throw std::invalid_argument("generate_family: max_order must be >= 0");
  std::vector<FamilyMember> out;
  std::vector<FamilyMember> level;
  const Rect root = pi_k_rect(T, k);
  if (root.width() >= min_width) level.push_back({root, 0, ""});
  for (int order = 0; order <= max_order && !level.empty(); ++order) {
    std::vector<FamilyMember> next;
    if (order < max_order) next.reserve(level.size() * 2);
    for (auto& m : level) {
      if (order < max_order) {
        Rect r = r_op(m.rect);
        Rect u = u_op(m.rect);
        if (r.width() >= min_width) next.push_back({r, order + 1, "r" + m.word});
        if (u.width() >= min_width) next.push_back({u, order + 1, "u" + m.word});
      }
      out.push_back(std::move(m));
    }
    level = std::move(next);
  }
  return out;
}

ChainParams::ChainParams(double x0, double x, double T) : x0_(x0), x_(x), T_(T) {
  if (!(x0 >= 1.0) || !(x > x0) || !(T > 0.0) || !std::isfinite(x) || !std::isfinite(T)) {
    throw std::invalid_argument("ChainParams: need 1 <= x0 < x and T > 0");
  }
}

double ChainParams::x_n(int n) const {
  if (n < 0) throw std::invalid_argument("ChainParams::x_n: n must be >= 0");
  if (n == 0) return x0_;
  return x_ - std::ldexp(delta(), -n);
}

Rect chain_rect(const ChainParams& c, int n) {
  if (n < 1) throw std::invalid_argument("chain_rect: n must be >= 1");
  return Rect::on_hyperbola(c.x_n(n - 1), c.x_n(n), c.y(), c.T());
}

ChainAreas chain_areas_closed(const ChainParams& c, int n) {
  if (n < 1) throw std::invalid_argument("chain_areas_closed: n must be >= 1");
  const double d = c.delta();
  const double phi = std::ldexp(d * d, -2 * n) * (c.y() / c.x_n(n));
  const double denom = 1.0 - 1.5 * (d / c.x()) * std::ldexp(1.0, -n);
  if (!(denom > 0.0)) throw std::invalid_argument("chain_areas_closed: non-positive denominator");
  return {phi, phi / (4.0 * denom)};
}

double lemma5_bound(double T, int k, int l) {
  if (l < 0) throw std::invalid_argument("lemma5_bound: l must be >= 0");
  double bound = pi_k_rect(T, k).area();
  double rho = kPiKWidthRatio;
  for (int j = 1; j <= l; ++j) {
    bound /= 4.0 * (1.0 - 1.5 * rho);
    rho *= 2.0 / 3.0;
  }
  return bound;
}

std::string Region::name() const {
  switch (kind) {
    case RegionKind::Omega: return "Omega";
    case RegionKind::Omega1: return "Omega1";
    case RegionKind::Omega2: return "Omega2";
    case RegionKind::U0: return "U0";
    case RegionKind::Wt: return "W_t";
    case RegionKind::Wpt: return "W'_t";
    case RegionKind::Strip: return "Xi_t";
    case RegionKind::RectRegion: return "Rect";
  }
  return "?";
}

bool region_contains(const Region& region, std::int64_t x, std::int64_t y) {
  if (region.kind == RegionKind::RectRegion) return region.rect.contains(x, y);
  if (x < 1 || y < 1) return false;
  const double T = region.T;
  const auto xy = static_cast<double>(x * y);
  const auto xx = static_cast<double>(x * x);
  const auto yy = static_cast<double>(y * y);
  const auto fy = static_cast<double>(y);
  switch (region.kind) {
    case RegionKind::Omega: return xy < T;
    case RegionKind::Omega1: return xy < T && xx < T;
    case RegionKind::Omega2: return xy < T && yy < T;
    case RegionKind::U0: return xx < T && yy < T;
    case RegionKind::Wt: return xy < T && fy <= region.t && xx <= T;
    case RegionKind::Wpt: return xy < T && fy > region.t;
    case RegionKind::Strip: return xy >= T - 2.0 * region.t && xy <= T;
    case RegionKind::RectRegion: break;
  }
  return false;
}

std::vector<std::pair<std::int64_t, std::int64_t>> rect_lattice_points(const Rect& rect) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  if (!rect.valid()) return out;
  if (!std::isfinite(rect.x0()) || !std::isfinite(rect.x1()) || !std::isfinite(rect.y0()) ||
      !std::isfinite(rect.y1())) {
    throw std::invalid_argument("rect_lattice_points: unbounded rectangle");
  }
  auto x_lo = static_cast<std::int64_t>(std::ceil(rect.x0()));
  if (rect.left_open() && static_cast<double>(x_lo) == rect.x0()) ++x_lo;
  const auto x_hi = static_cast<std::int64_t>(std::ceil(rect.x1()));  // exclusive
  const auto y_lo = static_cast<std::int64_t>(std::ceil(rect.y0()));
  const auto y_hi = static_cast<std::int64_t>(std::ceil(rect.y1()));
  for (auto x = x_lo; x < x_hi; ++x) {
    for (auto y = y_lo; y < y_hi; ++y) out.emplace_back(x, y);
  }
  return out;
}

std::string family_svg(double T, int k, const std::vector<FamilyMember>& family) {
  double xmax = 0, ymin = INFINITY, ymax = 0;
  const Rect uk = u_k_rect(T, k);
  xmax = std::max(xmax, uk.x1());
  ymin = std::min(ymin, uk.y0());
  ymax = std::max(ymax, uk.y1());
  for (const auto& m : family) {
    xmax = std::max(xmax, m.rect.x1());
    ymin = std::min(ymin, m.rect.y0());
    ymax = std::max(ymax, m.rect.y1());
  }
  const double w = 800.0, h = 800.0;
  const double sx = w / (1.05 * xmax);
  const double sy = h / (1.05 * (ymax - ymin));
  auto px = [&](double x) { return fmt12(x * sx); };
  auto py = [&](double y) { return fmt12(h - (y - ymin) * sy); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
     << "\">\n";
  os << "<!-- T=" << fmt12(T) << " k=" << k << " members=" << family.size() << " -->\n";
  auto emit = [&](const Rect& r, const std::string& cls, const std::string& title) {
    os << "<rect class=\"" << cls << "\" x=\"" << px(r.x0()) << "\" y=\"" << py(r.y1())
       << "\" width=\"" << fmt12(r.width() * sx) << "\" height=\"" << fmt12(r.height() * sy)
       << "\" fill=\"none\" stroke=\"" << (cls == "uk" ? "#c33" : "#336") << "\"><title>" << title
       << " [" << fmt12(r.x0()) << "," << fmt12(r.x1()) << ")x[" << fmt12(r.y0()) << ","
       << fmt12(r.y1()) << ")</title></rect>\n";
  };
  emit(uk, "uk", "U_" + std::to_string(k));
  for (const auto& m : family) emit(m.rect, "member", m.word.empty() ? "Pi_k" : m.word);
  // Hyperbola polyline.
  os << "<polyline fill=\"none\" stroke=\"#999\" points=\"";
  const int steps = 200;
  for (int i = 0; i <= steps; ++i) {
    const double x = std::max(T / ymax, 1e-9) + (xmax - T / ymax) * i / steps;
    os << px(x) << "," << py(T / x) << (i == steps ? "" : " ");
  }
  os << "\"/>\n</svg>\n";
  return os.str();
}

}  // namespace charsum
