#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace charsum {

// Relative tolerance for "upper-right vertex on the hyperbola xy = T".
inline constexpr double kOnHyperbolaTol = 1e-12;

// Half-open rectangle [x0, x1) x [y0, y1). When `left_open` is set the left
// edge is excluded, which for lattice points means x >= 1 at x0 = 0.
//
// A rectangle tagged with T has its upper-right vertex on xy = T, and y1 is
// always derived as T / x1 rather than stored independently.
class Rect {
 public:
  Rect() = default;
  Rect(double x0, double x1, double y0, double y1, bool left_open = false);

  // [x0, x1) x [y0, T/x1), tagged on the hyperbola.
  static Rect on_hyperbola(double x0, double x1, double y0, double T, bool left_open = false);

  // Tags an existing rectangle; throws std::invalid_argument when x1*y1 is
  // not within kOnHyperbolaTol of T.
  Rect tagged(double T) const;

  double x0() const { return x0_; }
  double x1() const { return x1_; }
  double y0() const { return y0_; }
  double y1() const { return y1_; }
  bool left_open() const { return left_open_; }
  const std::optional<double>& hyperbola() const { return T_; }
  bool on_gamma() const { return T_.has_value(); }

  double width() const { return x1_ - x0_; }
  double height() const { return y1_ - y0_; }
  double area() const { return width() * height(); }
  bool valid() const { return x0_ < x1_ && y0_ < y1_; }

  bool contains(std::int64_t x, std::int64_t y) const;

  friend bool operator==(const Rect&, const Rect&) = default;

 private:
  double x0_ = 0, x1_ = 0, y0_ = 0, y1_ = 0;
  bool left_open_ = false;
  std::optional<double> T_;
};

// 1 - 2^-k.
double sigma_k(int k);

// U_0 = (0, sqrt T) x [0, sqrt T); for k >= 1
// U_k = (0, sqrt T / 2^k) x [2^(k-1) sqrt T, 2^k sqrt T), tagged on xy = T.
Rect u_k_rect(double T, int k);

// r(P) = [x1, (3 x1 - x0)/2) x [y0, 2T/(3 x1 - x0))
Rect r_op(const Rect& rect);
// u(P) = [x0, (x0 + x1)/2) x [y1, 2T/(x0 + x1))
Rect u_op(const Rect& rect);

// [sqrt T/2^k, 3 sqrt T/2^(k+1)) x [2^(k-1) sqrt T, (2^(k+1)/3) sqrt T), k >= 1.
Rect pi_k_rect(double T, int k);

struct FamilyMember {
  Rect rect;
  int order = 0;
  // Operators applied to pi_k, outermost first: "ur" means u(r(pi_k)).
  std::string word;
};

// Members of the family generated from pi_k by r and u, breadth first with
// r before u, of order <= max_order and width >= min_width. Subtrees below
// min_width are pruned since children have half the parent width.
std::vector<FamilyMember> generate_family(double T, int k, int max_order, double min_width = 0.0);

// Staircase chain under xy = T starting at x0 and approaching x:
// x_n = x - (x - x0)/2^n and Phi_n = [x_{n-1}, x_n) x [T/x, T/x_n).
class ChainParams {
 public:
  // Requires 1 <= x0 < x and T > 0; throws std::invalid_argument.
  ChainParams(double x0, double x, double T);

  double x0() const { return x0_; }
  double x() const { return x_; }
  double T() const { return T_; }
  double delta() const { return x_ - x0_; }
  double y() const { return T_ / x_; }
  double x_n(int n) const;

 private:
  double x0_, x_, T_;
};

Rect chain_rect(const ChainParams& c, int n);

struct ChainAreas {
  double phi;    // |Phi_n| = (Delta^2 / 4^n) (y / x_n)
  double u_phi;  // |u(Phi_n)| = |Phi_n| / (4 (1 - (3/2)(Delta/x)/2^n))
};
ChainAreas chain_areas_closed(const ChainParams& c, int n);

// Width-to-abscissa ratio delta/x1 of pi_k; 1/3 for every k.
inline constexpr double kPiKWidthRatio = 1.0 / 3.0;

// Upper bound on the area of any order-l member of F_k:
// |pi_k| / (4^l prod_{j=1..l} (1 - (3/2) rho_{j-1})), rho_0 = 1/3,
// rho_j = (2/3) rho_{j-1}.
double lemma5_bound(double T, int k, int l);

enum class RegionKind { Omega, Omega1, Omega2, U0, Wt, Wpt, Strip, RectRegion };

// Lattice regions under the hyperbola. All regions are restricted to
// x, y >= 1.
//   Omega:   xy < T
//   Omega1:  xy < T, x < sqrt T
//   Omega2:  xy < T, y < sqrt T
//   U0:      x < sqrt T, y < sqrt T
//   Wt(t):   xy < T, y <= t, x <= sqrt T
//   Wpt(t):  xy < T, y > t
//   Strip(t): T - 2t <= xy <= T
struct Region {
  RegionKind kind = RegionKind::Omega;
  double T = 0.0;
  double t = 0.0;
  Rect rect;

  static Region omega(double T) { return {RegionKind::Omega, T, 0.0, {}}; }
  static Region omega1(double T) { return {RegionKind::Omega1, T, 0.0, {}}; }
  static Region omega2(double T) { return {RegionKind::Omega2, T, 0.0, {}}; }
  static Region u0(double T) { return {RegionKind::U0, T, 0.0, {}}; }
  static Region w(double T, double t) { return {RegionKind::Wt, T, t, {}}; }
  static Region w_prime(double T, double t) { return {RegionKind::Wpt, T, t, {}}; }
  static Region strip(double T, double t) { return {RegionKind::Strip, T, t, {}}; }
  static Region of_rect(const Rect& r) { return {RegionKind::RectRegion, 0.0, 0.0, r}; }

  std::string name() const;
};

bool region_contains(const Region& region, std::int64_t x, std::int64_t y);

// Integer points of the rectangle in x-major order.
std::vector<std::pair<std::int64_t, std::int64_t>> rect_lattice_points(const Rect& rect);

// SVG drawing of a family with 12 significant digits per coordinate.
std::string family_svg(double T, int k, const std::vector<FamilyMember>& family);

}  // namespace charsum
