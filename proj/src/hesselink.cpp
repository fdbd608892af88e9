#include "orbitres/hesselink.hpp"

#include <algorithm>
#include <numeric>

namespace orbitres {

namespace {

bool same_parity(int x, int y) { return (x - y) % 2 == 0; }

int odd_part_count(const Partition& d) {
  return static_cast<int>(std::ranges::count_if(d.parts(), [](int x) { return x % 2 == 1; }));
}

// The pairing half of the image criterion: d_j = d_{j+1} mod 2 whenever
// j = m+1 mod 2. Past N both entries are 0, so only j <= N can fail.
bool pairing_holds(const HesselinkContext& ctx, const Partition& d) {
  for (int j = 1; j <= d.size(); ++j) {
    if (same_parity(j, ctx.m + 1) && !same_parity(d.at(j), d.at(j + 1))) return false;
  }
  return true;
}

void require_admissible(const HesselinkContext& ctx, int q) {
  if (!is_admissible(ctx, q)) {
    throw OrbitError(ErrorKind::InadmissibleQ,
                     "q=" + std::to_string(q) + " is not admissible for m=" +
                         std::to_string(ctx.m) + ", epsilon=" + std::to_string(ctx.epsilon));
  }
}

std::int64_t exponent_for(const HesselinkContext& ctx, const Partition& d, int q) {
  Rational u = compute_u(ctx, d, q);
  bool reduced = q == 0 && ctx.epsilon == 0 && !compute_B(ctx, d).empty();
  Rational e = reduced ? Rational(u.num() - u.den(), u.den()) : u;
  if (!e.is_integer() || e.num() < 0) {
    throw OrbitError(ErrorKind::NonIntegralExponent,
                     "exponent " + e.to_string() + " for [" + format_partition(d) +
                         "], q=" + std::to_string(q) + " is not a non-negative integer");
  }
  if (e.num() >= 63) {
    throw OrbitError(ErrorKind::NonIntegralExponent, "exponent " + e.to_string() + " overflows");
  }
  return e.num();
}

}  // namespace

HesselinkContext HesselinkContext::of(const LieType& type) {
  switch (type.family()) {
    case Family::SP: return {type.m(), 1};
    case Family::SO_ODD:
    case Family::SO_EVEN: return {type.m(), 0};
    case Family::SL: break;
  }
  throw OrbitError(ErrorKind::WrongFamily, "Hesselink criteria apply to sp/so only, got " +
                                               type.name());
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::to_string() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw OrbitError(ErrorKind::ParseError, "not a rational: '" + text + "'");
  }
}

std::string IndexBound::to_string() const {
  switch (kind) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "+inf";
    case Kind::Finite: break;
  }
  return std::to_string(value);
}

bool operator<=(const IndexBound& bound, int q) {
  return bound.kind == IndexBound::Kind::NegInf ||
         (bound.kind == IndexBound::Kind::Finite && bound.value <= q);
}

bool operator<(int q, const IndexBound& bound) {
  return bound.kind == IndexBound::Kind::PosInf ||
         (bound.kind == IndexBound::Kind::Finite && q < bound.value);
}

bool IndexSetJ::contains(int j) const {
  return j >= tail_from || std::ranges::binary_search(head, j);
}

bool is_admissible(const HesselinkContext& ctx, int q) {
  if (q < 0 || !same_parity(q, ctx.m)) return false;
  return !(ctx.epsilon == 0 && q == 2);
}

IndexSetJ compute_J(const HesselinkContext& ctx, const Partition& d) {
  const int n = d.size();
  std::vector<bool> member(static_cast<std::size_t>(n + 1), false);
  for (int j = 1; j <= n; ++j) {
    if (same_parity(d.at(j), ctx.epsilon)) member[static_cast<std::size_t>(j)] = true;
    // d_N > d_{N+1} = 0, so a pair never straddles the end of the partition
    if (j < n && same_parity(j, ctx.m) && d.at(j) == d.at(j + 1)) {
      member[static_cast<std::size_t>(j)] = true;
      member[static_cast<std::size_t>(j + 1)] = true;
    }
  }
  IndexSetJ J;
  for (int j = 1; j <= n; ++j) {
    if (member[static_cast<std::size_t>(j)]) J.head.push_back(j);
  }
  // Padding: for epsilon = 0 each d_j = 0 (j > N) is in the first clause;
  // for epsilon = 1 the zero pairs {j, j+1} with j = m mod 2 fill the tail.
  if (ctx.epsilon == 0) {
    J.tail_from = n + 1;
  } else {
    J.tail_from = same_parity(n + 1, ctx.m) ? n + 1 : n + 2;
  }
  return J;
}

J1J0 compute_j1_j0(const HesselinkContext& ctx, const Partition& d) {
  IndexSetJ J = compute_J(ctx, d);
  J1J0 out{IndexBound::neg_inf(), IndexBound::pos_inf()};
  for (int j : J.head) {
    if (d.at(j) % 2 == 1) out.j1 = IndexBound::at(j);  // head is ascending
  }
  for (int j : J.head) {
    if (d.at(j) % 2 == 0) {
      out.j0 = IndexBound::at(j);
      return out;
    }
  }
  out.j0 = IndexBound::at(J.tail_from);
  return out;
}

std::vector<int> compute_B(const HesselinkContext& ctx, const Partition& d) {
  std::vector<int> B;
  for (int j = 1; j <= d.size(); ++j) {
    if (d.at(j) > d.at(j + 1) && same_parity(d.at(j), ctx.epsilon + 1)) B.push_back(j);
  }
  return B;
}

bool in_image_Sq(const HesselinkContext& ctx, const Partition& d, int q) {
  require_admissible(ctx, q);
  J1J0 bounds = compute_j1_j0(ctx, d);
  return bounds.j1 <= q && q < bounds.j0 && pairing_holds(ctx, d);
}

Rational compute_u(const HesselinkContext& ctx, const Partition& d, int q) {
  std::int64_t diff = odd_part_count(d) - q;
  return Rational(ctx.epsilon == 0 ? diff : -diff, 2);
}

std::uint64_t N_P(const HesselinkContext& ctx, const Partition& d, int q) {
  if (!in_image_Sq(ctx, d, q)) {
    throw OrbitError(ErrorKind::NotInImage, "[" + format_partition(d) +
                                                "] is not in the image of S_" +
                                                std::to_string(q));
  }
  return std::uint64_t{1} << exponent_for(ctx, d, q);
}

HesselinkReport hesselink_report(const HesselinkContext& ctx, const Partition& d, int q) {
  HesselinkReport r;
  r.q = q;
  r.in_image = in_image_Sq(ctx, d, q);
  r.J = compute_J(ctx, d);
  J1J0 bounds = compute_j1_j0(ctx, d);
  r.j1 = bounds.j1;
  r.j0 = bounds.j0;
  r.B = compute_B(ctx, d);
  r.u = compute_u(ctx, d, q);
  if (r.in_image) r.n_p = N_P(ctx, d, q);
  return r;
}

std::vector<HesselinkReport> hesselink_reports(const ClassicalOrbit& orbit) {
  std::vector<HesselinkReport> out;
  if (!orbit.lie_type.is_bcd()) return out;
  HesselinkContext ctx = HesselinkContext::of(orbit.lie_type);
  for (int q = 0; q <= ctx.m; ++q) {
    if (is_admissible(ctx, q)) out.push_back(hesselink_report(ctx, orbit.partition, q));
  }
  return out;
}

Polarizability polarizable(const ClassicalOrbit& orbit) {
  if (!orbit.lie_type.is_bcd()) return {true, {}};
  HesselinkContext ctx = HesselinkContext::of(orbit.lie_type);
  Polarizability out;
  for (int q = 0; q <= ctx.m; ++q) {
    if (is_admissible(ctx, q) && in_image_Sq(ctx, orbit.partition, q)) {
      out.witnesses.push_back({q, N_P(ctx, orbit.partition, q)});
    }
  }
  out.polarizable = !out.witnesses.empty();
  return out;
}

std::optional<int> resolution_witness_by_search(const ClassicalOrbit& orbit) {
  HesselinkContext::of(orbit.lie_type);  // family check
  for (const auto& w : polarizable(orbit).witnesses) {
    if (w.n_p == 1) return w.q;
  }
  return std::nullopt;
}

bool resolution_by_search(const ClassicalOrbit& orbit) {
  return resolution_witness_by_search(orbit).has_value();
}

}  // namespace orbitres
