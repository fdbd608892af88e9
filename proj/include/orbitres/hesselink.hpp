#pragma once

// Polarizability and the degree of the collapsing map for sp/so orbits,
// decided from partition data through Hesselink's image criterion for the
// Spaltenstein maps S_q and his formula for N(P) = [A(O) : A_P(O)].
//
// Indices are 1-based and d_j = 0 for every j > N. With that padding the
// set J(d) contains every large enough index; it is represented by its
// elements inside 1..N plus the first index of its infinite tail.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbitres/orbit.hpp"

namespace orbitres {

/// epsilon = 1 for sp_m, 0 for so_m.
struct HesselinkContext {
  int m = 0;
  int epsilon = 0;

  /// Throws WrongFamily for sl_n.
  static HesselinkContext of(const LieType& type);
};

/// Exact p/q with q > 0, always reduced.
class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }

  /// "3", "-1/2".
  std::string to_string() const;
  static Rational parse(const std::string& text);

  bool operator==(const Rational&) const = default;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

/// An index or one of the two infinities used by sup/min of empty sets.
struct IndexBound {
  enum class Kind { NegInf, Finite, PosInf };
  Kind kind = Kind::Finite;
  int value = 0;

  static IndexBound neg_inf() { return {Kind::NegInf, 0}; }
  static IndexBound pos_inf() { return {Kind::PosInf, 0}; }
  static IndexBound at(int j) { return {Kind::Finite, j}; }

  /// "-inf", "+inf" or the number.
  std::string to_string() const;

  bool operator==(const IndexBound&) const = default;
};

bool operator<=(const IndexBound& bound, int q);
bool operator<(int q, const IndexBound& bound);

struct IndexSetJ {
  std::vector<int> head;  // members in 1..N, ascending
  int tail_from = 0;      // every j >= tail_from is a member (all with d_j = 0)

  bool contains(int j) const;
  bool operator==(const IndexSetJ&) const = default;
};

bool is_admissible(const HesselinkContext& ctx, int q);

IndexSetJ compute_J(const HesselinkContext& ctx, const Partition& d);

struct J1J0 {
  IndexBound j1;
  IndexBound j0;
  bool operator==(const J1J0&) const = default;
};

J1J0 compute_j1_j0(const HesselinkContext& ctx, const Partition& d);

/// B(d) = { j | d_j > d_{j+1}, d_j = epsilon + 1 mod 2 }.
std::vector<int> compute_B(const HesselinkContext& ctx, const Partition& d);

/// Throws InadmissibleQ.
bool in_image_Sq(const HesselinkContext& ctx, const Partition& d, int q);

Rational compute_u(const HesselinkContext& ctx, const Partition& d, int q);

/// 2^u, or 2^(u-1) when q = epsilon = 0 and B(d) is non-empty.
/// Throws InadmissibleQ, NotInImage, or NonIntegralExponent when the exponent
/// is not a non-negative integer.
std::uint64_t N_P(const HesselinkContext& ctx, const Partition& d, int q);

struct HesselinkReport {
  int q = 0;
  IndexSetJ J;
  IndexBound j1;
  IndexBound j0;
  std::vector<int> B;
  bool in_image = false;
  Rational u;
  std::optional<std::uint64_t> n_p;  // set iff in_image

  bool operator==(const HesselinkReport&) const = default;
};

/// Full report for one admissible q. Throws as N_P does.
HesselinkReport hesselink_report(const HesselinkContext& ctx, const Partition& d, int q);

/// Reports for every admissible q in 0..m, ascending.
std::vector<HesselinkReport> hesselink_reports(const ClassicalOrbit& orbit);

struct PolarizationWitness {
  int q = 0;
  std::uint64_t n_p = 0;
  bool operator==(const PolarizationWitness&) const = default;
};

struct Polarizability {
  bool polarizable = false;
  std::vector<PolarizationWitness> witnesses;
  bool operator==(const Polarizability&) const = default;
};

/// For sl_n every orbit is polarizable and no witnesses are listed.
Polarizability polarizable(const ClassicalOrbit& orbit);

/// The first q in 0..m whose polarization has N(P) = 1, if any.
/// Throws WrongFamily for sl_n.
std::optional<int> resolution_witness_by_search(const ClassicalOrbit& orbit);

bool resolution_by_search(const ClassicalOrbit& orbit);

}  // namespace orbitres
