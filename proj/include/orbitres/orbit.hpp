#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orbitres/error.hpp"

namespace orbitres {

enum class Family { SL, SP, SO_ODD, SO_EVEN };

std::string_view to_string(Family family);

/// A classical simple Lie algebra, identified by its family and the size m
/// of its natural matrix representation (n for sl_n, 2n for sp_2n, and so on).
class LieType {
 public:
  /// Throws InvalidLieType on a parity or lower-bound violation.
  LieType(Family family, int m);

  Family family() const noexcept { return family_; }
  int m() const noexcept { return m_; }
  bool is_bcd() const noexcept { return family_ != Family::SL; }

  /// Lie rank (n for sl_{n+1}, sp_2n, so_{2n+1}, so_2n).
  int rank() const noexcept;

  /// "sl5", "sp6", "so8".
  std::string name() const;

  bool operator==(const LieType&) const = default;

 private:
  Family family_;
  int m_;
};

/// Accepts "sl5" / "sp6" / "so7" (matrix size) as well as the Cartan names
/// "A4" / "C3" / "B3" / "D4". Case-insensitive. Throws ParseError.
LieType parse_lie_type(std::string_view text);

/// Weakly decreasing sequence of positive integers. Index access is 1-based
/// and returns 0 past the last part.
class Partition {
 public:
  /// Throws NonPositivePart / NotWeaklyDecreasing / WrongSum (for empty input).
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  int size() const noexcept { return static_cast<int>(parts_.size()); }
  int sum() const noexcept;

  /// d_j for j >= 1, with d_j = 0 for j > N.
  int at(int j) const noexcept {
    return j >= 1 && j <= size() ? parts_[static_cast<std::size_t>(j - 1)] : 0;
  }

  /// Multiplicity r_i.
  int multiplicity(int value) const noexcept;

  /// s_i = #{j | d_j >= i}, for i = 1..d_1 (the dual partition).
  std::vector<int> dual() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// "3,2,2,1" or with exponents "3,2^2,1". Only structural checks are done
/// here; validity for a given algebra is checked by validate_orbit.
std::vector<int> parse_parts(std::string_view text);

/// Exponent shorthand, e.g. "3,2^2,1".
std::string format_partition(const Partition& p);

enum class VeryEvenLabel { I, II };

std::string_view to_string(VeryEvenLabel label);
VeryEvenLabel parse_very_even_label(std::string_view text);

struct ClassicalOrbit {
  LieType lie_type;
  Partition partition;
  std::optional<VeryEvenLabel> very_even_label;

  bool operator==(const ClassicalOrbit&) const = default;
};

/// True iff family = SO_EVEN and every part is even.
bool is_very_even(const LieType& type, const Partition& p);

/// The gate for every other operation. For very even type-D partitions the
/// label defaults to I.
ClassicalOrbit validate_orbit(const LieType& type, std::span<const int> parts,
                              std::optional<VeryEvenLabel> label = std::nullopt);

struct PartitionProfile {
  std::map<int, int> r;  // part -> multiplicity, only non-zero entries
  std::vector<int> s;    // s[i-1] = s_i for i = 1..d_1
  int k = 0;             // distinct parts
  int c = 0;             // gcd of parts
  int a = 0;             // distinct odd parts
  int b = 0;             // distinct even parts
  int l = 0;             // SP: even parts of multiplicity 2; SO: odd parts of multiplicity 2; SL: 0
  bool rather_odd = false;
  bool all_same_parity = false;

  bool operator==(const PartitionProfile&) const = default;
};

PartitionProfile profile(const ClassicalOrbit& orbit);

bool is_even_orbit(const ClassicalOrbit& orbit);

bool is_zero_orbit(const ClassicalOrbit& orbit);

std::int64_t orbit_dimension(const ClassicalOrbit& orbit);

/// [2,1^{m-2}] for SL and SP, [2^2,1^{m-4}] for SO. Throws RankTooSmall below
/// sl_2, sp_6, so_5, so_8.
ClassicalOrbit minimal_orbit(const LieType& type);

}  // namespace orbitres
