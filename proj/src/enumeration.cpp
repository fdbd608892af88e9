#include "orbitres/enumeration.hpp"

#include <map>

namespace orbitres {

namespace {

bool satisfies_constraint(Family family, const std::vector<int>& parts) {
  if (family == Family::SL) return true;
  const int constrained = family == Family::SP ? 1 : 0;
  std::map<int, int> mult;
  for (int d : parts) ++mult[d];
  for (auto [value, count] : mult) {
    if (value % 2 == constrained && count % 2 != 0) return false;
  }
  return true;
}

}  // namespace

OrbitStream::iterator::iterator(LieType type) : type_(type), parts_{type.m()} { settle(); }

// Next partition in lexicographically decreasing order; false after [1^m].
bool OrbitStream::iterator::advance_partition() {
  int ones = 0;
  while (!parts_.empty() && parts_.back() == 1) {
    parts_.pop_back();
    ++ones;
  }
  if (parts_.empty()) return false;
  int value = parts_.back() - 1;
  parts_.pop_back();
  int rest = ones + value + 1;
  while (rest > 0) {
    int piece = std::min(value, rest);
    parts_.push_back(piece);
    rest -= piece;
  }
  return true;
}

// Moves to the first constraint-satisfying partition at or after parts_.
void OrbitStream::iterator::settle() {
  while (!satisfies_constraint(type_->family(), parts_)) {
    if (!advance_partition()) {
      current_.reset();
      return;
    }
  }
  current_ = validate_orbit(*type_, parts_);
}

OrbitStream::iterator& OrbitStream::iterator::operator++() {
  if (!current_) return *this;
  if (current_->very_even_label == VeryEvenLabel::I) {
    current_->very_even_label = VeryEvenLabel::II;
    return *this;
  }
  if (!advance_partition()) {
    current_.reset();
    return *this;
  }
  settle();
  return *this;
}

std::vector<ClassicalOrbit> collect_orbits(const LieType& type) {
  std::vector<ClassicalOrbit> out;
  for (const auto& orbit : enumerate_orbits(type)) out.push_back(orbit);
  return out;
}

std::int64_t count_orbits(const LieType& type) {
  std::int64_t n = 0;
  for (auto it = enumerate_orbits(type).begin(); it != std::default_sentinel; ++it) ++n;
  return n;
}

std::vector<LieType> classical_types_up_to(int max_m) {
  std::vector<LieType> out;
  for (int m = 2; m <= max_m; ++m) {
    out.emplace_back(Family::SL, m);
    if (m % 2 == 0) out.emplace_back(Family::SP, m);
    if (m % 2 == 1 && m >= 3) out.emplace_back(Family::SO_ODD, m);
    if (m % 2 == 0 && m >= 4) out.emplace_back(Family::SO_EVEN, m);
  }
  return out;
}

}  // namespace orbitres
