#pragma once

#include <cstdint>
#include <iterator>
#include <optional>
#include <vector>

#include "orbitres/orbit.hpp"

namespace orbitres {

/// Every nilpotent orbit of a classical algebra, partitions in
/// lexicographically decreasing order. A very even so_2n partition is
/// emitted twice, labelled I then II.
class OrbitStream {
 public:
  explicit OrbitStream(LieType type) : type_(type) {}

  class iterator {
   public:
    using value_type = ClassicalOrbit;
    using difference_type = std::ptrdiff_t;

    iterator() = default;

    const ClassicalOrbit& operator*() const { return *current_; }
    const ClassicalOrbit* operator->() const { return &*current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return !it.current_.has_value();
    }

   private:
    friend class OrbitStream;
    explicit iterator(LieType type);

    bool advance_partition();
    void settle();

    std::optional<LieType> type_;
    std::vector<int> parts_;
    std::optional<ClassicalOrbit> current_;
  };

  iterator begin() const { return iterator(type_); }
  std::default_sentinel_t end() const { return {}; }

  const LieType& lie_type() const noexcept { return type_; }

 private:
  LieType type_;
};

static_assert(std::input_iterator<OrbitStream::iterator>);

inline OrbitStream enumerate_orbits(const LieType& type) { return OrbitStream(type); }

std::vector<ClassicalOrbit> collect_orbits(const LieType& type);

std::int64_t count_orbits(const LieType& type);

/// Every valid LieType with 2 <= m <= max_m, ordered by m then family
/// (SL, SP, SO_ODD, SO_EVEN).
std::vector<LieType> classical_types_up_to(int max_m);

}  // namespace orbitres
