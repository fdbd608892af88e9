#include "orbitres/orbit.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace orbitres {

namespace {

std::string lower(std::string_view text) {
  std::string out(text);
  std::ranges::transform(out, out.begin(),
                         [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return out;
}

std::string trim(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  auto last = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(first, last - first + 1));
}

int parse_int(std::string_view text, std::string_view context) {
  std::string t = trim(text);
  int value = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw OrbitError(ErrorKind::ParseError,
                     "expected an integer in '" + std::string(context) + "', got '" + t + "'");
  }
  return value;
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::SL: return "SL";
    case Family::SP: return "SP";
    case Family::SO_ODD: return "SO_ODD";
    case Family::SO_EVEN: return "SO_EVEN";
  }
  return "?";
}

LieType::LieType(Family family, int m) : family_(family), m_(m) {
  auto fail = [&](const std::string& why) {
    throw OrbitError(ErrorKind::InvalidLieType,
                     std::string(to_string(family)) + " with m=" + std::to_string(m) + ": " + why);
  };
  switch (family) {
    case Family::SL:
      if (m < 2) fail("requires m >= 2");
      break;
    case Family::SP:
      if (m % 2 != 0) fail("requires m even");
      if (m < 2) fail("requires m >= 2");
      break;
    case Family::SO_ODD:
      if (m % 2 == 0) fail("requires m odd");
      if (m < 3) fail("requires m >= 3");
      break;
    case Family::SO_EVEN:
      if (m % 2 != 0) fail("requires m even");
      if (m < 4) fail("requires m >= 4");
      break;
  }
}

int LieType::rank() const noexcept {
  return family_ == Family::SL ? m_ - 1 : m_ / 2;
}

std::string LieType::name() const {
  std::string prefix = family_ == Family::SL ? "sl" : family_ == Family::SP ? "sp" : "so";
  return prefix + std::to_string(m_);
}

LieType parse_lie_type(std::string_view text) {
  std::string t = lower(trim(text));
  if (t.size() < 2) throw OrbitError(ErrorKind::ParseError, "unrecognised algebra '" + t + "'");

  auto make = [&](Family family, int m) {
    try {
      return LieType(family, m);
    } catch (const OrbitError& e) {
      throw OrbitError(ErrorKind::ParseError, "algebra '" + t + "': " + e.what());
    }
  };

  if (t.starts_with("sl") || t.starts_with("sp") || t.starts_with("so")) {
    int m = parse_int(std::string_view(t).substr(2), t);
    if (t.starts_with("sl")) return make(Family::SL, m);
    if (t.starts_with("sp")) return make(Family::SP, m);
    return make(m % 2 ? Family::SO_ODD : Family::SO_EVEN, m);
  }
  int n = parse_int(std::string_view(t).substr(1), t);
  if (n < 1) throw OrbitError(ErrorKind::ParseError, "rank must be positive in '" + t + "'");
  switch (t[0]) {
    case 'a': return make(Family::SL, n + 1);
    case 'b': return make(Family::SO_ODD, 2 * n + 1);
    case 'c': return make(Family::SP, 2 * n);
    case 'd': return make(Family::SO_EVEN, 2 * n);
    default: break;
  }
  throw OrbitError(ErrorKind::ParseError, "unrecognised algebra '" + t + "'");
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw OrbitError(ErrorKind::WrongSum, "partition has no parts");
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (parts_[j] <= 0) {
      throw OrbitError(ErrorKind::NonPositivePart,
                       "part " + std::to_string(j + 1) + " is " + std::to_string(parts_[j]));
    }
    if (j > 0 && parts_[j] > parts_[j - 1]) {
      throw OrbitError(ErrorKind::NotWeaklyDecreasing,
                       "part " + std::to_string(j + 1) + " (" + std::to_string(parts_[j]) +
                           ") exceeds part " + std::to_string(j) + " (" +
                           std::to_string(parts_[j - 1]) + ")");
    }
  }
}

int Partition::sum() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int value) const noexcept {
  return static_cast<int>(std::ranges::count(parts_, value));
}

std::vector<int> Partition::dual() const {
  std::vector<int> s(static_cast<std::size_t>(parts_.front()), 0);
  // parts are sorted, so s_i is the length of the prefix with d_j >= i
  int j = size();
  for (int i = 1; i <= parts_.front(); ++i) {
    while (j > 0 && at(j) < i) --j;
    s[static_cast<std::size_t>(i - 1)] = j;
  }
  return s;
}

std::vector<int> parse_parts(std::string_view text) {
  std::vector<int> parts;
  std::string t = trim(text);
  if (t.size() >= 2 && t.front() == '[' && t.back() == ']') t = t.substr(1, t.size() - 2);
  if (trim(t).empty()) throw OrbitError(ErrorKind::ParseError, "empty partition");

  std::stringstream in(t);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto caret = item.find('^');
    int value = parse_int(item.substr(0, caret), text);
    int times = 1;
    if (caret != std::string::npos) {
      times = parse_int(item.substr(caret + 1), text);
      if (times < 1) {
        throw OrbitError(ErrorKind::ParseError, "exponent must be positive in '" + item + "'");
      }
    }
    parts.insert(parts.end(), static_cast<std::size_t>(times), value);
  }
  return parts;
}

std::string format_partition(const Partition& p) {
  std::string out;
  auto parts = p.parts();
  for (std::size_t j = 0; j < parts.size();) {
    std::size_t run = j;
    while (run < parts.size() && parts[run] == parts[j]) ++run;
    if (!out.empty()) out += ',';
    out += std::to_string(parts[j]);
    if (run - j > 1) out += '^' + std::to_string(run - j);
    j = run;
  }
  return out;
}

std::string_view to_string(VeryEvenLabel label) { return label == VeryEvenLabel::I ? "I" : "II"; }

VeryEvenLabel parse_very_even_label(std::string_view text) {
  std::string t = trim(text);
  if (t == "I" || t == "i" || t == "1") return VeryEvenLabel::I;
  if (t == "II" || t == "ii" || t == "2") return VeryEvenLabel::II;
  throw OrbitError(ErrorKind::ParseError, "very even label must be I or II, got '" + t + "'");
}

bool is_very_even(const LieType& type, const Partition& p) {
  return type.family() == Family::SO_EVEN &&
         std::ranges::all_of(p.parts(), [](int d) { return d % 2 == 0; });
}

ClassicalOrbit validate_orbit(const LieType& type, std::span<const int> parts,
                              std::optional<VeryEvenLabel> label) {
  Partition p(std::vector<int>(parts.begin(), parts.end()));
  if (p.sum() != type.m()) {
    throw OrbitError(ErrorKind::WrongSum, "parts sum to " + std::to_string(p.sum()) +
                                              " but " + type.name() + " needs " +
                                              std::to_string(type.m()));
  }

  // SP: odd parts need even multiplicity; SO: even parts do.
  if (type.family() != Family::SL) {
    int constrained_parity = type.family() == Family::SP ? 1 : 0;
    for (int j = 1; j <= p.size(); ++j) {
      int value = p.at(j);
      if (j > 1 && p.at(j - 1) == value) continue;
      int mult = p.multiplicity(value);
      if (value % 2 == constrained_parity && mult % 2 != 0) {
        throw OrbitError(ErrorKind::ParityMultiplicityViolation,
                         std::string(value % 2 ? "odd" : "even") + " part " +
                             std::to_string(value) + " has odd multiplicity " +
                             std::to_string(mult) + " in " + type.name());
      }
    }
  }

  bool very_even = is_very_even(type, p);
  if (label && !very_even) {
    throw OrbitError(ErrorKind::UnexpectedLabel,
                     "label " + std::string(to_string(*label)) + " given for [" +
                         format_partition(p) + "], which is not a very even so_2n partition");
  }
  if (very_even && !label) label = VeryEvenLabel::I;
  return ClassicalOrbit{type, std::move(p), label};
}

PartitionProfile profile(const ClassicalOrbit& orbit) {
  const Partition& p = orbit.partition;
  PartitionProfile prof;
  for (int d : p.parts()) ++prof.r[d];
  prof.s = p.dual();
  prof.k = static_cast<int>(prof.r.size());
  prof.c = std::accumulate(p.parts().begin(), p.parts().end(), 0,
                           [](int acc, int d) { return std::gcd(acc, d); });

  const Family family = orbit.lie_type.family();
  prof.rather_odd = true;
  for (auto [value, mult] : prof.r) {
    if (value % 2) {
      ++prof.a;
      if (mult != 1) prof.rather_odd = false;
    } else {
      ++prof.b;
    }
    if (mult == 2) {
      if (family == Family::SP && value % 2 == 0) ++prof.l;
      if ((family == Family::SO_ODD || family == Family::SO_EVEN) && value % 2 == 1) ++prof.l;
    }
  }
  prof.all_same_parity = prof.a == 0 || prof.b == 0;
  return prof;
}

bool is_even_orbit(const ClassicalOrbit& orbit) {
  auto parts = orbit.partition.parts();
  int parity = parts.front() % 2;
  return std::ranges::all_of(parts, [parity](int d) { return d % 2 == parity; });
}

bool is_zero_orbit(const ClassicalOrbit& orbit) { return orbit.partition.at(1) == 1; }

std::int64_t orbit_dimension(const ClassicalOrbit& orbit) {
  const std::int64_t m = orbit.lie_type.m();
  std::int64_t sum_sq = 0;
  for (int s : orbit.partition.dual()) sum_sq += static_cast<std::int64_t>(s) * s;
  const auto parts = orbit.partition.parts();
  const std::int64_t odd = std::ranges::count_if(parts, [](int d) { return d % 2 == 1; });

  switch (orbit.lie_type.family()) {
    case Family::SL: return m * m - sum_sq;
    case Family::SP: return m * (m + 1) / 2 - (sum_sq + odd) / 2;
    case Family::SO_ODD:
    case Family::SO_EVEN: return m * (m - 1) / 2 - (sum_sq - odd) / 2;
  }
  return 0;
}

ClassicalOrbit minimal_orbit(const LieType& type) {
  const int m = type.m();
  std::vector<int> parts;
  switch (type.family()) {
    case Family::SL:
    case Family::SP:
      if (type.family() == Family::SP && m < 6) {
        throw OrbitError(ErrorKind::RankTooSmall, "minimal orbit of sp_2n needs n >= 3");
      }
      parts = {2};
      parts.insert(parts.end(), static_cast<std::size_t>(m - 2), 1);
      break;
    case Family::SO_ODD:
    case Family::SO_EVEN:
      if (type.family() == Family::SO_ODD && m < 5) {
        throw OrbitError(ErrorKind::RankTooSmall, "minimal orbit of so_{2n+1} needs n >= 2");
      }
      if (type.family() == Family::SO_EVEN && m < 8) {
        throw OrbitError(ErrorKind::RankTooSmall, "minimal orbit of so_2n needs n >= 4");
      }
      parts = {2, 2};
      parts.insert(parts.end(), static_cast<std::size_t>(m - 4), 1);
      break;
  }
  return validate_orbit(type, parts);
}

}  // namespace orbitres
