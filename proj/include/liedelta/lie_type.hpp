#pragma once

#include <string>
#include <string_view>

namespace liedelta {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// A simple Lie algebra identified by family letter and rank. Construction
// validates the rank range for the family (A: l >= 1, B and C: l >= 2,
// D: l >= 4, E: l in {6,7,8}, F: l = 4, G: l = 2) and throws
// std::invalid_argument otherwise.
class LieType {
public:
  LieType(Family family, int rank);

  // Accepts "A5", "e7", "B12": family letter immediately followed by the
  // rank in decimal, case-insensitive.
  static LieType parse(std::string_view text);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  bool operator==(const LieType&) const = default;

private:
  Family family_;
  int rank_;
};

}  // namespace liedelta
