#include "liedelta/lie_type.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace liedelta {

namespace {

void check_rank(Family family, int rank) {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E: ok = rank == 6 || rank == 7 || rank == 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok)
    throw std::invalid_argument("invalid rank " + std::to_string(rank) + " for family " +
                                std::string(1, static_cast<char>(family)));
}

}  // namespace

LieType::LieType(Family family, int rank) : family_(family), rank_(rank) {
  check_rank(family, rank);
}

LieType LieType::parse(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("cannot parse Lie type '" + std::string(text) + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (letter < 'A' || letter > 'G')
    throw std::invalid_argument("unknown family letter in '" + std::string(text) + "'");
  int rank = 0;
  const char* first = text.data() + 1;
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, rank);
  if (ec != std::errc() || ptr != last)
    throw std::invalid_argument("cannot parse rank in '" + std::string(text) + "'");
  return LieType(static_cast<Family>(letter), rank);
}

std::string LieType::name() const {
  return std::string(1, static_cast<char>(family_)) + std::to_string(rank_);
}

}  // namespace liedelta
