#pragma once

#include <vector>

#include "liedelta/root_system.hpp"

namespace liedelta {

// A word in the simple reflections, stored left to right as written; the
// rightmost letter acts first. Letters are 1-based node labels.
class WeylWord {
public:
  WeylWord() = default;
  explicit WeylWord(std::vector<int> letters) : letters_(std::move(letters)) {}

  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }

  bool operator==(const WeylWord&) const = default;

private:
  std::vector<int> letters_;
};

// sigma_i(w) = w - w_i * alpha_i, on fundamental-weight coordinates.
Weight reflect(const RootSystem& rs, int i, const Weight& w);

// Applies the word to a weight, rightmost letter first.
Weight apply_word(const RootSystem& rs, const WeylWord& word, const Weight& w);

// The distinguished coset representative word for the miniscule node i, as
// an explicit letter sequence. For D with i one of the two spin nodes the
// word is a run of descending blocks whose first letter alternates between
// the spin nodes; E6 and E7 words are stored literally.
WeylWord canonical_word(const LieType& type, int i);

// Where the word sends the affine simple root alpha_j (j = 0 stands for
// -theta). Returns the index m with image alpha_m; throws std::domain_error
// if the image is not an affine simple root.
int affine_root_image(const RootSystem& rs, const WeylWord& word, int j);

// The images of alpha_0..alpha_l under the word, as a permutation vector.
// Throws std::domain_error if the images do not form a permutation.
std::vector<int> affine_permutation(const RootSystem& rs, const WeylWord& word);

// The closed-form permutation the canonical word for node i must induce.
std::vector<int> expected_permutation(const LieType& type, int i);

}  // namespace liedelta
