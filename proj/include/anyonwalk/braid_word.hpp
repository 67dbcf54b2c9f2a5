#pragma once

#include <string>
#include <vector>

namespace anyonwalk {

struct BraidLetter {
  int index = 1;  // generator b_index, 1 <= index <= strands-1
  int power = 1;  // +1 or -1

  bool operator==(const BraidLetter&) const = default;
};

/// A word in the braid group B_n. Letters are kept in the order they act:
/// the first letter is applied first (the bottom of the braid diagram).
class BraidWord {
 public:
  BraidWord() = default;
  BraidWord(int strands, std::vector<BraidLetter> letters);

  /// Parses whitespace-separated signed generator indices, "1 -2 1".
  static BraidWord parse(int strands, const std::string& text);
  static BraidWord identity(int strands) { return BraidWord(strands, {}); }

  int strands() const { return strands_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Reverses the order and flips every power.
  BraidWord inverse() const;
  /// This word followed by `next` (next acts afterwards).
  BraidWord then(const BraidWord& next) const;
  /// Cancels adjacent inverse letters until none remain.
  BraidWord free_reduced() const;
  /// Moves the first `shift` letters to the end.
  BraidWord rotated(std::size_t shift) const;
  /// Same letters on more strands.
  BraidWord widened(int strands) const;
  int writhe() const;

  /// Signed indices separated by spaces, "1 -2 1".
  std::string to_string() const;

  bool operator==(const BraidWord&) const = default;

 private:
  int strands_ = 2;
  std::vector<BraidLetter> letters_;
};

}  // namespace anyonwalk
