#include "anyonwalk/braid_word.hpp"

#include <algorithm>
#include <sstream>

#include "anyonwalk/errors.hpp"

namespace anyonwalk {

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters) : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) throw domain_error("strand-mismatch", "braid needs at least one strand");
  for (const auto& l : letters_) {
    if (l.index < 1 || l.index >= strands)
      throw domain_error("index-out-of-range", "generator b_" + std::to_string(l.index) + " not in B_" +
                                                  std::to_string(strands));
    if (l.power != 1 && l.power != -1)
      throw domain_error("invalid-power", "braid letters carry power +1 or -1");
  }
}

BraidWord BraidWord::parse(int strands, const std::string& text) {
  std::istringstream in(text);
  std::vector<BraidLetter> letters;
  std::string token;
  while (in >> token) {
    int value = 0;
    try {
      std::size_t used = 0;
      value = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw usage_error("bad braid letter '" + token + "'");
    }
    if (value == 0) throw usage_error("braid letter 0 is not a generator");
    letters.push_back({value < 0 ? -value : value, value < 0 ? -1 : 1});
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.power = -l.power;
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::then(const BraidWord& next) const {
  if (next.strands_ != strands_) throw domain_error("strand-mismatch", "words on different strand counts");
  std::vector<BraidLetter> out = letters_;
  out.insert(out.end(), next.letters_.begin(), next.letters_.end());
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::free_reduced() const {
  std::vector<BraidLetter> stack;
  stack.reserve(letters_.size());
  for (const auto& l : letters_) {
    if (!stack.empty() && stack.back().index == l.index && stack.back().power == -l.power)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return BraidWord(strands_, std::move(stack));
}

BraidWord BraidWord::rotated(std::size_t shift) const {
  std::vector<BraidLetter> out = letters_;
  if (!out.empty()) std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift % out.size()), out.end());
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::widened(int strands) const {
  if (strands < strands_) throw domain_error("strand-mismatch", "cannot narrow a braid word");
  return BraidWord(strands, letters_);
}

int BraidWord::writhe() const {
  int w = 0;
  for (const auto& l : letters_) w += l.power;
  return w;
}

std::string BraidWord::to_string() const {
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l.index * l.power);
  }
  return out;
}

}  // namespace anyonwalk
