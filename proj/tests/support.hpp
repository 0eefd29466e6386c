#pragma once

#include "mv/weyl.hpp"

namespace mv::test {

// 1-based letters, as written by hand.
inline WeylElement elem(const WeylGroup& W, std::initializer_list<int> letters) {
  Word w;
  for (int i : letters) w.push_back(i - 1);
  return W.from_word(w);
}

inline Word word(std::initializer_list<int> letters) {
  Word w;
  for (int i : letters) w.push_back(i - 1);
  return w;
}

}  // namespace mv::test
