#pragma once

#include <vector>

#include "unbordered/partial_word.hpp"
#include "../oracles.hpp"

inline oracle::Cells cells_of(const unbordered::PartialWord& w) {
  return oracle::Cells(w.symbols().begin(), w.symbols().end());
}

/// Calls f on every partial word of length n over k letters and the hole.
template <class F>
void for_each_word(int n, int k, F&& f) {
  std::vector<unbordered::Symbol> s(static_cast<std::size_t>(n), unbordered::hole);
  while (true) {
    f(unbordered::PartialWord(s, unbordered::Alphabet(static_cast<std::size_t>(k))));
    std::size_t p = 0;
    while (p < s.size()) {
      if (++s[p] < k) break;
      s[p] = unbordered::hole;
      ++p;
    }
    if (p == s.size()) return;
  }
}
