#pragma once

#include <random>

#include "wfree/classical.hpp"
#include "wfree/freefield.hpp"
#include "wfree/wbasis.hpp"

namespace testutil {

using namespace wfree;

inline std::vector<Kind> kinds_of(const Family& f) {
  if (f.group == Group::Sp) return {Kind::Beta, Kind::Gamma};
  if (f.group == Group::O) return {Kind::Phi};
  return {Kind::Beta, Kind::Gamma, Kind::Phi};
}

inline GenSym random_gen(std::mt19937& rng, const Family& f, int maxd) {
  auto ks = kinds_of(f);
  Kind k = ks[rng() % ks.size()];
  int color = (k == Kind::Phi && f.group == Group::Osp) ? 1 : 1 + static_cast<int>(rng() % f.n);
  return GenSym(k, color, static_cast<int>(rng() % (maxd + 1)));
}

// Homogeneous in doubled weight w2 and in parity.
inline VPoly random_vpoly(std::mt19937& rng, const Family& f, int w2, int parity, int terms = 3) {
  VPoly out;
  for (int tries = 0; tries < 300 && static_cast<int>(out.size()) < terms; ++tries) {
    Mono m;
    int left = w2, odd = 0;
    while (left > 0) {
      GenSym g = random_gen(rng, f, (left - 1) / 2);
      m.push_back(g);
      left -= g.weight2();
      odd += g.odd();
    }
    if (left || odd % 2 != parity) continue;
    int s = canonicalize(m);
    int c = static_cast<int>(rng() % 7) - 3;
    if (s && c) out.add_term(m, frac(s * c, 1 + static_cast<int>(rng() % 3)));
  }
  return out;
}

inline WGen random_wgen(std::mt19937& rng, int maxw) {
  if (rng() % 2) {
    int m = 1 + 2 * static_cast<int>(rng() % ((maxw) / 2));
    return WGen::W(m, static_cast<int>(rng() % std::max(1, maxw - m)));
  }
  int a = static_cast<int>(rng() % 3);
  int b = a + 1 + static_cast<int>(rng() % 3);
  return WGen::Om(a, b, static_cast<int>(rng() % 2));
}

inline WPoly random_wpoly(std::mt19937& rng, int maxw, int maxlen, int terms = 3) {
  WPoly out;
  for (int t = 0; t < terms; ++t) {
    Word w;
    int len = 1 + static_cast<int>(rng() % maxlen);
    for (int i = 0; i < len; ++i) w.push_back(random_wgen(rng, maxw));
    out.add_term(w, frac(static_cast<int>(rng() % 9) - 4, 1 + static_cast<int>(rng() % 4)));
  }
  return out;
}

inline QPoly random_qpoly(std::mt19937& rng, int terms = 3) {
  QPoly out;
  for (int t = 0; t < terms; ++t) {
    QPoly m(frac(static_cast<int>(rng() % 9) - 4, 1 + static_cast<int>(rng() % 5)));
    int len = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < len; ++i) {
      int a = static_cast<int>(rng() % 5), b = static_cast<int>(rng() % 5);
      m = m * QPoly::Q(a, b);
    }
    out += m;
  }
  return out;
}

}  // namespace testutil
