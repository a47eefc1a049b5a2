#include "regpow/subsets.hpp"

namespace regpow {

std::vector<int> subset_elements(Subset s) {
  std::vector<int> out;
  while (s) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

std::string subset_str(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : subset_elements(s)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  out += "}";
  return out;
}

bool subset_lex_less(Subset a, Subset b) {
  while (a && b) {
    int ea = std::countr_zero(a);
    int eb = std::countr_zero(b);
    if (ea != eb) return ea < eb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

}  // namespace regpow
