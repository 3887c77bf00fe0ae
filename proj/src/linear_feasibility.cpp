#include "laytrop/linear_feasibility.hpp"

#include <algorithm>
#include <set>

#include "laytrop/errors.hpp"

namespace laytrop {

namespace {

// Scales so the first nonzero coefficient has magnitude 1; lets duplicates collapse.
std::vector<Rational> normalized(const StrictInequality& q) {
  std::vector<Rational> key = q.coefficients;
  key.push_back(q.constant);
  for (const auto& c : key) {
    if (c != 0) {
      Rational s = abs(c);
      for (auto& k : key) k /= s;
      break;
    }
  }
  return key;
}

}  // namespace

bool strictly_feasible(std::vector<StrictInequality> system, std::size_t nvars) {
  for (const auto& q : system)
    if (q.coefficients.size() != nvars) throw DomainError("inequality arity mismatch");

  for (std::size_t var = nvars; var-- > 0;) {
    std::vector<StrictInequality> pos, neg, next;
    for (auto& q : system) {
      int s = sgn(q.coefficients[var]);
      if (s > 0) pos.push_back(std::move(q));
      else if (s < 0) neg.push_back(std::move(q));
      else next.push_back(std::move(q));
    }
    // An unknown bounded on one side only can always be pushed far enough.
    if (!pos.empty() && !neg.empty()) {
      for (const auto& p : pos) {
        for (const auto& n : neg) {
          Rational wp = -n.coefficients[var];
          Rational wn = p.coefficients[var];
          StrictInequality c;
          c.coefficients.resize(nvars);
          for (std::size_t k = 0; k < nvars; ++k) c.coefficients[k] = wp * p.coefficients[k] + wn * n.coefficients[k];
          c.coefficients[var] = 0;
          c.constant = wp * p.constant + wn * n.constant;
          next.push_back(std::move(c));
        }
      }
    }
    std::set<std::vector<Rational>> seen;
    system.clear();
    for (auto& q : next) {
      bool constant_only = std::all_of(q.coefficients.begin(), q.coefficients.end(),
                                       [](const Rational& c) { return c == 0; });
      if (constant_only) {
        if (q.constant <= 0) return false;
        continue;
      }
      if (seen.insert(normalized(q)).second) system.push_back(std::move(q));
    }
  }
  return std::all_of(system.begin(), system.end(), [](const StrictInequality& q) { return q.constant > 0; });
}

}  // namespace laytrop
