#pragma once

#include <map>
#include <string>
#include <vector>

#include "smashhom/matrix.hpp"

namespace smashhom::detail {

/// Exponent vectors of total degree deg in d variables, ascending lex order.
inline void enumerate_monomials(unsigned d, long deg, std::vector<int>& cur,
                                std::vector<std::vector<int>>& out) {
  if (cur.size() + 1 == d) {
    cur.push_back(static_cast<int>(deg));
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (long a = 0; a <= deg; ++a) {
    cur.push_back(static_cast<int>(a));
    enumerate_monomials(d, deg - a, cur, out);
    cur.pop_back();
  }
}

/// Monomial bases per degree and the matrices of symmetric powers of linear
/// maps on them (images of monomials under substitution). Not thread-safe;
/// one instance per worker.
class SymCache {
 public:
  SymCache(unsigned d, long max_degree) : d_(d) {
    monos_.resize(max_degree + 1);
    idx_.resize(max_degree + 1);
    for (long deg = 0; deg <= max_degree; ++deg) {
      std::vector<int> cur;
      enumerate_monomials(d_, deg, cur, monos_[deg]);
      for (size_t i = 0; i < monos_[deg].size(); ++i) idx_[deg].emplace(monos_[deg][i], i);
    }
  }

  unsigned dim() const { return d_; }
  long max_degree() const { return static_cast<long>(monos_.size()) - 1; }
  const std::vector<std::vector<int>>& monomials(long deg) const { return monos_.at(deg); }
  size_t mono_index(long deg, const std::vector<int>& e) const { return idx_.at(deg).at(e); }

  /// Column a is the image of the a-th degree-deg monomial under h.
  const Matrix& sym(const Matrix& h, long deg) {
    const auto key = std::make_pair(h.key(), deg);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const size_t nm = monos_.at(deg).size();
    Matrix out(nm, nm, h.order());
    if (deg == 0) {
      out.at(0, 0) = Cyclotomic::one(h.order());
    } else {
      const Matrix& prev = sym(h, deg - 1);
      for (size_t a = 0; a < nm; ++a) {
        const std::vector<int>& alpha = monos_[deg][a];
        unsigned i = 0;
        while (alpha[i] == 0) ++i;
        std::vector<int> rest = alpha;
        rest[i] -= 1;
        const size_t aprev = mono_index(deg - 1, rest);
        for (size_t b = 0; b < monos_[deg - 1].size(); ++b) {
          const Cyclotomic& c = prev.at(b, aprev);
          if (c.is_zero()) continue;
          for (unsigned l = 0; l < d_; ++l) {
            const Cyclotomic& hli = h.at(l, i);
            if (hli.is_zero()) continue;
            std::vector<int> beta = monos_[deg - 1][b];
            beta[l] += 1;
            out.at(mono_index(deg, beta), a) += hli * c;
          }
        }
      }
    }
    return cache_.emplace(key, std::move(out)).first->second;
  }

 private:
  unsigned d_;
  std::vector<std::vector<std::vector<int>>> monos_;
  std::vector<std::map<std::vector<int>, size_t>> idx_;
  std::map<std::pair<std::string, long>, Matrix> cache_;
};

}  // namespace smashhom::detail
