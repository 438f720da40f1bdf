#include "singzeta/semigroup.hpp"

#include <algorithm>  // for sort, unique, binary_search, max
#include <numeric>    // for gcd, accumulate
#include <ostream>    // for ostream
#include <set>        // for set

#include "singzeta/errors.hpp"

namespace singzeta {

  ////////////////////////////////////////////////////////////////////////
  // ValueVec
  ////////////////////////////////////////////////////////////////////////

  ValueVec::ValueVec(std::vector<int> components) : _c(std::move(components)) {
    for (int x : _c) {
      if (x < 0) {
        throw InvalidInput("value vectors have non-negative components");
      }
    }
  }

  ValueVec ValueVec::unit(std::size_t d, std::size_t i) {
    std::vector<int> c(d, 0);
    c.at(i) = 1;
    return ValueVec(std::move(c));
  }

  ValueVec ValueVec::indicator(std::size_t d, unsigned mask) {
    std::vector<int> c(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
      c[i] = (mask >> i) & 1u;
    }
    return ValueVec(std::move(c));
  }

  int ValueVec::norm() const noexcept {
    return std::accumulate(_c.begin(), _c.end(), 0);
  }

  ValueVec& ValueVec::operator+=(ValueVec const& other) {
    if (other.size() != size()) {
      throw DimensionMismatch("adding value vectors of different length");
    }
    for (std::size_t i = 0; i < _c.size(); ++i) {
      _c[i] += other._c[i];
    }
    return *this;
  }

  ValueVec operator-(ValueVec const& a, ValueVec const& b) {
    if (a.size() != b.size()) {
      throw DimensionMismatch("subtracting value vectors of different length");
    }
    std::vector<int> c(a.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] = a[i] - b[i];
    }
    return ValueVec(std::move(c));
  }

  bool le(ValueVec const& a, ValueVec const& b) {
    if (a.size() != b.size()) {
      throw DimensionMismatch("comparing value vectors of different length");
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] > b[i]) {
        return false;
      }
    }
    return true;
  }

  bool lt_all(ValueVec const& a, ValueVec const& b) {
    if (a.size() != b.size()) {
      throw DimensionMismatch("comparing value vectors of different length");
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] >= b[i]) {
        return false;
      }
    }
    return true;
  }

  ValueVec meet(ValueVec const& a, ValueVec const& b) {
    if (a.size() != b.size()) {
      throw DimensionMismatch("meet of value vectors of different length");
    }
    std::vector<int> c(a.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] = std::min(a[i], b[i]);
    }
    return ValueVec(std::move(c));
  }

  ValueVec join(ValueVec const& a, ValueVec const& b) {
    if (a.size() != b.size()) {
      throw DimensionMismatch("join of value vectors of different length");
    }
    std::vector<int> c(a.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] = std::max(a[i], b[i]);
    }
    return ValueVec(std::move(c));
  }

  std::string to_string(ValueVec const& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += (i == 0 ? "" : ",") + std::to_string(v[i]);
    }
    return out + ")";
  }

  std::ostream& operator<<(std::ostream& os, ValueVec const& v) {
    return os << to_string(v);
  }

  std::vector<ValueVec> compositions(std::size_t d, int m) {
    std::vector<ValueVec> out;
    if (d == 0) {
      return out;
    }
    std::vector<int> cur(d, 0);
    auto rec = [&](auto& self, std::size_t i, int left) -> void {
      if (i + 1 == d) {
        cur[i] = left;
        out.emplace_back(cur);
        return;
      }
      for (int k = left; k >= 0; --k) {
        cur[i] = k;
        self(self, i + 1, left - k);
      }
    };
    rec(rec, 0, m);
    std::sort(out.begin(), out.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // h over the box [0, c]
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool in_small(std::vector<ValueVec> const& small, ValueVec const& n) {
      return std::binary_search(small.begin(), small.end(), n);
    }

    bool fiber_condition(std::vector<ValueVec> const& small,
                         ValueVec const&              c,
                         ValueVec const&              m,
                         std::size_t                  i) {
      // s with s_i = m_i, s_j >= m_j exists iff some small t has
      // t_i = min(m_i, c_i) and t_j >= min(m_j, c_j).
      for (auto const& t : small) {
        if (t[i] != std::min(m[i], c[i])) {
          continue;
        }
        bool ok = true;
        for (std::size_t j = 0; j < c.size() && ok; ++j) {
          ok = (j == i) || t[j] >= std::min(m[j], c[j]);
        }
        if (ok) {
          return true;
        }
      }
      return false;
    }

    std::vector<std::size_t> strides(ValueVec const& c) {
      std::vector<std::size_t> s(c.size());
      std::size_t              acc = 1;
      for (std::size_t i = c.size(); i > 0; --i) {
        s[i - 1] = acc;
        acc *= static_cast<std::size_t>(c[i - 1]) + 1;
      }
      return s;
    }

    std::vector<int> h_table(ValueVec const& c, std::vector<ValueVec> const& small) {
      auto        st = strides(c);
      std::size_t total
          = c.size() == 0 ? 1 : st[0] * (static_cast<std::size_t>(c[0]) + 1);
      std::vector<int> h(total, 0);
      std::size_t      idx = 0;
      for_each_in_box(c, [&](ValueVec const& n) {
        for (std::size_t i = 0; i < n.size(); ++i) {
          if (n[i] > 0) {
            auto        m    = n - ValueVec::unit(n.size(), i);
            std::size_t prev = idx - st[i];
            h[idx]           = h[prev] + (fiber_condition(small, c, m, i) ? 1 : 0);
            break;
          }
        }
        ++idx;
      });
      return h;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // GoodSemigroup
  ////////////////////////////////////////////////////////////////////////

  GoodSemigroup::GoodSemigroup(ValueVec c, std::vector<ValueVec> small)
      : _c(std::move(c)), _small(std::move(small)) {
    std::sort(_small.begin(), _small.end());
    _small.erase(std::unique(_small.begin(), _small.end()), _small.end());
    _h     = h_table(_c, _small);
    _delta = _c.norm() - _h.back();
  }

  void GoodSemigroup::check_dimension(ValueVec const& n) const {
    if (n.size() != _c.size()) {
      throw DimensionMismatch("expected a vector of length "
                              + std::to_string(_c.size()) + ", got "
                              + to_string(n));
    }
  }

  std::size_t GoodSemigroup::box_index(ValueVec const& n) const {
    auto        st  = strides(_c);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n.size(); ++i) {
      idx += st[i] * static_cast<std::size_t>(n[i]);
    }
    return idx;
  }

  bool GoodSemigroup::contains(ValueVec const& n) const {
    check_dimension(n);
    return in_small(_small, meet(n, _c));
  }

  bool GoodSemigroup::fiber_step(ValueVec const& m, std::size_t i) const {
    check_dimension(m);
    return fiber_condition(_small, _c, m, i);
  }

  int GoodSemigroup::h_dim(ValueVec const& n) const {
    check_dimension(n);
    auto m = meet(n, _c);
    return _h[box_index(m)] + (n.norm() - m.norm());
  }

  std::vector<std::string>
  validate_small_elements(std::size_t                  d,
                          ValueVec const&              c,
                          std::vector<ValueVec> const& small_in) {
    std::vector<std::string> bad;
    if (d == 0) {
      bad.push_back("branch count must be at least 1");
      return bad;
    }
    if (c.size() != d) {
      bad.push_back("conductor " + to_string(c) + " does not have length "
                    + std::to_string(d));
      return bad;
    }
    for (auto const& s : small_in) {
      if (s.size() != d) {
        bad.push_back("small element " + to_string(s)
                      + " has the wrong length");
      } else if (!le(s, c)) {
        bad.push_back("small element " + to_string(s)
                      + " is not below the conductor " + to_string(c));
      }
    }
    if (!bad.empty()) {
      return bad;
    }
    std::vector<ValueVec> small = small_in;
    std::sort(small.begin(), small.end());
    small.erase(std::unique(small.begin(), small.end()), small.end());

    if (!in_small(small, ValueVec::zero(d))) {
      bad.push_back("0 is not a small element");
    }
    if (!in_small(small, c)) {
      bad.push_back("conductor " + to_string(c) + " is not a small element");
    }
    for (std::size_t i = 0; i < d; ++i) {
      if (c[i] > 0) {
        auto below = c - ValueVec::unit(d, i);
        if (in_small(small, below)) {
          bad.push_back("conductor is not minimal: " + to_string(below)
                        + " already has all its upper translates in S");
        }
      }
    }
    for (std::size_t a = 0; a < small.size(); ++a) {
      for (std::size_t b = a + 1; b < small.size(); ++b) {
        auto m = meet(small[a], small[b]);
        if (!in_small(small, m)) {
          bad.push_back("not closed under min: " + to_string(small[a]) + " ∧ "
                        + to_string(small[b]) + " = " + to_string(m));
        }
      }
    }
    for (std::size_t a = 0; a < small.size(); ++a) {
      for (std::size_t b = a; b < small.size(); ++b) {
        auto s = meet(small[a] + small[b], c);
        if (!in_small(small, s)) {
          bad.push_back("not closed under addition: (" + to_string(small[a])
                        + " + " + to_string(small[b]) + ") ∧ c = "
                        + to_string(s));
        }
      }
    }
    if (bad.empty()) {
      int delta = c.norm() - h_table(c, small).back();
      if (delta < 0) {
        bad.push_back("negative singularity degree " + std::to_string(delta));
      }
    }
    return bad;
  }

  GoodSemigroup from_small_elements(std::size_t           d,
                                    ValueVec const&       conductor,
                                    std::vector<ValueVec> small) {
    auto bad = validate_small_elements(d, conductor, small);
    if (!bad.empty()) {
      throw InvalidSemigroup(std::move(bad));
    }
    return GoodSemigroup(conductor, std::move(small));
  }

  GoodSemigroup numerical_from_generators(std::vector<int> const& gens) {
    if (gens.empty()) {
      throw InvalidInput("a numerical semigroup needs at least one generator");
    }
    int g = 0, top = 0;
    for (int x : gens) {
      if (x <= 0) {
        throw InvalidInput("generators must be positive");
      }
      g   = std::gcd(g, x);
      top = std::max(top, x);
    }
    if (g != 1) {
      throw NotCoprime("generators have gcd " + std::to_string(g));
    }
    // The Frobenius number is below top^2.
    std::size_t const limit = 2 * static_cast<std::size_t>(top) * top + 1;
    std::vector<bool> in(limit + 1, false);
    in[0] = true;
    for (std::size_t n = 1; n <= limit; ++n) {
      for (int x : gens) {
        if (static_cast<std::size_t>(x) <= n && in[n - x]) {
          in[n] = true;
          break;
        }
      }
    }
    int c = 0;
    for (std::size_t n = 0; n <= limit; ++n) {
      if (!in[n]) {
        c = static_cast<int>(n) + 1;
      }
    }
    std::vector<ValueVec> small;
    for (int n = 0; n <= c; ++n) {
      if (in[n]) {
        small.push_back(ValueVec{n});
      }
    }
    return from_small_elements(1, ValueVec{c}, std::move(small));
  }

  GoodSemigroup from_modulus(std::vector<int> const& multiplicities) {
    if (multiplicities.empty()) {
      throw InvalidInput("a modulus needs at least one point");
    }
    for (int m : multiplicities) {
      if (m < 1) {
        throw InvalidInput("modulus multiplicities must be positive");
      }
    }
    // k + t k[[t]] is the whole discrete valuation ring.
    if (multiplicities == std::vector<int>{1}) {
      return numerical_from_generators({1});
    }
    std::size_t const d = multiplicities.size();
    ValueVec          c(multiplicities);
    return from_small_elements(d, c, {ValueVec::zero(d), c});
  }

  bool is_symmetric(GoodSemigroup const& s) {
    if (s.dimension() != 1) {
      throw NotUnibranch("symmetry is defined for one branch only");
    }
    int const c = s.conductor()[0];
    for (int x = 0; x < c; ++x) {
      if (s.contains(ValueVec{x}) == s.contains(ValueVec{c - 1 - x})) {
        return false;
      }
    }
    return true;
  }

  std::string small_to_string(GoodSemigroup const& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.small().size(); ++i) {
      out += (i == 0 ? "" : ", ") + to_string(s.small()[i]);
    }
    return out + "}";
  }

}  // namespace singzeta
