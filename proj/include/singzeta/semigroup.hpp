#ifndef SINGZETA_SEMIGROUP_HPP_
#define SINGZETA_SEMIGROUP_HPP_

#include <compare>           // for strong_ordering
#include <cstddef>           // for size_t
#include <initializer_list>  // for initializer_list
#include <iosfwd>            // for ostream
#include <string>            // for string
#include <vector>            // for vector

namespace singzeta {

  // A point of N^d. Ordered lexicographically so it can key ordered
  // containers; the componentwise partial order is `le`.
  class ValueVec {
   public:
    ValueVec() = default;
    explicit ValueVec(std::vector<int> components);
    ValueVec(std::initializer_list<int> components)
        : ValueVec(std::vector<int>(components)) {}

    static ValueVec zero(std::size_t d) {
      return ValueVec(std::vector<int>(d, 0));
    }
    static ValueVec ones(std::size_t d) {
      return ValueVec(std::vector<int>(d, 1));
    }
    static ValueVec unit(std::size_t d, std::size_t i);
    // 1_I for a subset I of [d] given as a bitmask.
    static ValueVec indicator(std::size_t d, unsigned mask);

    std::size_t size() const noexcept {
      return _c.size();
    }
    int operator[](std::size_t i) const {
      return _c[i];
    }
    std::vector<int> const& components() const noexcept {
      return _c;
    }
    int norm() const noexcept;

    ValueVec& operator+=(ValueVec const& other);
    friend ValueVec operator+(ValueVec a, ValueVec const& b) {
      return a += b;
    }
    // Componentwise difference; throws if a negative component would result.
    friend ValueVec operator-(ValueVec const& a, ValueVec const& b);

    friend auto operator<=>(ValueVec const&, ValueVec const&) = default;
    friend bool operator==(ValueVec const&, ValueVec const&)  = default;

   private:
    std::vector<int> _c;
  };

  // Componentwise a <= b.
  bool     le(ValueVec const& a, ValueVec const& b);
  // Componentwise a < b in every coordinate.
  bool     lt_all(ValueVec const& a, ValueVec const& b);
  ValueVec meet(ValueVec const& a, ValueVec const& b);
  ValueVec join(ValueVec const& a, ValueVec const& b);

  std::string   to_string(ValueVec const& v);
  std::ostream& operator<<(std::ostream& os, ValueVec const& v);

  // Calls f(n) for every n with 0 <= n <= bound, in row-major order.
  template <typename F>
  void for_each_in_box(ValueVec const& bound, F&& f) {
    std::vector<int> cur(bound.size(), 0);
    while (true) {
      f(ValueVec(cur));
      std::size_t i = bound.size();
      for (; i > 0; --i) {
        if (cur[i - 1] < bound[i - 1]) {
          ++cur[i - 1];
          break;
        }
        cur[i - 1] = 0;
      }
      if (i == 0) {
        return;
      }
    }
  }

  // All n in N^d with |n| = m.
  std::vector<ValueVec> compositions(std::size_t d, int m);

  // Value semigroup S in N^d, encoded by its small elements S ∩ [0, c].
  // Membership of an arbitrary n is decided by truncation: n ∈ S iff
  // n ∧ c is a small element. Immutable after construction.
  class GoodSemigroup {
   public:
    std::size_t dimension() const noexcept {
      return _c.size();
    }
    ValueVec const& conductor() const noexcept {
      return _c;
    }
    // Sorted lexicographically.
    std::vector<ValueVec> const& small() const noexcept {
      return _small;
    }
    int delta() const noexcept {
      return _delta;
    }

    bool contains(ValueVec const& n) const;

    // True iff some s ∈ S has s_i = m_i and s_j >= m_j for j != i; stepping
    // from m to m + 1_i then raises h by one.
    bool fiber_step(ValueVec const& m, std::size_t i) const;

    // h(n) = dim_k O / {z : v(z) >= n}.
    int h_dim(ValueVec const& n) const;

    friend bool operator==(GoodSemigroup const& a, GoodSemigroup const& b) {
      return a._c == b._c && a._small == b._small;
    }

   private:
    friend GoodSemigroup from_small_elements(std::size_t,
                                             ValueVec const&,
                                             std::vector<ValueVec>);

    GoodSemigroup(ValueVec c, std::vector<ValueVec> small);
    std::size_t box_index(ValueVec const& n) const;
    void        check_dimension(ValueVec const& n) const;

    ValueVec              _c;
    std::vector<ValueVec> _small;
    // h over the box [0, c], row-major; filled eagerly so reads need no
    // synchronisation.
    std::vector<int> _h;
    int              _delta = 0;
  };

  // Returns every failed invariant with a witness; empty means valid.
  std::vector<std::string> validate_small_elements(
      std::size_t                  d,
      ValueVec const&              conductor,
      std::vector<ValueVec> const& small);

  // Throws InvalidSemigroup.
  GoodSemigroup from_small_elements(std::size_t           d,
                                    ValueVec const&       conductor,
                                    std::vector<ValueVec> small);

  // Throws NotCoprime.
  GoodSemigroup numerical_from_generators(std::vector<int> const& gens);

  // Semigroup of k + (conductor ideal) for a modulus with the given
  // multiplicities: {0} ∪ {n >= m}.
  GoodSemigroup from_modulus(std::vector<int> const& multiplicities);

  // Gorenstein symmetry; throws NotUnibranch for d > 1.
  bool is_symmetric(GoodSemigroup const& s);

  // Human-readable list "{(0,0), (1,1)}" of the small elements.
  std::string small_to_string(GoodSemigroup const& s);

}  // namespace singzeta

#endif  // SINGZETA_SEMIGROUP_HPP_
