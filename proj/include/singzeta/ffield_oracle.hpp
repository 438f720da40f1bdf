#ifndef SINGZETA_FFIELD_ORACLE_HPP_
#define SINGZETA_FFIELD_ORACLE_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint8_t, uint64_t
#include <optional>  // for optional
#include <string>    // for string
#include <utility>   // for pair
#include <vector>    // for vector

#include "singzeta/semigroup.hpp"

namespace singzeta {

  inline constexpr std::uint64_t kDefaultWorkLimit = 10'000'000;

  // Primes accepted by the oracle.
  bool is_oracle_prime(int p) noexcept;

  class FpElem {
   public:
    FpElem(long value, int p);

    int value() const noexcept {
      return _v;
    }
    int prime() const noexcept {
      return _p;
    }
    bool is_zero() const noexcept {
      return _v == 0;
    }

    FpElem operator+(FpElem const& b) const;
    FpElem operator-(FpElem const& b) const;
    FpElem operator*(FpElem const& b) const;
    FpElem operator-() const;
    // Throws DivisionByZero on zero.
    FpElem inverse() const;

    friend bool operator==(FpElem const&, FpElem const&) = default;

   private:
    int _v;
    int _p;
  };

  using Row = std::vector<std::uint8_t>;

  // One coefficient array per branch, little-endian in t; array i has length
  // B_i and arithmetic truncates there.
  struct TruncSeriesVec {
    std::vector<Row> branches;

    std::size_t dimension() const noexcept {
      return branches.size();
    }
    friend bool operator==(TruncSeriesVec const&, TruncSeriesVec const&)
        = default;
  };

  // Componentwise product truncated at the shorter length per branch.
  TruncSeriesVec multiply(TruncSeriesVec const& a,
                          TruncSeriesVec const& b,
                          int                   p);

  // Componentwise least nonzero index; nullopt flags an element with a
  // component that vanishes up to the truncation (zero divisor, or a value
  // the truncation cannot see).
  std::optional<ValueVec> value_vector(TruncSeriesVec const& z);

  struct RingModel {
    int                         p = 2;
    std::size_t                 d = 1;
    std::vector<TruncSeriesVec> generators;  // the unit is implicit
    ValueVec                    conductor;
    ValueVec                    truncation;

    // Pads or cuts generators to the truncation and reduces coefficients;
    // throws InvalidInput or TruncationTooSmall (truncation must be at least
    // 2c + 1).
    void normalize();
  };

  // Coordinates (branch, exponent) of prod_i k[t]/(t^{B_i}), ordered by
  // exponent then branch.
  class ColumnLayout {
   public:
    ColumnLayout() = default;
    explicit ColumnLayout(ValueVec bound);

    std::size_t size() const noexcept {
      return _pos.size();
    }
    ValueVec const& bound() const noexcept {
      return _bound;
    }
    // (branch, exponent) of a column.
    std::pair<std::size_t, int> position(std::size_t col) const {
      return _pos[col];
    }
    std::size_t column(std::size_t branch, int exponent) const;

    Row            flatten(TruncSeriesVec const& z) const;
    TruncSeriesVec unflatten(Row const& row) const;

   private:
    ValueVec                                 _bound;
    std::vector<std::pair<std::size_t, int>> _pos;
    // column of (branch, exp) at _offset[branch] + exp
    std::vector<std::size_t> _offset;
    std::vector<std::size_t> _col_of;
  };

  // Reduced row-echelon basis of a subspace of F_p^n; the pivot of a row is
  // its first nonzero column. The row list is a canonical form of the span.
  class EchelonBasis {
   public:
    EchelonBasis(int p, std::size_t ncols);

    // True if the rank increased.
    bool insert(Row row);
    void reduce(Row& row) const;
    bool contains(Row row) const;

    std::size_t rank() const noexcept {
      return _rows.size();
    }
    std::size_t columns() const noexcept {
      return _ncols;
    }
    std::vector<Row> const& rows() const noexcept {
      return _rows;
    }
    std::vector<std::size_t> const& pivots() const noexcept {
      return _pivots;
    }
    std::string key() const;

   private:
    int                      _p;
    std::size_t              _ncols;
    std::vector<Row>         _rows;
    std::vector<std::size_t> _pivots;
    std::vector<std::uint8_t> _inv;
  };

  struct AlgebraBasis {
    ColumnLayout layout;
    EchelonBasis echelon;

    std::size_t dimension() const noexcept {
      return echelon.rank();
    }
    std::vector<TruncSeriesVec> elements() const;
  };

  // Image of O in prod_i k[t]/(t^{B_i}): closes {1} ∪ generators under
  // products until the dimension stabilizes. Throws WorkLimitExceeded when the
  // ambient box prod_i B_i exceeds the limit.
  AlgebraBasis algebra_closure_basis(RingModel const& model,
                                     std::uint64_t    work_limit
                                     = kDefaultWorkLimit);

  struct ExtractedValues {
    // {v(z) ∧ c} over enumerated non-flagged elements, sorted.
    std::vector<ValueVec> small;
    // Values in [c, 2c] never attained; nonempty means the declared conductor
    // is inconsistent with the model.
    std::vector<ValueVec> missing_above_conductor;
    std::uint64_t         enumerated = 0;

    // Fixture small elements absent from `small`, and vice versa.
    std::vector<ValueVec> missing_from(GoodSemigroup const& s) const;
    std::vector<ValueVec> extra_over(GoodSemigroup const& s) const;
    bool                  matches(GoodSemigroup const& s) const;
  };

  // Brute-force ground truth for one ring model. The basis is computed once;
  // all queries are const and safe to call concurrently.
  class RingOracle {
   public:
    explicit RingOracle(RingModel     model,
                        std::uint64_t work_limit = kDefaultWorkLimit);

    RingModel const& model() const noexcept {
      return _model;
    }
    AlgebraBasis const& basis() const noexcept {
      return _basis;
    }

    ExtractedValues extract_values() const;
    // Throws InvalidSemigroup when the extracted set is not a semigroup with
    // the declared conductor.
    GoodSemigroup semigroup() const;

    // rank of O projected to the coordinates below n. Needs n + c <= B.
    int h_dim(ValueVec const& n) const;

    // #{zO : v(z) = n}, counted as distinct ideals of O / J(n + c).
    std::uint64_t count_principal_ideals(ValueVec const& n) const;

   private:
    EchelonBasis project(ColumnLayout const& target) const;

    RingModel     _model;
    std::uint64_t _limit;
    AlgebraBasis  _basis;
  };

  GoodSemigroup semigroup_from_model(RingModel const& model,
                                     std::uint64_t    work_limit
                                     = kDefaultWorkLimit);
  int           h_dim_oracle(RingModel const& model, ValueVec const& n);
  std::uint64_t count_principal_ideals(RingModel const& model,
                                       ValueVec const&  n,
                                       std::uint64_t    work_limit
                                       = kDefaultWorkLimit);

}  // namespace singzeta

#endif  // SINGZETA_FFIELD_ORACLE_HPP_
