#include "singzeta/ffield_oracle.hpp"

#include <algorithm>  // for lower_bound, min
#include <set>        // for set
#include <stdexcept>  // for logic_error

#include "singzeta/errors.hpp"

namespace singzeta {

  bool is_oracle_prime(int p) noexcept {
    switch (p) {
      case 2:
      case 3:
      case 5:
      case 7:
      case 11:
      case 13:
        return true;
      default:
        return false;
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // FpElem
  ////////////////////////////////////////////////////////////////////////

  FpElem::FpElem(long value, int p) : _v(0), _p(p) {
    if (!is_oracle_prime(p)) {
      throw InvalidInput("unsupported field characteristic "
                         + std::to_string(p));
    }
    long r = value % p;
    _v     = static_cast<int>(r < 0 ? r + p : r);
  }

  FpElem FpElem::operator+(FpElem const& b) const {
    return FpElem(_v + b._v, _p);
  }

  FpElem FpElem::operator-(FpElem const& b) const {
    return FpElem(_v - b._v, _p);
  }

  FpElem FpElem::operator*(FpElem const& b) const {
    return FpElem(static_cast<long>(_v) * b._v, _p);
  }

  FpElem FpElem::operator-() const {
    return FpElem(-_v, _p);
  }

  FpElem FpElem::inverse() const {
    if (_v == 0) {
      throw DivisionByZero("zero has no inverse");
    }
    for (int x = 1; x < _p; ++x) {
      if ((x * _v) % _p == 1) {
        return FpElem(x, _p);
      }
    }
    throw std::logic_error("no inverse in a prime field");
  }

  ////////////////////////////////////////////////////////////////////////
  // Truncated series
  ////////////////////////////////////////////////////////////////////////

  TruncSeriesVec multiply(TruncSeriesVec const& a,
                          TruncSeriesVec const& b,
                          int                   p) {
    if (a.dimension() != b.dimension()) {
      throw DimensionMismatch("multiplying series vectors of different length");
    }
    TruncSeriesVec out;
    out.branches.resize(a.dimension());
    for (std::size_t i = 0; i < a.dimension(); ++i) {
      auto const& x = a.branches[i];
      auto const& y = b.branches[i];
      std::size_t n = std::min(x.size(), y.size());
      std::vector<unsigned> acc(n, 0);
      for (std::size_t j = 0; j < n; ++j) {
        if (x[j] == 0) {
          continue;
        }
        for (std::size_t k = 0; j + k < n; ++k) {
          acc[j + k] += static_cast<unsigned>(x[j]) * y[k];
        }
      }
      Row r(n);
      for (std::size_t j = 0; j < n; ++j) {
        r[j] = static_cast<std::uint8_t>(acc[j] % p);
      }
      out.branches[i] = std::move(r);
    }
    return out;
  }

  std::optional<ValueVec> value_vector(TruncSeriesVec const& z) {
    std::vector<int> v(z.dimension(), -1);
    for (std::size_t i = 0; i < z.dimension(); ++i) {
      auto const& b = z.branches[i];
      for (std::size_t e = 0; e < b.size(); ++e) {
        if (b[e] != 0) {
          v[i] = static_cast<int>(e);
          break;
        }
      }
      if (v[i] < 0) {
        return std::nullopt;
      }
    }
    return ValueVec(std::move(v));
  }

  void RingModel::normalize() {
    if (!is_oracle_prime(p)) {
      throw InvalidInput("ring models need a prime p <= 13, got "
                         + std::to_string(p));
    }
    if (d == 0 || conductor.size() != d || truncation.size() != d) {
      throw InvalidInput("ring model conductor/truncation must have length d");
    }
    auto needed = conductor + conductor + ValueVec::ones(d);
    if (!le(needed, truncation)) {
      throw TruncationTooSmall("truncation " + to_string(truncation)
                               + " is below 2c+1 = " + to_string(needed));
    }
    for (auto& g : generators) {
      if (g.dimension() != d) {
        throw InvalidInput("generator has the wrong number of branches");
      }
      for (std::size_t i = 0; i < d; ++i) {
        auto& b = g.branches[i];
        b.resize(static_cast<std::size_t>(truncation[i]), 0);
        for (auto& x : b) {
          x = static_cast<std::uint8_t>(x % p);
        }
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // ColumnLayout
  ////////////////////////////////////////////////////////////////////////

  ColumnLayout::ColumnLayout(ValueVec bound) : _bound(std::move(bound)) {
    std::size_t const d   = _bound.size();
    int               top = 0;
    _offset.resize(d);
    std::size_t acc = 0;
    for (std::size_t i = 0; i < d; ++i) {
      _offset[i] = acc;
      acc += static_cast<std::size_t>(_bound[i]);
      top = std::max(top, _bound[i]);
    }
    _col_of.assign(acc, 0);
    for (int e = 0; e < top; ++e) {
      for (std::size_t i = 0; i < d; ++i) {
        if (e < _bound[i]) {
          _col_of[_offset[i] + e] = _pos.size();
          _pos.emplace_back(i, e);
        }
      }
    }
  }

  std::size_t ColumnLayout::column(std::size_t branch, int exponent) const {
    if (branch >= _bound.size() || exponent < 0 || exponent >= _bound[branch]) {
      throw InvalidInput("position outside the column layout");
    }
    return _col_of[_offset[branch] + exponent];
  }

  Row ColumnLayout::flatten(TruncSeriesVec const& z) const {
    Row row(_pos.size(), 0);
    for (std::size_t col = 0; col < _pos.size(); ++col) {
      auto [i, e] = _pos[col];
      auto const& b = z.branches.at(i);
      row[col]      = static_cast<std::size_t>(e) < b.size() ? b[e] : 0;
    }
    return row;
  }

  TruncSeriesVec ColumnLayout::unflatten(Row const& row) const {
    TruncSeriesVec z;
    z.branches.resize(_bound.size());
    for (std::size_t i = 0; i < _bound.size(); ++i) {
      z.branches[i].assign(static_cast<std::size_t>(_bound[i]), 0);
    }
    for (std::size_t col = 0; col < _pos.size(); ++col) {
      auto [i, e]         = _pos[col];
      z.branches[i][e] = row[col];
    }
    return z;
  }

  ////////////////////////////////////////////////////////////////////////
  // EchelonBasis
  ////////////////////////////////////////////////////////////////////////

  EchelonBasis::EchelonBasis(int p, std::size_t ncols)
      : _p(p), _ncols(ncols), _inv(static_cast<std::size_t>(p), 0) {
    for (int x = 1; x < p; ++x) {
      _inv[x] = static_cast<std::uint8_t>(FpElem(x, p).inverse().value());
    }
  }

  void EchelonBasis::reduce(Row& row) const {
    for (std::size_t k = 0; k < _rows.size(); ++k) {
      unsigned f = row[_pivots[k]];
      if (f == 0) {
        continue;
      }
      unsigned const neg = static_cast<unsigned>(_p) - f;
      auto const&    r   = _rows[k];
      for (std::size_t j = _pivots[k]; j < _ncols; ++j) {
        if (r[j] != 0) {
          row[j] = static_cast<std::uint8_t>((row[j] + neg * r[j]) % _p);
        }
      }
    }
  }

  bool EchelonBasis::insert(Row row) {
    if (row.size() != _ncols) {
      throw DimensionMismatch("row length does not match the basis");
    }
    reduce(row);
    std::size_t pc = 0;
    while (pc < _ncols && row[pc] == 0) {
      ++pc;
    }
    if (pc == _ncols) {
      return false;
    }
    unsigned const s = _inv[row[pc]];
    for (std::size_t j = pc; j < _ncols; ++j) {
      row[j] = static_cast<std::uint8_t>((row[j] * s) % _p);
    }
    for (auto& r : _rows) {
      unsigned f = r[pc];
      if (f == 0) {
        continue;
      }
      unsigned const neg = static_cast<unsigned>(_p) - f;
      for (std::size_t j = pc; j < _ncols; ++j) {
        if (row[j] != 0) {
          r[j] = static_cast<std::uint8_t>((r[j] + neg * row[j]) % _p);
        }
      }
    }
    auto at = std::lower_bound(_pivots.begin(), _pivots.end(), pc);
    auto k  = at - _pivots.begin();
    _pivots.insert(at, pc);
    _rows.insert(_rows.begin() + k, std::move(row));
    return true;
  }

  bool EchelonBasis::contains(Row row) const {
    if (row.size() != _ncols) {
      throw DimensionMismatch("row length does not match the basis");
    }
    reduce(row);
    return std::all_of(row.begin(), row.end(), [](auto x) { return x == 0; });
  }

  std::string EchelonBasis::key() const {
    std::string out;
    out.reserve(_rows.size() * _ncols);
    for (auto const& r : _rows) {
      out.append(r.begin(), r.end());
    }
    return out;
  }

  std::vector<TruncSeriesVec> AlgebraBasis::elements() const {
    std::vector<TruncSeriesVec> out;
    for (auto const& r : echelon.rows()) {
      out.push_back(layout.unflatten(r));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration helpers
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::uint64_t checked_power(int p, std::size_t k, std::uint64_t limit) {
      std::uint64_t n = 1;
      for (std::size_t i = 0; i < k; ++i) {
        n *= static_cast<std::uint64_t>(p);
        if (n > limit) {
          throw WorkLimitExceeded(std::to_string(p) + "^" + std::to_string(k)
                                  + " elements exceed the work limit "
                                  + std::to_string(limit));
        }
      }
      return n;
    }

    // Visits every F_p-combination of `gens` (including 0) as an odometer:
    // advancing digit k adds gens[k] once, and wrapping it from p-1 to 0 is
    // one more addition.
    template <typename F>
    void for_each_combination(std::vector<Row> const& gens,
                              int                     p,
                              std::size_t             ncols,
                              F&&                     f) {
      Row              cur(ncols, 0);
      std::vector<int> digit(gens.size(), 0);
      f(cur);
      while (true) {
        std::size_t k = 0;
        for (; k < gens.size(); ++k) {
          auto const& g = gens[k];
          for (std::size_t j = 0; j < ncols; ++j) {
            if (g[j] != 0) {
              cur[j] = static_cast<std::uint8_t>((cur[j] + g[j]) % p);
            }
          }
          if (++digit[k] < p) {
            break;
          }
          digit[k] = 0;
        }
        if (k == gens.size()) {
          return;
        }
        f(cur);
      }
    }

    TruncSeriesVec truncate(TruncSeriesVec z, ValueVec const& bound) {
      for (std::size_t i = 0; i < z.dimension(); ++i) {
        z.branches[i].resize(static_cast<std::size_t>(bound[i]), 0);
      }
      return z;
    }

    TruncSeriesVec one(ValueVec const& bound) {
      TruncSeriesVec z;
      for (std::size_t i = 0; i < bound.size(); ++i) {
        Row b(static_cast<std::size_t>(bound[i]), 0);
        if (!b.empty()) {
          b[0] = 1;
        }
        z.branches.push_back(std::move(b));
      }
      return z;
    }
  }  // namespace

  AlgebraBasis algebra_closure_basis(RingModel const& model_in,
                                     std::uint64_t    work_limit) {
    RingModel model = model_in;
    model.normalize();
    std::uint64_t box = 1;
    for (std::size_t i = 0; i < model.d; ++i) {
      box *= static_cast<std::uint64_t>(model.truncation[i]);
      if (box > work_limit) {
        throw WorkLimitExceeded("truncation box exceeds the work limit");
      }
    }
    ColumnLayout layout(model.truncation);
    EchelonBasis ech(model.p, layout.size());
    ech.insert(layout.flatten(one(model.truncation)));
    for (auto const& g : model.generators) {
      ech.insert(layout.flatten(g));
    }
    while (true) {
      std::size_t const before = ech.rank();
      std::vector<TruncSeriesVec> elems;
      for (auto const& r : ech.rows()) {
        elems.push_back(layout.unflatten(r));
      }
      for (std::size_t a = 0; a < elems.size(); ++a) {
        for (std::size_t b = a; b < elems.size(); ++b) {
          ech.insert(layout.flatten(multiply(elems[a], elems[b], model.p)));
        }
      }
      if (ech.rank() == before) {
        break;
      }
    }
    return AlgebraBasis{std::move(layout), std::move(ech)};
  }

  ////////////////////////////////////////////////////////////////////////
  // ExtractedValues
  ////////////////////////////////////////////////////////////////////////

  std::vector<ValueVec>
  ExtractedValues::missing_from(GoodSemigroup const& s) const {
    std::vector<ValueVec> out;
    std::set_difference(s.small().begin(),
                        s.small().end(),
                        small.begin(),
                        small.end(),
                        std::back_inserter(out));
    return out;
  }

  std::vector<ValueVec>
  ExtractedValues::extra_over(GoodSemigroup const& s) const {
    std::vector<ValueVec> out;
    std::set_difference(small.begin(),
                        small.end(),
                        s.small().begin(),
                        s.small().end(),
                        std::back_inserter(out));
    return out;
  }

  bool ExtractedValues::matches(GoodSemigroup const& s) const {
    return missing_above_conductor.empty() && small == s.small();
  }

  ////////////////////////////////////////////////////////////////////////
  // RingOracle
  ////////////////////////////////////////////////////////////////////////

  namespace {
    RingModel normalized(RingModel m) {
      m.normalize();
      return m;
    }
  }  // namespace

  RingOracle::RingOracle(RingModel model, std::uint64_t work_limit)
      : _model(normalized(std::move(model))),
        _limit(work_limit),
        _basis(algebra_closure_basis(_model, work_limit)) {}

  EchelonBasis RingOracle::project(ColumnLayout const& target) const {
    EchelonBasis out(_model.p, target.size());
    for (auto const& z : _basis.elements()) {
      out.insert(target.flatten(z));
    }
    return out;
  }

  ExtractedValues RingOracle::extract_values() const {
    std::size_t const d     = _model.d;
    ValueVec const&   c     = _model.conductor;
    ValueVec const    bound = c + c + ValueVec::ones(d);
    ColumnLayout      layout(bound);
    auto const        proj = project(layout);

    ExtractedValues out;
    out.enumerated = checked_power(_model.p, proj.rank(), _limit);

    // attained[n] for n in [0, bound - 1], row-major
    std::vector<std::size_t> stride(d);
    std::size_t              total = 1;
    for (std::size_t i = d; i > 0; --i) {
      stride[i - 1] = total;
      total *= static_cast<std::size_t>(bound[i - 1]);
    }
    std::vector<bool> attained(total, false);
    std::vector<int>  v(d);
    for_each_combination(proj.rows(), _model.p, layout.size(), [&](Row const& z) {
      std::fill(v.begin(), v.end(), -1);
      std::size_t seen = 0;
      for (std::size_t col = 0; col < z.size() && seen < d; ++col) {
        if (z[col] != 0) {
          auto [i, e] = layout.position(col);
          if (v[i] < 0) {
            v[i] = e;
            ++seen;
          }
        }
      }
      if (seen < d) {
        return;
      }
      std::size_t idx = 0;
      for (std::size_t i = 0; i < d; ++i) {
        idx += stride[i] * static_cast<std::size_t>(v[i]);
      }
      attained[idx] = true;
    });

    std::set<ValueVec> small;
    std::size_t        idx = 0;
    for_each_in_box(bound - ValueVec::ones(d), [&](ValueVec const& n) {
      if (attained[idx]) {
        small.insert(meet(n, c));
      } else if (le(c, n)) {
        out.missing_above_conductor.push_back(n);
      }
      ++idx;
    });
    out.small.assign(small.begin(), small.end());
    return out;
  }

  GoodSemigroup RingOracle::semigroup() const {
    auto values = extract_values();
    if (!values.missing_above_conductor.empty()) {
      std::vector<std::string> bad;
      for (auto const& n : values.missing_above_conductor) {
        bad.push_back("value " + to_string(n)
                      + " above the declared conductor is never attained");
      }
      throw InvalidSemigroup(std::move(bad));
    }
    return from_small_elements(_model.d, _model.conductor, values.small);
  }

  int RingOracle::h_dim(ValueVec const& n) const {
    if (n.size() != _model.d) {
      throw DimensionMismatch("value vector has the wrong length");
    }
    if (!le(n + _model.conductor, _model.truncation)) {
      throw TruncationTooSmall("h_dim needs n + c <= truncation, n = "
                               + to_string(n));
    }
    return static_cast<int>(project(ColumnLayout(n)).rank());
  }

  std::uint64_t RingOracle::count_principal_ideals(ValueVec const& n) const {
    std::size_t const d = _model.d;
    int const         p = _model.p;
    if (n.size() != d) {
      throw DimensionMismatch("value vector has the wrong length");
    }
    // Work modulo J(K), K = n + max(c, 1): zO ⊇ J(n + c), and the extra
    // unit keeps v(z) = n visible when c_i = 0.
    std::vector<int> k(d);
    for (std::size_t i = 0; i < d; ++i) {
      k[i] = n[i] + std::max(_model.conductor[i], 1);
    }
    ValueVec const K(k);
    if (!le(K, _model.truncation)) {
      throw TruncationTooSmall("counting at " + to_string(n)
                               + " needs truncation >= " + to_string(K));
    }

    // Full basis rows re-echelonized with the columns below n first, then
    // those in [n, K), then the rest: rows pivoting in the middle block are
    // lifts of a basis of J(n)/J(K).
    ColumnLayout const&      full = _basis.layout;
    std::vector<std::size_t> order;
    std::size_t              low = 0, mid = 0;
    for (int pass = 0; pass < 3; ++pass) {
      for (std::size_t col = 0; col < full.size(); ++col) {
        auto [i, e] = full.position(col);
        int region  = e < n[i] ? 0 : (e < K[i] ? 1 : 2);
        if (region == pass) {
          order.push_back(col);
          low += (region == 0);
          mid += (region == 1);
        }
      }
    }
    EchelonBasis permuted(p, full.size());
    for (auto const& r : _basis.echelon.rows()) {
      Row x(full.size());
      for (std::size_t j = 0; j < order.size(); ++j) {
        x[j] = r[order[j]];
      }
      permuted.insert(std::move(x));
    }
    std::vector<Row> lifts;
    for (std::size_t k2 = 0; k2 < permuted.rank(); ++k2) {
      auto pc = permuted.pivots()[k2];
      if (pc >= low && pc < low + mid) {
        Row x(full.size(), 0);
        for (std::size_t j = 0; j < order.size(); ++j) {
          x[order[j]] = permuted.rows()[k2][j];
        }
        lifts.push_back(std::move(x));
      }
    }
    checked_power(p, lifts.size(), _limit);

    ColumnLayout const layout_k(K);
    std::vector<TruncSeriesVec> ring_k;
    auto const                  projected_k = project(layout_k);
    for (auto const& r : projected_k.rows()) {
      ring_k.push_back(layout_k.unflatten(r));
    }
    std::vector<std::size_t> lead(d);
    for (std::size_t i = 0; i < d; ++i) {
      lead[i] = full.column(i, n[i]);
    }

    std::set<std::string> ideals;
    bool                  asserted = false;
    for_each_combination(lifts, p, full.size(), [&](Row const& z) {
      for (auto col : lead) {
        if (z[col] == 0) {
          return;
        }
      }
      TruncSeriesVec const zs = full.unflatten(z);
      TruncSeriesVec const zk = truncate(zs, K);
      EchelonBasis         ideal(p, layout_k.size());
      for (auto const& b : ring_k) {
        ideal.insert(layout_k.flatten(multiply(zk, b, p)));
      }
      ideals.insert(ideal.key());

      if (!asserted) {
        // zO ⊇ J(n + c): check one level finer than the working quotient.
        std::vector<int> finer(d);
        for (std::size_t i = 0; i < d; ++i) {
          finer[i] = std::min(K[i] + 1, _model.truncation[i]);
        }
        ColumnLayout const layout_f{ValueVec(finer)};
        EchelonBasis       span(p, layout_f.size());
        auto const         zf = truncate(zs, layout_f.bound());
        for (auto const& b : _basis.elements()) {
          span.insert(layout_f.flatten(multiply(zf, truncate(b, layout_f.bound()), p)));
        }
        for (std::size_t i = 0; i < d; ++i) {
          int const e = n[i] + _model.conductor[i];
          if (e < finer[i]) {
            Row unit(layout_f.size(), 0);
            unit[layout_f.column(i, e)] = 1;
            if (!span.contains(unit)) {
              throw std::logic_error("zO does not contain J(n + c) at "
                                     + to_string(n)
                                     + "; is the declared conductor right?");
            }
          }
        }
        asserted = true;
      }
    });
    return ideals.size();
  }

  GoodSemigroup semigroup_from_model(RingModel const& model,
                                     std::uint64_t    work_limit) {
    return RingOracle(model, work_limit).semigroup();
  }

  int h_dim_oracle(RingModel const& model, ValueVec const& n) {
    return RingOracle(model).h_dim(n);
  }

  std::uint64_t count_principal_ideals(RingModel const& model,
                                       ValueVec const&  n,
                                       std::uint64_t    work_limit) {
    return RingOracle(model, work_limit).count_principal_ideals(n);
  }

}  // namespace singzeta
