#include "singzeta/ratfun.hpp"

#include <algorithm>  // for max, lexicographical_compare
#include <numeric>    // for accumulate
#include <sstream>    // for ostringstream
#include <utility>    // for move

#include "singzeta/errors.hpp"

namespace singzeta {

  namespace {
    std::uint64_t total_degree(Exponents const& e) {
      return std::accumulate(e.begin(), e.end(), std::uint64_t(0));
    }

    std::vector<std::string> default_names(std::size_t d) {
      std::vector<std::string> names{"U"};
      for (std::size_t i = 1; i <= d; ++i) {
        names.push_back("T" + std::to_string(i));
      }
      return names;
    }

    // Writes "c*X^a*Y" style terms; `first` controls the leading sign format.
    void append_term(std::string&       out,
                     mpq_class const&   c,
                     std::string const& monomial,
                     bool               first) {
      bool negative = sgn(c) < 0;
      if (first) {
        out += negative ? "-" : "";
      } else {
        out += negative ? " - " : " + ";
      }
      mpq_class a = abs(c);
      if (monomial.empty()) {
        out += to_string(a);
      } else if (a == 1) {
        out += monomial;
      } else {
        out += to_string(a) + "*" + monomial;
      }
    }

    std::string power_string(std::string const& var, std::uint64_t k) {
      if (k == 1) {
        return var;
      }
      return var + "^" + std::to_string(k);
    }

    // (U-1)^b or (U-T_i)^e style multiplier polynomials.
    MultiPoly factor_power(std::size_t                       d,
                           std::uint32_t                     a,
                           std::uint32_t                     b,
                           std::vector<std::uint32_t> const& e) {
      MultiPoly out = MultiPoly::constant(d, 1);
      if (a > 0) {
        Exponents ex(d + 1, 0);
        ex[0] = a;
        out   = out * MultiPoly::monomial(d, ex, 1);
      }
      if (b > 0) {
        out = out * MultiPoly::u_minus_one(d).pow(b);
      }
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] > 0) {
          out = out * MultiPoly::u_minus_t(d, i).pow(e[i]);
        }
      }
      return out;
    }

    mpq_class pow_q(mpq_class const& x, std::uint64_t k) {
      mpq_class r = 1;
      for (std::uint64_t i = 0; i < k; ++i) {
        r *= x;
      }
      return r;
    }

    mpz_class binomial(std::uint64_t n, std::uint64_t k) {
      mpz_class r;
      mpz_bin_uiui(r.get_mpz_t(), n, k);
      return r;
    }
  }  // namespace

  std::string to_string(mpq_class const& q) {
    return q.get_str();
  }

  ////////////////////////////////////////////////////////////////////////
  // GradedLex / MultiPoly
  ////////////////////////////////////////////////////////////////////////

  bool GradedLex::operator()(Exponents const& a, Exponents const& b) const {
    auto da = total_degree(a);
    auto db = total_degree(b);
    if (da != db) {
      return da < db;
    }
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }

  MultiPoly MultiPoly::constant(std::size_t d, mpz_class const& c) {
    return monomial(d, Exponents(d + 1, 0), c);
  }

  MultiPoly MultiPoly::monomial(std::size_t d, Exponents e, mpz_class const& c) {
    if (e.size() != d + 1) {
      throw DimensionMismatch("monomial exponent vector has wrong length");
    }
    MultiPoly p(d);
    p.add_term(e, c);
    return p;
  }

  MultiPoly MultiPoly::u(std::size_t d) {
    Exponents e(d + 1, 0);
    e[0] = 1;
    return monomial(d, e, 1);
  }

  MultiPoly MultiPoly::u_minus_one(std::size_t d) {
    return u(d) - constant(d, 1);
  }

  MultiPoly MultiPoly::u_minus_t(std::size_t d, std::size_t i) {
    if (i >= d) {
      throw DimensionMismatch("branch index out of range");
    }
    Exponents e(d + 1, 0);
    e[i + 1] = 1;
    return u(d) - monomial(d, e, 1);
  }

  void MultiPoly::add_term(Exponents const& e, mpz_class const& c) {
    if (e.size() != _d + 1) {
      throw DimensionMismatch("exponent vector has wrong length");
    }
    if (c == 0) {
      return;
    }
    auto it = _terms.find(e);
    if (it == _terms.end()) {
      _terms.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) {
        _terms.erase(it);
      }
    }
  }

  MultiPoly& MultiPoly::operator+=(MultiPoly const& other) {
    if (other._d != _d) {
      throw DimensionMismatch("adding polynomials in different rings");
    }
    for (auto const& [e, c] : other._terms) {
      add_term(e, c);
    }
    return *this;
  }

  MultiPoly& MultiPoly::operator-=(MultiPoly const& other) {
    if (other._d != _d) {
      throw DimensionMismatch("subtracting polynomials in different rings");
    }
    for (auto const& [e, c] : other._terms) {
      add_term(e, -c);
    }
    return *this;
  }

  MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& [e, c] : r._terms) {
      c = -c;
    }
    return r;
  }

  MultiPoly operator*(MultiPoly const& a, MultiPoly const& b) {
    if (a._d != b._d) {
      throw DimensionMismatch("multiplying polynomials in different rings");
    }
    MultiPoly r(a._d);
    Exponents e(a._d + 1);
    for (auto const& [ea, ca] : a._terms) {
      for (auto const& [eb, cb] : b._terms) {
        for (std::size_t i = 0; i < e.size(); ++i) {
          e[i] = ea[i] + eb[i];
        }
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly r = constant(_d, 1);
    for (unsigned i = 0; i < k; ++i) {
      r = r * *this;
    }
    return r;
  }

  mpq_class MultiPoly::evaluate(mpq_class const&              u,
                                std::vector<mpq_class> const& t) const {
    if (t.size() != _d) {
      throw DimensionMismatch("evaluation point has wrong length");
    }
    mpq_class sum = 0;
    for (auto const& [e, c] : _terms) {
      mpq_class m = c;
      m *= pow_q(u, e[0]);
      for (std::size_t i = 0; i < _d; ++i) {
        m *= pow_q(t[i], e[i + 1]);
      }
      sum += m;
    }
    return sum;
  }

  std::string MultiPoly::to_string(std::vector<std::string> const& names) const {
    if (_terms.empty()) {
      return "0";
    }
    std::string out;
    bool        first = true;
    for (auto const& [e, c] : _terms) {
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) {
          continue;
        }
        if (!mono.empty()) {
          mono += "*";
        }
        mono += power_string(names.at(i), e[i]);
      }
      append_term(out, mpq_class(c), mono, first);
      first = false;
    }
    return out;
  }

  std::string MultiPoly::to_string() const {
    return to_string(default_names(_d));
  }

  ////////////////////////////////////////////////////////////////////////
  // Exact division by U, U-1, U-T_i
  ////////////////////////////////////////////////////////////////////////

  std::optional<MultiPoly> try_divide(MultiPoly const& p, Factor f) {
    std::size_t const d = p.branches();
    if (f.kind == Factor::Kind::u) {
      MultiPoly q(d);
      for (auto const& [e, c] : p.terms()) {
        if (e[0] == 0) {
          return std::nullopt;
        }
        Exponents s = e;
        --s[0];
        q.add_term(s, c);
      }
      return q;
    }
    if (f.kind == Factor::Kind::u_minus_t && f.index >= d) {
      throw DimensionMismatch("branch index out of range");
    }
    if (p.is_zero()) {
      return p;
    }

    // Synthetic division by (U - m), m = 1 or T_i, over coefficients in
    // Z[T]: q_{k-1} = a_k + m q_k, remainder a_0 + m q_0.
    std::uint32_t top = 0;
    for (auto const& [e, c] : p.terms()) {
      top = std::max(top, e[0]);
    }
    std::vector<MultiPoly> a(top + 1, MultiPoly(d));
    for (auto const& [e, c] : p.terms()) {
      Exponents rest = e;
      rest[0]        = 0;
      a[e[0]].add_term(rest, c);
    }
    auto times_m = [&](MultiPoly const& x) {
      if (f.kind == Factor::Kind::u_minus_one) {
        return x;
      }
      MultiPoly y(d);
      for (auto const& [e, c] : x.terms()) {
        Exponents s = e;
        ++s[f.index + 1];
        y.add_term(s, c);
      }
      return y;
    };

    if (top == 0) {
      return std::nullopt;
    }
    std::vector<MultiPoly> q(top, MultiPoly(d));
    q[top - 1] = a[top];
    for (std::uint32_t k = top - 1; k >= 1; --k) {
      q[k - 1] = a[k] + times_m(q[k]);
    }
    if (!(a[0] + times_m(q[0])).is_zero()) {
      return std::nullopt;
    }
    MultiPoly out(d);
    for (std::uint32_t k = 0; k < top; ++k) {
      for (auto const& [e, c] : q[k].terms()) {
        Exponents s = e;
        s[0]        = k;
        out.add_term(s, c);
      }
    }
    return out;
  }

  MultiPoly divide_exact(MultiPoly const& p, Factor f) {
    auto q = try_divide(p, f);
    if (!q) {
      std::string what = f.kind == Factor::Kind::u ? "U"
                         : f.kind == Factor::Kind::u_minus_one
                             ? "(U-1)"
                             : "(U-T" + std::to_string(f.index + 1) + ")";
      throw NotDivisible(p.to_string() + " is not divisible by " + what);
    }
    return std::move(*q);
  }

  ////////////////////////////////////////////////////////////////////////
  // ZetaRatFun
  ////////////////////////////////////////////////////////////////////////

  ZetaRatFun::ZetaRatFun(std::size_t d) : _num(d), _den_t(d, 0) {}

  ZetaRatFun::ZetaRatFun(MultiPoly                  num,
                         std::uint32_t              den_u,
                         std::uint32_t              den_u1,
                         std::vector<std::uint32_t> den_t)
      : ZetaRatFun(reduce(
          unreduced(std::move(num), den_u, den_u1, std::move(den_t)))) {}

  ZetaRatFun ZetaRatFun::unreduced(MultiPoly                  num,
                                   std::uint32_t              den_u,
                                   std::uint32_t              den_u1,
                                   std::vector<std::uint32_t> den_t) {
    if (den_t.size() != num.branches()) {
      throw DimensionMismatch("denominator exponent list has wrong length");
    }
    ZetaRatFun f(num.branches());
    f._num    = std::move(num);
    f._den_u  = den_u;
    f._den_u1 = den_u1;
    f._den_t  = std::move(den_t);
    return f;
  }

  ZetaRatFun ZetaRatFun::constant(std::size_t d, mpz_class const& c) {
    return ZetaRatFun(
        MultiPoly::constant(d, c), 0, 0, std::vector<std::uint32_t>(d, 0));
  }

  ZetaRatFun ZetaRatFun::monomial(std::size_t                       d,
                                  std::int64_t                      k,
                                  std::vector<std::uint32_t> const& t_exps,
                                  mpz_class const&                  c) {
    if (t_exps.size() != d) {
      throw DimensionMismatch("T exponent vector has wrong length");
    }
    Exponents e(d + 1, 0);
    std::copy(t_exps.begin(), t_exps.end(), e.begin() + 1);
    std::uint32_t den_u = 0;
    if (k >= 0) {
      e[0] = static_cast<std::uint32_t>(k);
    } else {
      den_u = static_cast<std::uint32_t>(-k);
    }
    return ZetaRatFun(MultiPoly::monomial(d, e, c),
                      den_u,
                      0,
                      std::vector<std::uint32_t>(d, 0));
  }

  ZetaRatFun ZetaRatFun::geometric(std::size_t d, std::size_t i) {
    std::vector<std::uint32_t> e(d, 0);
    e.at(i) = 1;
    return ZetaRatFun(MultiPoly::u(d), 0, 0, e);
  }

  bool ZetaRatFun::is_canonical() const {
    if (_num.is_zero()) {
      return _den_u == 0 && _den_u1 == 0
             && std::all_of(_den_t.begin(), _den_t.end(), [](auto x) {
                  return x == 0;
                });
    }
    if (_den_u > 0 && try_divide(_num, Factor::u())) {
      return false;
    }
    if (_den_u1 > 0 && try_divide(_num, Factor::u_minus_one())) {
      return false;
    }
    for (std::size_t i = 0; i < _den_t.size(); ++i) {
      if (_den_t[i] > 0 && try_divide(_num, Factor::u_minus_t(i))) {
        return false;
      }
    }
    return true;
  }

  MultiPoly ZetaRatFun::denominator() const {
    return factor_power(branches(), _den_u, _den_u1, _den_t);
  }

  ZetaRatFun reduce(ZetaRatFun f) {
    std::size_t const d = f.branches();
    if (f._num.is_zero()) {
      return ZetaRatFun(d);
    }
    auto strip = [&f](std::uint32_t& exponent, Factor factor) {
      while (exponent > 0) {
        auto q = try_divide(f._num, factor);
        if (!q) {
          break;
        }
        f._num = std::move(*q);
        --exponent;
      }
    };
    strip(f._den_u, Factor::u());
    strip(f._den_u1, Factor::u_minus_one());
    for (std::size_t i = 0; i < d; ++i) {
      strip(f._den_t[i], Factor::u_minus_t(i));
    }
    return f;
  }

  ZetaRatFun ZetaRatFun::operator-() const {
    ZetaRatFun r(*this);
    r._num = -r._num;
    return r;
  }

  ZetaRatFun operator+(ZetaRatFun const& a, ZetaRatFun const& b) {
    std::size_t const d = a.branches();
    if (b.branches() != d) {
      throw DimensionMismatch("adding zeta functions in different rings");
    }
    std::uint32_t const        du  = std::max(a._den_u, b._den_u);
    std::uint32_t const        du1 = std::max(a._den_u1, b._den_u1);
    std::vector<std::uint32_t> dt(d), ea(d), eb(d);
    for (std::size_t i = 0; i < d; ++i) {
      dt[i] = std::max(a._den_t[i], b._den_t[i]);
      ea[i] = dt[i] - a._den_t[i];
      eb[i] = dt[i] - b._den_t[i];
    }
    MultiPoly num = a._num * factor_power(d, du - a._den_u, du1 - a._den_u1, ea)
                    + b._num
                          * factor_power(d, du - b._den_u, du1 - b._den_u1, eb);
    return ZetaRatFun(std::move(num), du, du1, std::move(dt));
  }

  ZetaRatFun operator-(ZetaRatFun const& a, ZetaRatFun const& b) {
    return a + (-b);
  }

  ZetaRatFun operator*(ZetaRatFun const& a, ZetaRatFun const& b) {
    std::size_t const d = a.branches();
    if (b.branches() != d) {
      throw DimensionMismatch("multiplying zeta functions in different rings");
    }
    std::vector<std::uint32_t> dt(d);
    for (std::size_t i = 0; i < d; ++i) {
      dt[i] = a._den_t[i] + b._den_t[i];
    }
    return ZetaRatFun(a._num * b._num,
                      a._den_u + b._den_u,
                      a._den_u1 + b._den_u1,
                      std::move(dt));
  }

  bool operator==(ZetaRatFun const& a, ZetaRatFun const& b) {
    return a._num == b._num && a._den_u == b._den_u && a._den_u1 == b._den_u1
           && a._den_t == b._den_t;
  }

  mpq_class ZetaRatFun::evaluate(mpq_class const&              u,
                                 std::vector<mpq_class> const& t) const {
    mpq_class den = denominator().evaluate(u, t);
    if (den == 0) {
      throw DivisionByZero("evaluation point is a pole");
    }
    return _num.evaluate(u, t) / den;
  }

  std::string
  ZetaRatFun::to_string(std::vector<std::string> const& names) const {
    std::vector<std::string> factors;
    if (_den_u > 0) {
      factors.push_back(power_string(names.at(0), _den_u));
    }
    if (_den_u1 > 0) {
      factors.push_back(power_string("(" + names.at(0) + "-1)", _den_u1));
    }
    for (std::size_t i = 0; i < _den_t.size(); ++i) {
      if (_den_t[i] > 0) {
        factors.push_back(power_string(
            "(" + names.at(0) + "-" + names.at(i + 1) + ")", _den_t[i]));
      }
    }
    std::string num = _num.to_string(names);
    if (factors.empty()) {
      return num;
    }
    if (_num.terms().size() > 1) {
      num = "(" + num + ")";
    }
    std::string den;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      den += (i == 0 ? "" : " * ") + factors[i];
    }
    if (factors.size() > 1) {
      den = "(" + den + ")";
    }
    return num + " / " + den;
  }

  std::string ZetaRatFun::to_string() const {
    return to_string(default_names(branches()));
  }

  ////////////////////////////////////////////////////////////////////////
  // PolyQ / RatFunQ
  ////////////////////////////////////////////////////////////////////////

  PolyQ::PolyQ(std::vector<mpq_class> coeffs) : _c(std::move(coeffs)) {
    trim();
  }

  PolyQ PolyQ::constant(mpq_class const& c) {
    return PolyQ(std::vector<mpq_class>{c});
  }

  PolyQ PolyQ::monomial(std::size_t k, mpq_class const& c) {
    std::vector<mpq_class> v(k + 1, 0);
    v[k] = c;
    return PolyQ(std::move(v));
  }

  void PolyQ::trim() {
    while (!_c.empty() && _c.back() == 0) {
      _c.pop_back();
    }
  }

  mpq_class PolyQ::coeff(std::size_t k) const {
    return k < _c.size() ? _c[k] : mpq_class(0);
  }

  PolyQ& PolyQ::operator+=(PolyQ const& b) {
    if (b._c.size() > _c.size()) {
      _c.resize(b._c.size(), 0);
    }
    for (std::size_t i = 0; i < b._c.size(); ++i) {
      _c[i] += b._c[i];
    }
    trim();
    return *this;
  }

  PolyQ& PolyQ::operator-=(PolyQ const& b) {
    return *this += -b;
  }

  PolyQ PolyQ::operator-() const {
    PolyQ r(*this);
    for (auto& x : r._c) {
      x = -x;
    }
    return r;
  }

  PolyQ operator*(PolyQ const& a, PolyQ const& b) {
    if (a.is_zero() || b.is_zero()) {
      return PolyQ();
    }
    std::vector<mpq_class> c(a._c.size() + b._c.size() - 1, 0);
    for (std::size_t i = 0; i < a._c.size(); ++i) {
      for (std::size_t j = 0; j < b._c.size(); ++j) {
        c[i + j] += a._c[i] * b._c[j];
      }
    }
    return PolyQ(std::move(c));
  }

  PolyQ PolyQ::pow(unsigned k) const {
    PolyQ r = constant(1);
    for (unsigned i = 0; i < k; ++i) {
      r = r * *this;
    }
    return r;
  }

  std::pair<PolyQ, PolyQ> PolyQ::divmod(PolyQ const& b) const {
    if (b.is_zero()) {
      throw DivisionByZero("polynomial division by zero");
    }
    std::vector<mpq_class> r = _c;
    long const             db = b.degree();
    if (degree() < db) {
      return {PolyQ(), *this};
    }
    std::vector<mpq_class> q(degree() - db + 1, 0);
    for (long k = degree(); k >= db; --k) {
      mpq_class t = r[k] / b._c[db];
      q[k - db]   = t;
      for (long j = 0; j <= db; ++j) {
        r[k - db + j] -= t * b._c[j];
      }
    }
    return {PolyQ(std::move(q)), PolyQ(std::move(r))};
  }

  PolyQ PolyQ::scale_variable(mpq_class const& s) const {
    std::vector<mpq_class> c = _c;
    mpq_class              f = 1;
    for (auto& x : c) {
      x *= f;
      f *= s;
    }
    return PolyQ(std::move(c));
  }

  mpq_class PolyQ::evaluate(mpq_class const& t) const {
    mpq_class r = 0;
    for (auto it = _c.rbegin(); it != _c.rend(); ++it) {
      r = r * t + *it;
    }
    return r;
  }

  std::string PolyQ::to_string(std::string const& var) const {
    if (_c.empty()) {
      return "0";
    }
    std::string out;
    bool        first = true;
    for (std::size_t k = 0; k < _c.size(); ++k) {
      if (_c[k] == 0) {
        continue;
      }
      append_term(out, _c[k], k == 0 ? "" : power_string(var, k), first);
      first = false;
    }
    return out;
  }

  PolyQ gcd(PolyQ a, PolyQ b) {
    while (!b.is_zero()) {
      auto r = a.divmod(b).second;
      a      = std::move(b);
      b      = std::move(r);
    }
    if (a.is_zero()) {
      return a;
    }
    mpq_class lead = a.coeffs().back();
    return a * PolyQ::constant(1 / lead);
  }

  RatFunQ::RatFunQ(PolyQ num, PolyQ den) {
    if (den.is_zero()) {
      throw DivisionByZero("rational function with zero denominator");
    }
    if (num.is_zero()) {
      _num = PolyQ();
      _den = PolyQ::constant(1);
      return;
    }
    PolyQ g = gcd(num, den);
    if (g.degree() > 0) {
      num = num.divmod(g).first;
      den = den.divmod(g).first;
    }
    mpq_class low = 0;
    for (auto const& x : den.coeffs()) {
      if (x != 0) {
        low = x;
        break;
      }
    }
    PolyQ s = PolyQ::constant(1 / low);
    _num    = num * s;
    _den    = den * s;
  }

  RatFunQ operator+(RatFunQ const& a, RatFunQ const& b) {
    return RatFunQ(a._num * b._den + b._num * a._den, a._den * b._den);
  }

  RatFunQ operator-(RatFunQ const& a, RatFunQ const& b) {
    return RatFunQ(a._num * b._den - b._num * a._den, a._den * b._den);
  }

  RatFunQ operator*(RatFunQ const& a, RatFunQ const& b) {
    return RatFunQ(a._num * b._num, a._den * b._den);
  }

  RatFunQ RatFunQ::scale_variable(mpq_class const& s) const {
    return RatFunQ(_num.scale_variable(s), _den.scale_variable(s));
  }

  std::string RatFunQ::to_string(std::string const& var) const {
    if (is_polynomial()) {
      return _num.to_string(var);
    }
    auto wrap = [&var](PolyQ const& p) {
      std::size_t nonzero = 0;
      for (auto const& x : p.coeffs()) {
        nonzero += (x != 0);
      }
      auto s = p.to_string(var);
      return nonzero > 1 || s.find('/') != std::string::npos ? "(" + s + ")" : s;
    };
    return wrap(_num) + " / " + wrap(_den);
  }

  ////////////////////////////////////////////////////////////////////////
  // Substitution and expansion
  ////////////////////////////////////////////////////////////////////////

  ZetaRatFun collapse_t(ZetaRatFun const& f) {
    MultiPoly num(1);
    for (auto const& [e, c] : f.num().terms()) {
      std::uint32_t t = 0;
      for (std::size_t i = 1; i < e.size(); ++i) {
        t += e[i];
      }
      num.add_term(Exponents{e[0], t}, c);
    }
    std::uint32_t et = 0;
    for (auto x : f.den_t()) {
      et += x;
    }
    return ZetaRatFun(std::move(num), f.den_u(), f.den_u1(), {et});
  }

  RatFunQ specialize_u(ZetaRatFun const& f, mpq_class const& u) {
    if (f.branches() != 1) {
      throw DimensionMismatch("specialize_u needs a collapsed (d = 1) function");
    }
    if (u == 0) {
      throw DivisionByZero("U -> 0 is not a valid specialization");
    }
    if (u == 1 && f.den_u1() > 0) {
      throw PoleAtOne("(U-1) remains in the denominator");
    }
    std::vector<mpq_class> num;
    for (auto const& [e, c] : f.num().terms()) {
      if (num.size() <= e[1]) {
        num.resize(e[1] + 1, 0);
      }
      num[e[1]] += mpq_class(c) * pow_q(u, e[0]);
    }
    PolyQ den = PolyQ::constant(pow_q(u, f.den_u()) * pow_q(u - 1, f.den_u1()));
    den       = den
          * PolyQ(std::vector<mpq_class>{u, mpq_class(-1)}).pow(f.den_t()[0]);
    return RatFunQ(PolyQ(std::move(num)), std::move(den));
  }

  RatFunQ substitute(ZetaRatFun const& f, mpq_class const& u) {
    return specialize_u(collapse_t(f), u);
  }

  std::vector<mpq_class> series_expand(RatFunQ const& f, std::size_t N) {
    mpq_class const d0 = f.den().coeff(0);
    if (d0 == 0) {
      throw NotExpandable("denominator has zero constant term");
    }
    std::vector<mpq_class> a(N + 1, 0);
    long const             dd = f.den().degree();
    for (std::size_t n = 0; n <= N; ++n) {
      mpq_class s = f.num().coeff(n);
      for (long k = 1; k <= dd && static_cast<std::size_t>(k) <= n; ++k) {
        s -= f.den().coeff(k) * a[n - k];
      }
      a[n] = s / d0;
    }
    return a;
  }

  std::map<std::vector<std::uint32_t>, mpq_class>
  series_expand_multi(ZetaRatFun const& f, mpq_class const& u, std::size_t N) {
    std::size_t const d = f.branches();
    using Series        = std::map<std::vector<std::uint32_t>, mpq_class>;
    if (u == 0) {
      throw NotExpandable("U -> 0 gives a zero constant term");
    }
    if (u == 1 && f.den_u1() > 0) {
      throw PoleAtOne("(U-1) remains in the denominator");
    }

    Series    acc;
    mpq_class scale = 1 / (pow_q(u, f.den_u()) * pow_q(u - 1, f.den_u1()));
    for (auto const& [e, c] : f.num().terms()) {
      std::vector<std::uint32_t> t(e.begin() + 1, e.end());
      if (std::accumulate(t.begin(), t.end(), std::size_t(0)) > N) {
        continue;
      }
      acc[t] += mpq_class(c) * pow_q(u, e[0]) * scale;
    }

    // 1/(u - T_i)^e = u^{-e} sum_k C(k+e-1, k) (T_i/u)^k
    for (std::size_t i = 0; i < d; ++i) {
      std::uint32_t const e = f.den_t()[i];
      if (e == 0) {
        continue;
      }
      std::vector<mpq_class> g(N + 1);
      for (std::size_t k = 0; k <= N; ++k) {
        g[k] = mpq_class(binomial(k + e - 1, k)) / pow_q(u, k + e);
      }
      Series next;
      for (auto const& [t, c] : acc) {
        std::size_t norm = std::accumulate(t.begin(), t.end(), std::size_t(0));
        for (std::size_t k = 0; norm + k <= N; ++k) {
          auto s = t;
          s[i] += static_cast<std::uint32_t>(k);
          next[s] += c * g[k];
        }
      }
      acc = std::move(next);
    }
    for (auto it = acc.begin(); it != acc.end();) {
      it = it->second == 0 ? acc.erase(it) : std::next(it);
    }
    return acc;
  }

}  // namespace singzeta
