#ifndef SINGZETA_RATFUN_HPP_
#define SINGZETA_RATFUN_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint32_t, int64_t
#include <map>       // for map
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include <gmpxx.h>

namespace singzeta {

  // Exponent vector (e_U, e_T1, ..., e_Td).
  using Exponents = std::vector<std::uint32_t>;

  // Ascending total degree, ties broken lexicographically on (e_U, e_T1, ...).
  struct GradedLex {
    bool operator()(Exponents const& a, Exponents const& b) const;
  };

  // Polynomial in Z[U, T1, ..., Td] with arbitrary-precision coefficients.
  // No stored coefficient is zero.
  class MultiPoly {
   public:
    using term_map = std::map<Exponents, mpz_class, GradedLex>;

    explicit MultiPoly(std::size_t d = 1) : _d(d) {}

    static MultiPoly constant(std::size_t d, mpz_class const& c);
    static MultiPoly monomial(std::size_t d, Exponents e, mpz_class const& c);
    static MultiPoly u(std::size_t d);
    static MultiPoly u_minus_one(std::size_t d);
    static MultiPoly u_minus_t(std::size_t d, std::size_t i);

    std::size_t branches() const noexcept {
      return _d;
    }
    term_map const& terms() const noexcept {
      return _terms;
    }
    bool is_zero() const noexcept {
      return _terms.empty();
    }

    void add_term(Exponents const& e, mpz_class const& c);

    MultiPoly& operator+=(MultiPoly const& other);
    MultiPoly& operator-=(MultiPoly const& other);
    MultiPoly operator-() const;
    MultiPoly pow(unsigned k) const;

    friend MultiPoly operator+(MultiPoly a, MultiPoly const& b) {
      return a += b;
    }
    friend MultiPoly operator-(MultiPoly a, MultiPoly const& b) {
      return a -= b;
    }
    friend MultiPoly operator*(MultiPoly const& a, MultiPoly const& b);
    friend bool operator==(MultiPoly const& a, MultiPoly const& b) {
      return a._d == b._d && a._terms == b._terms;
    }

    mpq_class evaluate(mpq_class const&              u,
                       std::vector<mpq_class> const& t) const;

    // `names` has d+1 entries: the U variable then T1..Td.
    std::string to_string(std::vector<std::string> const& names) const;
    std::string to_string() const;

   private:
    std::size_t _d;
    term_map    _terms;
  };

  // The closed set of denominator factors: U, U-1, U-T_i.
  struct Factor {
    enum class Kind { u, u_minus_one, u_minus_t };
    Kind        kind;
    std::size_t index = 0;  // branch index for u_minus_t

    static Factor u() {
      return {Kind::u, 0};
    }
    static Factor u_minus_one() {
      return {Kind::u_minus_one, 0};
    }
    static Factor u_minus_t(std::size_t i) {
      return {Kind::u_minus_t, i};
    }
  };

  std::optional<MultiPoly> try_divide(MultiPoly const& p, Factor f);
  // Throws NotDivisible.
  MultiPoly divide_exact(MultiPoly const& p, Factor f);

  // num / (U^a (U-1)^b prod_i (U-T_i)^{e_i}), kept in canonical (reduced) form
  // by every public constructor and arithmetic operation.
  class ZetaRatFun {
   public:
    explicit ZetaRatFun(std::size_t d = 1);
    ZetaRatFun(MultiPoly                  num,
               std::uint32_t              den_u,
               std::uint32_t              den_u1,
               std::vector<std::uint32_t> den_t);

    // Same fields, no reduction. Only useful for exercising `reduce`.
    static ZetaRatFun unreduced(MultiPoly                  num,
                                std::uint32_t              den_u,
                                std::uint32_t              den_u1,
                                std::vector<std::uint32_t> den_t);

    static ZetaRatFun constant(std::size_t d, mpz_class const& c);
    // c * U^k * T^n, k may be negative.
    static ZetaRatFun monomial(std::size_t                       d,
                               std::int64_t                      k,
                               std::vector<std::uint32_t> const& t_exps,
                               mpz_class const&                  c = 1);
    // U / (U - T_i), i.e. 1 / (1 - U^{-1} T_i).
    static ZetaRatFun geometric(std::size_t d, std::size_t i);

    std::size_t branches() const noexcept {
      return _num.branches();
    }
    MultiPoly const& num() const noexcept {
      return _num;
    }
    std::uint32_t den_u() const noexcept {
      return _den_u;
    }
    std::uint32_t den_u1() const noexcept {
      return _den_u1;
    }
    std::vector<std::uint32_t> const& den_t() const noexcept {
      return _den_t;
    }
    bool is_zero() const noexcept {
      return _num.is_zero();
    }
    bool is_canonical() const;

    MultiPoly denominator() const;

    ZetaRatFun operator-() const;
    friend ZetaRatFun operator+(ZetaRatFun const& a, ZetaRatFun const& b);
    friend ZetaRatFun operator-(ZetaRatFun const& a, ZetaRatFun const& b);
    friend ZetaRatFun operator*(ZetaRatFun const& a, ZetaRatFun const& b);
    ZetaRatFun&       operator+=(ZetaRatFun const& b) {
      return *this = *this + b;
    }
    ZetaRatFun& operator*=(ZetaRatFun const& b) {
      return *this = *this * b;
    }

    // Structural equality; canonical forms make this rational-function
    // equality.
    friend bool operator==(ZetaRatFun const& a, ZetaRatFun const& b);

    mpq_class evaluate(mpq_class const&              u,
                       std::vector<mpq_class> const& t) const;

    std::string to_string(std::vector<std::string> const& names) const;
    std::string to_string() const;

   private:
    friend ZetaRatFun reduce(ZetaRatFun f);

    MultiPoly                  _num;
    std::uint32_t              _den_u  = 0;
    std::uint32_t              _den_u1 = 0;
    std::vector<std::uint32_t> _den_t;
  };

  ZetaRatFun reduce(ZetaRatFun f);

  // Univariate polynomial over Q in T, coefficients in ascending degree, no
  // trailing zeros.
  class PolyQ {
   public:
    PolyQ() = default;
    explicit PolyQ(std::vector<mpq_class> coeffs);
    static PolyQ constant(mpq_class const& c);
    static PolyQ monomial(std::size_t k, mpq_class const& c = 1);

    bool is_zero() const noexcept {
      return _c.empty();
    }
    // -1 for the zero polynomial.
    long degree() const noexcept {
      return static_cast<long>(_c.size()) - 1;
    }
    mpq_class coeff(std::size_t k) const;
    std::vector<mpq_class> const& coeffs() const noexcept {
      return _c;
    }

    PolyQ& operator+=(PolyQ const& b);
    PolyQ& operator-=(PolyQ const& b);
    PolyQ  operator-() const;
    friend PolyQ operator+(PolyQ a, PolyQ const& b) {
      return a += b;
    }
    friend PolyQ operator-(PolyQ a, PolyQ const& b) {
      return a -= b;
    }
    friend PolyQ operator*(PolyQ const& a, PolyQ const& b);
    friend bool  operator==(PolyQ const& a, PolyQ const& b) = default;

    PolyQ pow(unsigned k) const;
    // Quotient and remainder; divisor must be nonzero.
    std::pair<PolyQ, PolyQ> divmod(PolyQ const& b) const;
    // p(s T)
    PolyQ     scale_variable(mpq_class const& s) const;
    mpq_class evaluate(mpq_class const& t) const;

    std::string to_string(std::string const& var = "T") const;

   private:
    void                   trim();
    std::vector<mpq_class> _c;
  };

  // Monic-normalized gcd.
  PolyQ gcd(PolyQ a, PolyQ b);

  // num/den in lowest terms; the lowest nonzero coefficient of den is 1.
  class RatFunQ {
   public:
    RatFunQ() : _num(), _den(PolyQ::constant(1)) {}
    RatFunQ(PolyQ num, PolyQ den);  // throws DivisionByZero if den == 0
    explicit RatFunQ(PolyQ num) : RatFunQ(std::move(num), PolyQ::constant(1)) {}

    PolyQ const& num() const noexcept {
      return _num;
    }
    PolyQ const& den() const noexcept {
      return _den;
    }
    bool is_polynomial() const noexcept {
      return _den.degree() == 0;
    }

    friend RatFunQ operator+(RatFunQ const& a, RatFunQ const& b);
    friend RatFunQ operator-(RatFunQ const& a, RatFunQ const& b);
    friend RatFunQ operator*(RatFunQ const& a, RatFunQ const& b);
    friend bool    operator==(RatFunQ const& a, RatFunQ const& b) = default;

    // f(s T)
    RatFunQ scale_variable(mpq_class const& s) const;

    std::string to_string(std::string const& var = "T") const;

   private:
    PolyQ _num;
    PolyQ _den;
  };

  // T_1 = ... = T_d = T; the result has d = 1.
  ZetaRatFun collapse_t(ZetaRatFun const& f);
  // U -> u on a d = 1 function. Throws PoleAtOne if u = 1 and (U-1) survives
  // reduction, DivisionByZero if u = 0.
  RatFunQ specialize_u(ZetaRatFun const& f, mpq_class const& u);
  // Collapse, then U -> u.
  RatFunQ substitute(ZetaRatFun const& f, mpq_class const& u);

  // Coefficients of T^0..T^N. Throws NotExpandable on a zero constant term in
  // the denominator.
  std::vector<mpq_class> series_expand(RatFunQ const& f, std::size_t N);

  // Multi-index expansion at U = u of a (non-collapsed) function: coefficients
  // of T^n for |n| <= N, keyed by the T exponent vector. Zero coefficients are
  // omitted.
  std::map<std::vector<std::uint32_t>, mpq_class>
  series_expand_multi(ZetaRatFun const& f, mpq_class const& u, std::size_t N);

  std::string to_string(mpq_class const& q);

}  // namespace singzeta

#endif  // SINGZETA_RATFUN_HPP_
