#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace ricci {

using Rational = mpq_class;
using Integer = mpz_class;

/// num/den as a canonical rational.
Rational make_rational(long num, long den = 1);

/// Univariate polynomial over arbitrary-precision rationals, coefficients
/// ascending by degree, trailing zeros stripped.
class RationalPoly {
  public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs);
    static RationalPoly from_ints(std::initializer_list<long> coeffs);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(int k) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;
    double eval_double(double x) const;
    RationalPoly derivative() const;

    friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
    friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
    friend RationalPoly operator*(const Rational& s, const RationalPoly& a);
    bool operator==(const RationalPoly& other) const { return c_ == other.c_; }

    /// Quotient and remainder of exact polynomial division.
    static std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a,
                                                        const RationalPoly& b);

    std::string to_string(const std::string& var = "x") const;

  private:
    std::vector<Rational> c_;
    void normalize();
};

/// Canonical Sturm sequence p0 = p, p1 = p', p_{i+1} = -rem(p_{i-1}, p_i).
/// For squarefree input the chain ends at a nonzero constant; a repeated
/// root leaves a nonconstant last entry (the gcd).
struct SturmChain {
    std::vector<RationalPoly> polys;

    int sign_changes_at(const Rational& x) const;
    bool squarefree_input() const;
};

SturmChain sturm_chain(const RationalPoly& p);

/// Distinct real roots of the chain's polynomial in (a, b]. Throws if an
/// endpoint is itself a root; callers choose their own endpoint policy.
int count_roots(const SturmChain& chain, const Rational& a, const Rational& b);

/// Resultant of two polynomials via their Sylvester matrix (exact).
Rational resultant(const RationalPoly& a, const RationalPoly& b);

/// Discriminant (-1)^(d(d-1)/2) Res(p, p') / lc(p).
Rational discriminant(const RationalPoly& p);

/// The degree-4 boundary-flux polynomial in nu, exact in n:
///   4(n-2)^3 nu^4 - 2(n-2)(5n^3-31n^2+67n-49) nu^3
///   + (n^6-6n^5-5n^4+136n^3-453n^2+630n-327) nu^2 - (same nu^1) + (same nu^0).
/// Palindromic; p(0) = 4(n-2)^3, p(1) = (n-3)^3 alpha5.
RationalPoly p_nu(int n);

/// F and G whose sign difference controls the flux across the trimmed cone:
/// F = -(n-1)(n-2-nu)((n-2)nu - 1), G = (n-2)(n-3)(nu+1) sqrt(nu^2-2(n-2)nu+1),
/// with F^2 - G^2 = p_nu. Domain nu in (0, 1/(2n-4)].
struct FGValues {
    double F, G;
};
FGValues fg_values(int n, const Rational& nu);
Rational fg_F_exact(int n, const Rational& nu);
Rational fg_G_squared_exact(int n, const Rational& nu);

/// Both routes to the discriminant of p_nu: the closed-form product
/// (n-2)^4 (n-3)^9 (n-1)^10 (4n^2-13n+11)^2 [8+20m+12m^2+m^3] (m = n-3),
/// and the resultant-based discriminant. The two agree up to one constant
/// factor independent of n (16 with the standard normalization).
struct DiscriminantPair {
    Rational closed_form;
    Rational from_resultant;
};
DiscriminantPair discriminant_p(int n);

/// alpha1..alpha6 of the endpoint factorizations of the Sturm chain.
std::array<Integer, 6> alpha_constants(int n);

enum class PositivityVerdict { PositiveOnInterval, Degenerate, Failed };

const char* verdict_name(PositivityVerdict v);

/// Exact certificate that p_nu(n) > 0 on (0, 1/(2n-4)].
/// For n >= 4 the counts are taken at 0 and 1 and the root count covers
/// (0, 1]. For n = 3 the polynomial is 4(nu-1)^4 with its quadruple root
/// at nu = 1; the verdict is Degenerate and the counts/roots are taken on
/// (0, nu_tilde] instead, where the endpoint is not a root.
struct PositivityReport {
    int n;
    int sign_changes_at_0;
    int sign_changes_at_1;
    int roots_in_unit_interval;
    bool discriminant_nonzero;
    PositivityVerdict verdict;
};

PositivityReport verify_positivity(int n);

}  // namespace ricci
