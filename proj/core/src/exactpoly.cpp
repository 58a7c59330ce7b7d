#include "ricci/exactpoly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ricci {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

RationalPoly RationalPoly::from_ints(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return RationalPoly(std::move(c));
}

void RationalPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& RationalPoly::coeff(int k) const {
    static const Rational zero(0);
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<std::size_t>(k)];
}

const Rational& RationalPoly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
}

Rational RationalPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double RationalPoly::eval_double(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

RationalPoly RationalPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<long>(k) * c_[k];
    return RationalPoly(std::move(d));
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return RationalPoly(std::move(c));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
    return a + Rational(-1) * b;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return RationalPoly(std::move(c));
}

RationalPoly operator*(const Rational& s, const RationalPoly& a) {
    std::vector<Rational> c(a.c_);
    for (auto& v : c) v *= s;
    return RationalPoly(std::move(c));
}

std::pair<RationalPoly, RationalPoly> RationalPoly::divmod(const RationalPoly& a,
                                                           const RationalPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem(a.c_);
    const int db = b.degree();
    const int dq = a.degree() - db;
    if (dq < 0) return {RationalPoly{}, a};
    std::vector<Rational> quot(static_cast<std::size_t>(dq) + 1, Rational(0));
    for (int k = dq; k >= 0; --k) {
        const std::size_t top = static_cast<std::size_t>(k + db);
        if (top >= rem.size() || rem[top] == 0) continue;
        const Rational f = rem[top] / b.leading();
        quot[static_cast<std::size_t>(k)] = f;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k + j)] -= f * b.coeff(j);
    }
    return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

std::string RationalPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (int k = degree(); k >= 0; --k) {
        const Rational& ck = coeff(k);
        if (ck == 0) continue;
        if (os.tellp() > 0) os << (ck > 0 ? " + " : " - ");
        else if (ck < 0) os << "-";
        os << abs(ck);
        if (k >= 1) os << "*" << var;
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

SturmChain sturm_chain(const RationalPoly& p) {
    if (p.is_zero()) throw std::domain_error("sturm_chain: zero polynomial");
    SturmChain chain;
    chain.polys.push_back(p);
    RationalPoly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.polys.push_back(std::move(d));
    while (true) {
        const auto& a = chain.polys[chain.polys.size() - 2];
        const auto& b = chain.polys.back();
        RationalPoly r = RationalPoly::divmod(a, b).second;
        if (r.is_zero()) break;
        chain.polys.push_back(Rational(-1) * r);
    }
    return chain;
}

int SturmChain::sign_changes_at(const Rational& x) const {
    int changes = 0, prev = 0;
    for (const auto& p : polys) {
        const Rational v = p.eval(x);
        const int s = sgn(v);
        if (s != 0) {
            if (prev != 0 && s != prev) ++changes;
            prev = s;
        }
    }
    return changes;
}

bool SturmChain::squarefree_input() const {
    return polys.size() >= 2 && polys.back().degree() == 0;
}

int count_roots(const SturmChain& chain, const Rational& a, const Rational& b) {
    if (!(a < b)) throw std::invalid_argument("count_roots: requires a < b");
    const RationalPoly& p = chain.polys.front();
    if (p.eval(a) == 0 || p.eval(b) == 0)
        throw std::domain_error("count_roots: interval endpoint is a root");
    return chain.sign_changes_at(a) - chain.sign_changes_at(b);
}

Rational resultant(const RationalPoly& a, const RationalPoly& b) {
    const int m = a.degree(), n = b.degree();
    if (m < 0 || n < 0) return Rational(0);
    if (m == 0 && n == 0) return Rational(1);
    const int size = m + n;
    // Sylvester matrix, then exact Gaussian elimination with row pivoting.
    std::vector<std::vector<Rational>> s(static_cast<std::size_t>(size),
                                         std::vector<Rational>(static_cast<std::size_t>(size), Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = a.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] = b.coeff(n - j);

    Rational det(1);
    for (int col = 0; col < size; ++col) {
        const auto c = static_cast<std::size_t>(col);
        std::size_t piv = c;
        while (piv < s.size() && s[piv][c] == 0) ++piv;
        if (piv == s.size()) return Rational(0);
        if (piv != c) {
            std::swap(s[piv], s[c]);
            det = -det;
        }
        det *= s[c][c];
        for (std::size_t row = c + 1; row < s.size(); ++row) {
            if (s[row][c] == 0) continue;
            const Rational f = s[row][c] / s[c][c];
            for (std::size_t k = c; k < s.size(); ++k) s[row][k] -= f * s[c][k];
        }
    }
    return det;
}

Rational discriminant(const RationalPoly& p) {
    const int d = p.degree();
    if (d < 1) throw std::domain_error("discriminant: degree must be >= 1");
    Rational r = resultant(p, p.derivative()) / p.leading();
    if ((d * (d - 1) / 2) % 2 != 0) r = -r;
    return r;
}

namespace {

Integer ipow(const Integer& base, unsigned e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

}  // namespace

RationalPoly p_nu(int n) {
    if (n < 3) throw std::domain_error("p_nu: n must be >= 3");
    const Integer N(n);
    const Integer c0 = 4 * ipow(N - 2, 3);
    const Integer c1 = -2 * (N - 2) * (5 * ipow(N, 3) - 31 * ipow(N, 2) + 67 * N - 49);
    const Integer c2 = ipow(N, 6) - 6 * ipow(N, 5) - 5 * ipow(N, 4) + 136 * ipow(N, 3) -
                       453 * ipow(N, 2) + 630 * N - 327;
    return RationalPoly({Rational(c0), Rational(c1), Rational(c2), Rational(c1), Rational(c0)});
}

Rational fg_F_exact(int n, const Rational& nu) {
    const Rational nm1(n - 1), nm2(n - 2);
    return -nm1 * (nm2 - nu) * (nm2 * nu - 1);
}

Rational fg_G_squared_exact(int n, const Rational& nu) {
    const Rational nm2(n - 2), nm3(n - 3);
    const Rational lin = nm2 * nm3 * (nu + 1);
    return lin * lin * (nu * nu - 2 * nm2 * nu + 1);
}

FGValues fg_values(int n, const Rational& nu) {
    if (n < 3) throw std::domain_error("fg_values: n must be >= 3");
    const Rational nu_tilde = make_rational(1, 2L * n - 4);
    if (!(nu > 0) || nu > nu_tilde)
        throw std::domain_error("fg_values: nu must lie in (0, 1/(2n-4)]");
    return {fg_F_exact(n, nu).get_d(), std::sqrt(fg_G_squared_exact(n, nu).get_d())};
}

DiscriminantPair discriminant_p(int n) {
    if (n < 3) throw std::domain_error("discriminant_p: n must be >= 3");
    const Integer N(n);
    const Integer m = N - 3;
    const Integer closed = ipow(N - 2, 4) * ipow(m, 9) * ipow(N - 1, 10) *
                           ipow(4 * N * N - 13 * N + 11, 2) *
                           (8 + 20 * m + 12 * m * m + m * m * m);
    return {Rational(closed), discriminant(p_nu(n))};
}

std::array<Integer, 6> alpha_constants(int n) {
    if (n < 3) throw std::domain_error("alpha_constants: n must be >= 3");
    const Integer N(n);
    const Integer m = N - 3;
    std::array<Integer, 6> a;
    a[0] = 5 * ipow(m, 3) + 14 * m * m + 16 * m + 8;
    a[1] = ipow(m, 3) + 10 * m * m + 20 * m + 12;
    a[2] = 8 * ipow(N, 4) - 83 * ipow(N, 3) + 285 * N * N - 413 * N + 219;
    a[3] = ipow(N, 9) - 5 * ipow(N, 8) - 24 * ipow(N, 7) + 256 * ipow(N, 6) - 802 * ipow(N, 5) +
           930 * ipow(N, 4) + 692 * ipow(N, 3) - 3268 * N * N + 3589 * N - 1401;
    a[4] = ipow(m, 3) + 12 * m * m + 20 * m + 8;
    a[5] = 24 + 60 * m + 63 * m * m + 35 * ipow(m, 3) + 10 * ipow(m, 4) + ipow(m, 5);
    return a;
}

const char* verdict_name(PositivityVerdict v) {
    switch (v) {
        case PositivityVerdict::PositiveOnInterval: return "PositiveOnInterval";
        case PositivityVerdict::Degenerate: return "Degenerate";
        case PositivityVerdict::Failed: return "Failed";
    }
    return "?";
}

PositivityReport verify_positivity(int n) {
    const RationalPoly p = p_nu(n);
    PositivityReport rep;
    rep.n = n;

    if (n == 3) {
        // p = 4(nu-1)^4; the only root sits at nu = 1, outside (0, 1/2].
        const RationalPoly expected =
            RationalPoly::from_ints({-1, 1}) * RationalPoly::from_ints({-1, 1});
        const bool factored = (p == Rational(4) * (expected * expected));
        const SturmChain chain = sturm_chain(p);
        const Rational nu_tilde = make_rational(1, 2);
        rep.sign_changes_at_0 = chain.sign_changes_at(0);
        rep.sign_changes_at_1 = chain.sign_changes_at(nu_tilde);
        rep.roots_in_unit_interval = count_roots(chain, Rational(0), nu_tilde);
        rep.discriminant_nonzero = (discriminant_p(n).from_resultant != 0);
        rep.verdict = (factored && rep.roots_in_unit_interval == 0 && p.eval(0) > 0)
                          ? PositivityVerdict::Degenerate
                          : PositivityVerdict::Failed;
        return rep;
    }

    const DiscriminantPair disc = discriminant_p(n);
    rep.discriminant_nonzero = (disc.from_resultant != 0);
    const SturmChain chain = sturm_chain(p);
    rep.sign_changes_at_0 = chain.sign_changes_at(0);
    rep.sign_changes_at_1 = chain.sign_changes_at(1);
    rep.roots_in_unit_interval = count_roots(chain, Rational(0), Rational(1));
    rep.verdict = (rep.discriminant_nonzero && rep.roots_in_unit_interval == 0 && p.eval(0) > 0)
                      ? PositivityVerdict::PositiveOnInterval
                      : PositivityVerdict::Failed;
    return rep;
}

}  // namespace ricci
