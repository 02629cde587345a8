#include "znz/polynomial.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace znz {

void IntPolynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::z() { return IntPolynomial{0, 1}; }

IntPolynomial IntPolynomial::constant(const Int& c) { return IntPolynomial{c}; }

IntPolynomial IntPolynomial::z_pow_minus_one(unsigned long k) {
    std::vector<Int> c(k + 1, Int(0));
    c[0] = -1;
    c[k] = 1;
    return IntPolynomial(std::move(c));
}

const Int& IntPolynomial::coeff(std::size_t i) const {
    static const Int kZero(0);
    return i < c_.size() ? c_[i] : kZero;
}

const Int& IntPolynomial::leading() const {
    if (c_.empty()) throw UsageError("leading coefficient of the zero polynomial");
    return c_.back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<Int> r(c_);
    for (Int& x : r) x = -x;
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::derivative() const {
    if (c_.size() <= 1) return IntPolynomial();
    std::vector<Int> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(static_cast<long>(i));
    return IntPolynomial(std::move(r));
}

Int IntPolynomial::eval(const Int& x) const {
    Int acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::divmod_monic(const IntPolynomial& den) const {
    if (!den.is_monic()) throw DomainError("divmod_monic requires a monic divisor");
    std::vector<Int> rem(c_);
    const long dd = den.degree();
    if (static_cast<long>(rem.size()) - 1 < dd) return {IntPolynomial(), *this};
    std::vector<Int> quot(rem.size() - dd, Int(0));
    for (std::size_t i = rem.size(); static_cast<long>(i) - 1 >= dd; --i) {
        const std::size_t top = i - 1;
        if (rem[top] == 0) continue;
        Int f = rem[top];
        quot[top - dd] = f;
        for (long j = 0; j <= dd; ++j) rem[top - dd + j] -= f * den.coeff(j);
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

namespace {

std::string poly_to_string_impl(const std::vector<std::string>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (const std::string& t : terms) {
        if (out.empty()) {
            out = t;
        } else if (!t.empty() && t[0] == '-') {
            out += " - " + t.substr(1);
        } else {
            out += " + " + t;
        }
    }
    return out;
}

template <typename Coeff>
std::string render_poly(const std::vector<Coeff>& c) {
    std::vector<std::string> terms;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        std::ostringstream t;
        bool neg = c[i] < 0;
        Coeff a = neg ? Coeff(-c[i]) : c[i];
        if (i == 0) {
            t << a;
        } else {
            if (a != 1) t << a << "*";
            t << "z";
            if (i > 1) t << "^" << i;
        }
        terms.push_back((neg ? "-" : "") + t.str());
    }
    return poly_to_string_impl(terms);
}

}  // namespace

std::string IntPolynomial::to_string() const { return render_poly(c_); }

RatPolynomial::RatPolynomial(const IntPolynomial& p) {
    c_.reserve(p.coeffs().size());
    for (const Int& x : p.coeffs()) c_.emplace_back(x);
}

void RatPolynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    for (Rat& q : c_) q.canonicalize();
}

RatPolynomial RatPolynomial::constant(const Rat& c) { return RatPolynomial{c}; }

const Rat& RatPolynomial::coeff(std::size_t i) const {
    static const Rat kZero(0);
    return i < c_.size() ? c_[i] : kZero;
}

RatPolynomial RatPolynomial::operator+(const RatPolynomial& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return RatPolynomial(std::move(r));
}

RatPolynomial RatPolynomial::operator-(const RatPolynomial& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return RatPolynomial(std::move(r));
}

RatPolynomial RatPolynomial::operator*(const RatPolynomial& o) const {
    if (is_zero() || o.is_zero()) return RatPolynomial();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return RatPolynomial(std::move(r));
}

RatPolynomial RatPolynomial::derivative() const {
    if (c_.size() <= 1) return RatPolynomial();
    std::vector<Rat> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return RatPolynomial(std::move(r));
}

RatPolynomial RatPolynomial::make_monic() const {
    if (is_zero()) return *this;
    Rat inv = 1 / c_.back();
    std::vector<Rat> r(c_);
    for (Rat& q : r) q *= inv;
    return RatPolynomial(std::move(r));
}

std::pair<RatPolynomial, RatPolynomial> RatPolynomial::divmod(const RatPolynomial& den) const {
    if (den.is_zero()) throw UsageError("polynomial division by zero");
    std::vector<Rat> rem(c_);
    const long dd = den.degree();
    if (degree() < dd) return {RatPolynomial(), *this};
    std::vector<Rat> quot(rem.size() - dd, Rat(0));
    Rat lead_inv = 1 / den.c_.back();
    for (std::size_t i = rem.size(); static_cast<long>(i) - 1 >= dd; --i) {
        const std::size_t top = i - 1;
        if (rem[top] == 0) continue;
        Rat f = rem[top] * lead_inv;
        quot[top - dd] = f;
        for (long j = 0; j <= dd; ++j) rem[top - dd + j] -= f * den.coeff(j);
    }
    return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

bool RatPolynomial::is_integral() const {
    for (const Rat& q : c_)
        if (q.get_den() != 1) return false;
    return true;
}

IntPolynomial RatPolynomial::to_int_checked() const {
    std::vector<Int> r;
    r.reserve(c_.size());
    for (const Rat& q : c_) {
        if (q.get_den() != 1) throw std::logic_error("polynomial is not integral: " + to_string());
        r.push_back(q.get_num());
    }
    return IntPolynomial(std::move(r));
}

IntPolynomial RatPolynomial::primitive_int() const {
    if (is_zero()) return IntPolynomial();
    Int den_lcm = 1;
    for (const Rat& q : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Int> r;
    r.reserve(c_.size());
    Int content = 0;
    for (const Rat& q : c_) {
        Int v = q.get_num() * (den_lcm / q.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        r.push_back(std::move(v));
    }
    if (content == 0) return IntPolynomial();
    if (r.back() < 0) content = -content;
    for (Int& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
    return IntPolynomial(std::move(r));
}

std::string RatPolynomial::to_string() const { return render_poly(c_); }

RatPolynomial poly_powmod(const IntPolynomial& base, const Int& e, const IntPolynomial& m) {
    if (!m.is_monic() || m.degree() < 1) throw DomainError("poly_powmod requires a monic modulus of degree >= 1");
    if (e < 0) throw UsageError("poly_powmod exponent must be nonnegative");
    IntPolynomial b = base.divmod_monic(m).second;
    IntPolynomial acc = IntPolynomial::constant(1).divmod_monic(m).second;
    if (e == 0) return RatPolynomial(acc);
    const mp_bitcnt_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (mp_bitcnt_t i = bits; i-- > 0;) {
        acc = (acc * acc).divmod_monic(m).second;
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = (acc * b).divmod_monic(m).second;
    }
    return RatPolynomial(acc);
}

unsigned long euler_phi(unsigned long k) {
    unsigned long result = k;
    for (unsigned long p = 2; p * p <= k; ++p) {
        if (k % p == 0) {
            while (k % p == 0) k /= p;
            result -= result / p;
        }
    }
    if (k > 1) result -= result / k;
    return result;
}

const IntPolynomial& cyclotomic(unsigned long k) {
    static std::map<unsigned long, IntPolynomial> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    if (k == 0) throw UsageError("cyclotomic index must be positive");
    // Phi_k = (z^k - 1) / prod_{d | k, d < k} Phi_d, computed bottom-up
    // so every divisor is already cached when needed.
    for (unsigned long d = 1; d <= k; ++d) {
        if (k % d != 0 || cache.count(d)) continue;
        IntPolynomial p = IntPolynomial::z_pow_minus_one(d);
        for (unsigned long e = 1; e < d; ++e) {
            if (d % e != 0) continue;
            auto [q, r] = p.divmod_monic(cache.at(e));
            if (!r.is_zero()) throw std::logic_error("cyclotomic division not exact");
            p = std::move(q);
        }
        cache.emplace(d, std::move(p));
    }
    return cache.at(k);
}

bool CyclotomicSplit::squarefree_cyclotomic() const {
    if (!fully_cyclotomic()) return false;
    for (const auto& f : factors)
        if (f.multiplicity != 1) return false;
    return true;
}

CyclotomicSplit cyclotomic_cofactor(const IntPolynomial& m) {
    if (!m.is_monic()) throw DomainError("cyclotomic_cofactor requires a monic polynomial");
    if (m.coeff(0) == 0) throw DomainError("cyclotomic_cofactor requires a nonzero constant term");
    const long d = m.degree();
    if (d > 64) throw DomainError("cyclotomic scan bound only validated for degree <= 64");
    CyclotomicSplit out;
    out.remainder = m;
    const unsigned long kmax = 2ul * static_cast<unsigned long>(d) * static_cast<unsigned long>(d) + 1;
    for (unsigned long k = 1; k <= kmax; ++k) {
        if (euler_phi(k) > static_cast<unsigned long>(out.remainder.degree())) continue;
        const IntPolynomial& phi_k = cyclotomic(k);
        unsigned long mult = 0;
        while (out.remainder.degree() >= phi_k.degree()) {
            auto [q, r] = out.remainder.divmod_monic(phi_k);
            if (!r.is_zero()) break;
            out.remainder = std::move(q);
            ++mult;
        }
        if (mult > 0) out.factors.push_back({k, mult});
        if (out.remainder.degree() == 0) break;
    }
    return out;
}

RatPolynomial poly_gcd(const RatPolynomial& a, const RatPolynomial& b) {
    RatPolynomial x = a.make_monic(), y = b.make_monic();
    while (!y.is_zero()) {
        RatPolynomial r = x.divmod(y).second;
        x = std::move(y);
        y = r.make_monic();
    }
    return x;
}

IntPolynomial poly_lcm_monic(const IntPolynomial& a, const IntPolynomial& b) {
    if (!a.is_monic() || !b.is_monic()) throw UsageError("poly_lcm_monic requires monic inputs");
    RatPolynomial g = poly_gcd(RatPolynomial(a), RatPolynomial(b));
    RatPolynomial l = (RatPolynomial(a) * RatPolynomial(b)).divmod(g).first;
    // monic divisors/multiples of monic integer polynomials stay integral
    return l.make_monic().to_int_checked();
}

IntPolynomial squarefree_radical(const IntPolynomial& g) {
    if (!g.is_monic()) throw UsageError("squarefree_radical requires a monic polynomial");
    if (g.degree() < 1) return g;
    RatPolynomial r = poly_gcd(RatPolynomial(g), RatPolynomial(g.derivative()));
    return RatPolynomial(g).divmod(r).first.make_monic().to_int_checked();
}

IntVector apply_poly(const IntMatrix& a, const IntPolynomial& p, const IntVector& x) {
    IntVector acc(x.size());
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        acc = a.apply(acc) + x * p.coeff(i);
    }
    return acc;
}

}  // namespace znz
