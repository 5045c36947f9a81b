#include "pseries/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace pseries {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& f) {
    while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

// Quotient and remainder over Q; g must be nonzero and trimmed.
std::pair<QPoly, QPoly> divmod(QPoly f, const QPoly& g) {
    trim(f);
    QPoly q;
    if (f.size() >= g.size()) q.assign(f.size() - g.size() + 1, Rational(0));
    while (f.size() >= g.size()) {
        const std::size_t shift = f.size() - g.size();
        const Rational c = f.back() / g.back();
        q[shift] = c;
        for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] -= c * g[i];
        f.pop_back();
        trim(f);
    }
    trim(q);
    return {q, f};
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

QPoly sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

std::vector<BigInt> cyclotomic(unsigned e, std::map<unsigned, std::vector<BigInt>>& memo) {
    if (auto it = memo.find(e); it != memo.end()) return it->second;
    // x^e - 1 divided by Phi_d for every proper divisor d
    std::vector<BigInt> f(e + 1, BigInt(0));
    f[0] = -1;
    f[e] = 1;
    for (unsigned d = 1; d < e; ++d) {
        if (e % d != 0) continue;
        const auto g = cyclotomic(d, memo);
        // exact division by a monic integer polynomial
        std::vector<BigInt> q(f.size() - g.size() + 1, BigInt(0));
        const std::size_t gdeg = g.size() - 1;
        for (std::size_t top = f.size() - 1; top >= gdeg; --top) {
            const BigInt c = f[top];
            const std::size_t shift = top - gdeg;
            q[shift] = c;
            for (std::size_t j = 0; j < g.size(); ++j) f[shift + j] -= c * g[j];
            if (top == gdeg) break;
        }
        for (const auto& r : f) {
            if (r != 0) throw std::logic_error("cyclotomic division left a remainder");
        }
        f = std::move(q);
    }
    memo[e] = f;
    return f;
}

}  // namespace

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

// ---------------------------------------------------------------------------
// CycloField

CycloField::CycloField(unsigned conductor) : conductor_(conductor) {
    std::map<unsigned, std::vector<BigInt>> memo;
    phi_ = cyclotomic(conductor, memo);
    const unsigned d = degree();
    powers_.reserve(conductor);
    std::vector<Rational> cur(d, Rational(0));
    cur[0] = 1;
    for (unsigned k = 0; k < conductor; ++k) {
        powers_.push_back(cur);
        // multiply by x and reduce by the monic Phi_e
        std::vector<Rational> next(d, Rational(0));
        const Rational top = cur[d - 1];
        for (unsigned i = d - 1; i > 0; --i) next[i] = cur[i - 1];
        next[0] = 0;
        if (sgn(top) != 0) {
            for (unsigned i = 0; i < d; ++i) next[i] -= top * Rational(phi_[i]);
        }
        cur = std::move(next);
    }
}

const CycloField& CycloField::get(unsigned conductor) {
    if (conductor == 0) throw std::invalid_argument("conductor must be positive");
    static std::mutex mutex;
    static std::map<unsigned, std::unique_ptr<CycloField>> fields;
    std::lock_guard lock(mutex);
    auto& slot = fields[conductor];
    if (!slot) slot.reset(new CycloField(conductor));
    return *slot;
}

CycloNum CycloField::zeta_power(long long k) const {
    const long long e = conductor_;
    const auto idx = static_cast<unsigned>(((k % e) + e) % e);
    return CycloNum(*this, powers_[idx]);
}

// ---------------------------------------------------------------------------
// CycloNum

CycloNum::CycloNum(const CycloField& field, std::vector<Rational> coeffs) : field_(&field), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != field.degree()) throw std::invalid_argument("coefficient vector has wrong length");
}

void CycloNum::normalize_rational() {
    if (!coeffs_.empty() && sgn(coeffs_[0]) == 0) coeffs_.clear();
}

const CycloField* CycloNum::join(const CycloNum& b) const {
    if (field_ && b.field_ && field_ != b.field_) {
        throw ConductorMismatch("conductor mismatch: " + std::to_string(field_->conductor()) + " vs " +
                                std::to_string(b.field_->conductor()));
    }
    return field_ ? field_ : b.field_;
}

std::vector<Rational> CycloNum::expanded(const CycloField* f) const {
    if (field_) return coeffs_;
    std::vector<Rational> out(f ? f->degree() : 1, Rational(0));
    if (!coeffs_.empty()) out[0] = coeffs_[0];
    return out;
}

bool CycloNum::is_zero() const {
    for (const auto& c : coeffs_) {
        if (sgn(c) != 0) return false;
    }
    return true;
}

bool CycloNum::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) != 0) return false;
    }
    return true;
}

Rational CycloNum::rational_value() const {
    if (!is_rational()) throw std::domain_error("value is not rational: " + to_string());
    return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

bool CycloNum::is_one() const { return is_rational() && rational_value() == 1; }

CycloNum CycloNum::operator-() const {
    CycloNum r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CycloNum& CycloNum::operator+=(const CycloNum& b) {
    const CycloField* f = join(b);
    if (!f) {
        if (b.coeffs_.empty()) return *this;
        if (coeffs_.empty()) {
            coeffs_ = b.coeffs_;
            return *this;
        }
        coeffs_[0] += b.coeffs_[0];
        normalize_rational();
        return *this;
    }
    if (!field_) {
        coeffs_ = expanded(f);
        field_ = f;
    }
    if (b.field_) {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
    } else if (!b.coeffs_.empty()) {
        coeffs_[0] += b.coeffs_[0];
    }
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& b) { return *this += -b; }

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
    const CycloField* f = a.join(b);
    if (!a.field_ || !b.field_) {
        // at least one rational factor: scale coefficientwise
        const CycloNum& r = a.field_ ? b : a;
        const CycloNum& other = a.field_ ? a : b;
        if (r.coeffs_.empty()) return CycloNum();
        CycloNum out = other;
        for (auto& c : out.coeffs_) c *= r.coeffs_[0];
        if (!f) out.normalize_rational();
        return out;
    }
    const unsigned d = f->degree();
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (unsigned i = 0; i < d; ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (unsigned j = 0; j < d; ++j) {
            if (sgn(b.coeffs_[j]) == 0) continue;
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    const auto& phi = f->cyclotomic_polynomial();
    for (unsigned i = 2 * d - 1; i-- > d;) {
        if (sgn(prod[i]) == 0) continue;
        const Rational c = prod[i];
        for (unsigned j = 0; j < d; ++j) prod[i - d + j] -= c * Rational(phi[j]);
        prod[i] = 0;
    }
    prod.resize(d);
    return CycloNum(*f, std::move(prod));
}

CycloNum& CycloNum::operator*=(const CycloNum& b) { return *this = *this * b; }

void CycloNum::add_product(const CycloNum& a, const CycloNum& b) {
    if (!field_ && !a.field_ && !b.field_) {
        if (a.coeffs_.empty() || b.coeffs_.empty()) return;
        thread_local Rational tmp;
        mpq_mul(tmp.get_mpq_t(), a.coeffs_[0].get_mpq_t(), b.coeffs_[0].get_mpq_t());
        if (coeffs_.empty()) {
            coeffs_.push_back(tmp);
            return;
        }
        coeffs_[0] += tmp;
        normalize_rational();
        return;
    }
    *this += a * b;
}

CycloNum CycloNum::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (!field_) return CycloNum(Rational(1) / coeffs_[0]);
    // extended Euclid: s * a + t * Phi = 1
    QPoly phi(field_->cyclotomic_polynomial().begin(), field_->cyclotomic_polynomial().end());
    QPoly a = coeffs_;
    trim(a);
    QPoly r0 = phi, r1 = a, s0, s1{Rational(1)};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        QPoly s2 = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant since Phi is irreducible
    if (r0.size() != 1) throw std::logic_error("cyclotomic inverse: gcd is not constant");
    const Rational inv_c = Rational(1) / r0[0];
    auto [q, s] = divmod(s0, phi);
    (void)q;
    std::vector<Rational> out(field_->degree(), Rational(0));
    for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[i] * inv_c;
    return CycloNum(*field_, std::move(out));
}

CycloNum CycloNum::conj() const {
    if (!field_) return *this;
    const unsigned e = field_->conductor();
    std::vector<Rational> out(field_->degree(), Rational(0));
    for (unsigned i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        const auto& p = field_->power_coefficients((e - i) % e);
        for (unsigned j = 0; j < out.size(); ++j) {
            if (sgn(p[j]) != 0) out[j] += coeffs_[i] * p[j];
        }
    }
    return CycloNum(*field_, std::move(out));
}

std::complex<double> CycloNum::to_complex() const {
    if (!field_) return {coeffs_.empty() ? 0.0 : coeffs_[0].get_d(), 0.0};
    const double e = field_->conductor();
    std::complex<double> z{0.0, 0.0};
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / e;
        z += coeffs_[i].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return z;
}

std::string CycloNum::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (sgn(c) == 0) continue;
        std::string term;
        const Rational mag = abs(c);
        if (i == 0) {
            term = mag.get_str();
        } else {
            if (mag != 1) term = mag.get_str() + "*";
            term += "z";
            if (i > 1) term += "^" + std::to_string(i);
        }
        if (out.empty()) {
            out = (sgn(c) < 0 ? "-" : "") + term;
        } else {
            out += (sgn(c) < 0 ? " - " : " + ") + term;
        }
    }
    return out.empty() ? "0" : out;
}

bool operator==(const CycloNum& a, const CycloNum& b) {
    const CycloField* f = a.join(b);
    if (!f) {
        if (a.coeffs_.empty() || b.coeffs_.empty()) return a.coeffs_.empty() && b.coeffs_.empty();
        return a.coeffs_[0] == b.coeffs_[0];
    }
    return a.expanded(f) == b.expanded(f);
}

CycloNum cyclo_arith(const CycloNum& a, const CycloNum& b, CycloOp op) {
    switch (op) {
        case CycloOp::Add: return a + b;
        case CycloOp::Mul: return a * b;
        case CycloOp::Inv: return a.inverse();
        case CycloOp::Conj: return a.conj();
    }
    throw std::invalid_argument("unknown cyclotomic op");
}

std::complex<double> to_float(const CycloNum& a) { return a.to_complex(); }

}  // namespace pseries
