#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_e) = Q[x]/(Phi_e(x)).

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pseries {

using Rational = mpq_class;
using BigInt = mpz_class;

class CycloNum;

/// Q(zeta_e) for a fixed conductor e. Instances are interned and live for
/// the lifetime of the program; compare fields by address.
class CycloField {
public:
    static const CycloField& get(unsigned conductor);

    unsigned conductor() const noexcept { return conductor_; }
    /// phi(e), the length of every coefficient vector.
    unsigned degree() const noexcept { return static_cast<unsigned>(phi_.size()) - 1; }
    /// Phi_e with integer coefficients, constant term first (monic).
    const std::vector<BigInt>& cyclotomic_polynomial() const noexcept { return phi_; }

    /// zeta^k for any integer k.
    CycloNum zeta_power(long long k) const;
    /// Reduced coefficient vector of x^k mod Phi_e, 0 <= k < e.
    const std::vector<Rational>& power_coefficients(unsigned k) const { return powers_.at(k); }

private:
    explicit CycloField(unsigned conductor);

    unsigned conductor_;
    std::vector<BigInt> phi_;
    std::vector<std::vector<Rational>> powers_;
};

class ConductorMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Element of Q(zeta_e). A value without a field is a plain rational and
/// combines with any field; two values with different fields do not mix.
class CycloNum {
public:
    CycloNum() = default;
    CycloNum(long v) : coeffs_{Rational(v)} { normalize_rational(); }  // NOLINT(google-explicit-constructor)
    CycloNum(Rational v) : coeffs_{std::move(v)} { normalize_rational(); }  // NOLINT(google-explicit-constructor)
    CycloNum(const CycloField& field, std::vector<Rational> coeffs);

    static CycloNum zeta(const CycloField& field, long long k = 1) { return field.zeta_power(k); }

    const CycloField* field() const noexcept { return field_; }
    unsigned conductor() const noexcept { return field_ ? field_->conductor() : 1; }
    /// Coefficients against 1, zeta, ..., zeta^(phi(e)-1). Empty means zero
    /// for a rational value.
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// The rational value; throws if not rational.
    Rational rational_value() const;

    CycloNum operator-() const;
    CycloNum& operator+=(const CycloNum& b);
    CycloNum& operator-=(const CycloNum& b);
    CycloNum& operator*=(const CycloNum& b);
    /// this += a * b
    void add_product(const CycloNum& a, const CycloNum& b);

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inverse(); }

    /// Throws std::domain_error on zero.
    CycloNum inverse() const;
    /// Complex conjugation, zeta -> zeta^(e-1).
    CycloNum conj() const;

    std::complex<double> to_complex() const;
    std::string to_string() const;

    friend bool operator==(const CycloNum& a, const CycloNum& b);

private:
    void normalize_rational();
    const CycloField* join(const CycloNum& b) const;
    std::vector<Rational> expanded(const CycloField* f) const;

    const CycloField* field_ = nullptr;
    std::vector<Rational> coeffs_;
};

enum class CycloOp { Add, Mul, Inv, Conj };

/// Binary ops use both operands; unary ops (Inv, Conj) ignore b.
CycloNum cyclo_arith(const CycloNum& a, const CycloNum& b, CycloOp op);

std::complex<double> to_float(const CycloNum& a);

/// Euler's totient.
unsigned euler_phi(unsigned n);

}  // namespace pseries
