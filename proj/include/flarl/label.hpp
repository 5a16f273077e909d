#pragma once

#include <iosfwd>
#include <string>

#include "flarl/rational.hpp"

namespace flarl {

// Number of interior labels. The label chain runs L_0 .. L_{m+1}; L_0 is the
// additive zero and L_{m+1} the multiplicative identity of the label field.
class Resolution {
public:
    explicit Resolution(int m);

    int m() const { return m_; }
    int unit_index() const { return m_ + 1; }
    Rational unit() const { return Rational(m_ + 1); }

    friend bool operator==(Resolution a, Resolution b) { return a.m_ == b.m_; }
    friend bool operator!=(Resolution a, Resolution b) { return a.m_ != b.m_; }

private:
    int m_;
};

// Throws ResolutionMismatch unless the two resolutions agree.
void require_same_resolution(Resolution a, Resolution b);

// Image of a label under the canonical isomorphism f(L_a) = a/(m+1).
// A distinct type so real values and label indices cannot be confused.
struct RealImage {
    Rational value;

    friend bool operator==(const RealImage& a, const RealImage& b) { return a.value == b.value; }
    friend bool operator!=(const RealImage& a, const RealImage& b) { return a.value != b.value; }
};

// A refined label L_a with exact rational index a at a fixed resolution.
class ExactLabel {
public:
    ExactLabel(Rational index, Resolution res) : index_(std::move(index)), res_(res) {}

    const Rational& index() const { return index_; }
    Resolution resolution() const { return res_; }

    bool is_zero() const { return index_.is_zero(); }
    bool is_identity() const { return index_ == res_.unit(); }

    friend bool operator==(const ExactLabel& a, const ExactLabel& b) {
        return a.res_ == b.res_ && a.index_ == b.index_;
    }
    friend bool operator!=(const ExactLabel& a, const ExactLabel& b) { return !(a == b); }

private:
    Rational index_;
    Resolution res_;
};

// A label whose index escaped the rational field (roots, non-integer powers).
class ApproxLabel {
public:
    static constexpr double kDefaultTol = 1e-9;

    ApproxLabel(double index, Resolution res, double tol = kDefaultTol);

    double index() const { return index_; }
    Resolution resolution() const { return res_; }
    double tol() const { return tol_; }

    double real_image() const { return index_ / res_.unit_index(); }

    // |index - exact| <= tol * max(1, |exact|), resolutions equal.
    bool matches(const ExactLabel& exact) const;
    bool matches_index(double index) const;

private:
    double index_;
    Resolution res_;
    double tol_;
};

// --- the Ch.1 operation set -------------------------------------------------

RealImage to_real(const ExactLabel& a);
ExactLabel from_real(const RealImage& r, Resolution res);
ExactLabel from_real(const Rational& r, Resolution res);

ExactLabel label_zero(Resolution res);
ExactLabel label_identity(Resolution res);

ExactLabel label_add(const ExactLabel& a, const ExactLabel& b);
ExactLabel label_sub(const ExactLabel& a, const ExactLabel& b);
ExactLabel label_neg(const ExactLabel& a);
ExactLabel label_mul(const ExactLabel& a, const ExactLabel& b);
ExactLabel label_inv(const ExactLabel& a);
ExactLabel label_div(const ExactLabel& a, const ExactLabel& b);

ExactLabel scalar_mul(const Rational& alpha, const ExactLabel& a);
ExactLabel scalar_div(const ExactLabel& a, const Rational& beta);

// L_a + alpha and its two subtraction variants.
ExactLabel mixed_add(const ExactLabel& a, const Rational& alpha);
ExactLabel mixed_sub(const ExactLabel& a, const Rational& alpha);
ExactLabel mixed_sub_rev(const Rational& alpha, const ExactLabel& a);
// alpha / L_a.
ExactLabel mixed_div_rev(const Rational& alpha, const ExactLabel& a);

// Exact integer power; p = 0 gives the identity label.
ExactLabel scalar_pow(const ExactLabel& a, long p);

// k-th root, k >= 2; even k requires a nonnegative index.
ApproxLabel scalar_root(const ExactLabel& a, long k, double tol = ApproxLabel::kDefaultTol);

// (L_a)^(L_b) with real exponent f(L_b); nonpositive bases only for integer
// exponents.
ApproxLabel vector_pow(const ExactLabel& a, const ExactLabel& b,
                       double tol = ApproxLabel::kDefaultTol);

// L_b-th root of L_a, i.e. exponent 1/f(L_b); b must not be L_0.
ApproxLabel vector_root(const ExactLabel& a, const ExactLabel& b,
                        double tol = ApproxLabel::kDefaultTol);

// [L_a, L_b]; identically L_0 because label multiplication is commutative.
ExactLabel lie_bracket(const ExactLabel& a, const ExactLabel& b);

// --- canonical text form ----------------------------------------------------

// "L<num>" or "L<num>/<den>" in lowest terms, sign on the numerator.
std::string to_string(const ExactLabel& a);
std::string to_string(const ApproxLabel& a);

// Accepts the canonical form; "0" is an alias for "L0".
ExactLabel parse_label(const std::string& text, Resolution res);

std::ostream& operator<<(std::ostream& os, const ExactLabel& a);

} // namespace flarl
