#include "flarl/label.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "flarl/errors.hpp"

namespace flarl {

Resolution::Resolution(int m) : m_(m) {
    if (m < 1) throw DomainError("resolution m must be >= 1");
}

void require_same_resolution(Resolution a, Resolution b) {
    if (a != b)
        throw ResolutionMismatch("m=" + std::to_string(a.m()) +
                                 " vs m=" + std::to_string(b.m()));
}

ApproxLabel::ApproxLabel(double index, Resolution res, double tol)
    : index_(index), res_(res), tol_(tol) {
    if (!std::isfinite(index)) throw DomainError("approximate label index must be finite");
}

bool ApproxLabel::matches(const ExactLabel& exact) const {
    if (res_ != exact.resolution()) return false;
    return matches_index(exact.index().to_double());
}

bool ApproxLabel::matches_index(double index) const {
    return std::abs(index_ - index) <= tol_ * std::max(1.0, std::abs(index));
}

RealImage to_real(const ExactLabel& a) {
    return RealImage{a.index() / a.resolution().unit()};
}

ExactLabel from_real(const RealImage& r, Resolution res) {
    return ExactLabel(r.value * res.unit(), res);
}

ExactLabel from_real(const Rational& r, Resolution res) {
    return ExactLabel(r * res.unit(), res);
}

ExactLabel label_zero(Resolution res) { return ExactLabel(Rational(0), res); }

ExactLabel label_identity(Resolution res) { return ExactLabel(res.unit(), res); }

ExactLabel label_add(const ExactLabel& a, const ExactLabel& b) {
    require_same_resolution(a.resolution(), b.resolution());
    return ExactLabel(a.index() + b.index(), a.resolution());
}

ExactLabel label_sub(const ExactLabel& a, const ExactLabel& b) {
    return label_add(a, label_neg(b));
}

ExactLabel label_neg(const ExactLabel& a) {
    return ExactLabel(-a.index(), a.resolution());
}

ExactLabel label_mul(const ExactLabel& a, const ExactLabel& b) {
    require_same_resolution(a.resolution(), b.resolution());
    return ExactLabel(a.index() * b.index() / a.resolution().unit(), a.resolution());
}

ExactLabel label_inv(const ExactLabel& a) {
    if (a.is_zero()) throw DivisionByZeroLabel("inverse of L0");
    return ExactLabel(a.resolution().unit().pow(2) / a.index(), a.resolution());
}

ExactLabel label_div(const ExactLabel& a, const ExactLabel& b) {
    require_same_resolution(a.resolution(), b.resolution());
    if (b.is_zero()) throw DivisionByZeroLabel("division by L0");
    return label_mul(a, label_inv(b));
}

ExactLabel scalar_mul(const Rational& alpha, const ExactLabel& a) {
    return ExactLabel(alpha * a.index(), a.resolution());
}

ExactLabel scalar_div(const ExactLabel& a, const Rational& beta) {
    if (beta.is_zero()) throw DivisionByZeroScalar("label divided by scalar zero");
    return scalar_mul(beta.reciprocal(), a);
}

ExactLabel mixed_add(const ExactLabel& a, const Rational& alpha) {
    return ExactLabel(a.index() + alpha * a.resolution().unit(), a.resolution());
}

ExactLabel mixed_sub(const ExactLabel& a, const Rational& alpha) {
    return mixed_add(a, -alpha);
}

ExactLabel mixed_sub_rev(const Rational& alpha, const ExactLabel& a) {
    return label_neg(mixed_add(a, -alpha));
}

ExactLabel mixed_div_rev(const Rational& alpha, const ExactLabel& a) {
    if (a.is_zero()) throw DivisionByZeroLabel("scalar divided by L0");
    return ExactLabel(alpha * a.resolution().unit().pow(2) / a.index(), a.resolution());
}

ExactLabel scalar_pow(const ExactLabel& a, long p) {
    if (p == 0) return label_identity(a.resolution());
    if (p < 0 && a.is_zero()) throw DivisionByZeroLabel("negative power of L0");
    Rational unit = a.resolution().unit();
    return ExactLabel(a.index().pow(p) / unit.pow(p - 1), a.resolution());
}

namespace {

// Real x^p for the escape-hatch operations. Negative bases are admitted only
// for integer p; 0^p needs p >= 0.
double real_pow(double base, double p, Resolution res) {
    double rounded = std::nearbyint(p);
    bool integer_exponent = p == rounded;
    if (base < 0.0 && !integer_exponent)
        throw DomainError("negative base with non-integer exponent at m=" +
                          std::to_string(res.m()));
    if (base == 0.0 && p < 0.0)
        throw DivisionByZeroLabel("negative power of L0");
    return std::pow(base, p);
}

ApproxLabel pow_with_exponent(const ExactLabel& a, double p, double tol) {
    Resolution res = a.resolution();
    double unit = res.unit_index();
    double index = real_pow(a.index().to_double(), p, res) * std::pow(unit, 1.0 - p);
    return ApproxLabel(index, res, tol);
}

} // namespace

ApproxLabel scalar_root(const ExactLabel& a, long k, double tol) {
    if (k < 2) throw DomainError("root order must be >= 2");
    if (k % 2 == 0 && a.index().sign() < 0)
        throw NegativeEvenRoot("even root of a negative label");
    double base = a.index().to_double();
    double p = 1.0 / static_cast<double>(k);
    double unit = a.resolution().unit_index();
    // Odd roots of negative labels go through the real k-th root.
    double root = base < 0.0 ? -std::pow(-base, p) : std::pow(base, p);
    return ApproxLabel(root * std::pow(unit, 1.0 - p), a.resolution(), tol);
}

ApproxLabel vector_pow(const ExactLabel& a, const ExactLabel& b, double tol) {
    require_same_resolution(a.resolution(), b.resolution());
    double p = to_real(b).value.to_double();
    return pow_with_exponent(a, p, tol);
}

ApproxLabel vector_root(const ExactLabel& a, const ExactLabel& b, double tol) {
    require_same_resolution(a.resolution(), b.resolution());
    if (b.is_zero()) throw DivisionByZeroLabel("root by L0");
    double p = (Rational(1) / to_real(b).value).to_double();
    return pow_with_exponent(a, p, tol);
}

ExactLabel lie_bracket(const ExactLabel& a, const ExactLabel& b) {
    return label_sub(label_mul(a, b), label_mul(b, a));
}

std::string to_string(const ExactLabel& a) {
    return "L" + a.index().str();
}

std::string to_string(const ApproxLabel& a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "L%.12g", a.index());
    return buf;
}

ExactLabel parse_label(const std::string& text, Resolution res) {
    if (text == "0") return label_zero(res);
    if (text.size() < 2 || text[0] != 'L')
        throw FormatError("malformed label '" + text + "'");
    return ExactLabel(Rational::parse(text.substr(1)), res);
}

std::ostream& operator<<(std::ostream& os, const ExactLabel& a) {
    return os << to_string(a);
}

} // namespace flarl
