#include "para/rational.hpp"

#include <ostream>

#include "para/errors.hpp"

namespace para {

GaussianRational::GaussianRational(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    re_ = mpq_class(num, den);
    re_.canonicalize();
}

GaussianRational::GaussianRational(mpq_class re, mpq_class im)
    : re_(std::move(re)), im_(std::move(im)) {}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    mpq_class n = norm();
    return {mpq_class(re_ / n), mpq_class(-im_ / n)};
}

GaussianRational &GaussianRational::operator+=(const GaussianRational &o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational &GaussianRational::operator-=(const GaussianRational &o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational &GaussianRational::operator*=(const GaussianRational &o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussianRational &GaussianRational::operator/=(const GaussianRational &o) {
    return *this *= o.inverse();
}

GaussianRational operator+(GaussianRational a, const GaussianRational &b) { return a += b; }
GaussianRational operator-(GaussianRational a, const GaussianRational &b) { return a -= b; }
GaussianRational operator*(GaussianRational a, const GaussianRational &b) { return a *= b; }
GaussianRational operator/(GaussianRational a, const GaussianRational &b) { return a /= b; }

std::string rational_str(const mpq_class &q) { return q.get_str(); }

std::string GaussianRational::str() const {
    if (sgn(im_) == 0) return rational_str(re_);
    std::string imag;
    if (im_ == 1)
        imag = "i";
    else if (im_ == -1)
        imag = "-i";
    else
        imag = rational_str(im_) + "i";
    if (sgn(re_) == 0) return imag;
    if (sgn(im_) > 0) return rational_str(re_) + "+" + imag;
    return rational_str(re_) + imag;  // im's own minus sign separates
}

namespace {

mpq_class parse_rational_part(const std::string &s) {
    if (s.empty()) throw SchemaError("empty rational literal");
    // mpq_class accepts "num" and "num/den"; validate characters first so
    // garbage produces a clear error instead of a GMP abort.
    for (size_t k = 0; k < s.size(); ++k) {
        char c = s[k];
        bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && k == 0);
        if (!ok) throw SchemaError("bad rational literal '" + s + "'");
    }
    try {
        mpq_class q(s);
        if (sgn(q.get_den()) == 0) throw SchemaError("zero denominator in '" + s + "'");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument &) {
        throw SchemaError("bad rational literal '" + s + "'");
    }
}

}  // namespace

GaussianRational GaussianRational::parse(const std::string &raw) {
    std::string s;
    for (char c : raw)
        if (c != ' ') s += c;
    if (s.empty()) throw SchemaError("empty value");

    // Locate a sign at position > 0: numerators may be signed only at the
    // front and denominators are positive, so any later +/- separates the
    // real part from the imaginary part.
    size_t sep = std::string::npos;
    for (size_t k = 1; k < s.size(); ++k)
        if (s[k] == '+' || s[k] == '-') {
            sep = k;
            break;
        }

    auto parse_imag = [](std::string t) -> mpq_class {
        // t ends with 'i'; "i" / "+i" / "-i" mean 1, 1, -1.  A leading
        // '+' is the component separator, not part of the numerator.
        t.pop_back();
        if (t.empty() || t == "+") return {1};
        if (t == "-") return {-1};
        if (t.front() == '+') t.erase(t.begin());
        return parse_rational_part(t);
    };

    if (sep == std::string::npos) {
        if (s.back() == 'i') return {mpq_class(0), parse_imag(s)};
        return GaussianRational(parse_rational_part(s));
    }
    if (s.back() != 'i')
        throw SchemaError("bad value '" + raw + "': two components but no trailing i");
    std::string left = s.substr(0, sep);
    std::string right = s.substr(sep);  // keeps the sign
    return {parse_rational_part(left), parse_imag(right)};
}

std::ostream &operator<<(std::ostream &os, const GaussianRational &x) {
    return os << x.str();
}

}  // namespace para
