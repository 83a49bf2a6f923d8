#include "para/poly.hpp"

#include <algorithm>
#include <numeric>

#include "para/errors.hpp"

namespace para {

namespace {
unsigned total_degree(const std::vector<unsigned> &e) {
    return std::accumulate(e.begin(), e.end(), 0u);
}
}  // namespace

SparsePoly SparsePoly::constant(const GaussianRational &c, int nvars) {
    SparsePoly p(nvars);
    p.add_term(std::vector<unsigned>(nvars, 0), c);
    return p;
}

SparsePoly SparsePoly::variable(int i, int nvars) {
    if (i < 0 || i >= nvars) throw DomainError("variable index out of range");
    SparsePoly p(nvars);
    std::vector<unsigned> e(nvars, 0);
    e[i] = 1;
    p.add_term(e, 1);
    return p;
}

int SparsePoly::degree() const {
    int d = -1;
    for (const auto &[e, c] : terms_) d = std::max(d, int(total_degree(e)));
    return d;
}

bool SparsePoly::is_homogeneous() const {
    int d = -1;
    for (const auto &[e, c] : terms_) {
        int t = int(total_degree(e));
        if (d < 0) d = t;
        if (t != d) return false;
    }
    return true;
}

const GaussianRational &SparsePoly::coeff(const std::vector<unsigned> &exps) const {
    static const GaussianRational zero;
    auto it = terms_.find(exps);
    return it == terms_.end() ? zero : it->second;
}

void SparsePoly::add_term(const std::vector<unsigned> &exps, const GaussianRational &c) {
    if (int(exps.size()) != nvars_) throw DomainError("exponent vector length mismatch");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(exps, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r(nvars_);
    for (const auto &[e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

SparsePoly SparsePoly::operator+(const SparsePoly &o) const {
    if (nvars_ != o.nvars_) throw DomainError("polynomial variable count mismatch");
    SparsePoly r = *this;
    for (const auto &[e, c] : o.terms_) r.add_term(e, c);
    return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly &o) const {
    if (nvars_ != o.nvars_) throw DomainError("polynomial variable count mismatch");
    SparsePoly r = *this;
    for (const auto &[e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly &o) const {
    if (nvars_ != o.nvars_) throw DomainError("polynomial variable count mismatch");
    SparsePoly r(nvars_);
    std::vector<unsigned> e(nvars_);
    for (const auto &[ea, ca] : terms_)
        for (const auto &[eb, cb] : o.terms_) {
            for (int k = 0; k < nvars_; ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    return r;
}

SparsePoly SparsePoly::scaled(const GaussianRational &c) const {
    SparsePoly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto &[e, t] : terms_) r.terms_.emplace(e, c * t);
    return r;
}

SparsePoly SparsePoly::pow(unsigned e) const {
    SparsePoly r = constant(1, nvars_);
    SparsePoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

GaussianRational SparsePoly::eval(const Vec &point) const {
    if (int(point.size()) != nvars_) throw DomainError("eval point size mismatch");
    GaussianRational total;
    for (const auto &[e, c] : terms_) {
        GaussianRational m = c;
        for (int k = 0; k < nvars_; ++k)
            for (unsigned t = 0; t < e[k]; ++t) m *= point[k];
        total += m;
    }
    return total;
}

SparsePoly SparsePoly::derivative(int i) const {
    if (i < 0 || i >= nvars_) throw DomainError("derivative index out of range");
    SparsePoly r(nvars_);
    for (const auto &[e, c] : terms_) {
        if (e[i] == 0) continue;
        std::vector<unsigned> d = e;
        d[i] -= 1;
        r.add_term(d, c * GaussianRational(long(e[i])));
    }
    return r;
}

Vec SparsePoly::gradient_at(const Vec &point) const {
    Vec g(nvars_);
    for (int i = 0; i < nvars_; ++i) g[i] = derivative(i).eval(point);
    return g;
}

std::vector<std::pair<std::vector<unsigned>, GaussianRational>>
SparsePoly::canonical_terms() const {
    std::vector<std::pair<std::vector<unsigned>, GaussianRational>> out(terms_.begin(),
                                                                        terms_.end());
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
        unsigned da = total_degree(a.first), db = total_degree(b.first);
        if (da != db) return da > db;
        return a.first > b.first;  // lex descending within a degree
    });
    return out;
}

std::string SparsePoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto &[e, c] : canonical_terms()) {
        std::string coeff = c.str();
        std::string mono;
        for (int k = 0; k < nvars_; ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(k);
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        std::string term;
        if (mono.empty()) {
            term = coeff;
        } else if (coeff == "1") {
            term = mono;
        } else if (coeff == "-1") {
            term = "-" + mono;
        } else {
            // Mixed re+im coefficients carry an inner sign; parenthesize.
            bool wrap = !c.is_real() && sgn(c.re()) != 0;
            term = (wrap ? "(" + coeff + ")" : coeff) + "*" + mono;
        }
        if (out.empty()) {
            out = term;
        } else if (!term.empty() && term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

}  // namespace para
