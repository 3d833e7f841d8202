#include "superkl/laurent.hpp"

#include <cassert>
#include <cctype>
#include <stdexcept>

namespace skl {

Laurent::Laurent(Int c) {
    if (c != 0) terms_[0] = std::move(c);
}

Laurent Laurent::term(Int c, int e) {
    Laurent p;
    if (c != 0) p.terms_[e] = std::move(c);
    return p;
}

Int Laurent::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

int Laurent::min_exp() const {
    assert(!terms_.empty());
    return terms_.begin()->first;
}

int Laurent::max_exp() const {
    assert(!terms_.empty());
    return terms_.rbegin()->first;
}

Laurent Laurent::operator-() const {
    Laurent p;
    for (const auto& [e, c] : terms_) p.terms_[e] = -c;
    return p;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent p;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            int e = ea + eb;
            auto it = p.terms_.find(e);
            if (it == p.terms_.end()) {
                p.terms_.emplace(e, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) p.terms_.erase(it);
            }
        }
    return p;
}

Laurent Laurent::bar() const {
    Laurent p;
    for (const auto& [e, c] : terms_) p.terms_[-e] = c;
    return p;
}

Laurent Laurent::substitute_neg_inv() const {
    Laurent p;
    for (const auto& [e, c] : terms_) p.terms_[-e] = (e % 2 == 0) ? c : -c;
    return p;
}

Int Laurent::eval_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

Laurent Laurent::slice(int lo, int hi) const {
    Laurent p;
    for (const auto& [e, c] : terms_)
        if (lo <= e && e <= hi) p.terms_[e] = c;
    return p;
}

bool Laurent::in_z_q() const {
    return terms_.empty() || min_exp() >= 0;
}

bool Laurent::in_q_z_q() const {
    return terms_.empty() || min_exp() >= 1;
}

bool Laurent::in_z_qinv() const {
    return terms_.empty() || max_exp() <= 0;
}

bool Laurent::in_qinv_z_qinv() const {
    return terms_.empty() || max_exp() <= -1;
}

bool Laurent::nonneg_coeffs() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

std::string Laurent::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Highest exponent first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Int a = c;
        if (out.empty()) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (e == 0) {
            out += a.str();
        } else {
            if (a != 1) out += a.str() + "*";
            out += "q";
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

namespace {

[[noreturn]] void parse_fail(const std::string& s) {
    throw std::invalid_argument("bad laurent literal: " + s);
}

}  // namespace

Laurent Laurent::parse(const std::string& s) {
    Laurent out;
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; };
    skip_ws();
    if (i == s.size()) parse_fail(s);
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        skip_ws();
        if (!first || s[i] == '+' || s[i] == '-') {
            if (i >= s.size() || (s[i] != '+' && s[i] != '-')) parse_fail(s);
            sign = (s[i] == '-') ? -1 : 1;
            ++i;
            skip_ws();
        }
        first = false;
        Int c = 1;
        bool have_digits = false;
        if (i < s.size() && std::isdigit((unsigned char)s[i])) {
            size_t j = i;
            while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
            c = Int(s.substr(i, j - i));
            i = j;
            have_digits = true;
            skip_ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        int e = 0;
        if (i < s.size() && s[i] == 'q') {
            ++i;
            e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                int esign = 1;
                if (i < s.size() && s[i] == '-') {
                    esign = -1;
                    ++i;
                }
                if (i >= s.size() || !std::isdigit((unsigned char)s[i])) parse_fail(s);
                size_t j = i;
                while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
                e = esign * std::stoi(s.substr(i, j - i));
                i = j;
            }
        } else if (!have_digits) {
            parse_fail(s);
        }
        out += term(sign * c, e);
        skip_ws();
    }
    return out;
}

Laurent quantum_int(int n) {
    if (n < 0) return -quantum_int(-n);
    Laurent p;
    // [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}
    for (int e = n - 1; e >= 1 - n; e -= 2) p += Laurent::q(e);
    return p;
}

Laurent quantum_factorial(int n) {
    assert(n >= 0);
    Laurent p(1);
    for (int k = 2; k <= n; ++k) p *= quantum_int(k);
    return p;
}

Laurent exact_div(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw std::domain_error("laurent division by zero");
    if (a.is_zero()) return Laurent();
    // Long division from the top exponent; exactness required.
    Laurent rem = a, quot;
    const int be = b.max_exp();
    const Int& bc = b.terms().rbegin()->second;
    // Any exact quotient has exponents within [a.min-b.min, a.max-b.max].
    const int lo = a.min_exp() - b.min_exp();
    while (!rem.is_zero()) {
        int e = rem.max_exp();
        if (e - be < lo) throw std::domain_error("inexact laurent division");
        Int c = rem.coeff(e);
        if (c % bc != 0) throw std::domain_error("inexact laurent division");
        Laurent t = Laurent::term(c / bc, e - be);
        quot += t;
        rem -= t * b;
        if (!rem.is_zero() && rem.max_exp() >= e)
            throw std::domain_error("inexact laurent division");
    }
    return quot;
}

}  // namespace skl
