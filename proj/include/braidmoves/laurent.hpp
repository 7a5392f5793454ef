#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>

namespace braidmoves {

using BigInt = boost::multiprecision::cpp_int;

// Laurent polynomial over Z in one variable t, exact arithmetic.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly constant(long c) {
        LaurentPoly p;
        if (c != 0)
            p.coeffs_[0] = c;
        return p;
    }

    static LaurentPoly monomial(long c, int degree) {
        LaurentPoly p;
        if (c != 0)
            p.coeffs_[degree] = c;
        return p;
    }

    // 1 + t + ... + t^{m-1}
    static LaurentPoly ones(int m) {
        LaurentPoly p;
        for (int i = 0; i < m; ++i)
            p.coeffs_[i] = 1;
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    int min_degree() const {
        if (is_zero())
            throw std::logic_error("min_degree of zero polynomial");
        return coeffs_.begin()->first;
    }
    int max_degree() const {
        if (is_zero())
            throw std::logic_error("max_degree of zero polynomial");
        return coeffs_.rbegin()->first;
    }

    BigInt coeff(int degree) const {
        auto it = coeffs_.find(degree);
        return it == coeffs_.end() ? BigInt(0) : it->second;
    }

    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (const auto& [d, c] : o.coeffs_)
            r.add_term(d, c);
        return r;
    }

    LaurentPoly operator-(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (const auto& [d, c] : o.coeffs_)
            r.add_term(d, -c);
        return r;
    }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [d, c] : coeffs_)
            r.coeffs_[d] = -c;
        return r;
    }

    LaurentPoly operator*(const LaurentPoly& o) const {
        LaurentPoly r;
        for (const auto& [d1, c1] : coeffs_)
            for (const auto& [d2, c2] : o.coeffs_)
                r.add_term(d1 + d2, c1 * c2);
        return r;
    }

    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return coeffs_ != o.coeffs_; }

    // Exact division; throws if the divisor does not divide exactly.
    LaurentPoly divided_by(const LaurentPoly& d) const {
        if (d.is_zero())
            throw std::invalid_argument("laurent division by zero");
        LaurentPoly rem = *this;
        LaurentPoly quot;
        const int dd = d.max_degree();
        const BigInt& lead = d.coeffs_.rbegin()->second;
        while (!rem.is_zero()) {
            int rd = rem.max_degree();
            BigInt rc = rem.coeff(rd);
            if (rc % lead != 0)
                throw std::invalid_argument("laurent division not exact");
            BigInt q = rc / lead;
            LaurentPoly term;
            term.coeffs_[rd - dd] = q;
            quot = quot + term;
            rem = rem - term * d;
            if (!rem.is_zero() && rem.max_degree() >= rd)
                throw std::invalid_argument("laurent division not exact");
        }
        return quot;
    }

    // Unit-normalized form: lowest degree 0, positive leading coefficient.
    LaurentPoly normalized() const {
        if (is_zero())
            return LaurentPoly();
        LaurentPoly r;
        int shift = min_degree();
        for (const auto& [d, c] : coeffs_)
            r.coeffs_[d - shift] = c;
        if (r.coeffs_.rbegin()->second < 0)
            return -r;
        return r;
    }

    std::string to_string() const {
        if (is_zero())
            return "0";
        std::string s;
        for (const auto& [d, c] : coeffs_) {
            if (!s.empty())
                s += c > 0 ? " + " : " - ";
            else if (c < 0)
                s += "-";
            BigInt a = abs(c);
            if (d == 0) {
                s += a.str();
            } else {
                if (a != 1)
                    s += a.str() + "*";
                s += d == 1 ? "t" : "t^" + std::to_string(d);
            }
        }
        return s;
    }

private:
    void add_term(int d, const BigInt& c) {
        auto it = coeffs_.find(d);
        if (it == coeffs_.end()) {
            if (c != 0)
                coeffs_[d] = c;
        } else {
            it->second += c;
            if (it->second == 0)
                coeffs_.erase(it);
        }
    }

    std::map<int, BigInt> coeffs_;
};

}  // namespace braidmoves
