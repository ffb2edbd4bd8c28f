#pragma once

// Exact multivariate polynomials over Q(w), with graded-lexicographic term
// order, formal partials, substitution, and exact division by a single
// divisor.  Coefficient zero terms are never stored; the zero polynomial has
// an empty term set and degree() reports "minus infinity" via std::optional.

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "gdh/numbers.hpp"

namespace gdh {

using Mono = std::vector<int>;

struct GradedLex {
    bool operator()(const Mono& a, const Mono& b) const {
        int da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

class MPoly {
public:
    MPoly() = default;
    explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MPoly constant(std::vector<std::string> vars, ExtRational c) {
        MPoly p(std::move(vars));
        if (!c.is_zero()) p.terms_[Mono(p.vars_.size(), 0)] = std::move(c);
        return p;
    }
    static MPoly variable(std::vector<std::string> vars, const std::string& name,
                          ExtRational coeff = ExtRational(1)) {
        MPoly p(std::move(vars));
        Mono m(p.vars_.size(), 0);
        m[p.index_of(name)] = 1;
        if (!coeff.is_zero()) p.terms_[m] = std::move(coeff);
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Mono, ExtRational, GradedLex>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Mono m, const ExtRational& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(std::move(m), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        a.check_vars(b);
        MPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        a.check_vars(b);
        MPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    friend MPoly operator-(const MPoly& a) {
        MPoly r(a.vars_);
        for (const auto& [m, c] : a.terms_) r.terms_[m] = -c;
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.check_vars(b);
        MPoly r(a.vars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Mono m(ma.size());
                for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
                r.add_term(std::move(m), ca * cb);
            }
        return r;
    }
    friend MPoly operator*(const ExtRational& c, const MPoly& a) {
        MPoly r(a.vars_);
        if (c.is_zero()) return r;
        for (const auto& [m, cc] : a.terms_) r.terms_[m] = c * cc;
        return r;
    }
    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    MPoly pow(int n) const {
        MPoly r = constant(vars_, ExtRational(1));
        MPoly base = *this;
        while (n > 0) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    // substitute args[i] for variable i (args share one variable context)
    MPoly compose(const std::vector<MPoly>& args) const {
        if (args.size() != vars_.size())
            throw VariableMismatch("compose: wrong argument count");
        const auto& tv = args.empty() ? vars_ : args.front().vars();
        MPoly r = constant(tv, ExtRational(0));
        for (const auto& [m, c] : terms_) {
            MPoly t = constant(tv, c);
            for (size_t i = 0; i < m.size(); ++i)
                if (m[i] > 0) t = t * args[i].pow(m[i]);
            r = r + t;
        }
        return r;
    }

    MPoly partial(const std::string& var) const {
        size_t i = index_of(var);
        MPoly r(vars_);
        for (const auto& [m, c] : terms_) {
            if (m[i] == 0) continue;
            Mono d = m;
            d[i] -= 1;
            r.add_term(std::move(d), ExtRational(Rational(m[i])) * c);
        }
        return r;
    }

    // total degree; empty for the zero polynomial
    std::optional<int> degree() const {
        if (terms_.empty()) return std::nullopt;
        const Mono& m = terms_.rbegin()->first;
        int d = 0;
        for (int e : m) d += e;
        return d;
    }
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = *degree();
        for (const auto& [m, c] : terms_) {
            int s = 0;
            for (int e : m) s += e;
            if (s != d) return false;
        }
        return true;
    }

    template <class C>
    C eval(std::span<const C> xs) const {
        if (xs.size() != vars_.size())
            throw VariableMismatch("eval: wrong argument count");
        C acc(0);
        for (const auto& [m, c] : terms_) {
            C t = c.template to_complex<C>();
            for (size_t i = 0; i < m.size(); ++i)
                for (int k = 0; k < m[i]; ++k) t *= xs[i];
            acc += t;
        }
        return acc;
    }
    cplx eval3(cplx x1, cplx x2, cplx x3) const {
        std::array<cplx, 3> xs{x1, x2, x3};
        return eval<cplx>(std::span<const cplx>(xs.data(), 3));
    }

    // exact single-divisor division; nullopt if the remainder is nonzero
    std::optional<MPoly> divide_exact(const MPoly& divisor) const {
        check_vars(divisor);
        if (divisor.is_zero()) throw Error("divide_exact: zero divisor");
        MPoly rem = *this;
        MPoly quot(vars_);
        const auto [lm, lc] = *divisor.terms_.rbegin();
        while (!rem.is_zero()) {
            const auto [rm, rc] = *rem.terms_.rbegin();
            Mono q(rm.size());
            for (size_t i = 0; i < q.size(); ++i) {
                q[i] = rm[i] - lm[i];
                if (q[i] < 0) return std::nullopt;
            }
            ExtRational qc = rc / lc;
            quot.add_term(q, qc);
            MPoly t(vars_);
            t.terms_[q] = qc;
            rem = rem - t * divisor;
            if (!rem.is_zero()) {
                // leading monomial must strictly decrease
                GradedLex lt;
                if (!lt(rem.terms_.rbegin()->first, rm)) return std::nullopt;
            }
        }
        return quot;
    }

    // plain-text term list, e.g. "3/2*x1^2*x2 - 1+2*w*x3"
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first) os << " + ";
            first = false;
            os << "(" << it->second.str() << ")";
            for (size_t i = 0; i < vars_.size(); ++i) {
                if (it->first[i] == 0) continue;
                os << "*" << vars_[i];
                if (it->first[i] > 1) os << "^" << it->first[i];
            }
        }
        return os.str();
    }

private:
    size_t index_of(const std::string& name) const {
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return i;
        throw UnknownVariable("unknown variable: " + name);
    }
    void check_vars(const MPoly& other) const {
        if (vars_ != other.vars_)
            throw VariableMismatch("incompatible variable sets");
    }

    std::vector<std::string> vars_;
    std::map<Mono, ExtRational, GradedLex> terms_;
};

enum class PolyOp { add, sub, mul, compose };

inline MPoly poly_arith(const MPoly& p, const MPoly& q, PolyOp op) {
    switch (op) {
        case PolyOp::add: return p + q;
        case PolyOp::sub: return p - q;
        case PolyOp::mul: return p * q;
        case PolyOp::compose: {
            // univariate convention: substitute q for the single variable of p
            if (p.vars().size() != 1)
                throw VariableMismatch("compose via poly_arith needs univariate p");
            return p.compose({q});
        }
    }
    throw Error("poly_arith: bad op");
}

inline MPoly poly_partial(const MPoly& p, const std::string& var) {
    return p.partial(var);
}

} // namespace gdh
