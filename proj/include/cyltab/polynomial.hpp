#pragma once

#include <map>
#include <numeric>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cyltab {

using BigInt = boost::multiprecision::cpp_int;

// Exponent vector -> coefficient, fixed arity, no zero coefficients stored.
template <class Coeff = BigInt>
class SparsePolynomial {
public:
    using Exponents = std::vector<int>;
    using Terms = std::map<Exponents, Coeff>;

    explicit SparsePolynomial(int arity = 0) : arity_(arity) {}

    static SparsePolynomial one(int arity) {
        SparsePolynomial p(arity);
        p.add_term(Exponents(arity, 0), Coeff(1));
        return p;
    }

    int arity() const { return arity_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, const Coeff& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Coeff coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    SparsePolynomial& operator+=(const SparsePolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }

    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
        SparsePolynomial out(a.arity_);
        Exponents e(a.arity_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (int i = 0; i < a.arity_; ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }

    // Same polynomial in a larger variable set, variables shifted by `offset`.
    SparsePolynomial embed(int arity, int offset) const {
        SparsePolynomial out(arity);
        for (const auto& [e, c] : terms_) {
            Exponents f(arity, 0);
            for (int i = 0; i < arity_; ++i) f[offset + i] = e[i];
            out.add_term(f, c);
        }
        return out;
    }

    template <class Pred>
    SparsePolynomial filtered(Pred keep) const {
        SparsePolynomial out(arity_);
        for (const auto& [e, c] : terms_)
            if (keep(e)) out.terms_.emplace(e, c);
        return out;
    }

    SparsePolynomial truncated_total_degree(int max_degree) const {
        return filtered([&](const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0) <= max_degree; });
    }

    Coeff value_at_ones() const {
        Coeff s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    bool operator==(const SparsePolynomial& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }

private:
    int arity_;
    Terms terms_;
};

using Polynomial = SparsePolynomial<>;

}  // namespace cyltab
