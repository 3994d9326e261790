#ifndef FANO_POLY_HPP
#define FANO_POLY_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "fano/mat.hpp"

namespace fano {

// Graded-lex order on exponent vectors of equal length: compare total degree
// first, then lexicographically. Fixed once so serialized polynomials are
// canonical.
struct GrlexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        long da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

// Sparse multivariate polynomial over an exact coefficient type T.
// No zero coefficients are ever stored.
template <class T>
class MPoly {
public:
    using Terms = std::map<std::vector<int>, T, GrlexLess>;

    MPoly() : nvars_(0) {}
    explicit MPoly(int nvars) : nvars_(nvars) {}

    static MPoly constant(int nvars, const T& c) {
        MPoly p(nvars);
        if (!c.is_zero()) p.terms_.emplace(std::vector<int>(nvars, 0), c);
        return p;
    }
    static MPoly variable(int nvars, int i, const T& one) {
        if (i < 0 || i >= nvars) throw std::invalid_argument("MPoly: variable index out of range");
        MPoly p(nvars);
        std::vector<int> e(nvars, 0);
        e[i] = 1;
        p.terms_.emplace(std::move(e), one);
        return p;
    }

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    long total_degree() const { // -1 for the zero polynomial
        long d = -1;
        for (const auto& [e, c] : terms_) {
            long s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    bool is_homogeneous() const {
        long d = -1;
        for (const auto& [e, c] : terms_) {
            long s = 0;
            for (int x : e) s += x;
            if (d < 0) d = s;
            else if (s != d) return false;
        }
        return true;
    }

    void add_term(const std::vector<int>& e, const T& c) {
        if ((int)e.size() != nvars_) throw std::invalid_argument("MPoly: exponent length mismatch");
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    T coeff(const std::vector<int>& e) const {
        auto it = terms_.find(e);
        if (it == terms_.end()) return T{};
        return it->second;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        check_vars(a, b);
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        check_vars(a, b);
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend MPoly operator-(const MPoly& a) {
        MPoly r(a.nvars_);
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        check_vars(a, b);
        MPoly r(a.nvars_);
        std::vector<int> e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend MPoly operator*(const T& s, const MPoly& a) {
        MPoly r(a.nvars_);
        if (s.is_zero()) return r;
        for (const auto& [e, c] : a.terms_) r.add_term(e, s * c);
        return r;
    }
    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    T eval(const std::vector<T>& x, const T& one) const {
        if ((int)x.size() != nvars_) throw std::invalid_argument("MPoly: point dimension mismatch");
        T acc = zero_like(one);
        for (const auto& [e, c] : terms_) {
            T t = c;
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[i]; ++k) t = t * x[i];
            acc = acc + t;
        }
        return acc;
    }

private:
    static void check_vars(const MPoly& a, const MPoly& b) {
        if (a.nvars_ != b.nvars_) throw std::invalid_argument("MPoly: variable count mismatch");
    }

    int nvars_;
    Terms terms_;
};

namespace detail {

// Laplace expansion along the first remaining row, memoized on the column
// subset. Exact over any coefficient type, exponential in n; used for n <= 6
// and as the fallback when interpolation does not apply.
template <class T>
MPoly<T> det_expansion(const Mat<MPoly<T>>& m, const T& one) {
    int n = m.rows();
    std::map<unsigned, MPoly<T>> memo;
    // mask = set of still-active columns; row index = n - popcount(mask)
    std::function<const MPoly<T>&(unsigned)> rec = [&](unsigned mask) -> const MPoly<T>& {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int cnt = __builtin_popcount(mask);
        int row = n - cnt;
        MPoly<T> acc(m(0, 0).nvars());
        if (cnt == 0) {
            acc = MPoly<T>::constant(acc.nvars(), one);
        } else {
            int sign = 1;
            for (int c = 0; c < n; ++c) {
                if (!(mask & (1u << c))) continue;
                if (!m(row, c).is_zero()) {
                    MPoly<T> sub = m(row, c) * rec(mask & ~(1u << c));
                    acc = (sign > 0) ? (acc + sub) : (acc - sub);
                }
                sign = -sign;
            }
        }
        return memo.emplace(mask, std::move(acc)).first->second;
    };
    return rec((1u << n) - 1);
}

} // namespace detail

} // namespace fano

#endif
